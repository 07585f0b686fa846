// Exact multivariate polynomials over Q.
//
// Terms are kept sorted in descending canonical order (weighted degrevlex
// of the ring context) with no zero coefficients and no duplicates.
#pragma once

#include <map>
#include <optional>
#include <utility>

#include "rational.hpp"
#include "ring.hpp"

namespace germforge {

struct Term {
    Monomial m;
    Q c;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Ring r) : ring_(std::move(r)) {}

    static Polynomial zero(Ring r) { return Polynomial(std::move(r)); }

    static Polynomial constant(Ring r, const Q& c)
    {
        Polynomial p(std::move(r));
        if (c != 0) p.terms_.push_back({Monomial::one(), c});
        return p;
    }

    static Polynomial variable(Ring r, const std::string& name)
    {
        int i = r->index_of(name);
        if (i < 0) throw error("unknown variable: " + name);
        Polynomial p(std::move(r));
        p.terms_.push_back({Monomial::var(i), Q(1)});
        return p;
    }

    static Polynomial monomial(Ring r, const Monomial& m, const Q& c)
    {
        Polynomial p(std::move(r));
        if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    // Builds from arbitrary (monomial, coefficient) pairs.
    static Polynomial from_terms(Ring r, const std::vector<Term>& terms)
    {
        std::map<Monomial, Q, CanonLess> acc(CanonLess{r.get()});
        for (const auto& t : terms) {
            auto it = acc.find(t.m);
            if (it == acc.end())
                acc.emplace(t.m, t.c);
            else
                it->second += t.c;
        }
        Polynomial p(r);
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, c});
        return p;
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }

    Q constant_term() const
    {
        for (const auto& t : terms_)
            if (t.m.is_one()) return t.c;
        return Q(0);
    }

    // Leading term under the canonical (display) ordering.
    const Term& lead() const
    {
        if (terms_.empty()) throw error("lead() of zero polynomial");
        return terms_.front();
    }

    long total_degree() const
    {
        long d = 0;
        for (const auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }

    long degree_in(int var) const
    {
        long d = 0;
        for (const auto& t : terms_) d = std::max(d, (long)t.m.e[var]);
        return d;
    }

    bool involves(int var) const
    {
        for (const auto& t : terms_)
            if (t.m.e[var]) return true;
        return false;
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const
    {
        require_same_ring(ring_, o.ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = canon_cmp(terms_[i].m, o.terms_[j].m);
            if (c > 0)
                r.terms_.push_back(terms_[i++]);
            else if (c < 0)
                r.terms_.push_back(o.terms_[j++]);
            else {
                Q s = terms_[i].c + o.terms_[j].c;
                if (s != 0) r.terms_.push_back({terms_[i].m, s});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const
    {
        require_same_ring(ring_, o.ring_);
        std::map<Monomial, Q, CanonLess> acc(CanonLess{ring_.get()});
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.m * b.m;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(m, a.c * b.c);
                else
                    it->second += a.c * b.c;
            }
        Polynomial r(ring_);
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, c});
        return r;
    }

    Polynomial operator*(const Q& c) const
    {
        if (c == 0) return Polynomial(ring_);
        Polynomial r = *this;
        for (auto& t : r.terms_) t.c *= c;
        return r;
    }

    Polynomial mul_term(const Monomial& m, const Q& c) const
    {
        if (c == 0) return Polynomial(ring_);
        Polynomial r = *this;
        for (auto& t : r.terms_) {
            t.m = t.m * m;
            t.c *= c;
        }
        return r;
    }

    Polynomial pow(long k) const
    {
        if (k < 0) throw error("negative power");
        Polynomial r = constant(ring_, Q(1));
        Polynomial b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = (k >>= 1) ? b * b : b;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const
    {
        if (!same_ring(ring_, o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial differentiate(const std::string& var) const
    {
        int i = ring_->index_of(var);
        if (i < 0) throw error("unknown variable: " + var);
        return differentiate(i);
    }

    Polynomial differentiate(int var) const
    {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            if (!t.m.e[var]) continue;
            Term d;
            d.m = t.m;
            d.c = t.c * (long)t.m.e[var];
            d.m.e[var]--;
            r.terms_.push_back(d);
        }
        // descending canonical order is preserved by a single-variable shift
        // only up to ties, so rebuild
        return from_terms(ring_, r.terms_);
    }

    // Ring-homomorphism image. Variables mapped through `images`; unmapped
    // variables must exist in the target ring under the same name.
    Polynomial substitute(const std::map<std::string, Polynomial>& images,
                          Ring target = nullptr) const
    {
        Ring tr = target ? target : ring_;
        for (const auto& [name, img] : images) {
            if (ring_->index_of(name) < 0)
                throw error("substituted variable not in context: " + name);
            require_same_ring(img.ring(), tr);
        }
        int n = ring_->arity();
        std::vector<Polynomial> var_image(n);
        std::vector<char> is_plain(n, 0);
        std::vector<int> plain_index(n, -1);
        for (int i = 0; i < n; ++i) {
            auto it = images.find(ring_->vars[i]);
            if (it != images.end()) {
                var_image[i] = it->second;
            } else {
                is_plain[i] = 1;
                plain_index[i] = tr->index_of(ring_->vars[i]);
            }
        }
        Polynomial result(tr);
        for (const auto& t : terms_) {
            Monomial plain;
            Polynomial factor = Polynomial::constant(tr, t.c);
            for (int i = 0; i < n; ++i) {
                if (!t.m.e[i]) continue;
                if (is_plain[i]) {
                    if (plain_index[i] < 0)
                        throw error("variable absent from target context: " + ring_->vars[i]);
                    plain.e[plain_index[i]] = (std::uint16_t)(plain.e[plain_index[i]] + t.m.e[i]);
                } else
                    factor = factor * var_image[i].pow(t.m.e[i]);
            }
            result = result + factor.mul_term(plain, Q(1));
        }
        return result;
    }

    // Common weighted degree and whether all terms share it; (0, true) for 0.
    std::pair<long, bool> weighted_degree(const std::vector<long>& w) const
    {
        if (terms_.empty()) return {0, true};
        long d = terms_[0].m.wdegree(w);
        for (const auto& t : terms_)
            if (t.m.wdegree(w) != d) return {0, false};
        return {d, true};
    }

    // Integer content after clearing denominators; sign follows the lead.
    // Returns c with (*this) == c * primitive_part().
    Q content() const
    {
        if (terms_.empty()) return Q(0);
        Z den(1), num(0);
        for (const auto& t : terms_) den = germforge::lcm(den, t.c.get_den());
        for (const auto& t : terms_) num = germforge::gcd(num, Z(t.c * den));
        Q c(num, den);
        c.canonicalize();
        if (terms_.front().c < 0) c = -c;
        return c;
    }

    Polynomial primitive_part() const
    {
        if (terms_.empty()) return *this;
        Q c = content();
        return *this * (1 / c);
    }

    // Scales so the canonical leading coefficient is 1.
    Polynomial monic() const
    {
        if (terms_.empty()) return *this;
        return *this * (1 / terms_.front().c);
    }

    Q evaluate(const std::vector<Q>& point) const
    {
        if ((int)point.size() != ring_->arity()) throw error("evaluation arity mismatch");
        Q r(0);
        for (const auto& t : terms_) {
            Q v = t.c;
            for (int i = 0; i < ring_->arity(); ++i)
                for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
            r += v;
        }
        return r;
    }

    int canon_cmp(const Monomial& a, const Monomial& b) const
    {
        return cmp_wdegrevlex(a, b, ring_->weights, ring_->arity());
    }

private:
    struct CanonLess {
        const RingContext* ctx;
        bool operator()(const Monomial& a, const Monomial& b) const
        {
            // descending canonical order
            return cmp_wdegrevlex(a, b, ctx->weights, (int)ctx->vars.size()) > 0;
        }
    };

    Ring ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Q& c, const Polynomial& p) { return p * c; }

}  // namespace germforge
