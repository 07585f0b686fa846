// Elements of free modules over a polynomial ring.
//
// PolyVector is the user-facing value (a fixed-length vector of
// polynomials); VPoly is the engine form, a flat term list sorted
// descending under the active module ordering.
#pragma once

#include "ordering.hpp"
#include "poly_io.hpp"
#include "polynomial.hpp"

namespace germforge {

class PolyVector {
public:
    PolyVector() = default;
    PolyVector(Ring r, int rank)
        : ring_(std::move(r)), comps_((size_t)rank, Polynomial::zero(ring_))
    {
    }
    explicit PolyVector(std::vector<Polynomial> comps) : comps_(std::move(comps))
    {
        if (comps_.empty()) throw error("empty PolyVector");
        ring_ = comps_[0].ring();
        for (const auto& c : comps_) require_same_ring(ring_, c.ring());
    }
    explicit PolyVector(Polynomial p) : ring_(p.ring()) { comps_.push_back(std::move(p)); }

    const Ring& ring() const { return ring_; }
    int rank() const { return (int)comps_.size(); }
    const Polynomial& operator[](int i) const { return comps_[(size_t)i]; }
    Polynomial& operator[](int i) { return comps_[(size_t)i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    bool is_zero() const
    {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    PolyVector operator+(const PolyVector& o) const
    {
        check_shape(o);
        PolyVector r = *this;
        for (int i = 0; i < rank(); ++i) r.comps_[i] = r.comps_[i] + o.comps_[i];
        return r;
    }

    PolyVector operator-(const PolyVector& o) const
    {
        check_shape(o);
        PolyVector r = *this;
        for (int i = 0; i < rank(); ++i) r.comps_[i] = r.comps_[i] - o.comps_[i];
        return r;
    }

    PolyVector operator*(const Polynomial& p) const
    {
        PolyVector r = *this;
        for (auto& c : r.comps_) c = c * p;
        return r;
    }

    bool operator==(const PolyVector& o) const
    {
        return rank() == o.rank() && comps_ == o.comps_;
    }

private:
    void check_shape(const PolyVector& o) const
    {
        if (rank() != o.rank()) throw error("PolyVector rank mismatch");
        require_same_ring(ring_, o.ring_);
    }

    Ring ring_;
    std::vector<Polynomial> comps_;
};

inline std::string to_string(const PolyVector& v)
{
    std::string s = "[";
    for (int i = 0; i < v.rank(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + "]";
}

// ---- engine form ----

struct MTerm {
    int pos;
    Monomial m;
};

struct VTerm {
    MTerm t;
    Q c;
};

using VPoly = std::vector<VTerm>;  // sorted descending, no zero coefficients

inline VPoly to_engine(const PolyVector& v, const ModuleOrder& ord)
{
    VPoly out;
    for (int p = 0; p < v.rank(); ++p)
        for (const auto& t : v[p].terms()) out.push_back({{p, t.m}, t.c});
    std::sort(out.begin(), out.end(), [&](const VTerm& a, const VTerm& b) {
        return ord.cmp(a.t.pos, a.t.m, b.t.pos, b.t.m) > 0;
    });
    return out;
}

inline PolyVector from_engine(const VPoly& v, const Ring& r, int rank)
{
    std::vector<std::vector<Term>> per((size_t)rank);
    for (const auto& t : v) per[(size_t)t.t.pos].push_back({t.t.m, t.c});
    std::vector<Polynomial> comps;
    comps.reserve((size_t)rank);
    for (int p = 0; p < rank; ++p) comps.push_back(Polynomial::from_terms(r, per[(size_t)p]));
    PolyVector out(r, rank);
    for (int p = 0; p < rank; ++p) out[p] = comps[(size_t)p];
    return out;
}

// Clears denominators, divides by integer content, makes the lead positive.
// Returns the factor f with v_new = v_old / f.
inline Q normalize_content(VPoly& v)
{
    if (v.empty()) return Q(1);
    Z den(1), num(0);
    for (const auto& t : v) den = germforge::lcm(den, t.c.get_den());
    for (const auto& t : v) num = germforge::gcd(num, Z(t.c * den));
    Q f(num, den);
    f.canonicalize();
    if (v.front().c < 0) f = -f;
    for (auto& t : v) {
        t.c /= f;
        t.c.canonicalize();
    }
    return f;
}

// v -= c * m * g  (merge of sorted term lists)
inline VPoly sub_scaled(const VPoly& v, const VPoly& g, const Monomial& m, const Q& c,
                        const ModuleOrder& ord)
{
    VPoly out;
    out.reserve(v.size() + g.size());
    size_t i = 0, j = 0;
    while (i < v.size() && j < g.size()) {
        MTerm gt{g[j].t.pos, g[j].t.m * m};
        int cc = ord.cmp(v[i].t.pos, v[i].t.m, gt.pos, gt.m);
        if (cc > 0) {
            out.push_back(v[i++]);
        } else if (cc < 0) {
            out.push_back({gt, -c * g[j].c});
            ++j;
        } else {
            Q s = v[i].c - c * g[j].c;
            if (s != 0) out.push_back({v[i].t, s});
            ++i, ++j;
        }
    }
    for (; i < v.size(); ++i) out.push_back(v[i]);
    for (; j < g.size(); ++j) out.push_back({{g[j].t.pos, g[j].t.m * m}, -c * g[j].c});
    return out;
}

}  // namespace germforge
