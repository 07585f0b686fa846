// Ring contexts and dense exponent-vector monomials.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace germforge {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed monomial capacity; contexts in this project stay small.
constexpr int kMaxVars = 14;

struct RingContext {
    std::vector<std::string> vars;
    std::vector<long> weights;  // empty, or one positive weight per variable

    RingContext(std::vector<std::string> v, std::vector<long> w = {})
        : vars(std::move(v)), weights(std::move(w))
    {
        if ((int)vars.size() > kMaxVars)
            throw error("too many variables (max " + std::to_string(kMaxVars) + ")");
        auto sorted = vars;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw error("duplicate variable name in ring context");
        if (!weights.empty()) {
            if (weights.size() != vars.size())
                throw error("weight vector arity mismatch");
            for (long x : weights)
                if (x < 1) throw error("weights must be positive");
        }
    }

    int arity() const { return (int)vars.size(); }

    int index_of(const std::string& name) const
    {
        for (int i = 0; i < (int)vars.size(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }

    long weight(int i) const { return weights.empty() ? 1 : weights[i]; }

    bool operator==(const RingContext& o) const
    {
        return vars == o.vars && weights == o.weights;
    }
};

using Ring = std::shared_ptr<const RingContext>;

inline Ring make_ring(std::vector<std::string> vars, std::vector<long> weights = {})
{
    return std::make_shared<const RingContext>(std::move(vars), std::move(weights));
}

inline bool same_ring(const Ring& a, const Ring& b)
{
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const Ring& a, const Ring& b)
{
    if (!same_ring(a, b)) throw error("ring context mismatch");
}

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    static Monomial one() { return Monomial{}; }

    static Monomial var(int i, int k = 1)
    {
        Monomial m;
        m.e[i] = (std::uint16_t)k;
        return m;
    }

    bool is_one() const
    {
        for (auto x : e)
            if (x) return false;
        return true;
    }

    long degree() const
    {
        long d = 0;
        for (auto x : e) d += x;
        return d;
    }

    long wdegree(const std::vector<long>& w) const
    {
        if (w.empty()) return degree();
        long d = 0;
        for (int i = 0; i < (int)w.size(); ++i) d += (long)e[i] * w[i];
        return d;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            std::uint32_t s = (std::uint32_t)e[i] + o.e[i];
            if (s > 0xffff) throw error("monomial exponent overflow");
            r.e[i] = (std::uint16_t)s;
        }
        return r;
    }

    bool divides(const Monomial& o) const
    {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // this / o, assuming o divides this
    Monomial operator/(const Monomial& o) const
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = (std::uint16_t)(e[i] - o.e[i]);
        return r;
    }

    Monomial lcm(const Monomial& o) const
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(e[i], o.e[i]);
        return r;
    }

    bool coprime(const Monomial& o) const
    {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Degrevlex tie-break: larger monomial has the smaller exponent in the
// last variable where they differ.
inline int cmp_revlex_tail(const Monomial& a, const Monomial& b, int nvars)
{
    for (int i = nvars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

// Weighted degrevlex: positive result means a > b.
inline int cmp_wdegrevlex(const Monomial& a, const Monomial& b,
                          const std::vector<long>& w, int nvars)
{
    long da = a.wdegree(w), db = b.wdegree(w);
    if (da != db) return da > db ? 1 : -1;
    return cmp_revlex_tail(a, b, nvars);
}

}  // namespace germforge
