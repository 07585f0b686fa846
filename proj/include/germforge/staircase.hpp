// Staircase counting: colength and Krull dimension from leading modules.
#pragma once

#include <optional>

#include "buchberger.hpp"

namespace germforge {

struct StaircaseReport {
    bool finite = false;
    long colength = 0;                    // valid when finite
    std::vector<MTerm> standard_monomials;  // valid when finite
};

namespace detail {

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens)
{
    std::vector<Monomial> out;
    for (size_t a = 0; a < gens.size(); ++a) {
        bool red = false;
        for (size_t b = 0; b < gens.size() && !red; ++b) {
            if (a == b) continue;
            if (gens[b].divides(gens[a]) && (gens[b] != gens[a] || b < a)) red = true;
        }
        if (!red) out.push_back(gens[a]);
    }
    return out;
}

// Standard monomials outside a monomial ideal, over the given variables.
// Returns nullopt when infinite.
inline std::optional<std::vector<Monomial>> standard_monomials_of(
    std::vector<Monomial> gens, std::vector<int> vars)
{
    gens = minimalize_monomials(std::move(gens));
    for (const auto& g : gens)
        if (g.is_one()) return std::vector<Monomial>{};
    if (vars.empty()) {
        if (gens.empty()) return std::vector<Monomial>{Monomial::one()};
        return std::nullopt;  // a generator uses a variable outside scope
    }
    if (gens.empty()) return std::nullopt;  // free in remaining variables
    int v = vars.back();
    std::vector<int> rest(vars.begin(), vars.end() - 1);
    int b = 0;
    for (const auto& g : gens) b = std::max(b, (int)g.e[v]);
    // finite only if some generator is a pure power of v
    bool pure = false;
    for (const auto& g : gens) {
        bool only_v = g.e[v] > 0;
        for (int i = 0; i < kMaxVars && only_v; ++i)
            if (i != v && g.e[i]) only_v = false;
        if (only_v) pure = true;
    }
    if (!pure) return std::nullopt;
    std::vector<Monomial> out;
    for (int a = 0; a < b; ++a) {
        std::vector<Monomial> slice;
        for (const auto& g : gens) {
            if ((int)g.e[v] <= a) {
                Monomial m = g;
                m.e[v] = 0;
                slice.push_back(m);
            }
        }
        auto sub = standard_monomials_of(std::move(slice), rest);
        if (!sub) return std::nullopt;
        for (auto m : *sub) {
            m.e[v] = (std::uint16_t)a;
            out.push_back(m);
        }
    }
    return out;
}

}  // namespace detail

// Standard monomials (position, monomial) outside the leading module.
inline StaircaseReport staircase(const std::vector<MTerm>& leads, int nvars, int rank)
{
    std::vector<int> vars(nvars);
    for (int i = 0; i < nvars; ++i) vars[i] = i;
    StaircaseReport rep;
    rep.finite = true;
    for (int p = 0; p < rank; ++p) {
        std::vector<Monomial> gens;
        for (const auto& t : leads)
            if (t.pos == p) gens.push_back(t.m);
        auto sm = detail::standard_monomials_of(std::move(gens), vars);
        if (!sm) {
            rep.finite = false;
            rep.standard_monomials.clear();
            rep.colength = 0;
            return rep;
        }
        for (const auto& m : *sm) rep.standard_monomials.push_back({p, m});
    }
    rep.colength = (long)rep.standard_monomials.size();
    return rep;
}

inline StaircaseReport staircase(const StandardBasis& B)
{
    return staircase(B.leading_module(), B.ring->arity(), B.rank);
}

// Colength of the quotient by the submodule; nullopt means infinite.
inline std::optional<long> colength(const StandardBasis& B)
{
    auto rep = staircase(B);
    if (!rep.finite) return std::nullopt;
    return rep.colength;
}

// Krull dimension of the quotient by a monomial ideal: size of the largest
// variable subset meeting no generator's support. Unit ideal gives -1.
inline int monomial_ideal_dimension(const std::vector<Monomial>& gens, int nvars)
{
    for (const auto& g : gens)
        if (g.is_one()) return -1;
    int best = -1;
    for (int s = 0; s < (1 << nvars); ++s) {
        int size = __builtin_popcount((unsigned)s);
        if (size <= best) continue;
        bool ok = true;
        for (const auto& g : gens) {
            bool inside = true;
            for (int i = 0; i < nvars && inside; ++i)
                if (g.e[i] && !((s >> i) & 1)) inside = false;
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = size;
    }
    return best;
}

// Krull dimension of the quotient module via its leading module.
inline int krull_dimension(const StandardBasis& B)
{
    int n = B.ring->arity();
    int dim = -1;
    for (int p = 0; p < B.rank; ++p) {
        std::vector<Monomial> gens;
        for (const auto& g : B.gens)
            if (g.front().t.pos == p) gens.push_back(g.front().t.m);
        dim = std::max(dim, monomial_ideal_dimension(gens, n));
    }
    return dim;
}

}  // namespace germforge
