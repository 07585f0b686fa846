// Elimination ideals, intersections, ideal quotients, syzygies.
#pragma once

#include "gcd.hpp"
#include "staircase.hpp"

namespace germforge {

// Moves a polynomial into a different context by variable name.
inline Polynomial transfer(const Polynomial& p, const Ring& target)
{
    return p.substitute({}, target);
}

inline std::vector<Polynomial> transfer(const std::vector<Polynomial>& ps, const Ring& target)
{
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(transfer(p, target));
    return out;
}

// Generators of I ∩ k[vars \ block], via an elimination-block basis.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                         const std::vector<std::string>& block,
                                         const Budget* budget = nullptr)
{
    if (gens.empty()) return {};
    Ring r = gens[0].ring();
    ModuleOrder ord = ModuleOrder::elim(r, block);
    StandardBasis B = buchberger_ideal(gens, ord, budget);
    std::vector<Polynomial> out;
    for (const auto& g : B.generators()) {
        const Polynomial& p = g[0];
        bool clean = true;
        for (const auto& t : p.terms())
            for (int i = 0; i < r->arity() && clean; ++i)
                if (ord.block[i] && t.m.e[i]) clean = false;
        if (clean) out.push_back(p);
    }
    return out;
}

// Same contract as eliminate, but removes the block one variable at a
// time (in reverse context order). On wide blocks this is often far
// cheaper than a single block ordering.
inline std::vector<Polynomial> eliminate_sequential(std::vector<Polynomial> gens,
                                                    const std::vector<std::string>& block,
                                                    const Budget* budget = nullptr)
{
    if (gens.empty()) return {};
    Ring r = gens[0].ring();
    std::vector<std::string> ordered;
    for (int i = r->arity() - 1; i >= 0; --i)
        if (std::find(block.begin(), block.end(), r->vars[(size_t)i]) != block.end())
            ordered.push_back(r->vars[(size_t)i]);
    for (const auto& v : ordered) {
        gens = eliminate(gens, {v}, budget);
        if (gens.empty()) return gens;
    }
    return gens;
}

namespace detail {

inline std::string fresh_var_name(const Ring& r, const std::string& base)
{
    std::string name = base;
    while (r->index_of(name) >= 0) name += "_";
    return name;
}

}  // namespace detail

// Generators of I ∩ J via the (1-t) trick.
inline std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& I,
                                                  const std::vector<Polynomial>& J,
                                                  const Budget* budget = nullptr)
{
    if (I.empty() || J.empty()) return {};
    Ring r = I[0].ring();
    std::string tname = detail::fresh_var_name(r, "t@");
    auto vars = r->vars;
    vars.push_back(tname);
    Ring ext = make_ring(vars);  // weights dropped; t breaks homogeneity anyway
    Polynomial t = Polynomial::variable(ext, tname);
    Polynomial one_minus_t = Polynomial::constant(ext, Q(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& p : I) gens.push_back(t * transfer(p, ext));
    for (const auto& p : J) gens.push_back(one_minus_t * transfer(p, ext));
    auto elim = eliminate(gens, {tname}, budget);
    return transfer(elim, r);
}

// Generators of I : (q).
inline std::vector<Polynomial> ideal_quotient_single(const std::vector<Polynomial>& I,
                                                     const Polynomial& q,
                                                     const Budget* budget = nullptr)
{
    if (q.is_zero()) throw error("ideal quotient by zero");
    auto inter = ideal_intersection(I, {q}, budget);
    std::vector<Polynomial> out;
    out.reserve(inter.size());
    for (const auto& p : inter) out.push_back(divide_exact(p, q));
    return out;
}

// Generators of I : J = ∩_q (I : (q)) over the generators q of J.
inline std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial>& I,
                                              const std::vector<Polynomial>& J,
                                              const Budget* budget = nullptr)
{
    if (J.empty()) throw error("ideal quotient by empty ideal");
    std::vector<Polynomial> acc;
    bool first = true;
    for (const auto& q : J) {
        if (q.is_zero()) continue;
        auto part = ideal_quotient_single(I, q, budget);
        if (first) {
            acc = std::move(part);
            first = false;
        } else {
            acc = ideal_intersection(acc, part, budget);
        }
    }
    if (first) throw error("ideal quotient by zero ideal");
    return acc;
}

// Generators of the relation module { c : sum c_i gens_i = 0 }, computed by
// the tag-component method: a basis of the graph module in rank r+k under a
// position-block ordering, keeping elements supported on the tags.
inline std::vector<PolyVector> syzygy_module(const std::vector<PolyVector>& gens,
                                             const Budget* budget = nullptr)
{
    if (gens.empty()) return {};
    Ring ring = gens[0].ring();
    int r = gens[0].rank();
    int k = (int)gens.size();
    std::vector<PolyVector> graph;
    graph.reserve((size_t)k);
    for (int i = 0; i < k; ++i) {
        PolyVector v(ring, r + k);
        for (int p = 0; p < r; ++p) v[p] = gens[(size_t)i][p];
        v[r + i] = Polynomial::constant(ring, Q(1));
        graph.push_back(std::move(v));
    }
    ModuleOrder ord = ModuleOrder::global(ring).with_blocks(r);
    GroebnerEngine eng(ring, r + k, ord, budget);
    eng.limit_pairs_to_positions_below(r);
    StandardBasis B = eng.run(graph);
    std::vector<PolyVector> syz;
    for (const auto& g : B.generators()) {
        bool pure = true;
        for (int p = 0; p < r && pure; ++p)
            if (!g[p].is_zero()) pure = false;
        if (!pure) continue;
        PolyVector s(ring, k);
        for (int i = 0; i < k; ++i) s[i] = g[r + i];
        syz.push_back(std::move(s));
    }
    if (syz.empty()) {
        PolyVector z(ring, k);
        syz.push_back(z);  // the zero module, kept explicit
    }
    return syz;
}

inline std::vector<PolyVector> syzygy_module_of_ideal(const std::vector<Polynomial>& gens,
                                                      const Budget* budget = nullptr)
{
    std::vector<PolyVector> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) vs.push_back(PolyVector(g));
    return syzygy_module(vs, budget);
}

}  // namespace germforge
