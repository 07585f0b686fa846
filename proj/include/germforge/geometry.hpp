// Image hypersurfaces, logarithmic vector fields, and discriminants.
#pragma once

#include <functional>

#include "elimination.hpp"
#include "germ.hpp"
#include "weights.hpp"

namespace germforge {

struct Hypersurface {
    Ring ring;
    Polynomial equation;  // reduced (squarefree)
};

struct VectorFieldModule {
    Ring ring;
    int rank = 0;
    std::vector<PolyVector> generators;
};

namespace detail {

inline std::vector<std::string> default_target_names(int p)
{
    std::vector<std::string> names;
    names.reserve((size_t)p);
    for (int i = 1; i <= p; ++i) names.push_back("Y" + std::to_string(i));
    return names;
}

// Is the polynomial exactly one source variable? Returns its index or -1.
inline int plain_variable(const Polynomial& p)
{
    if (p.terms().size() != 1) return -1;
    const Term& t = p.terms()[0];
    if (t.c != 1 || t.m.degree() != 1) return -1;
    for (int i = 0; i < p.ring()->arity(); ++i)
        if (t.m.e[i]) return i;
    return -1;
}

}  // namespace detail

// Reduced equation of the image of f: (C^n,0) -> (C^{n+1},0), by
// eliminating the source variables from the graph ideal. Components that
// are plain source variables are identified with their target coordinate
// instead of eliminated, and the elimination runs under weights making the
// graph weighted homogeneous whenever such weights exist.
inline Hypersurface image_equation(const MapGerm& f,
                                   std::vector<std::string> target_names = {},
                                   const Budget* budget = nullptr)
{
    int n = f.source_dim();
    int p = f.target_dim();
    if (p != n + 1) throw error("image equation needs target dimension = source + 1");
    if (target_names.empty()) target_names = detail::default_target_names(p);
    if ((int)target_names.size() != p) throw error("need one target name per component");

    // components that are plain source variables become identifications
    std::vector<int> identified_with(f.source->arity(), -1);  // source var -> component
    std::vector<char> is_relation((size_t)p, 1);
    for (int i = 0; i < p; ++i) {
        int v = detail::plain_variable(f.components[(size_t)i]);
        if (v >= 0 && identified_with[(size_t)v] < 0) {
            identified_with[(size_t)v] = i;
            is_relation[(size_t)i] = 0;
        }
    }

    std::vector<std::string> elim_vars;  // source variables to eliminate
    std::vector<std::string> ring_vars;
    for (int v = 0; v < n; ++v)
        if (identified_with[(size_t)v] < 0) {
            elim_vars.push_back(f.source->vars[(size_t)v]);
            ring_vars.push_back(f.source->vars[(size_t)v]);
        }
    for (const auto& t : target_names) {
        if (std::find(ring_vars.begin(), ring_vars.end(), t) != ring_vars.end())
            throw error("target name clashes with a source variable: " + t);
        ring_vars.push_back(t);
    }

    auto build_graph = [&](const Ring& re) {
        std::map<std::string, Polynomial> img;
        for (int v = 0; v < n; ++v)
            if (identified_with[(size_t)v] >= 0)
                img.emplace(f.source->vars[(size_t)v],
                            Polynomial::variable(re, target_names[(size_t)identified_with[(size_t)v]]));
        std::vector<Polynomial> gens;
        for (int i = 0; i < p; ++i) {
            if (!is_relation[(size_t)i]) continue;
            Polynomial rhs = f.components[(size_t)i].substitute(img, re);
            gens.push_back(Polynomial::variable(re, target_names[(size_t)i]) - rhs);
        }
        return gens;
    };

    Ring re = make_ring(ring_vars);
    std::vector<Polynomial> gens = build_graph(re);
    if (auto w = find_weights(gens)) {
        re = make_ring(ring_vars, *w);
        gens = build_graph(re);
    }

    auto img = eliminate(gens, elim_vars, budget);
    if (img.empty()) throw error("image is not a hypersurface (no eliminant)");
    if (img.size() != 1)
        throw error("image ideal came out non-principal (" + std::to_string(img.size()) +
                    " generators)");

    std::vector<long> tw;
    if (!re->weights.empty())
        for (const auto& t : target_names) tw.push_back(re->weights[(size_t)re->index_of(t)]);
    Ring rt = make_ring(target_names, tw);
    return Hypersurface{rt, squarefree_part(transfer(img[0], rt))};
}

enum class DerlogMode { V, H };

// Generators of Der(-log), as syzygies. Mode V: vector fields xi with
// xi(H) in (H), from relations among the partials and H. Mode H: xi(H)=0,
// from relations among the partials alone.
inline VectorFieldModule derlog(const Hypersurface& V, DerlogMode mode = DerlogMode::V,
                                const Budget* budget = nullptr)
{
    int N = V.ring->arity();
    std::vector<Polynomial> in;
    in.reserve((size_t)N + 1);
    for (int i = 0; i < N; ++i) in.push_back(V.equation.differentiate(i));
    if (mode == DerlogMode::V) in.push_back(V.equation);
    auto syz = syzygy_module(
        [&] {
            std::vector<PolyVector> vs;
            for (const auto& g : in) vs.push_back(PolyVector(g));
            return vs;
        }(),
        budget);
    VectorFieldModule M;
    M.ring = V.ring;
    M.rank = N;
    for (const auto& s : syz) {
        PolyVector v(V.ring, N);
        for (int i = 0; i < N; ++i) v[i] = s[i];
        if (!v.is_zero()) M.generators.push_back(std::move(v));
    }
    return M;
}

// Restriction of a vector field module to the listed coordinate directions.
inline VectorFieldModule component_block(const VectorFieldModule& M,
                                         const std::vector<std::string>& dirs)
{
    VectorFieldModule out;
    out.ring = M.ring;
    out.rank = (int)dirs.size();
    std::vector<int> idx;
    for (const auto& d : dirs) {
        int i = M.ring->index_of(d);
        if (i < 0) throw error("direction not in context: " + d);
        idx.push_back(i);
    }
    for (const auto& g : M.generators) {
        PolyVector v(M.ring, out.rank);
        for (size_t j = 0; j < idx.size(); ++j) v[(int)j] = g[idx[j]];
        if (!v.is_zero()) out.generators.push_back(std::move(v));
    }
    return out;
}

// Greedy irredundant generating set, tried in ascending weighted degree.
// `shifts` (one per component, optional) adjusts degrees for graded modules
// whose components carry different weights; with the correct shifts and a
// graded input the result is a minimal generating set.
inline std::vector<PolyVector> minimalize_generators(std::vector<PolyVector> gens,
                                                     std::vector<long> shifts = {},
                                                     const Budget* budget = nullptr)
{
    if (gens.size() <= 1) return gens;
    Ring r = gens[0].ring();
    auto wdeg = [&](const PolyVector& v) {
        long d = 0;
        for (int j = 0; j < v.rank(); ++j) {
            long s = shifts.empty() ? 0 : shifts[(size_t)j];
            for (const auto& t : v[j].terms())
                d = std::max(d, t.m.wdegree(r->weights) - s);
        }
        return d;
    };
    std::stable_sort(gens.begin(), gens.end(),
                     [&](const PolyVector& a, const PolyVector& b) { return wdeg(a) < wdeg(b); });
    ModuleOrder ord = ModuleOrder::global(r);
    std::vector<PolyVector> kept;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!kept.empty()) {
            StandardBasis B = buchberger(kept, ord, budget);
            if (in_submodule(g, B, budget)) continue;
        }
        kept.push_back(std::move(g));
    }
    return kept;
}

namespace detail {

inline Polynomial det(std::vector<std::vector<Polynomial>> m, const Ring& r)
{
    size_t n = m.size();
    if (n == 0) return Polynomial::constant(r, Q(1));
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial d = Polynomial::zero(r);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Polynomial minor = det(std::move(sub), r);
        d = (j % 2 == 0) ? d + m[0][j] * minor : d - m[0][j] * minor;
    }
    return d;
}

inline void choose_columns(size_t k, size_t from, std::vector<size_t>& cur,
                           const std::function<void(const std::vector<size_t>&)>& fn,
                           size_t total)
{
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (size_t j = from; j + (k - cur.size()) <= total; ++j) {
        cur.push_back(j);
        choose_columns(k, j + 1, cur, fn, total);
        cur.pop_back();
    }
}

}  // namespace detail

// All d x d minors of the matrix whose columns are the given rank-d vectors
// (the zeroth Fitting ideal of the cokernel).
inline std::vector<Polynomial> fitting_ideal_0(const std::vector<PolyVector>& cols)
{
    if (cols.empty()) return {};
    Ring r = cols[0].ring();
    size_t d = (size_t)cols[0].rank();
    size_t k = cols.size();
    if (k < d) return {Polynomial::zero(r)};
    std::vector<Polynomial> minors;
    std::vector<size_t> cur;
    detail::choose_columns(
        d, 0, cur,
        [&](const std::vector<size_t>& pick) {
            std::vector<std::vector<Polynomial>> m(d, std::vector<Polynomial>(d));
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j) m[i][j] = cols[pick[j]][(int)i];
            Polynomial mm = detail::det(std::move(m), r);
            if (!mm.is_zero()) minors.push_back(mm.primitive_part());
        },
        k);
    return minors;
}

}  // namespace germforge
