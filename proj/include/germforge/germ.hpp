// Map-germs, unfoldings, curve germs, and the augmentation operation.
#pragma once

#include <fstream>
#include <sstream>

#include "buchberger.hpp"
#include "gcd.hpp"
#include "staircase.hpp"

namespace germforge {

// f: (C^n,0) -> (C^p,0), polynomial representative fixing the origin.
struct MapGerm {
    Ring source;
    std::vector<Polynomial> components;
    std::string label;

    int source_dim() const { return source->arity(); }
    int target_dim() const { return (int)components.size(); }
};

// F(x,u) = (F_u(x), u). `ring` holds source variables followed by the
// parameters; `deformed` are the p components F_u(x), the trailing u
// coordinates being implicit in the shape.
struct Unfolding {
    Ring ring;
    int nsource = 0;
    std::vector<Polynomial> deformed;
    std::string label;

    int params() const { return ring->arity() - nsource; }
    std::vector<std::string> source_vars() const
    {
        return {ring->vars.begin(), ring->vars.begin() + nsource};
    }
    std::vector<std::string> param_vars() const
    {
        return {ring->vars.begin() + nsource, ring->vars.end()};
    }
};

// gamma: (C,0) -> (C^d,0), one variable, all components vanish at 0.
struct CurveGerm {
    Ring ring;  // single-variable context
    std::vector<Polynomial> components;

    const std::string& variable() const { return ring->vars[0]; }
    bool is_zero() const
    {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
};

namespace detail {

inline void check_vanishes_at_origin(const Polynomial& p, const std::string& what)
{
    for (const auto& t : p.terms())
        if (t.m.is_one()) throw error(what + " does not vanish at the origin");
}

}  // namespace detail

inline MapGerm make_map_germ(Ring source, std::vector<Polynomial> components,
                             std::string label = "", bool allow_low_target = false)
{
    if (components.empty()) throw error("map germ needs at least one component");
    for (const auto& c : components) {
        require_same_ring(c.ring(), source);
        detail::check_vanishes_at_origin(c, "component");
    }
    if (!allow_low_target && (int)components.size() < source->arity())
        throw error("target dimension below source dimension (pass allow_low_target "
                    "for auxiliary maps)");
    return MapGerm{std::move(source), std::move(components), std::move(label)};
}

inline Unfolding make_unfolding(Ring ring, int nsource, std::vector<Polynomial> deformed,
                                std::string label = "")
{
    if (nsource <= 0 || nsource > ring->arity())
        throw error("unfolding: bad source variable count");
    for (const auto& c : deformed) {
        require_same_ring(c.ring(), ring);
        detail::check_vanishes_at_origin(c, "unfolding component");
    }
    return Unfolding{std::move(ring), nsource, std::move(deformed), std::move(label)};
}

inline CurveGerm make_curve_germ(Ring ring, std::vector<Polynomial> components)
{
    if (ring->arity() != 1) throw error("curve germ needs a one-variable context");
    for (const auto& c : components) {
        require_same_ring(c.ring(), ring);
        detail::check_vanishes_at_origin(c, "curve component");
    }
    return CurveGerm{std::move(ring), std::move(components)};
}

// Dimension of the kernel of the differential at the origin, by exact
// Gaussian elimination on the linear parts.
inline int corank(const MapGerm& f)
{
    int n = f.source_dim();
    int p = f.target_dim();
    std::vector<std::vector<Q>> m((size_t)p, std::vector<Q>((size_t)n, Q(0)));
    for (int i = 0; i < p; ++i)
        for (const auto& t : f.components[(size_t)i].terms())
            if (t.m.degree() == 1)
                for (int j = 0; j < n; ++j)
                    if (t.m.e[j] == 1) m[(size_t)i][(size_t)j] = t.c;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < n && row < p; ++col) {
        int piv = -1;
        for (int r = row; r < p; ++r)
            if (m[(size_t)r][(size_t)col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[(size_t)row], m[(size_t)piv]);
        for (int r = 0; r < p; ++r) {
            if (r == row || m[(size_t)r][(size_t)col] == 0) continue;
            Q factor = m[(size_t)r][(size_t)col] / m[(size_t)row][(size_t)col];
            for (int c2 = col; c2 < n; ++c2)
                m[(size_t)r][(size_t)c2] -= factor * m[(size_t)row][(size_t)c2];
        }
        ++row;
        ++rank;
    }
    return n - rank;
}

// dim_C of the local algebra Q(f); nullopt when infinite.
inline std::optional<long> multiplicity(const MapGerm& f, const Budget* budget = nullptr)
{
    std::vector<Polynomial> gens;
    for (const auto& c : f.components)
        if (!c.is_zero()) gens.push_back(c);
    if (gens.empty()) return std::nullopt;
    auto B = buchberger_ideal(gens, ModuleOrder::local(f.source), budget);
    return colength(B);
}

inline std::optional<long> multiplicity(const CurveGerm& g, const Budget* budget = nullptr)
{
    MapGerm m{g.ring, g.components, ""};
    return multiplicity(m, budget);
}

// The base germ f = F_0 over the source-variable context.
inline MapGerm unfolding_base(const Unfolding& F)
{
    auto names = F.source_vars();
    std::vector<long> w;
    if (!F.ring->weights.empty())
        w.assign(F.ring->weights.begin(), F.ring->weights.begin() + F.nsource);
    Ring src = make_ring(names, w);
    std::map<std::string, Polynomial> zero;
    for (const auto& u : F.param_vars()) zero.emplace(u, Polynomial::zero(src));
    std::vector<Polynomial> comps;
    comps.reserve(F.deformed.size());
    for (const auto& c : F.deformed) comps.push_back(c.substitute(zero, src));
    return make_map_germ(src, std::move(comps), F.label.empty() ? "" : F.label + "|0",
                         true);
}

// Full map (F_u(x), u) on the combined context.
inline MapGerm unfolding_full_map(const Unfolding& F)
{
    std::vector<Polynomial> comps = F.deformed;
    for (const auto& u : F.param_vars()) comps.push_back(Polynomial::variable(F.ring, u));
    return MapGerm{F.ring, std::move(comps), F.label};
}

inline MapGerm specialize(const Unfolding& F, const std::vector<Q>& u0)
{
    if ((int)u0.size() != F.params()) throw error("specialize: wrong parameter count");
    auto names = F.source_vars();
    std::vector<long> w;
    if (!F.ring->weights.empty())
        w.assign(F.ring->weights.begin(), F.ring->weights.begin() + F.nsource);
    Ring src = make_ring(names, w);
    std::map<std::string, Polynomial> img;
    auto ps = F.param_vars();
    for (size_t j = 0; j < ps.size(); ++j)
        img.emplace(ps[j], Polynomial::constant(src, u0[j]));
    std::vector<Polynomial> comps;
    for (const auto& c : F.deformed) {
        Polynomial s = c.substitute(img, src);
        detail::check_vanishes_at_origin(s, "specialized component");
        comps.push_back(std::move(s));
    }
    return make_map_germ(src, std::move(comps), "", true);
}

inline bool is_unfolding_of(const Unfolding& F, const MapGerm& f)
{
    if (F.nsource != f.source_dim()) return false;
    if (F.deformed.size() != f.components.size()) return false;
    MapGerm base = unfolding_base(F);
    if (base.source->vars != f.source->vars) return false;
    for (size_t i = 0; i < f.components.size(); ++i) {
        // compare across possibly different weight data
        Polynomial a = base.components[i];
        const Polynomial& b = f.components[i];
        if (a.terms().size() != b.terms().size()) return false;
        Polynomial bt = b.substitute({}, base.source);
        if (!(a == bt)) return false;
    }
    return true;
}

// The augmentation A_{F,gamma}(f): (x,w) -> (F_{gamma(w)}(x), w).
inline MapGerm augment(const Unfolding& F, const CurveGerm& gamma)
{
    if ((int)gamma.components.size() != F.params())
        throw error("augment: curve arity does not match parameter count");
    auto names = F.source_vars();
    std::string wname = gamma.variable();
    for (const auto& n : names)
        if (n == wname) throw error("augment: curve variable clashes with a source variable");
    names.push_back(wname);
    Ring src = make_ring(names);
    std::map<std::string, Polynomial> img;
    auto ps = F.param_vars();
    for (size_t j = 0; j < ps.size(); ++j)
        img.emplace(ps[j], gamma.components[j].substitute({}, src));
    std::vector<Polynomial> comps;
    for (const auto& c : F.deformed) comps.push_back(c.substitute(img, src));
    comps.push_back(Polynomial::variable(src, wname));
    std::string label = F.label.empty() ? "augmentation" : "aug(" + F.label + ")";
    return make_map_germ(src, std::move(comps), label);
}

// ---- germ-file format ----
//
//   label A2hat
//   vars x y z
//   params u1 u2 u3        (optional; presence makes the entry an unfolding)
//   weights 1 2 3          (optional, one per source variable)
//   component <poly>       (repeated)
//
// Lines may appear in any order except that components are parsed last;
// blank lines and lines starting with # are ignored.

struct GermFile {
    std::string label;
    std::vector<std::string> vars;
    std::vector<std::string> params;
    std::vector<long> weights;
    std::vector<std::string> component_text;

    bool is_unfolding() const { return !params.empty(); }

    Ring context() const
    {
        std::vector<std::string> names = vars;
        names.insert(names.end(), params.begin(), params.end());
        return make_ring(names);
    }

    MapGerm as_map_germ() const
    {
        if (is_unfolding()) throw error("germ file declares parameters; load as unfolding");
        Ring r = make_ring(vars, weights);
        std::vector<Polynomial> comps;
        for (const auto& t : component_text) comps.push_back(parse_poly(t, r));
        return make_map_germ(r, std::move(comps), label, true);
    }

    Unfolding as_unfolding() const
    {
        if (!is_unfolding()) throw error("germ file has no parameters");
        Ring r = context();
        std::vector<Polynomial> comps;
        for (const auto& t : component_text) comps.push_back(parse_poly(t, r));
        return make_unfolding(r, (int)vars.size(), std::move(comps), label);
    }
};

inline GermFile parse_germ_file(std::istream& in)
{
    GermFile g;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        if (key == "label") {
            ls >> g.label;
        } else if (key == "vars") {
            std::string v;
            while (ls >> v) g.vars.push_back(v);
        } else if (key == "params") {
            std::string v;
            while (ls >> v) g.params.push_back(v);
        } else if (key == "weights") {
            long w;
            while (ls >> w) g.weights.push_back(w);
        } else if (key == "component") {
            std::string rest;
            std::getline(ls, rest);
            size_t a = rest.find_first_not_of(" \t");
            size_t b = rest.find_last_not_of(" \t");
            if (a == std::string::npos) throw error("germ file: empty component");
            g.component_text.push_back(rest.substr(a, b - a + 1));
        } else {
            throw error("germ file: unknown directive '" + key + "'");
        }
    }
    if (g.vars.empty()) throw error("germ file: missing vars line");
    if (g.component_text.empty()) throw error("germ file: missing components");
    if (!g.weights.empty() && g.weights.size() != g.vars.size())
        throw error("germ file: weights count does not match vars");
    return g;
}

inline GermFile load_germ_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw error("cannot open germ file: " + path);
    return parse_germ_file(in);
}

inline std::string to_string(const GermFile& g)
{
    std::ostringstream out;
    if (!g.label.empty()) out << "label " << g.label << "\n";
    out << "vars";
    for (const auto& v : g.vars) out << ' ' << v;
    out << "\n";
    if (!g.params.empty()) {
        out << "params";
        for (const auto& v : g.params) out << ' ' << v;
        out << "\n";
    }
    if (!g.weights.empty()) {
        out << "weights";
        for (long w : g.weights) out << ' ' << w;
        out << "\n";
    }
    for (const auto& c : g.component_text) out << "component " << c << "\n";
    return out.str();
}

}  // namespace germforge
