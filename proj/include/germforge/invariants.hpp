// Normal spaces, codimensions, discriminants, and determinacy tests.
#pragma once

#include "geometry.hpp"

namespace germforge {

// O^rank / (relations), over the given context.
struct QuotientPresentation {
    Ring ring;
    int rank = 0;
    std::vector<PolyVector> relations;
};

inline PolyVector transfer(const PolyVector& v, const Ring& target)
{
    PolyVector out(target, v.rank());
    for (int i = 0; i < v.rank(); ++i) out[i] = transfer(v[i], target);
    return out;
}

inline PolyVector substitute(const PolyVector& v, const std::map<std::string, Polynomial>& images,
                             const Ring& target)
{
    PolyVector out(target, v.rank());
    for (int i = 0; i < v.rank(); ++i) out[i] = v[i].substitute(images, target);
    return out;
}

// Standard basis of the relation submodule, under an ordering that makes
// staircase counts valid for the local ring: weighted global when weights
// making every relation component homogeneous exist, local (Mora) otherwise.
inline StandardBasis presentation_basis(const QuotientPresentation& P,
                                        const Budget* budget = nullptr)
{
    std::vector<PolyVector> rels;
    for (const auto& r : P.relations)
        if (!r.is_zero()) rels.push_back(r);
    if (rels.empty()) {
        StandardBasis sb;
        sb.ring = P.ring;
        sb.rank = P.rank;
        sb.ord = ModuleOrder::global(P.ring);
        return sb;
    }
    std::vector<Polynomial> comps;
    for (const auto& r : rels)
        for (const auto& c : r.components())
            if (!c.is_zero()) comps.push_back(c);
    if (auto w = find_weights(comps)) {
        Ring r2 = make_ring(P.ring->vars, *w);
        std::vector<PolyVector> moved;
        moved.reserve(rels.size());
        for (const auto& r : rels) moved.push_back(transfer(r, r2));
        return buchberger(moved, ModuleOrder::global(r2), budget);
    }
    return buchberger(rels, ModuleOrder::local(P.ring), budget);
}

inline std::optional<long> colength(const QuotientPresentation& P, const Budget* budget = nullptr)
{
    return colength(presentation_basis(P, budget));
}

inline int dimension(const QuotientPresentation& P, const Budget* budget = nullptr)
{
    return krull_dimension(presentation_basis(P, budget));
}

// ---- K_V normal spaces for unfoldings ----

// Everything derived from the image hypersurface of the full unfolding map:
// target coordinates are Y1..Yp followed by the parameter names.
struct KvContext {
    Unfolding F;
    Hypersurface V;                  // over (Y1..Yp, params)
    std::vector<std::string> ycoords;
    VectorFieldModule derlog_v;      // rank p+d over V.ring
    std::vector<PolyVector> pgens;   // parameter block of derlog_v, rank d
};

inline KvContext kv_context(const Unfolding& F, const Budget* budget = nullptr)
{
    KvContext ctx;
    ctx.F = F;
    int p = (int)F.deformed.size();
    ctx.ycoords = detail::default_target_names(p);
    std::vector<std::string> names = ctx.ycoords;
    for (const auto& u : F.param_vars()) names.push_back(u);
    ctx.V = image_equation(unfolding_full_map(F), names, budget);
    ctx.derlog_v = derlog(ctx.V, DerlogMode::V, budget);
    ctx.pgens = component_block(ctx.derlog_v, F.param_vars()).generators;
    return ctx;
}

// Weights for a subset of the image coordinates, when the image context has
// them.
namespace detail {

inline Ring subring(const Ring& big, const std::vector<std::string>& names)
{
    std::vector<long> w;
    if (!big->weights.empty())
        for (const auto& n : names) w.push_back(big->weights[(size_t)big->index_of(n)]);
    return make_ring(names, w);
}

}  // namespace detail

// N K_{V,e}(i) for the inclusion i(Y) = (Y,0): parameter block of
// Der(-log V) with the parameters set to zero.
inline QuotientPresentation normal_space_inclusion(const KvContext& ctx)
{
    Ring rb = detail::subring(ctx.V.ring, ctx.ycoords);
    std::map<std::string, Polynomial> zero;
    for (const auto& u : ctx.F.param_vars()) zero.emplace(u, Polynomial::zero(rb));
    QuotientPresentation P;
    P.ring = rb;
    P.rank = (int)ctx.F.params();
    for (const auto& g : ctx.pgens) {
        PolyVector v = substitute(g, zero, rb);
        if (!v.is_zero()) P.relations.push_back(std::move(v));
    }
    return P;
}

// N K_{V,e}(g) for the section g(Y,w) = (Y, gamma(w)): parameter block of
// Der(-log V) along gamma, plus the column dgamma/dw.
inline QuotientPresentation normal_space_section(const KvContext& ctx, const CurveGerm& gamma,
                                                 bool include_curve_column = true)
{
    if ((int)gamma.components.size() != ctx.F.params())
        throw error("curve arity does not match parameter count");
    std::vector<std::string> names = ctx.ycoords;
    names.push_back(gamma.variable());
    Ring rb = make_ring(names);
    std::map<std::string, Polynomial> img;
    auto ps = ctx.F.param_vars();
    for (size_t j = 0; j < ps.size(); ++j)
        img.emplace(ps[j], gamma.components[j].substitute({}, rb));
    QuotientPresentation P;
    P.ring = rb;
    P.rank = (int)ps.size();
    for (const auto& g : ctx.pgens) {
        PolyVector v = substitute(g, img, rb);
        if (!v.is_zero()) P.relations.push_back(std::move(v));
    }
    if (include_curve_column) {
        PolyVector dcol(rb, (int)ps.size());
        for (size_t j = 0; j < ps.size(); ++j)
            dcol[(int)j] = gamma.components[j].substitute({}, rb).differentiate(gamma.variable());
        if (!dcol.is_zero()) P.relations.push_back(std::move(dcol));
    }
    return P;
}

// A_e-codimension of the base germ of a stable unfolding, as the
// K_{V,e}-codimension of the inclusion into the image of the unfolding.
inline std::optional<long> ae_codim(const KvContext& ctx, const Budget* budget = nullptr)
{
    return colength(normal_space_inclusion(ctx), budget);
}

inline std::optional<long> ae_codim(const Unfolding& F, const Budget* budget = nullptr)
{
    return ae_codim(kv_context(F, budget), budget);
}

// A_e-codimension of the augmentation A_{F,gamma}(f).
inline std::optional<long> ae_codim_augmentation(const KvContext& ctx, const CurveGerm& gamma,
                                                 const Budget* budget = nullptr)
{
    return colength(normal_space_section(ctx, gamma), budget);
}

inline std::optional<long> ae_codim_augmentation(const Unfolding& F, const CurveGerm& gamma,
                                                 const Budget* budget = nullptr)
{
    return ae_codim_augmentation(kv_context(F, budget), gamma, budget);
}

// ---- K_V discriminant and the finiteness test for augmentations ----

// Generators of an ideal cutting out, set-theoretically, the K_V
// discriminant in the parameter directions. Primary route: eliminate the Y
// coordinates from the zeroth Fitting ideal of the parameter-block
// presentation. That elimination can blow up, so after a bounded attempt
// the computation switches to the generator-wise annihilators: the support
// of O^d/M is the union of V(M : e_j), so the product of the ideals
// eliminated from each M : e_j cuts out the same projection.
inline std::vector<Polynomial> kv_discriminant(const KvContext& ctx,
                                               const Budget* budget = nullptr,
                                               double fitting_attempt_seconds = 20.0)
{
    int d = ctx.F.params();
    if (d == 0) return {};
    Ring rp = detail::subring(ctx.V.ring, ctx.F.param_vars());
    std::vector<long> shifts;
    if (!ctx.V.ring->weights.empty())
        for (const auto& u : ctx.F.param_vars())
            shifts.push_back(ctx.V.ring->weights[(size_t)ctx.V.ring->index_of(u)]);
    auto mingens = minimalize_generators(ctx.pgens, shifts, budget);

    if (fitting_attempt_seconds > 0) {
        try {
            Budget attempt(fitting_attempt_seconds);
            auto minors = fitting_ideal_0(mingens);
            std::vector<Polynomial> nonzero;
            for (auto& m : minors)
                if (!m.is_zero()) nonzero.push_back(std::move(m));
            if (nonzero.empty()) return {};
            auto elim = eliminate_sequential(nonzero, ctx.ycoords, &attempt);
            return transfer(elim, rp);
        } catch (const budget_exceeded&) {
            budget_check(budget);  // propagate if the caller's budget is up too
        }
    }

    std::vector<Polynomial> product{Polynomial::constant(rp, Q(1))};
    for (int j = 0; j < d; ++j) {
        std::vector<PolyVector> fam;
        PolyVector ej(ctx.V.ring, d);
        ej[j] = Polynomial::constant(ctx.V.ring, Q(1));
        fam.push_back(std::move(ej));
        for (const auto& g : mingens) fam.push_back(g);
        auto syz = syzygy_module(fam, budget);
        std::vector<Polynomial> annj;
        for (const auto& s : syz)
            if (!s[0].is_zero()) annj.push_back(s[0]);
        std::vector<Polynomial> ij =
            annj.empty() ? std::vector<Polynomial>{}
                         : eliminate_sequential(annj, ctx.ycoords, budget);
        if (ij.empty()) return {};  // dense projection: the zero ideal
        bool unit = false;
        for (const auto& g : ij)
            if (g.is_constant() && !g.is_zero()) unit = true;
        if (unit) continue;  // this generator's support projects to nothing
        std::vector<Polynomial> next;
        for (const auto& a : product)
            for (const auto& b : ij) next.push_back(a * transfer(b, rp));
        product = std::move(next);
    }
    return product;
}

// Does the curve gamma meet the zero set of the ideal only at the origin?
// Globally: the gcd of the pullbacks must be a monomial in the curve
// variable. Locally (local_only): factors not vanishing at 0 are discarded
// first, so any nonzero pullback suffices.
inline bool curve_meets_only_origin(const CurveGerm& gamma, const std::vector<Polynomial>& ideal,
                                    const std::vector<std::string>& param_names,
                                    bool local_only = false)
{
    if ((int)param_names.size() != (int)gamma.components.size())
        throw error("parameter count mismatch");
    std::map<std::string, Polynomial> img;
    for (size_t j = 0; j < param_names.size(); ++j)
        img.emplace(param_names[j], gamma.components[j]);
    Polynomial g = Polynomial::zero(gamma.ring);
    bool any = false;
    for (const auto& p : ideal) {
        Polynomial q = p.substitute(img, gamma.ring);
        if (q.is_zero()) continue;
        any = true;
        g = gcd(g, q);
        if (g.is_constant()) break;
    }
    if (!any) return false;  // curve lies inside the zero set
    if (local_only) return true;  // after dropping units, only the origin remains
    return g.terms().size() == 1;  // c * u^k
}

// Finiteness of the augmentation: gamma must meet the K_V discriminant
// only at the origin.  Computed without the discriminant itself: the
// curve is substituted into the parameter-block module first, and the Y
// coordinates are eliminated from each annihilator M : e_j over the
// curve ring.  Support commutes with the base change, so the projected
// ideals in the curve variable cut out exactly the parameter values
// gamma(w) lying in the discriminant, and the one-variable ideal is
// principal: its gcd plays the role of the pulled-back equation.
inline bool augmentation_finite(const KvContext& ctx, const CurveGerm& gamma,
                                bool local_only = false, const Budget* budget = nullptr)
{
    int d = ctx.F.params();
    if ((int)gamma.components.size() != d)
        throw error("curve arity does not match parameter count");
    if (d == 0) return false;
    std::vector<std::string> names = ctx.ycoords;
    names.push_back(gamma.variable());
    Ring rw = make_ring(names);
    std::map<std::string, Polynomial> img;
    auto ps = ctx.F.param_vars();
    for (size_t j = 0; j < ps.size(); ++j)
        img.emplace(ps[j], gamma.components[j].substitute({}, rw));
    std::vector<PolyVector> sub;
    for (const auto& g : ctx.pgens) {
        PolyVector v = substitute(g, img, rw);
        if (!v.is_zero()) sub.push_back(std::move(v));
    }
    if (sub.empty()) return false;  // the module is everything along the curve
    for (int j = 0; j < d; ++j) {
        std::vector<PolyVector> fam;
        PolyVector ej(rw, d);
        ej[j] = Polynomial::constant(rw, Q(1));
        fam.push_back(std::move(ej));
        for (const auto& g : sub) fam.push_back(g);
        auto syz = syzygy_module(fam, budget);
        std::vector<Polynomial> annj;
        for (const auto& s : syz)
            if (!s[0].is_zero()) annj.push_back(s[0]);
        auto ij = annj.empty() ? std::vector<Polynomial>{}
                               : eliminate_sequential(annj, ctx.ycoords, budget);
        if (ij.empty()) return false;  // this summand contains the whole curve
        Polynomial h = Polynomial::zero(rw);
        for (const auto& p : ij) h = gcd(h, p);
        if (h.is_constant()) continue;    // the curve misses this summand
        if (local_only) continue;         // nonzero: finitely many intersections
        if (h.terms().size() != 1) return false;  // a root away from the origin
    }
    return true;
}

// Same test against an explicitly computed discriminant ideal.
inline bool augmentation_finite_against(const KvContext& ctx, const CurveGerm& gamma,
                                        const std::vector<Polynomial>& discriminant,
                                        bool local_only = false)
{
    return curve_meets_only_origin(gamma, discriminant, ctx.F.param_vars(), local_only);
}

// ---- relative normal space of a d-parameter deformation of the section ----

// Context ring (Y1..Yp, w, v) for a deformation G(Y,w,v) = (Y, gamma(w) +
// alpha(Y,v)) of the section, alpha(.,0) = 0.
// Weight of a curve variable making the substitution u_j = gamma_j(t)
// weighted homogeneous, or 0 when no consistent choice exists. Each
// nonzero component must be a single term c t^k with wt(u_j) = k * wt(t).
inline long curve_variable_weight(const KvContext& ctx, const CurveGerm& gamma)
{
    const Ring& rv = ctx.V.ring;
    if (rv->weights.empty()) return 0;
    auto ps = ctx.F.param_vars();
    if (gamma.components.size() != ps.size()) return 0;
    long wt = 0;
    for (size_t j = 0; j < ps.size(); ++j) {
        const Polynomial& c = gamma.components[j];
        if (c.is_zero()) continue;
        if (c.terms().size() != 1) return 0;
        long k = c.terms().front().m.degree();
        if (k <= 0) return 0;
        long uw = rv->weights[(size_t)rv->index_of(ps[j])];
        if (uw % k != 0) return 0;
        long cand = uw / k;
        if (wt == 0) wt = cand;
        else if (wt != cand) return 0;
    }
    return wt;
}

// Ring (Y1..Yp, w, v); weighted whenever the curve and the deformation
// variable admit consistent weights, since the graded computations are
// far cheaper.
inline Ring relative_ring(const KvContext& ctx, const CurveGerm& gamma, const std::string& vname,
                          long vweight = 0)
{
    std::vector<std::string> names = ctx.ycoords;
    names.push_back(gamma.variable());
    names.push_back(vname);
    long gw = curve_variable_weight(ctx, gamma);
    if (gw > 0 && vweight > 0) {
        std::vector<long> w;
        const Ring& rv = ctx.V.ring;
        for (const auto& y : ctx.ycoords)
            w.push_back(rv->weights[(size_t)rv->index_of(y)]);
        w.push_back(gw);
        w.push_back(vweight);
        return make_ring(names, w);
    }
    return make_ring(names);
}

// Presentation of the relative normal space over the deformation base:
// Der(-log V) pulled back along U = gamma(w) + alpha, projected to the
// parameter block with the correction from the Y-columns of tG, plus the
// dG/dw column. Derivatives in v are excluded.
inline QuotientPresentation relative_normal_space(const KvContext& ctx, const CurveGerm& gamma,
                                                  const std::vector<Polynomial>& alpha,
                                                  const Ring& rel_ring)
{
    int d = ctx.F.params();
    int p = (int)ctx.ycoords.size();
    if ((int)alpha.size() != d) throw error("need one deformation term per parameter");
    for (const auto& a : alpha) require_same_ring(a.ring(), rel_ring);

    std::map<std::string, Polynomial> img;
    auto ps = ctx.F.param_vars();
    for (int j = 0; j < d; ++j)
        img.emplace(ps[(size_t)j],
                    gamma.components[(size_t)j].substitute({}, rel_ring) + alpha[(size_t)j]);

    // a_i = column of dalpha_j/dY_i
    std::vector<std::vector<Polynomial>> acol((size_t)p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < d; ++j)
            acol[(size_t)i].push_back(alpha[(size_t)j].differentiate(ctx.ycoords[(size_t)i]));

    QuotientPresentation P;
    P.ring = rel_ring;
    P.rank = d;
    for (const auto& xi : ctx.derlog_v.generators) {
        PolyVector v(rel_ring, d);
        for (int j = 0; j < d; ++j) v[j] = xi[p + j].substitute(img, rel_ring);
        for (int i = 0; i < p; ++i) {
            Polynomial yi = xi[i].substitute(img, rel_ring);
            if (yi.is_zero()) continue;
            for (int j = 0; j < d; ++j) v[j] = v[j] - yi * acol[(size_t)i][(size_t)j];
        }
        if (!v.is_zero()) P.relations.push_back(std::move(v));
    }
    PolyVector dcol(rel_ring, d);
    for (int j = 0; j < d; ++j)
        dcol[j] = gamma.components[(size_t)j]
                      .substitute({}, rel_ring)
                      .differentiate(gamma.variable());
    if (!dcol.is_zero()) P.relations.push_back(std::move(dcol));
    return P;
}

// ---- Cohen-Macaulay test along a one-parameter direction ----

struct CmReport {
    bool cm = false;
    int dim = -2;
    std::vector<Q> fiber_values;
    std::vector<std::optional<long>> fiber_lengths;
};

// Deterministic nonzero sample values with small denominators.
inline std::vector<Q> default_fiber_values(int count, unsigned seed = 1234)
{
    std::vector<Q> vals{Q(0)};
    std::mt19937 rng(seed);
    while ((int)vals.size() < count) {
        long num = (long)(rng() % 6) + 1;
        long den = (long)(rng() % 7) + 1;
        Q v(num, den);
        v.canonicalize();
        if ((rng() & 1) != 0) v = -v;
        if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
    }
    return vals;
}

// Total length of the fiber of the module at param = value, over affine
// space (any global ordering gives the vector-space dimension).
inline std::optional<long> fiber_length(const QuotientPresentation& P, const std::string& param,
                                        const Q& value, const Budget* budget = nullptr)
{
    std::vector<std::string> names;
    for (const auto& v : P.ring->vars)
        if (v != param) names.push_back(v);
    Ring rf = make_ring(names);
    std::map<std::string, Polynomial> img{{param, Polynomial::constant(rf, value)}};
    std::vector<PolyVector> rels;
    for (const auto& r : P.relations) {
        PolyVector v = substitute(r, img, rf);
        if (!v.is_zero()) rels.push_back(std::move(v));
    }
    if (rels.empty()) return std::nullopt;
    auto B = buchberger(rels, ModuleOrder::global(rf), budget);
    return colength(B);
}

// One-parameter Cohen-Macaulay check: support of dimension one and
// constant fiber length at the origin and at sample values of the
// parameter.
inline CmReport is_cm_dim1(const QuotientPresentation& P, const std::string& param,
                           std::vector<Q> values = {}, const Budget* budget = nullptr)
{
    if (P.ring->index_of(param) < 0) throw error("parameter not in context: " + param);
    if (values.empty()) values = default_fiber_values(3);
    CmReport rep;
    rep.dim = dimension(P, budget);
    rep.fiber_values = values;
    bool constant = true;
    std::optional<long> first;
    for (const auto& v : values) {
        auto len = fiber_length(P, param, v, budget);
        rep.fiber_lengths.push_back(len);
        if (!len) constant = false;
        else if (!first) first = len;
        else if (*first != *len) constant = false;
    }
    rep.cm = (rep.dim == 1) && constant;
    return rep;
}

// ---- double points and 2-to-3 finite determinacy ----

// Ideal of the double-point scheme D^2(f) in the product of two copies of
// the source, for f with two source variables: (f_i(x) - f_i(x')) : (x-x').
inline std::vector<Polynomial> double_point_ideal(const MapGerm& f,
                                                  const Budget* budget = nullptr)
{
    if (f.source_dim() != 2) throw error("double-point ideal needs two source variables");
    std::vector<std::string> names = f.source->vars;
    std::string a2 = names[0] + "_", b2 = names[1] + "_";
    names.push_back(a2);
    names.push_back(b2);
    Ring r4 = make_ring(names);
    std::map<std::string, Polynomial> primed{
        {f.source->vars[0], Polynomial::variable(r4, a2)},
        {f.source->vars[1], Polynomial::variable(r4, b2)}};
    std::vector<Polynomial> I;
    for (const auto& c : f.components) {
        Polynomial diff = transfer(c, r4) - c.substitute(primed, r4);
        if (!diff.is_zero()) I.push_back(diff);
    }
    std::vector<Polynomial> diag{
        Polynomial::variable(r4, f.source->vars[0]) - Polynomial::variable(r4, a2),
        Polynomial::variable(r4, f.source->vars[1]) - Polynomial::variable(r4, b2)};
    if (I.empty()) return diag;  // constant map: everything is a double point
    return ideal_quotient(I, diag, budget);
}

struct DeterminacyReport {
    bool finite = false;
    int d2_dim = -2;
    std::optional<long> singular_colength;
};

// Finite determinacy test for germs (C^2,0) -> (C^3,0): the double-point
// scheme must be at most a curve with an isolated singular point at the
// origin (checked via the Jacobian minors under a local ordering).
inline DeterminacyReport is_finitely_determined_2_3(const MapGerm& f,
                                                    const Budget* budget = nullptr)
{
    if (f.source_dim() != 2 || f.target_dim() != 3)
        throw error("determinacy test is for source dimension 2, target 3");
    DeterminacyReport rep;
    auto D = double_point_ideal(f, budget);
    Ring r4 = D[0].ring();
    auto B = buchberger_ideal(D, ModuleOrder::global(r4), budget);
    rep.d2_dim = krull_dimension(B);
    if (rep.d2_dim < 0) {  // empty double-point scheme
        rep.finite = true;
        return rep;
    }
    if (rep.d2_dim > 1) return rep;
    int c = r4->arity() - rep.d2_dim;
    std::vector<std::vector<Polynomial>> jac;
    for (const auto& g : D) {
        std::vector<Polynomial> row;
        for (int i = 0; i < r4->arity(); ++i) row.push_back(g.differentiate(i));
        jac.push_back(std::move(row));
    }
    std::vector<Polynomial> J = D;
    std::vector<size_t> cur;
    size_t rows = jac.size();
    detail::choose_columns(
        (size_t)c, 0, cur,
        [&](const std::vector<size_t>& rpick) {
            std::vector<size_t> ccur;
            detail::choose_columns(
                (size_t)c, 0, ccur,
                [&](const std::vector<size_t>& cpick) {
                    std::vector<std::vector<Polynomial>> m((size_t)c,
                                                           std::vector<Polynomial>((size_t)c));
                    for (size_t i = 0; i < (size_t)c; ++i)
                        for (size_t j = 0; j < (size_t)c; ++j)
                            m[i][j] = jac[rpick[i]][cpick[j]];
                    Polynomial mm = detail::det(std::move(m), r4);
                    // reducing the minor against the basis of D keeps the
                    // ideal unchanged and tames coefficient growth
                    if (!mm.is_zero()) mm = normal_form(mm, B, budget);
                    if (!mm.is_zero()) J.push_back(mm.primitive_part());
                },
                (size_t)r4->arity());
        },
        rows);
    // a zero-dimensional affine singular scheme isolates every singular
    // point at once; the local computation is much harder and not needed
    auto BJ = buchberger_ideal(J, ModuleOrder::global(r4), budget);
    if (krull_dimension(BJ) <= 0) {
        rep.singular_colength = colength(BJ);
        rep.finite = true;
    }
    return rep;
}

// ---- quadruple-point line witness for homogeneous (1,2,2,2d) germs ----

struct QuadrupleLineReport {
    enum class Kind { AllAlpha, RationalWitness, ComplexWitness, None } kind = Kind::None;
    Q alpha{0};             // valid for AllAlpha (any value works) and RationalWitness
    std::vector<Q> odd_part;  // coefficients of the witness equation, index = power
};

namespace detail {

inline std::optional<Q> rational_root(const std::vector<Q>& poly)
{
    // integer model with coprime coefficients
    Z den(1);
    for (const auto& c : poly) den = germforge::lcm(den, c.get_den());
    std::vector<Z> a;
    for (const auto& c : poly) a.push_back(Z(c * den));
    Z c0 = a.front(), cl = a.back();
    if (c0 == 0) return Q(0);
    auto small = [](const Z& z) {
        return mpz_fits_slong_p(z.get_mpz_t()) && std::abs(mpz_get_si(z.get_mpz_t())) <= 1000000;
    };
    if (!small(c0) || !small(cl)) return std::nullopt;
    long n0 = std::abs(mpz_get_si(c0.get_mpz_t()));
    long nl = std::abs(mpz_get_si(cl.get_mpz_t()));
    auto divisors = [](long n) {
        std::vector<long> ds;
        for (long d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                ds.push_back(d);
                if (d != n / d) ds.push_back(n / d);
            }
        return ds;
    };
    auto eval = [&](const Q& x) {
        Q v(0);
        for (size_t i = poly.size(); i-- > 0;) v = v * x + poly[i];
        return v;
    };
    for (long pnum : divisors(n0))
        for (long qden : divisors(nl))
            for (int s : {1, -1}) {
                Q cand(s * pnum, qden);
                cand.canonicalize();
                if (eval(cand) == 0) return cand;
            }
    return std::nullopt;
}

}  // namespace detail

// For h = (x, y^2+a x z, z^2+b x y, P) with P homogeneous of degree 2d:
// values alpha for which the lines t -> (0,t,alpha t) and t -> (0,t,-alpha t)
// have the same image, i.e. roots of the odd part of P(0,1,alpha).
inline QuadrupleLineReport quadruple_line_witness(const Polynomial& P, const std::string& xvar,
                                                  const std::string& yvar,
                                                  const std::string& zvar)
{
    const Ring& r = P.ring();
    int xi = r->index_of(xvar), yi = r->index_of(yvar), zi = r->index_of(zvar);
    if (xi < 0 || yi < 0 || zi < 0) throw error("quadruple-line witness: unknown variable");
    long deg = P.total_degree();
    if (deg < 4 || deg % 2 != 0)
        throw error("quadruple-line witness needs a homogeneous polynomial of even degree >= 4");
    for (const auto& t : P.terms())
        if (t.m.degree() != deg) throw error("quadruple-line witness needs a homogeneous polynomial");

    QuadrupleLineReport rep;
    std::vector<Q> phi;  // phi(alpha) = sum over odd z-exponents of 2 a_{0mn} alpha^n
    for (const auto& t : P.terms()) {
        if (t.m.e[xi]) continue;
        int n = (int)t.m.e[zi];
        if (n % 2 == 0) continue;
        if ((int)phi.size() <= n) phi.resize((size_t)n + 1, Q(0));
        phi[(size_t)n] += Q(2) * t.c;
    }
    while (!phi.empty() && phi.back() == 0) phi.pop_back();
    rep.odd_part = phi;
    if (phi.empty()) {
        rep.kind = QuadrupleLineReport::Kind::AllAlpha;
        rep.alpha = Q(1);
        return rep;
    }
    size_t v = 0;
    while (v < phi.size() && phi[v] == 0) ++v;
    std::vector<Q> psi(phi.begin() + (long)v, phi.end());
    if (psi.size() == 1) {
        rep.kind = QuadrupleLineReport::Kind::None;  // only the degenerate root 0
        return rep;
    }
    if (auto root = detail::rational_root(psi)) {
        rep.kind = QuadrupleLineReport::Kind::RationalWitness;
        rep.alpha = *root;
        return rep;
    }
    rep.kind = QuadrupleLineReport::Kind::ComplexWitness;  // psi(0) != 0, deg >= 1
    return rep;
}

}  // namespace germforge
