// Standard bases for ideals and submodules of free modules.
//
// Global orderings use plain Buchberger with full normal forms; local
// orderings use Mora's weak normal form. Pair handling follows
// Gebauer-Moller, with the product criterion restricted to the ideal case.
#pragma once

#include <list>

#include "budget.hpp"
#include "module.hpp"

namespace germforge {

struct StandardBasis {
    Ring ring;
    int rank = 1;
    ModuleOrder ord;
    std::vector<VPoly> gens;  // monic leads, sorted under ord

    std::vector<PolyVector> generators() const
    {
        std::vector<PolyVector> out;
        out.reserve(gens.size());
        for (const auto& g : gens) out.push_back(from_engine(g, ring, rank));
        return out;
    }

    std::vector<MTerm> leading_module() const
    {
        std::vector<MTerm> out;
        out.reserve(gens.size());
        for (const auto& g : gens) out.push_back(g.front().t);
        return out;
    }
};

namespace detail {

inline long max_wdeg(const VPoly& v, const ModuleOrder& ord)
{
    // local descending order sorts by ascending weighted degree
    if (ord.kind == ModuleOrder::Kind::Local) return ord.wdeg(v.back().t.m);
    long d = 0;
    for (const auto& t : v) d = std::max(d, ord.wdeg(t.t.m));
    return d;
}

inline long ecart(const VPoly& v, const ModuleOrder& ord)
{
    return max_wdeg(v, ord) - ord.wdeg(v.front().t.m);
}

// Normal form under a global ordering. With `head_only` the reduction stops
// as soon as the head term is irreducible and the tail is left untouched.
inline VPoly nf_global(VPoly h, const std::vector<VPoly>& G, const ModuleOrder& ord,
                       bool scale_free, bool head_only, const Budget* budget)
{
    VPoly result;
    int steps = 0;
    while (!h.empty()) {
        if (((++steps) & 0x3f) == 0) budget_check(budget);
        const VTerm& lt = h.front();
        const VPoly* red = nullptr;
        for (const auto& g : G) {
            const VTerm& gl = g.front();
            if (gl.t.pos == lt.t.pos && gl.t.m.divides(lt.t.m) &&
                (!red || g.size() < red->size()))
                red = &g;
        }
        if (!red) {
            if (head_only) {
                result.insert(result.end(), h.begin(), h.end());
                return result;
            }
            result.push_back(lt);
            h.erase(h.begin());
            continue;
        }
        Monomial m = lt.t.m / red->front().t.m;
        Q c = lt.c / red->front().c;
        h = sub_scaled(h, *red, m, c, ord);
        if (scale_free && !h.empty()) {
            Q f = normalize_content(h);
            if (f != 1)
                for (auto& t : result) t.c /= f;
        }
    }
    // reinsert irreducible head terms (already in descending order)
    return result;
}

// Mora weak normal form: reduces until the head is irreducible; the tail
// is not processed. Zero result certifies membership in the localized
// submodule.
inline VPoly nf_mora(VPoly h, const std::vector<VPoly>& G, const ModuleOrder& ord,
                     const Budget* budget)
{
    std::list<VPoly> owned;  // stable addresses
    std::vector<const VPoly*> T;
    T.reserve(G.size());
    for (const auto& g : G) T.push_back(&g);
    int steps = 0;
    while (!h.empty()) {
        if (((++steps) & 0x1f) == 0) budget_check(budget);
        const VTerm& lt = h.front();
        int best = -1;
        long be = 0;
        for (int k = 0; k < (int)T.size(); ++k) {
            const VTerm& gl = T[(size_t)k]->front();
            if (gl.t.pos != lt.t.pos || !gl.t.m.divides(lt.t.m)) continue;
            long e = ecart(*T[(size_t)k], ord);
            if (best < 0 || e < be) {
                best = k;
                be = e;
            }
        }
        if (best < 0) break;
        if (be > ecart(h, ord)) {
            owned.push_back(h);
            T.push_back(&owned.back());
        }
        const VPoly& g = *T[(size_t)best];
        Monomial m = h.front().t.m / g.front().t.m;
        Q c = h.front().c / g.front().c;
        h = sub_scaled(h, g, m, c, ord);
        normalize_content(h);
    }
    return h;
}

inline VPoly normal_form_engine(const VPoly& v, const std::vector<VPoly>& G,
                                const ModuleOrder& ord, bool scale_free,
                                const Budget* budget, bool head_only = false)
{
    if (G.empty()) return v;
    if (ord.is_global()) return nf_global(v, G, ord, scale_free, head_only, budget);
    return nf_mora(v, G, ord, budget);
}

struct SPair {
    int i, j;
    Monomial lcm;
    long deg;
    long sugar;
    bool coprime;
};

}  // namespace detail

class GroebnerEngine {
public:
    GroebnerEngine(Ring ring, int rank, ModuleOrder ord, const Budget* budget = nullptr)
        : ring_(std::move(ring)), rank_(rank), ord_(std::move(ord)), budget_(budget)
    {
    }

    // Elements whose lead sits in position >= limit spawn no new pairs.
    // With a position-block ordering this truncates the computation to a
    // generating set of the trailing block (Schreyer-style relation
    // extraction) instead of a full basis of it.
    void limit_pairs_to_positions_below(int limit) { pair_pos_limit_ = limit; }

    StandardBasis run(const std::vector<PolyVector>& gens)
    {
        for (const auto& g : gens) {
            if (g.rank() != rank_) throw error("generator rank mismatch");
            require_same_ring(g.ring(), ring_);
            VPoly v = to_engine(g, ord_);
            if (v.empty()) continue;
            normalize_content(v);
            add_element(std::move(v));
        }
        if (G_.empty()) throw error("buchberger: no nonzero generators");
        long processed = 0;
        const bool trace = std::getenv("GERMFORGE_TRACE") != nullptr;
        while (!pairs_.empty()) {
            budget_check(budget_);
            if (trace && (++processed % 50) == 0) {
                size_t mx = 0, bits = 0;
                for (const auto& g : G_) {
                    mx = std::max(mx, g.size());
                    for (const auto& t : g)
                        bits = std::max(bits,
                                        mpz_sizeinbase(t.c.get_num().get_mpz_t(), 2));
                }
                std::fprintf(stderr,
                             "gb: %ld pairs done, basis %zu, queue %zu, maxterms %zu, "
                             "maxbits %zu\n",
                             processed, G_.size(), pairs_.size(), mx, bits);
            }
            size_t best = 0;
            for (size_t k = 1; k < pairs_.size(); ++k) {
                const auto& a = pairs_[k];
                const auto& b = pairs_[best];
                auto ka = std::tie(a.sugar, a.deg, a.j, a.i);
                auto kb = std::tie(b.sugar, b.deg, b.j, b.i);
                if (ka < kb) best = k;
            }
            detail::SPair p = pairs_[best];
            pairs_.erase(pairs_.begin() + (long)best);
            VPoly s = spoly(G_[(size_t)p.i], G_[(size_t)p.j], p.lcm);
            VPoly h = detail::normal_form_engine(s, G_, ord_, true, budget_,
                                                 /*head_only=*/true);
            if (!h.empty()) {
                normalize_content(h);
                add_element(std::move(h), p.sugar);
            }
        }
        return finish();
    }

private:
    VPoly spoly(const VPoly& a, const VPoly& b, const Monomial& lcm) const
    {
        Monomial ua = lcm / a.front().t.m;
        VPoly s;
        s.reserve(a.size());
        Q inv = 1 / a.front().c;
        for (const auto& t : a) s.push_back({{t.t.pos, t.t.m * ua}, t.c * inv});
        Monomial ub = lcm / b.front().t.m;
        return sub_scaled(s, b, ub, 1 / b.front().c, ord_);
    }

    // `sugar_hint` carries the phantom homogenization degree of the pair the
    // element came from; inputs pass -1 and get their own top degree.
    void add_element(VPoly v, long sugar_hint = -1)
    {
        int t = (int)G_.size();
        long sv = std::max(sugar_hint, detail::max_wdeg(v, ord_));
        G_.push_back(std::move(v));
        sugars_.push_back(sv);
        const VTerm& ht = G_.back().front();
        if (pair_pos_limit_ >= 0 && ht.t.pos >= pair_pos_limit_) return;

        // new candidate pairs (Gebauer-Moller update)
        std::vector<detail::SPair> C;
        for (int i = 0; i < t; ++i) {
            const VTerm& gi = G_[(size_t)i].front();
            if (gi.t.pos != ht.t.pos) continue;
            detail::SPair p;
            p.i = i;
            p.j = t;
            p.lcm = gi.t.m.lcm(ht.t.m);
            p.deg = ord_.wdeg(p.lcm);
            p.sugar = std::max(sugars_[(size_t)i] + p.deg - ord_.wdeg(gi.t.m),
                               sv + p.deg - ord_.wdeg(ht.t.m));
            p.coprime = gi.t.m.coprime(ht.t.m);
            C.push_back(p);
        }
        // M criterion: drop pairs whose lcm is a proper multiple of another's
        std::vector<char> keep(C.size(), 1);
        for (size_t a = 0; a < C.size(); ++a)
            for (size_t b = 0; b < C.size(); ++b) {
                if (a == b || !keep[a] || !keep[b]) continue;
                if (C[b].lcm.divides(C[a].lcm) && C[b].lcm != C[a].lcm) keep[a] = 0;
            }
        // F criterion: among equal lcms keep one, preferring a coprime pair
        for (size_t a = 0; a < C.size(); ++a)
            for (size_t b = a + 1; b < C.size(); ++b) {
                if (!keep[a] || !keep[b] || C[a].lcm != C[b].lcm) continue;
                if (C[a].coprime)
                    keep[b] = 0;
                else
                    keep[a] = 0;
            }
        // B (product) criterion, valid in the ideal case only
        if (rank_ == 1)
            for (size_t a = 0; a < C.size(); ++a)
                if (keep[a] && C[a].coprime) keep[a] = 0;

        // prune old pairs via the chain criterion against the new lead
        std::vector<detail::SPair> kept_old;
        kept_old.reserve(pairs_.size());
        for (const auto& p : pairs_) {
            const Monomial& lij = p.lcm;
            if (G_[(size_t)p.i].front().t.pos == ht.t.pos && ht.t.m.divides(lij)) {
                Monomial lih = G_[(size_t)p.i].front().t.m.lcm(ht.t.m);
                Monomial ljh = G_[(size_t)p.j].front().t.m.lcm(ht.t.m);
                if (lih != lij && ljh != lij) continue;
            }
            kept_old.push_back(p);
        }
        pairs_ = std::move(kept_old);
        for (size_t a = 0; a < C.size(); ++a)
            if (keep[a]) pairs_.push_back(C[a]);
    }

    StandardBasis finish()
    {
        // head interreduction; positions past the pair limit hold plain
        // generating sets, not bases, so dropping elements there is unsound
        std::vector<char> redundant(G_.size(), 0);
        for (size_t a = 0; a < G_.size(); ++a) {
            if (redundant[a]) continue;
            if (pair_pos_limit_ >= 0 && G_[a].front().t.pos >= pair_pos_limit_) continue;
            for (size_t b = 0; b < G_.size(); ++b) {
                if (a == b || redundant[b]) continue;
                const MTerm& la = G_[a].front().t;
                const MTerm& lb = G_[b].front().t;
                if (lb.pos == la.pos && lb.m.divides(la.m) &&
                    (lb.m != la.m || b < a)) {
                    redundant[a] = 1;
                    break;
                }
            }
        }
        std::vector<VPoly> kept;
        for (size_t a = 0; a < G_.size(); ++a)
            if (!redundant[a]) kept.push_back(std::move(G_[a]));

        // tail reduction (global case)
        if (ord_.is_global()) {
            for (size_t a = 0; a < kept.size(); ++a) {
                if (kept[a].empty()) continue;
                std::vector<VPoly> others;
                others.reserve(kept.size() - 1);
                for (size_t b = 0; b < kept.size(); ++b)
                    if (b != a && !kept[b].empty()) others.push_back(kept[b]);
                kept[a] = detail::normal_form_engine(kept[a], others, ord_, true, budget_);
                normalize_content(kept[a]);
            }
            // a generator in the un-interreduced tag block can cancel
            // completely against its peers; drop it, it was redundant
            std::erase_if(kept, [](const VPoly& g) { return g.empty(); });
        }
        for (auto& g : kept) {
            Q inv = 1 / g.front().c;
            for (auto& t : g) t.c *= inv;
        }
        std::sort(kept.begin(), kept.end(), [&](const VPoly& x, const VPoly& y) {
            return ord_.cmp(x.front().t.pos, x.front().t.m, y.front().t.pos,
                            y.front().t.m) < 0;
        });
        StandardBasis sb;
        sb.ring = ring_;
        sb.rank = rank_;
        sb.ord = ord_;
        sb.gens = std::move(kept);
        return sb;
    }

    Ring ring_;
    int rank_;
    ModuleOrder ord_;
    const Budget* budget_;
    int pair_pos_limit_ = -1;
    std::vector<VPoly> G_;
    std::vector<long> sugars_;
    std::vector<detail::SPair> pairs_;
};

inline StandardBasis buchberger(const std::vector<PolyVector>& gens, const ModuleOrder& ord,
                                const Budget* budget = nullptr)
{
    if (gens.empty()) throw error("buchberger: empty generator list");
    GroebnerEngine eng(gens[0].ring(), gens[0].rank(), ord, budget);
    return eng.run(gens);
}

inline StandardBasis buchberger_ideal(const std::vector<Polynomial>& gens,
                                      const ModuleOrder& ord, const Budget* budget = nullptr)
{
    std::vector<PolyVector> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) vs.push_back(PolyVector(g));
    return buchberger(vs, ord, budget);
}

inline PolyVector normal_form(const PolyVector& v, const StandardBasis& B,
                              const Budget* budget = nullptr)
{
    if (v.rank() != B.rank) throw error("normal_form: rank mismatch");
    require_same_ring(v.ring(), B.ring);
    VPoly e = to_engine(v, B.ord);
    VPoly r = detail::normal_form_engine(e, B.gens, B.ord, false, budget);
    return from_engine(r, B.ring, B.rank);
}

inline Polynomial normal_form(const Polynomial& p, const StandardBasis& B,
                              const Budget* budget = nullptr)
{
    return normal_form(PolyVector(p), B, budget)[0];
}

inline bool in_submodule(const PolyVector& v, const StandardBasis& B,
                         const Budget* budget = nullptr)
{
    return normal_form(v, B, budget).is_zero();
}

inline bool in_ideal(const Polynomial& p, const StandardBasis& B,
                     const Budget* budget = nullptr)
{
    return normal_form(p, B, budget).is_zero();
}

// Independent re-check that every s-pair of B reduces to zero.
inline bool all_spairs_reduce_to_zero(const StandardBasis& B, const Budget* budget = nullptr)
{
    for (size_t i = 0; i < B.gens.size(); ++i)
        for (size_t j = i + 1; j < B.gens.size(); ++j) {
            const VTerm& a = B.gens[i].front();
            const VTerm& b = B.gens[j].front();
            if (a.t.pos != b.t.pos) continue;
            Monomial lcm = a.t.m.lcm(b.t.m);
            Monomial ua = lcm / a.t.m;
            VPoly s;
            for (const auto& t : B.gens[i])
                s.push_back({{t.t.pos, t.t.m * ua}, t.c / a.c});
            s = sub_scaled(s, B.gens[j], lcm / b.t.m, 1 / b.c, B.ord);
            if (!detail::normal_form_engine(s, B.gens, B.ord, true, budget).empty())
                return false;
        }
    return true;
}

}  // namespace germforge
