// Monomial and module-term orderings.
//
// Kinds: global weighted degrevlex, local negative weighted degrevlex,
// elimination block. Module extension is term-over-position with ties
// broken toward the lower component index; a position-block mode is used
// for syzygy and intersection computations.
#pragma once

#include "ring.hpp"

namespace germforge {

struct ModuleOrder {
    enum class Kind { Global, Local, Elim };
    enum class PosPolicy { TermOverPosition, Blocks };

    Kind kind = Kind::Global;
    int nvars = 0;
    std::vector<long> weights;  // empty = all ones
    std::vector<char> block;    // Elim only: 1 when the variable is eliminated
    PosPolicy pos_policy = PosPolicy::TermOverPosition;
    int pos_split = 0;  // Blocks only: positions < split dominate

    static ModuleOrder global(const Ring& r, std::vector<long> w = {})
    {
        ModuleOrder o;
        o.kind = Kind::Global;
        o.nvars = r->arity();
        o.weights = w.empty() ? r->weights : std::move(w);
        return o;
    }

    static ModuleOrder local(const Ring& r, std::vector<long> w = {})
    {
        ModuleOrder o = global(r, std::move(w));
        o.kind = Kind::Local;
        return o;
    }

    static ModuleOrder elim(const Ring& r, const std::vector<std::string>& block_vars)
    {
        ModuleOrder o = global(r);
        o.kind = Kind::Elim;
        o.block.assign(o.nvars, 0);
        for (const auto& v : block_vars) {
            int i = r->index_of(v);
            if (i < 0) throw error("elimination variable not in context: " + v);
            o.block[i] = 1;
        }
        return o;
    }

    ModuleOrder with_blocks(int split) const
    {
        ModuleOrder o = *this;
        o.pos_policy = PosPolicy::Blocks;
        o.pos_split = split;
        return o;
    }

    bool is_global() const { return kind != Kind::Local; }

    long wdeg(const Monomial& m) const { return m.wdegree(weights); }

    long block_deg(const Monomial& m) const
    {
        long d = 0;
        for (int i = 0; i < nvars; ++i)
            if (block[i]) d += m.e[i];
        return d;
    }

    // positive when a > b
    int cmp_mono(const Monomial& a, const Monomial& b) const
    {
        switch (kind) {
            case Kind::Global:
                return cmp_wdegrevlex(a, b, weights, nvars);
            case Kind::Local: {
                long da = wdeg(a), db = wdeg(b);
                if (da != db) return da < db ? 1 : -1;
                return cmp_revlex_tail(a, b, nvars);
            }
            case Kind::Elim: {
                long da = block_deg(a), db = block_deg(b);
                if (da != db) return da > db ? 1 : -1;
                return cmp_wdegrevlex(a, b, weights, nvars);
            }
        }
        return 0;
    }

    int cmp(int pa, const Monomial& a, int pb, const Monomial& b) const
    {
        if (pos_policy == PosPolicy::Blocks) {
            int ba = pa < pos_split ? 0 : 1;
            int bb = pb < pos_split ? 0 : 1;
            if (ba != bb) return ba < bb ? 1 : -1;
        }
        if (int c = cmp_mono(a, b)) return c;
        if (pa != pb) return pa < pb ? 1 : -1;
        return 0;
    }
};

}  // namespace germforge
