// Exact division, multivariate gcd (primitive PRS), squarefree part.
#pragma once

#include <random>

#include "polynomial.hpp"

namespace germforge {

// Quotient p/q when the division is exact; throws otherwise.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& q)
{
    require_same_ring(p.ring(), q.ring());
    if (q.is_zero()) throw error("division by zero polynomial");
    Polynomial rem = p;
    Polynomial quot(p.ring());
    const Term& ql = q.lead();
    while (!rem.is_zero()) {
        const Term& rl = rem.lead();
        if (!ql.m.divides(rl.m)) throw error("inexact polynomial division");
        Monomial m = rl.m / ql.m;
        Q c = rl.c / ql.c;
        quot = quot + Polynomial::monomial(p.ring(), m, c);
        rem = rem - q.mul_term(m, c);
    }
    return quot;
}

inline bool divides(const Polynomial& q, const Polynomial& p, Polynomial* quotient = nullptr)
{
    if (q.is_zero()) return p.is_zero();
    Polynomial rem = p;
    Polynomial quot(p.ring());
    const Term& ql = q.lead();
    while (!rem.is_zero()) {
        const Term& rl = rem.lead();
        if (!ql.m.divides(rl.m)) return false;
        Monomial m = rl.m / ql.m;
        Q c = rl.c / ql.c;
        quot = quot + Polynomial::monomial(p.ring(), m, c);
        rem = rem - q.mul_term(m, c);
    }
    if (quotient) *quotient = quot;
    return true;
}

namespace detail {

// Coefficients of p viewed as univariate in `var`, index = degree.
inline std::vector<Polynomial> coeffs_in(const Polynomial& p, int var)
{
    long d = p.degree_in(var);
    std::vector<Polynomial> cs((size_t)d + 1, Polynomial::zero(p.ring()));
    for (const auto& t : p.terms()) {
        Monomial m = t.m;
        int k = m.e[var];
        m.e[var] = 0;
        cs[k] = cs[k] + Polynomial::monomial(p.ring(), m, t.c);
    }
    return cs;
}

inline Polynomial from_coeffs(const std::vector<Polynomial>& cs, int var, const Ring& r)
{
    Polynomial p(r);
    for (size_t k = 0; k < cs.size(); ++k)
        p = p + cs[k].mul_term(Monomial::var(var, (int)k), Q(1));
    return p;
}

// Pseudo-remainder of p by q in `var` (deg_var(q) >= 1).
inline Polynomial prem(const Polynomial& p, const Polynomial& q, int var)
{
    long dq = q.degree_in(var);
    auto qc = coeffs_in(q, var);
    Polynomial lcq = qc[(size_t)dq];
    Polynomial r = p;
    while (!r.is_zero() && r.degree_in(var) >= dq) {
        long dr = r.degree_in(var);
        auto rc = coeffs_in(r, var);
        Polynomial lcr = rc[(size_t)dr];
        // r := lcq*r - lcr*x^(dr-dq)*q
        r = lcq * r - lcr.mul_term(Monomial::var(var, (int)(dr - dq)), Q(1)) * q;
    }
    return r;
}

}  // namespace detail

Polynomial gcd(const Polynomial& p, const Polynomial& q);

namespace detail {

inline Polynomial content_in(const Polynomial& p, int var)
{
    auto cs = coeffs_in(p, var);
    Polynomial g = Polynomial::zero(p.ring());
    for (const auto& c : cs) g = germforge::gcd(g, c);
    return g;
}

}  // namespace detail

// Gcd normalized with leading coefficient 1 under the canonical ordering.
inline Polynomial gcd(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() && q.is_zero()) return p;
    require_same_ring(p.ring(), q.ring());
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_constant() || q.is_constant())
        return Polynomial::constant(p.ring(), Q(1));

    int var = -1;
    for (int i = p.ring()->arity() - 1; i >= 0; --i)
        if (p.involves(i) || q.involves(i)) {
            var = i;
            break;
        }
    if (var < 0) return Polynomial::constant(p.ring(), Q(1));

    Polynomial cp = detail::content_in(p, var);
    Polynomial cq = detail::content_in(q, var);
    Polynomial cg = gcd(cp, cq);
    Polynomial a = divide_exact(p, cp);
    Polynomial b = divide_exact(q, cq);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = detail::prem(a, b, var);
        a = b;
        if (r.is_zero())
            b = r;
        else
            b = divide_exact(r, detail::content_in(r, var)).primitive_part();
    }
    if (a.degree_in(var) == 0) return cg.monic();
    return (cg * divide_exact(a, detail::content_in(a, var))).monic();
}

namespace detail {

// Exact restriction of p to the line x_i = base_i + dir_i*t, as a dense
// univariate coefficient list indexed by degree in t. Empty means zero.
inline std::vector<Q> line_restrict(const Polynomial& p, const std::vector<long>& base,
                                    const std::vector<long>& dir)
{
    int n = p.ring()->arity();
    std::vector<Q> h;
    for (const auto& t : p.terms()) {
        std::vector<Q> term{t.c};
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < (int)t.m.e[i]; ++k) {
                std::vector<Q> nt(term.size() + 1, Q(0));
                for (size_t j = 0; j < term.size(); ++j) {
                    nt[j] += term[j] * base[(size_t)i];
                    nt[j + 1] += term[j] * dir[(size_t)i];
                }
                term = std::move(nt);
            }
        if (h.size() < term.size()) h.resize(term.size(), Q(0));
        for (size_t j = 0; j < term.size(); ++j) h[j] += term[j];
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

inline std::vector<Q> gcd1(std::vector<Q> a, std::vector<Q> b)
{
    auto trim = [](std::vector<Q>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        if (b.size() == 1) return {Q(1)};
        size_t db = b.size() - 1;
        while (a.size() > db) {
            Q c = a.back() / b.back();
            size_t off = a.size() - 1 - db;
            for (size_t j = 0; j <= db; ++j) a[off + j] -= c * b[j];
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

// Certifies absence of repeated factors by restricting to a line whose
// direction keeps the top-degree form nonzero: a repeated factor of p
// forces a repeated factor of every such restriction. Returns false when
// no tried line settles the question.
inline bool line_test_squarefree(const Polynomial& p)
{
    int n = p.ring()->arity();
    long D = 0;
    for (const auto& t : p.terms()) D = std::max(D, (long)t.m.degree());
    if (D <= 1) return true;
    std::minstd_rand rng(9176);
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<long> dir(n), base(n);
        for (int i = 0; i < n; ++i) {
            dir[(size_t)i] = (long)(rng() % 7) - 3;
            base[(size_t)i] = (long)(rng() % 7) - 3;
        }
        Q top(0);
        for (const auto& t : p.terms()) {
            if ((long)t.m.degree() != D) continue;
            Q v = t.c;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < (int)t.m.e[i]; ++k) v *= dir[(size_t)i];
            top += v;
        }
        if (top == 0) continue;
        auto h = line_restrict(p, base, dir);
        if ((long)h.size() - 1 != D) continue;
        std::vector<Q> hp(h.size() - 1);
        for (size_t j = 1; j < h.size(); ++j) hp[j - 1] = h[j] * Q((long)j);
        if (gcd1(h, hp).size() == 1) return true;
    }
    return false;
}

}  // namespace detail

// p divided by gcd(p, all partial derivatives); normalized monic.
inline Polynomial squarefree_part(const Polynomial& p)
{
    if (p.is_zero()) return p;
    int used = 0;
    for (int i = 0; i < p.ring()->arity(); ++i)
        if (p.involves(i)) ++used;
    if (used >= 2 && detail::line_test_squarefree(p)) return p.monic();
    Polynomial g = Polynomial::zero(p.ring());
    for (int i = 0; i < p.ring()->arity(); ++i) g = gcd(g, p.differentiate(i));
    g = gcd(g, p);
    return divide_exact(p, g).monic();
}

}  // namespace germforge
