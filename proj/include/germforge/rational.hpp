// Exact rational coefficients, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <string>

#include "ring.hpp"

namespace germforge {

using Q = mpq_class;
using Z = mpz_class;

inline Q parse_rational(const std::string& s)
{
    Q q;
    if (q.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Q& q) { return q.get_str(); }

// a/b with b a positive integer, exact or throws.
inline Z exact_div(const Z& a, const Z& b)
{
    Z q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw error("inexact integer division");
    return q;
}

inline Z gcd(const Z& a, const Z& b)
{
    Z g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Z lcm(const Z& a, const Z& b)
{
    Z l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace germforge
