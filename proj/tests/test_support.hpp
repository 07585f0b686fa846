// Shared generators for randomized tests. Fixed seeds keep runs
// reproducible; suites that need independent streams offset the seed.
#pragma once

#include <random>

#include <germforge/poly_io.hpp>
#include <germforge/polynomial.hpp>

namespace gftest {

using namespace germforge;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Q rational(long num_range = 9, long den_range = 4)
    {
        long n = integer(-num_range, num_range);
        long d = integer(1, den_range);
        Q q(n, d);
        q.canonicalize();
        return q;
    }

    Monomial monomial(int nvars, int max_deg)
    {
        Monomial m;
        int budget = (int)integer(0, max_deg);
        for (int k = 0; k < budget; ++k) {
            int v = (int)integer(0, nvars - 1);
            m.e[v]++;
        }
        return m;
    }

    Polynomial polynomial(const Ring& r, int max_terms = 5, int max_deg = 4)
    {
        std::vector<Term> ts;
        int n = (int)integer(0, max_terms);
        for (int k = 0; k < n; ++k) ts.push_back({monomial(r->arity(), max_deg), rational()});
        return Polynomial::from_terms(r, ts);
    }

    Polynomial nonzero_polynomial(const Ring& r, int max_terms = 5, int max_deg = 4)
    {
        for (;;) {
            Polynomial p = polynomial(r, max_terms, max_deg);
            if (!p.is_zero()) return p;
        }
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace gftest
