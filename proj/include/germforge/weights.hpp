// Weight-vector search: positive integer weights making a family of
// polynomials weighted homogeneous, via the linear exponent constraints.
#pragma once

#include <optional>

#include "polynomial.hpp"

namespace germforge {

namespace detail {

// Reduced row echelon form over Q, in place. Returns pivot columns.
inline std::vector<int> rref(std::vector<std::vector<Q>>& m)
{
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Q inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

inline std::vector<std::vector<Q>> nullspace(std::vector<std::vector<Q>> m, int cols)
{
    auto pivots = rref(m);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<Q>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Q> v(cols, Q(0));
        v[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<std::vector<long>> positive_integer_point(
    const std::vector<std::vector<Q>>& basis, int n)
{
    auto finish = [n](const std::vector<Q>& v) -> std::optional<std::vector<long>> {
        for (const Q& x : v)
            if (x <= 0) return std::nullopt;
        Z den(1);
        for (const Q& x : v) den = germforge::lcm(den, x.get_den());
        std::vector<Z> w(n);
        Z g(0);
        for (int i = 0; i < n; ++i) {
            w[i] = Z(v[i] * den);
            g = germforge::gcd(g, w[i]);
        }
        std::vector<long> out(n);
        for (int i = 0; i < n; ++i) out[i] = mpz_get_si(Z(w[i] / g).get_mpz_t());
        return out;
    };

    size_t r = basis.size();
    if (r == 0) return std::nullopt;
    // single basis vectors first
    for (const auto& b : basis) {
        if (auto w = finish(b)) return w;
        std::vector<Q> nb = b;
        for (auto& x : nb) x = -x;
        if (auto w = finish(nb)) return w;
    }
    if (r > 5) return std::nullopt;  // beyond the scale of this project
    int range = r <= 3 ? 6 : 2;
    std::vector<int> c(r, -range);
    for (;;) {
        bool all_zero = true;
        for (int x : c)
            if (x) all_zero = false;
        if (!all_zero) {
            std::vector<Q> v(n, Q(0));
            for (size_t i = 0; i < r; ++i)
                for (int j = 0; j < n; ++j) v[j] += Q(c[i]) * basis[i][j];
            if (auto w = finish(v)) return w;
        }
        size_t k = 0;
        while (k < r && c[k] == range) c[k++] = -range;
        if (k == r) break;
        ++c[k];
    }
    return std::nullopt;
}

}  // namespace detail

// Positive integer weights making every polynomial in `fs` weighted
// homogeneous, or nullopt when the constraints are infeasible.
inline std::optional<std::vector<long>> find_weights(const std::vector<Polynomial>& fs)
{
    if (fs.empty()) return std::vector<long>{};
    Ring r = fs[0].ring();
    for (const auto& f : fs) require_same_ring(r, f.ring());
    int n = r->arity();
    std::vector<std::vector<Q>> rows;
    for (const auto& f : fs) {
        if (f.terms().size() < 2) continue;
        const Monomial& e0 = f.terms()[0].m;
        for (size_t j = 1; j < f.terms().size(); ++j) {
            std::vector<Q> row(n);
            for (int i = 0; i < n; ++i)
                row[i] = Q((long)f.terms()[j].m.e[i] - (long)e0.e[i]);
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        // every polynomial is a single term; all-ones works
        return std::vector<long>(n, 1);
    }
    auto basis = detail::nullspace(std::move(rows), n);
    return detail::positive_integer_point(basis, n);
}

}  // namespace germforge
