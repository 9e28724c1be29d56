// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/intlat.hpp"

#include "graded/error.hpp"

#include <cstdlib>
#include <numeric>

namespace graded {

namespace {

long long checked_mul(long long a, long long b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN)
        fail(Errc::Internal, "integer overflow in lattice arithmetic");
    return static_cast<long long>(p);
}

long long checked_add(long long a, long long b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > INT64_MAX || s < INT64_MIN)
        fail(Errc::Internal, "integer overflow in lattice arithmetic");
    return static_cast<long long>(s);
}

void add_row_multiple(IntMat& m, std::size_t dst, std::size_t src, long long k) {
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = checked_add(m[dst][j], checked_mul(k, m[src][j]));
}

void add_col_multiple(IntMat& m, std::size_t dst, std::size_t src, long long k) {
    for (auto& row : m)
        row[dst] = checked_add(row[dst], checked_mul(k, row[src]));
}

void swap_rows(IntMat& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    for (auto& row : m)
        std::swap(row[a], row[b]);
}

void negate_row(IntMat& m, std::size_t r) {
    for (auto& x : m[r])
        x = -x;
}

} // namespace

IntMat identity_mat(std::size_t n) {
    IntMat m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMat c(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] = checked_add(c[i][j], checked_mul(a[i][l], b[l][j]));
        }
    return c;
}

SmithResult smith_normal_form(IntMat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    SmithResult res{identity_mat(rows), identity_mat(cols), {}, 0};

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pick the nonzero entry of smallest magnitude in the trailing block.
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                long long v = std::llabs(a[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0)
            break;
        if (pi != t) {
            swap_rows(a, t, pi);
            swap_rows(res.u, t, pi);
        }
        if (pj != t) {
            swap_cols(a, t, pj);
            swap_cols(res.v, t, pj);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0)
                continue;
            long long q = a[i][t] / a[t][t];
            add_row_multiple(a, i, t, -q);
            add_row_multiple(res.u, i, t, -q);
            if (a[i][t] != 0)
                clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0)
                continue;
            long long q = a[t][j] / a[t][t];
            add_col_multiple(a, j, t, -q);
            add_col_multiple(res.v, j, t, -q);
            if (a[t][j] != 0)
                clean = false;
        }
        if (!clean)
            continue; // smaller pivot now exists, restart this block

        // Enforce the divisibility chain: pivot must divide everything below-right.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    add_row_multiple(a, t, i, 1);
                    add_row_multiple(res.u, t, i, 1);
                    divides_all = false;
                }
        if (!divides_all)
            continue;

        if (a[t][t] < 0) {
            negate_row(a, t);
            negate_row(res.u, t);
        }
        ++t;
    }
    res.rank = t;
    res.s = std::move(a);
    return res;
}

long long binom_mod_p(long long i, long long j, long long p) {
    if (j < 0 || j > i)
        return 0;
    __int128 acc = 1;
    for (long long k = 1; k <= j; ++k) {
        acc = acc * (i - k + 1) / k; // exact at every step along this order
        if (acc > (static_cast<__int128>(1) << 100))
            fail(Errc::Internal, "binomial too large for exact reduction");
    }
    return static_cast<long long>(acc % p);
}

long long binom_mod_p_lucas(long long i, long long j, long long p) {
    if (j < 0 || j > i)
        return 0;
    long long r = 1;
    while (i > 0 || j > 0) {
        long long id = i % p, jd = j % p;
        if (jd > id)
            return 0;
        r = (r * binom_mod_p(id, jd, p)) % p;
        i /= p;
        j /= p;
    }
    return r;
}

std::vector<std::vector<long long>> integer_kernel(const IntMat& a) {
    if (a.empty())
        return {};
    std::size_t cols = a[0].size();
    SmithResult snf = smith_normal_form(a);
    std::vector<std::vector<long long>> basis;
    for (std::size_t j = snf.rank; j < cols; ++j) {
        std::vector<long long> v(cols);
        for (std::size_t i = 0; i < cols; ++i)
            v[i] = snf.v[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace graded
