// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_INTLAT_HPP
#define GRADED_INTLAT_HPP

#include <cstdint>
#include <vector>

namespace graded {

/// Small dense integer matrices, row-major. Sizes here are tiny (a handful of
/// degree generators or abelian-group invariant factors), so everything is
/// plain int64 with overflow guards on products.
using IntMat = std::vector<std::vector<long long>>;

IntMat identity_mat(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);

struct SmithResult {
    IntMat u;    // unimodular, rows x rows
    IntMat v;    // unimodular, cols x cols
    IntMat s;    // u*a*v, diagonal with s[i][i] >= 0 and s[i][i] | s[i+1][i+1]
    std::size_t rank;
};

/// Smith normal form with transform matrices.
SmithResult smith_normal_form(IntMat a);

/// Basis of the integer kernel lattice {x : a*x = 0}, one basis vector per
/// column of the result (may be empty). The basis is saturated (it generates
/// the full kernel, not a finite-index sublattice).
std::vector<std::vector<long long>> integer_kernel(const IntMat& a);

/// C(i, j) mod p computed from the exact integer value (i small).
long long binom_mod_p(long long i, long long j, long long p);
/// C(i, j) mod p via the base-p digit product.
long long binom_mod_p_lucas(long long i, long long j, long long p);

} // namespace graded

#endif
