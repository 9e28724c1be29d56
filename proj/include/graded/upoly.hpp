// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_UPOLY_HPP
#define GRADED_UPOLY_HPP

#include "graded/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace graded {

// Dense univariate polynomials with FieldElem coefficients, indexed by
// exponent. No trailing zeros; the zero polynomial is the empty vector.
// Shared by the rational-function layer's consumers and the exact-division
// routine of the graded rings (polynomials in t over the coefficient field).
using EPoly = std::vector<FieldElem>;

EPoly ep_trim(EPoly a);
int ep_deg(const EPoly& a); // -1 for zero
EPoly ep_add(const FieldPtr& F, const EPoly& a, const EPoly& b);
EPoly ep_sub(const FieldPtr& F, const EPoly& a, const EPoly& b);
EPoly ep_mul(const FieldPtr& F, const EPoly& a, const EPoly& b);
std::pair<EPoly, EPoly> ep_divrem(const FieldPtr& F, EPoly a, const EPoly& b);
std::optional<EPoly> ep_divide_exact(const FieldPtr& F, const EPoly& a, const EPoly& b);

} // namespace graded

#endif
