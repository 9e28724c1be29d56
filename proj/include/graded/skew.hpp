// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_SKEW_HPP
#define GRADED_SKEW_HPP

#include "graded/field.hpp"
#include "graded/graded_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graded {

/// Element of the endomorphism ring k1[F] of the additive group: sum a_i F^i
/// with the twisted multiplication F a = a^p F. Separable means a_0 != 0.
class SkewPoly {
  public:
    SkewPoly() = default; // invalid until assigned; containers only
    explicit SkewPoly(FieldPtr F) : F_(std::move(F)) {}
    SkewPoly(FieldPtr F, std::vector<FieldElem> coeffs);

    const FieldPtr& field() const { return F_; }
    /// Coefficients a_0..a_deg, trailing zeros trimmed.
    const std::vector<FieldElem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_separable() const { return !c_.empty() && !c_[0].is_zero(); }
    FieldElem coeff(std::size_t i) const;

    SkewPoly operator-() const;
    SkewPoly& operator+=(const SkewPoly& o);
    SkewPoly& operator-=(const SkewPoly& o);
    friend SkewPoly operator+(SkewPoly a, const SkewPoly& b) { return a += b; }
    friend SkewPoly operator-(SkewPoly a, const SkewPoly& b) { return a -= b; }
    /// (a F^i)(b F^j) = a b^(p^i) F^(i+j), extended bilinearly.
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);

    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    FieldPtr F_;
    std::vector<FieldElem> c_;
    void trim();
};

/// Coefficientwise p^n Frobenius a_i -> a_i^(p^n).
SkewPoly twist_coeffs(const SkewPoly& tau, long long n);

/// The p-polynomial sum a_i V^(p^i) in a one-variable graded ring; turns
/// skew multiplication into composition.
GradedElem to_p_polynomial(const SkewPoly& tau, const RingPtr& ring);

/// a = q*b + r with deg r < deg b (right division; quotient on the left).
std::pair<SkewPoly, SkewPoly> right_divide(const SkewPoly& a, const SkewPoly& b);

/// Inverse of a separable element modulo F^n: beta with
/// tau*beta = beta*tau = 1 up to terms F^i, i >= n. Throws NotSeparable.
SkewPoly invert_mod_Fn(const SkewPoly& tau, int n);

struct TrivialityResult {
    bool trivial = false;
    std::optional<FieldElem> witness_c; // tau*c has all coefficients in k1^(p^n)
};

/// Decides whether some c in k1^x puts every coefficient of tau*c into
/// k1^(p^n), via the reduction to a_i * a_0^(-p^i) being a p^n-th power for
/// all i >= 1 (the reduction is cross-checked against brute force in the
/// tests). Throws NotSeparable.
TrivialityResult triviality_test(const SkewPoly& tau, int n);

/// Test-oracle variant: search c directly over all units of bounded height.
TrivialityResult triviality_bruteforce(const SkewPoly& tau, int n, int height);

struct IsoWitness {
    SkewPoly sigma;
    FieldElem c;
};

/// Searches c of bounded height for the exact relation tau2*c = sigma^(n)*tau
/// with sigma separable. A nullopt is a bounded-search verdict, not a proof.
std::optional<IsoWitness> iso_test_exact(const SkewPoly& tau, const SkewPoly& tau2, int n,
                                         int c_search_bound);

/// Same search with the relation required only modulo F^n.
std::optional<IsoWitness> iso_test_mod(const SkewPoly& tau, const SkewPoly& tau2, int n,
                                       int c_search_bound);

/// `u + 1*F + 0*F^2 + u^3*F^3`.
SkewPoly parse_skew(const FieldPtr& F, std::string_view s);

} // namespace graded

#endif
