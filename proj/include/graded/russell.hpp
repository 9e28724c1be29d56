// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_RUSSELL_HPP
#define GRADED_RUSSELL_HPP

#include "graded/graded_ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace graded {

class RussellForm;
using FormPtr = std::shared_ptr<const RussellForm>;

/// Input data for A = k[(r^(p^n))^-1 x, s^-1 y] / (y^(p^n) - f(x)) with
/// f = a_0 x + a_1 x^p + ... + a_m x^(p^m), a separable homogeneous
/// p-polynomial of degree s^(p^n).
struct RussellSpec {
    GradedField base; // stride p^n
    int n = 1;
    Degree r;
    Degree s;
    std::vector<GradedElem> f_coeffs; // a_0..a_m in the scalar ring of base
};

class RussellElem;

class RussellForm : public std::enable_shared_from_this<RussellForm> {
  public:
    /// Validates the input data: a_0 != 0 (ZeroLinearCoefficient), each a_i
    /// homogeneous of degree s^(p^n) * (r^(p^n))^(-p^i) (NotHomogeneous),
    /// s in the unit-degree orbit of r (RadiusNotInOrbit), stride = p^n.
    static FormPtr create(const RussellSpec& spec);
    /// Test hook: accepts an arbitrary relation polynomial f(x), skipping
    /// validation. Forms built this way cannot be trivialized.
    static FormPtr create_unchecked(GradedField base, int n, Degree r, Degree s,
                                    const GradedElem& f_in_xring);

    /// The same form with coefficients embedded into a stride relaxation
    /// (the base change to ell = k^(p^-n) at the graded-reduction level).
    FormPtr base_changed(const GradedField& ell) const;

    const GradedField& base() const { return base_; }
    int n() const { return n_; }
    long long p() const { return p_; }
    long long pn() const { return pn_; }
    const Degree& r() const { return r_; }
    const Degree& s() const { return s_; }
    const std::vector<GradedElem>& f_coeffs() const { return a_; }
    const RingPtr& xring() const { return xring_; }
    const RingPtr& scalar_ring() const { return scalar_ring_; }
    const GradedElem& f_of_x() const { return f_of_x_; }

    bool equal(const RussellForm& o) const;
    std::string str() const;

    RussellElem zero() const;
    RussellElem one() const;
    RussellElem x() const;
    RussellElem y() const;
    RussellElem scalar(const GradedElem& c) const;      // from the scalar ring
    RussellElem from_xring(const GradedElem& c) const;  // polynomial in x

  private:
    RussellForm() = default;
    GradedField base_;
    int n_ = 1;
    long long p_ = 2, pn_ = 2;
    Degree r_, s_;
    std::vector<GradedElem> a_;
    RingPtr scalar_ring_;
    RingPtr xring_;
    GradedElem f_of_x_;
};

/// Element of the quotient in the free basis {y^j : 0 <= j < p^n} over
/// k[x]; the reduction y^(p^n) -> f(x) is applied eagerly, so the
/// representation is unique.
class RussellElem {
  public:
    RussellElem() = default; // invalid until assigned; containers only

    bool valid() const { return A_ != nullptr; }
    const FormPtr& form() const { return A_; }
    const std::vector<GradedElem>& y_coeffs() const { return yc_; }
    bool is_zero() const;

    RussellElem operator-() const;
    RussellElem& operator+=(const RussellElem& o);
    RussellElem& operator-=(const RussellElem& o);
    RussellElem& operator*=(const RussellElem& o);
    friend RussellElem operator+(RussellElem a, const RussellElem& b) { return a += b; }
    friend RussellElem operator-(RussellElem a, const RussellElem& b) { return a -= b; }
    friend RussellElem operator*(RussellElem a, const RussellElem& b) { return a *= b; }
    RussellElem pow(long long e) const;

    bool operator==(const RussellElem& o) const;
    bool operator!=(const RussellElem& o) const { return !(*this == o); }

    std::string str() const;

    friend class RussellForm;

  private:
    FormPtr A_;
    std::vector<GradedElem> yc_;
};

std::optional<Degree> homogeneous_degree(const RussellElem& z);

struct HopfReport {
    bool pass = false;
    std::string detail;
};

/// Verifies inside the quotient tensor square that the comultiplication
/// c(x) = 1(x)x + x(x)1, c(y) = 1(x)y + y(x)1 is compatible with the
/// relation: c(y)^(p^n) - f(c(x)) must vanish. Fails exactly when f is not
/// additive (not a p-polynomial).
HopfReport hopf_check(const FormPtr& A);

/// Result of the iterative splitting computation, with all arithmetic done
/// in the base change to ell (stride relaxation, coefficientwise p^j-th
/// roots). triv satisfies triv^(p^n) = a_0 x and y = triv + sum_i h_coeffs[i]
/// triv^(p^i); substituting the dictionary back into the defining relation
/// gives zero.
struct Trivialization {
    FormPtr AL;                         // the form over ell
    RussellElem triv;                   // homogeneous of degree s
    std::vector<GradedElem> h_coeffs;   // index i = 1..m, scalars over ell
    GradedElem a0;                      // in the scalar ring over ell
    RingPtr Tring;                      // ell[s^-1 T]
    GradedElem x_image;                 // a_0^-1 T^(p^n)
    GradedElem y_image;                 // T + sum h_coeffs[i] T^(p^i)
};

/// Throws RootUnavailable when a required coefficient root does not exist in
/// ell (possible for imperfect k1).
Trivialization trivialize(const FormPtr& A, const GradedField& ell);

/// Coordinate change through the trivialization: x -> a_0^-1 T^(p^n),
/// y -> T + sum h_i T^(p^i).
GradedElem to_T_coords(const Trivialization& tv, const RussellElem& z);
/// Inverse substitution T -> triv.
RussellElem from_T_coords(const Trivialization& tv, const GradedElem& w);

} // namespace graded

#endif
