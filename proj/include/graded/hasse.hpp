// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_HASSE_HPP
#define GRADED_HASSE_HPP

#include "graded/graded_ring.hpp"
#include "graded/russell.hpp"
#include "graded/trunc.hpp"

#include <optional>
#include <vector>

namespace graded {

// carrier hooks for TruncSeries
inline GradedElem zero_like(const GradedElem& x) { return x.ring()->zero(); }
inline GradedElem unit_like(const GradedElem& x) { return x.ring()->one(); }
inline std::optional<GradedElem> try_invert_elem(const GradedElem& x) { return x.try_invert(); }
inline RussellElem zero_like(const RussellElem& x) { return x.form()->zero(); }
inline RussellElem unit_like(const RussellElem& x) { return x.form()->one(); }
std::optional<RussellElem> try_invert_elem(const RussellElem& x);

/// Higher derivation of rank m on a graded ring, stored as a ring
/// homomorphism into the S-truncated ring: the images of t and of each ring
/// variable determine it, coefficients are fixed. The convolution formula is
/// automatic for this representation (and asserted in the tests anyway).
class HigherDerivation {
  public:
    /// The standard higher derivation of exponent m_prime on ell = k1[t^(+-1)]:
    /// t -> t + S, rank p^m_prime - 1. Components on monomials follow the
    /// binomial formula with coefficients reduced mod p.
    static HigherDerivation standard(const GradedField& ell, int m_prime);
    /// Arbitrary generator images; every image must have an invertible S^0
    /// part where inversion is needed (t) and restore epsilon-compatibility
    /// (S^0 component equal to the generator itself).
    static HigherDerivation with_images(RingPtr carrier, int rank,
                                        TruncSeries<GradedElem> t_image,
                                        std::vector<TruncSeries<GradedElem>> var_images);

    const RingPtr& carrier() const { return carrier_; }
    int rank() const { return rank_; }
    long long p() const { return carrier_->p(); }
    const TruncSeries<GradedElem>& t_image() const { return t_image_; }

    TruncSeries<GradedElem> operator()(const GradedElem& x) const;

  private:
    RingPtr carrier_;
    int rank_ = 0;
    TruncSeries<GradedElem> t_image_;
    std::vector<TruncSeries<GradedElem>> var_images_;
};

/// min{1 <= j <= m : some probe has a nonzero j-th component} and the least n
/// with m < mu * p^n. Throws TrivialOnProbes when every probe is constant.
std::pair<int, int> mu_and_n(const HigherDerivation& d, const std::vector<GradedElem>& probes);

bool is_constant(const HigherDerivation& d, const GradedElem& x);

struct HeartReport {
    bool pass = false;
    int mu = 0;
    int n = 0;
    std::string failing_clause; // empty on pass
    std::string unit_witness;   // printed probe with a unit mu-th component
};

/// The two clauses backing the descent isomorphism: the declared index
/// [K:K'] must equal p^n, and some probe must have a unit mu-th component.
HeartReport heartsuit_check(const HigherDerivation& d, long long declared_index,
                            const std::vector<GradedElem>& probes);

/// The base change id (x) d to B = ell (x) A: fixes x and y, acts on the
/// ell-coefficients through d; same rank and order, constants contain A.
class BaseChangedDerivation {
  public:
    BaseChangedDerivation(HigherDerivation inner, FormPtr B);
    const FormPtr& form() const { return B_; }
    const HigherDerivation& inner() const { return inner_; }
    int rank() const { return inner_.rank(); }

    TruncSeries<RussellElem> operator()(const RussellElem& z) const;

  private:
    HigherDerivation inner_; // on the scalar ring of B
    FormPtr B_;
};

BaseChangedDerivation base_change(const HigherDerivation& d_ell, const FormPtr& B_over_ell);

std::pair<int, int> mu_and_n(const BaseChangedDerivation& d,
                             const std::vector<RussellElem>& probes);
HeartReport heartsuit_check(const BaseChangedDerivation& d, long long declared_index,
                            const std::vector<RussellElem>& probes);

/// d(z)/z when every component of d(z) is divisible by z in the carrier
/// (then the constant term is 1 and the series is a unit); nullopt when the
/// class lies outside the integral logarithmic derivatives. Throws
/// ZeroArgument for z = 0.
std::optional<TruncSeries<GradedElem>> log_derivative(const HigherDerivation& d,
                                                      const GradedElem& z);

} // namespace graded

#endif
