// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_PICARD_HPP
#define GRADED_PICARD_HPP

#include "graded/hasse.hpp"
#include "graded/russell.hpp"

#include <optional>
#include <vector>

namespace graded {

/// Everything the class-group computation of a form reduction needs: the
/// trivialization over ell, the standard derivation of exponent n on ell,
/// its base change to B = ell (x) A, and the induced derivation on the
/// T-coordinate ring (where divisibility is decidable). Gradations play no
/// role here; all rings are treated as ordinary rings.
class PicardCtx {
  public:
    static PicardCtx make(const FormPtr& A, const GradedField& ell);

    const Trivialization& tv() const { return tv_; }
    int n() const { return n_; }
    long long p() const { return p_; }
    long long pn() const { return pn_; }
    const HigherDerivation& d_ell() const { return d_ell_; }
    const BaseChangedDerivation& d_B() const { return *d_B_; }
    const HigherDerivation& d_T() const { return d_T_; }
    /// d_L(T) as a series over the T-coordinate ring.
    const TruncSeries<GradedElem>& dLT() const { return d_T_image_; }
    /// d(t)/t, the generator of the unit classes L'.
    const TruncSeries<GradedElem>& w() const { return w_; }

  private:
    PicardCtx() = default;
    Trivialization tv_;
    int n_ = 1;
    long long p_ = 2, pn_ = 2;
    HigherDerivation d_ell_;
    std::optional<BaseChangedDerivation> d_B_;
    HigherDerivation d_T_;
    TruncSeries<GradedElem> d_T_image_;
    TruncSeries<GradedElem> w_;
};

/// Class of a logarithmic derivative modulo L' = {(d(t)/t)^j}: the stored
/// representative is the unique coset member whose S^(p^k)-component has its
/// t^(-p^k) scalar term minimized (zeroed whenever the scalar lies in the
/// prime field), for k = 0..n-1 in turn.
class LogDerivClass {
  public:
    const TruncSeries<GradedElem>& normal_form() const { return nf_; }
    bool operator==(const LogDerivClass& o) const { return nf_ == o.nf_; }
    bool operator!=(const LogDerivClass& o) const { return !(*this == o); }
    bool is_identity() const;
    std::string str() const { return nf_.str(); }

    friend LogDerivClass class_mul(const PicardCtx& ctx, const LogDerivClass& a,
                                   const LogDerivClass& b);
    friend class PicardCtx;
    friend LogDerivClass normalize_class(const PicardCtx& ctx,
                                         const TruncSeries<GradedElem>& s);

  private:
    TruncSeries<GradedElem> nf_;
};

LogDerivClass normalize_class(const PicardCtx& ctx, const TruncSeries<GradedElem>& s);
LogDerivClass class_mul(const PicardCtx& ctx, const LogDerivClass& a, const LogDerivClass& b);

/// The p^n distinct powers of d(t)/t.
std::vector<TruncSeries<GradedElem>> lprime_elements(const PicardCtx& ctx);

/// Logarithmic-derivative class of a nonzero element given in T-coordinates;
/// nullopt when d(z)/z is not integral over B.
std::optional<LogDerivClass> class_of(const PicardCtx& ctx, const GradedElem& z_in_T);
std::optional<LogDerivClass> class_of(const PicardCtx& ctx, const RussellElem& z);

/// Least k >= 1 with cls^k trivial; divides p^n.
long long class_order(const PicardCtx& ctx, const LogDerivClass& cls);

struct DTReport {
    int deg_T = 0;
    bool cyclic_certified = false;
    std::optional<LogDerivClass> generator; // class of T
    long long generator_order = 0;
};

/// The monomial T-degree of d_L(T); when it equals 1 the quotient L/L' is
/// cyclic, generated by the class of d_L(T)/T.
DTReport dT_criterion(const PicardCtx& ctx);

/// For the n = 1, s = r family: the class group is trivial iff every a_i
/// (i >= 1) has a p-th root inside the stride lattice of the base. Throws
/// WrongFamily otherwise.
bool pth_root_criterion(const FormPtr& A);

} // namespace graded

#endif
