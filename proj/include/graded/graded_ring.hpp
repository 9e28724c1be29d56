// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_GRADED_RING_HPP
#define GRADED_GRADED_RING_HPP

#include "graded/degree.hpp"
#include "graded/field.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace graded {

/// Graded field of Laurent shape k1[t^(+-stride)]: coefficient field k1 in
/// degree 1 and a Laurent generator of degree t_degree. Stride p^n realizes
/// the graded residue field of the base inside its totally ramified
/// extension k1[t^(+-1)]. Homogeneous elements are the monomials c*t^(j*stride)
/// and every nonzero one is invertible.
struct GradedField {
    FieldPtr coeff;
    std::string tname = "t";
    Degree t_degree;
    int stride = 1;

    static GradedField make(FieldPtr coeff, Degree t_degree, int stride = 1,
                            std::string tname = "t");
    GradedField relaxed(int new_stride) const;
    bool same(const GradedField& o) const;
};

struct VarDecl {
    std::string name;
    Degree degree;
    bool laurent = false;
    bool operator==(const VarDecl&) const = default;
};

/// Exponent vector of one term: t-exponent plus one exponent per ring
/// variable. Ordered with the variables dominant so that the maximal term of
/// a polynomial is its lead in the main variable.
struct Monomial {
    long long t = 0;
    std::vector<int> v;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const {
        if (v != o.v)
            return v < o.v;
        return t < o.t;
    }
};

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;
class GradedElem;

/// k[r1^-1 T1, ..., rn^-1 Tn] over a graded field k; zero variables gives k
/// itself. Immutable descriptor shared by its elements.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
  public:
    static RingPtr make(GradedField base, std::vector<VarDecl> vars);
    static RingPtr field_ring(GradedField base) { return make(std::move(base), {}); }

    const GradedField& base() const { return base_; }
    const std::vector<VarDecl>& vars() const { return vars_; }
    long long p() const { return base_.coeff->p(); }
    std::size_t var_index(std::string_view name) const;
    bool equal(const GradedRing& o) const;
    std::string str() const;

    Degree monomial_degree(const Monomial& m) const;

    GradedElem zero() const;
    GradedElem one() const;
    GradedElem scalar(FieldElem c) const;
    GradedElem t_pow(long long e) const;
    GradedElem var(std::size_t i, int e = 1) const;
    GradedElem monomial(FieldElem c, long long t, std::vector<int> v) const;

  private:
    GradedRing() = default;
    GradedField base_;
    std::vector<VarDecl> vars_;
};

class GradedElem {
  public:
    GradedElem() = default; // invalid until assigned; containers only

    bool valid() const { return R_ != nullptr; }
    const RingPtr& ring() const { return R_; }
    const std::map<Monomial, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    GradedElem operator-() const;
    GradedElem& operator+=(const GradedElem& o);
    GradedElem& operator-=(const GradedElem& o);
    GradedElem& operator*=(const GradedElem& o);
    friend GradedElem operator+(GradedElem a, const GradedElem& b) { return a += b; }
    friend GradedElem operator-(GradedElem a, const GradedElem& b) { return a -= b; }
    friend GradedElem operator*(GradedElem a, const GradedElem& b) { return a *= b; }
    GradedElem pow(long long e) const; // e >= 0

    bool operator==(const GradedElem& o) const;
    bool operator!=(const GradedElem& o) const { return !(*this == o); }

    /// Inverse of an invertible homogeneous element (a monomial whose
    /// variable exponents are zero unless the variable is Laurent).
    std::optional<GradedElem> try_invert() const;
    GradedElem inv() const;

    std::string str() const;

    friend class GradedRing;

  private:
    RingPtr R_;
    std::map<Monomial, FieldElem> terms_;
    void add_term(const Monomial& m, const FieldElem& c);
};

// --- homogeneity ---

std::map<Degree, GradedElem> homogeneous_components(const GradedElem& x);
/// Degree when x is homogeneous (the identity degree for x = 0), else nullopt.
std::optional<Degree> homogeneous_degree(const GradedElem& x);
/// Throws NotHomogeneous.
Degree degree_of(const GradedElem& x);

struct PPolyCheck {
    bool ok = false;
    std::vector<GradedElem> coeffs; // a_0..a_m over the base field ring
    std::string why;
};

/// Checks that f (in a one-variable ring) is a p-polynomial
/// a_0 V + a_1 V^p + ... + a_m V^(p^m), homogeneous of target_degree; each a_i
/// must then be homogeneous of degree target_degree * deg(V)^(-p^i).
PPolyCheck is_homogeneous_p_polynomial(const GradedElem& f, const Degree& target_degree);

// --- Frobenius regrading ---

/// Same ring with every degree replaced by its p^n-th root.
RingPtr twisted_ring(const RingPtr& R, long long n);
/// Same terms, owner regraded; a pure regrading, not a value change.
GradedElem frobenius_twist(const GradedElem& x, long long n);

// --- fraction ring and transcendence bookkeeping ---

/// Laurent extension k[r^-1 T, r T^-1] of a one-variable polynomial ring,
/// valid when the variable degree has infinite order modulo the degrees of
/// the homogeneous units of k. Throws FiniteOrderRadius otherwise.
RingPtr graded_fraction_ring(const RingPtr& R);

/// The two summands (trdeg of the degree-1 part, Q-rank of the degree
/// quotient) for the graded fraction field of k[r^-1 T]; they sum to 1.
std::pair<int, int> trdeg_frac_components(const GradedField& k, const Degree& r);

// --- movement between rings ---

/// Reinterpret x in ring R2 with the same coefficient field and t; R2's
/// stride must divide the stride of x's ring and variables must match.
GradedElem embed(const GradedElem& x, const RingPtr& R2);

/// Substitute var_images for the ring variables of f, mapping coefficients
/// identically; target's stride must divide the source stride.
GradedElem evaluate(const GradedElem& f, const RingPtr& target,
                    const std::vector<GradedElem>& var_images);

/// Exact division in rings with at most one (polynomial) variable; nullopt
/// when z does not divide w within the ring.
std::optional<GradedElem> try_divide_exact(const GradedElem& w, const GradedElem& z);

/// p^n-th root of a scalar (zero-variable) element: defined for monomials
/// c*t^a with p^n | a and c a p^n-th power in the coefficient field.
std::optional<GradedElem> pn_th_root_scalar(const GradedElem& x, long long n);

// --- text formats ---

/// `u*t^-2*T1^2 + T2`: '*'-separated pieces per term, each piece a t-power,
/// a variable power, or a coefficient atom (integer, u/w power, or a
/// parenthesized field expression).
GradedElem parse_graded_elem(const RingPtr& R, std::string_view s);

/// `GF(2)[t^+-2]{T1:q^2, T2:q}`: coefficient field, Laurent generator with
/// stride (optionally `t^+-2:qname` to rename its degree generator, default
/// "q"), then variables with their degrees.
RingPtr parse_ring_spec(std::string_view s);

} // namespace graded

#endif
