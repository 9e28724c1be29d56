// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_FIELD_HPP
#define GRADED_FIELD_HPP

#include "graded/error.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graded {

enum class FieldKind { Finite, RationalFunction };

/// Description of a degree-1 coefficient field: F_{p^m} (perfect) or the
/// rational function field F_{p^m}(u) (imperfect).
struct FieldDesc {
    long long p = 2;
    int m = 1;
    FieldKind kind = FieldKind::Finite;
    bool operator==(const FieldDesc&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class FieldElem;

/// Immutable field context. F_{p^m} is presented as F_p[w]/(modulus) with the
/// lexicographically first irreducible modulus and the first primitive element
/// as multiplicative generator; both choices are deterministic per (p, m) and
/// surfaced through modulus_str()/generator_str() for reproducibility.
/// Nonzero F_{p^m} values are stored as exponents of that generator.
class Field : public std::enable_shared_from_this<Field> {
  public:
    static FieldPtr finite(long long p, int m);
    static FieldPtr rational_function(long long p, int m);
    /// `GF(4)` or `GF(2)(u)`.
    static FieldPtr parse_spec(std::string_view s);

    const FieldDesc& desc() const { return desc_; }
    long long p() const { return desc_.p; }
    int ext_degree() const { return desc_.m; }
    long long q() const { return q_; }
    bool is_perfect() const { return desc_.kind == FieldKind::Finite; }
    bool same(const Field& o) const { return desc_ == o.desc_; }
    std::string spec_str() const;
    std::string modulus_str() const;
    std::string generator_str() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long long v) const;
    FieldElem u() const; // RationalFunction only
    FieldElem w() const; // basis generator of F_{p^m}, m > 1

    /// All units of bounded height: the whole of F_q^x for finite fields,
    /// reduced fractions with numerator and denominator degree <= height for
    /// F_q(u). Deterministic order.
    std::vector<FieldElem> enumerate_units(int height) const;
    std::vector<FieldElem> enumerate_elements(int height) const;

    // Finite-field layer on generator exponents (-1 encodes zero). Used by
    // FieldElem internals and by the u-polynomial helpers.
    long long ff_add(long long a, long long b) const;
    long long ff_neg(long long a) const;
    long long ff_mul(long long a, long long b) const;
    long long ff_inv(long long a) const;
    long long ff_pow(long long a, long long e) const;
    long long ff_frob(long long a, long long n) const;
    long long ff_root(long long a, long long n) const;
    long long ff_from_int(long long v) const;
    long long polyint_of(long long log) const;
    long long log_of_polyint(long long pi) const;
    std::string ff_str(long long a) const;

  private:
    Field() = default;
    void init_tables();

    FieldDesc desc_;
    long long q_ = 0;                  // p^m
    std::vector<long long> modulus_;   // c_0..c_m over F_p, c_m = 1
    long long gen_polyint_ = 0;
    std::vector<long long> exp_;       // exp_[k] = polyint of g^k
    std::vector<long long> log_;       // log_[polyint] = k
};

/// Value of a coefficient field, in canonical form: rational functions are
/// stored in lowest terms with monic denominator, so operator== is equality
/// in the field.
class FieldElem {
  public:
    FieldElem() = default; // invalid until assigned; containers only

    bool valid() const { return F_ != nullptr; }
    const FieldPtr& field() const { return F_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator/=(const FieldElem& o);
    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    FieldElem inv() const;
    FieldElem pow(long long e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    /// Arbitrary total order (for deterministic containers and normal forms).
    bool operator<(const FieldElem& o) const;

    std::string str() const;

    friend class Field;
    friend FieldElem frobenius(const FieldElem& x, long long n);
    friend std::optional<FieldElem> pn_th_root(const FieldElem& x, long long n);
    friend FieldElem substitute_u_power(const FieldElem& x, long long k);

  private:
    FieldPtr F_;
    long long ff_ = -1;                  // Finite kind
    std::vector<long long> num_, den_;   // RationalFunction kind, coeff logs by u-degree
    void canonicalize();
};

/// x^(p^n), a ring homomorphism.
FieldElem frobenius(const FieldElem& x, long long n);

/// The y with y^(p^n) = x when x is a p^n-th power, nullopt otherwise.
/// Never nullopt over a finite field.
std::optional<FieldElem> pn_th_root(const FieldElem& x, long long n);

/// Expression grammar over `u`, `w`, integers, + - * / ^ and parentheses,
/// e.g. `(u^2+u)/(u+1)` or `w^2+1`.
FieldElem parse_field_elem(const FieldPtr& F, std::string_view s);

/// u -> u^k (k >= 1). Realizes the inclusion F_q(u) into F_q(u^(1/k)) with
/// the root renamed back to u; after rewriting with k = p^j, every p^j-th
/// root exists. Identity on finite fields.
FieldElem substitute_u_power(const FieldElem& x, long long k);

} // namespace graded

#endif
