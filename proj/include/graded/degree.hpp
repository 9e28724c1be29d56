// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_DEGREE_HPP
#define GRADED_DEGREE_HPP

#include "graded/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graded {

/// Element of the multiplicative grading group, written as a rational
/// exponent vector over named generators: {q_t: 2, r: -1/3} means
/// q_t^2 * r^(-1/3). The map never stores zero exponents, so structural
/// equality is group equality. The identity is the empty map.
class Degree {
  public:
    Degree() = default;
    static Degree one() { return {}; }
    static Degree generator(std::string name, Rational e = Rational(1));

    bool is_one() const { return exp_.empty(); }
    const std::map<std::string, Rational>& exponents() const { return exp_; }

    Degree& operator*=(const Degree& o);
    friend Degree operator*(Degree a, const Degree& b) { return a *= b; }
    Degree inverse() const;
    Degree pow(const Rational& e) const;
    Degree pow(long long e) const { return pow(Rational(e)); }

    bool operator==(const Degree& o) const { return exp_ == o.exp_; }
    bool operator<(const Degree& o) const { return exp_ < o.exp_; } // container order only

    std::string str() const;

  private:
    std::map<std::string, Rational> exp_;
};

/// Smallest k >= 1 with g^k in the subgroup of the grading group generated
/// (over Z) by gens; nullopt when no such k exists. Solved exactly via the
/// Smith normal form of the cleared exponent matrix.
std::optional<long long> order_mod_subgroup(const Degree& g, const std::vector<Degree>& gens);

/// Grammar: `q_t^2 * r^-1/3`, a bare generator name, or `1` for the identity.
Degree parse_degree(std::string_view s);

} // namespace graded

#endif
