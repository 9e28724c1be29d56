// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_RATIONAL_HPP
#define GRADED_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace graded {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/// Parses "3", "-2/5", "7/1". Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view s);

} // namespace graded

#endif
