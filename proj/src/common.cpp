// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/error.hpp"
#include "graded/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace graded {

const char* errc_name(Errc e) {
    switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::OwnerMismatch: return "OwnerMismatch";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::FiniteOrderRadius: return "FiniteOrderRadius";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::ZeroLinearCoefficient: return "ZeroLinearCoefficient";
    case Errc::RadiusNotInOrbit: return "RadiusNotInOrbit";
    case Errc::RootUnavailable: return "RootUnavailable";
    case Errc::TrivialOnProbes: return "TrivialOnProbes";
    case Errc::HeartFails: return "HeartFails";
    case Errc::WrongFamily: return "WrongFamily";
    case Errc::ActionOrderMismatch: return "ActionOrderMismatch";
    case Errc::SetupMismatch: return "SetupMismatch";
    case Errc::NotScalarCocycle: return "NotScalarCocycle";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

std::string to_string(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1)
        s += "/" + std::to_string(r.denominator());
    return s;
}

Rational parse_rational(std::string_view s) {
    std::size_t i = 0;
    auto parse_int = [&]() -> long long {
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
            neg = (s[i++] == '-');
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail(Errc::ParseError, "expected integer in rational: '" + std::string(s) + "'");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    };
    long long num = parse_int();
    long long den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = parse_int();
    }
    if (i != s.size())
        fail(Errc::ParseError, "trailing characters in rational: '" + std::string(s) + "'");
    if (den == 0)
        fail(Errc::ParseError, "zero denominator in rational: '" + std::string(s) + "'");
    return Rational(num, den);
}

} // namespace graded
