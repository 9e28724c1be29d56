// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/degree.hpp"

#include "graded/error.hpp"
#include "graded/intlat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace graded {

Degree Degree::generator(std::string name, Rational e) {
    Degree d;
    if (e != Rational(0))
        d.exp_.emplace(std::move(name), e);
    return d;
}

Degree& Degree::operator*=(const Degree& o) {
    for (const auto& [name, e] : o.exp_) {
        auto it = exp_.find(name);
        if (it == exp_.end()) {
            exp_.emplace(name, e);
        } else {
            it->second += e;
            if (it->second == Rational(0))
                exp_.erase(it);
        }
    }
    return *this;
}

Degree Degree::inverse() const {
    Degree d;
    for (const auto& [name, e] : exp_)
        d.exp_.emplace(name, -e);
    return d;
}

Degree Degree::pow(const Rational& e) const {
    Degree d;
    if (e == Rational(0))
        return d;
    for (const auto& [name, x] : exp_)
        d.exp_.emplace(name, x * e);
    return d;
}

std::string Degree::str() const {
    if (exp_.empty())
        return "1";
    std::string s;
    for (const auto& [name, e] : exp_) {
        if (!s.empty())
            s += " * ";
        s += name;
        if (e != Rational(1))
            s += "^" + to_string(e);
    }
    return s;
}

std::optional<long long> order_mod_subgroup(const Degree& g, const std::vector<Degree>& gens) {
    // Union of supports, one matrix row per generator name.
    std::set<std::string> names;
    for (const auto& [n, e] : g.exponents())
        names.insert(n);
    for (const auto& d : gens)
        for (const auto& [n, e] : d.exponents())
            names.insert(n);
    if (names.empty())
        return 1; // g is the identity

    std::vector<std::string> idx(names.begin(), names.end());
    auto row_of = [&](const std::string& n) {
        return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), n) - idx.begin());
    };

    // Clear denominators with a single common multiple so the question becomes
    // pure integer lattice membership for k*b in the column span of A.
    long long lcm = 1;
    auto fold = [&](const Degree& d) {
        for (const auto& [n, e] : d.exponents())
            lcm = std::lcm(lcm, e.denominator());
    };
    fold(g);
    for (const auto& d : gens)
        fold(d);

    std::size_t rows = idx.size();
    IntMat a(rows, std::vector<long long>(std::max<std::size_t>(gens.size(), 1), 0));
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (const auto& [n, e] : gens[j].exponents())
            a[row_of(n)][j] = e.numerator() * (lcm / e.denominator());
    std::vector<long long> b(rows, 0);
    for (const auto& [n, e] : g.exponents())
        b[row_of(n)] = e.numerator() * (lcm / e.denominator());

    // With U*A*V = S diagonal: A*m = k*b  <=>  S*y = k*(U*b). Diagonal rows give
    // a divisibility condition on k; zero rows force the right side to vanish.
    SmithResult snf = smith_normal_form(a);
    std::vector<long long> ub(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t l = 0; l < rows; ++l)
            ub[i] += snf.u[i][l] * b[l];

    long long k = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < snf.rank) {
            long long s = snf.s[i][i];
            long long gcd = std::gcd(s, std::llabs(ub[i]));
            k = std::lcm(k, s / gcd);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return k;
}

Degree parse_degree(std::string_view s) {
    Degree d;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    skip_ws();
    if (i >= s.size())
        fail(Errc::ParseError, "empty degree");
    bool first = true;
    while (i < s.size()) {
        if (!first) {
            if (s[i] != '*')
                fail(Errc::ParseError, "expected '*' in degree: '" + std::string(s) + "'");
            ++i;
            skip_ws();
        }
        first = false;
        if (s[i] == '1' && (i + 1 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1])))) {
            ++i;
            skip_ws();
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(s[i])) && s[i] != '_')
            fail(Errc::ParseError, "expected generator name in degree: '" + std::string(s) + "'");
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        std::string name(s.substr(start, i - start));
        Rational e(1);
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            skip_ws();
            std::size_t es = i;
            if (i < s.size() && (s[i] == '+' || s[i] == '-'))
                ++i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
                ++i;
            e = parse_rational(s.substr(es, i - es));
        }
        d *= Degree::generator(name, e);
        skip_ws();
    }
    return d;
}

} // namespace graded
