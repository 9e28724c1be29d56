// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/skew.hpp"

#include <cctype>

namespace graded {

namespace {

long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

void check_same_field(const SkewPoly& a, const SkewPoly& b) {
    if (!a.field() || !b.field() || !a.field()->same(*b.field()))
        fail(Errc::OwnerMismatch, "skew polynomials over different fields");
}

} // namespace

SkewPoly::SkewPoly(FieldPtr F, std::vector<FieldElem> coeffs)
    : F_(std::move(F)), c_(std::move(coeffs)) {
    trim();
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

FieldElem SkewPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : F_->zero();
}

SkewPoly SkewPoly::operator-() const {
    SkewPoly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

SkewPoly& SkewPoly::operator+=(const SkewPoly& o) {
    check_same_field(*this, o);
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), F_->zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

SkewPoly& SkewPoly::operator-=(const SkewPoly& o) { return *this += -o; }

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    check_same_field(a, b);
    const FieldPtr& F = a.field();
    if (a.is_zero() || b.is_zero())
        return SkewPoly(F);
    std::vector<FieldElem> c(a.coeffs().size() + b.coeffs().size() - 1, F->zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * frobenius(b.coeffs()[j], static_cast<long long>(i));
    }
    return SkewPoly(F, std::move(c));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    check_same_field(*this, o);
    if (c_.size() != o.c_.size())
        return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i])
            return false;
    return true;
}

std::string SkewPoly::str() const {
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        std::string cs = c_[i].str();
        bool wrap = cs.find_first_of("+/*") != std::string::npos;
        if (wrap)
            cs = "(" + cs + ")";
        if (i == 0) {
            s += cs;
        } else {
            std::string fp = (i == 1) ? "F" : "F^" + std::to_string(i);
            s += c_[i].is_one() ? fp : cs + "*" + fp;
        }
    }
    return s;
}

SkewPoly twist_coeffs(const SkewPoly& tau, long long n) {
    std::vector<FieldElem> c = tau.coeffs();
    for (auto& x : c)
        x = frobenius(x, n);
    return SkewPoly(tau.field(), std::move(c));
}

GradedElem to_p_polynomial(const SkewPoly& tau, const RingPtr& ring) {
    if (ring->vars().size() != 1)
        fail(Errc::Internal, "p-polynomial image needs a one-variable ring");
    if (!ring->base().coeff->same(*tau.field()))
        fail(Errc::OwnerMismatch, "coefficient field mismatch");
    long long p = tau.field()->p();
    GradedElem out = ring->zero();
    long long pw = 1;
    for (std::size_t i = 0; i < tau.coeffs().size(); ++i) {
        out += ring->scalar(tau.coeffs()[i]) * ring->var(0, static_cast<int>(pw));
        pw *= p;
    }
    return out;
}

std::pair<SkewPoly, SkewPoly> right_divide(const SkewPoly& a, const SkewPoly& b) {
    check_same_field(a, b);
    if (b.is_zero())
        fail(Errc::DivisionByZero, "skew division by zero");
    const FieldPtr& F = a.field();
    long long p = F->p();
    SkewPoly r = a;
    std::vector<FieldElem> q;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        // (c F^k)(b_d F^d) = c b_d^(p^k) F^(k+d)
        FieldElem c = r.coeffs().back() / b.coeffs().back().pow(pow_ll(p, k));
        if (q.size() <= static_cast<std::size_t>(k))
            q.resize(k + 1, F->zero());
        q[k] = c;
        std::vector<FieldElem> mono(k + 1, F->zero());
        mono[k] = c;
        r -= SkewPoly(F, std::move(mono)) * b;
    }
    return {SkewPoly(F, std::move(q)), r};
}

SkewPoly invert_mod_Fn(const SkewPoly& tau, int n) {
    if (!tau.is_separable())
        fail(Errc::NotSeparable, "inverse mod F^n needs a_0 != 0");
    const FieldPtr& F = tau.field();
    long long p = F->p();
    FieldElem a0inv = tau.coeff(0).inv();
    std::vector<FieldElem> beta{a0inv};
    for (int k = 1; k < n; ++k) {
        // coefficient of F^k in tau*beta: sum_{i+j=k} a_i beta_j^(p^i) = 0
        FieldElem acc = F->zero();
        for (int i = 1; i <= k; ++i)
            acc += tau.coeff(i) * beta[k - i].pow(pow_ll(p, i));
        beta.push_back(-(a0inv * acc));
    }
    return SkewPoly(F, std::move(beta));
}

namespace {

// tau * c for a scalar on the right: coefficients a_i c^(p^i).
SkewPoly scale_right(const SkewPoly& tau, const FieldElem& c) {
    const FieldPtr& F = tau.field();
    long long p = F->p();
    std::vector<FieldElem> out = tau.coeffs();
    long long pw = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= c.pow(pw);
        pw *= p;
    }
    return SkewPoly(F, std::move(out));
}

bool all_coeffs_pn_powers(const SkewPoly& s, int n) {
    for (const auto& c : s.coeffs())
        if (!pn_th_root(c, n).has_value())
            return false;
    return true;
}

SkewPoly coeffwise_root(const SkewPoly& s, int n) {
    std::vector<FieldElem> out;
    for (const auto& c : s.coeffs())
        out.push_back(*pn_th_root(c, n));
    return SkewPoly(s.field(), std::move(out));
}

} // namespace

TrivialityResult triviality_test(const SkewPoly& tau, int n) {
    if (!tau.is_separable())
        fail(Errc::NotSeparable, "triviality test needs a_0 != 0");
    const FieldPtr& F = tau.field();
    long long p = F->p();
    // tau*c lands in k1[F]^(n) for some c iff a_i a_0^(-p^i) is a p^n-th
    // power for every i >= 1: coefficient 0 forces c into a_0^-1 k1^(x p^n),
    // and with c = a_0^-1 d^(p^n) coefficient i becomes a_i a_0^(-p^i) d^(p^(n+i)).
    FieldElem a0 = tau.coeff(0);
    long long pw = 1;
    for (int i = 1; i <= tau.degree(); ++i) {
        pw *= p;
        FieldElem v = tau.coeff(i) * a0.pow(-pw);
        if (!pn_th_root(v, n).has_value())
            return {false, std::nullopt};
    }
    return {true, a0.inv()};
}

TrivialityResult triviality_bruteforce(const SkewPoly& tau, int n, int height) {
    if (!tau.is_separable())
        fail(Errc::NotSeparable, "triviality test needs a_0 != 0");
    for (const auto& c : tau.field()->enumerate_units(height))
        if (all_coeffs_pn_powers(scale_right(tau, c), n))
            return {true, c};
    return {false, std::nullopt};
}

std::optional<IsoWitness> iso_test_exact(const SkewPoly& tau, const SkewPoly& tau2, int n,
                                         int c_search_bound) {
    check_same_field(tau, tau2);
    if (!tau.is_separable() || !tau2.is_separable())
        fail(Errc::NotSeparable, "isomorphism test needs separable inputs");
    // Exact relation tau*c = sigma^(n)*tau2 with sigma separable; with
    // tau2 = 1 this is literally the triviality criterion.
    for (const auto& c : tau.field()->enumerate_units(c_search_bound)) {
        auto [q, r] = right_divide(scale_right(tau, c), tau2);
        if (!r.is_zero() || !q.is_separable())
            continue;
        if (!all_coeffs_pn_powers(q, n))
            continue;
        return IsoWitness{coeffwise_root(q, n), c};
    }
    return std::nullopt;
}

std::optional<IsoWitness> iso_test_mod(const SkewPoly& tau, const SkewPoly& tau2, int n,
                                       int c_search_bound) {
    check_same_field(tau, tau2);
    if (!tau.is_separable() || !tau2.is_separable())
        fail(Errc::NotSeparable, "isomorphism test needs separable inputs");
    // Same relation as the exact test, but only modulo F^n (the quotient-level
    // group action); this equivalence is symmetric in tau and tau2.
    SkewPoly beta = invert_mod_Fn(tau2, n);
    for (const auto& c : tau.field()->enumerate_units(c_search_bound)) {
        SkewPoly w = scale_right(tau, c) * beta;
        std::vector<FieldElem> low(w.coeffs().begin(),
                                   w.coeffs().begin() +
                                       std::min<std::size_t>(w.coeffs().size(), n));
        SkewPoly wmod(tau.field(), std::move(low));
        if (!wmod.is_separable())
            continue;
        if (!all_coeffs_pn_powers(wmod, n))
            continue;
        return IsoWitness{coeffwise_root(wmod, n), c};
    }
    return std::nullopt;
}

SkewPoly parse_skew(const FieldPtr& F, std::string_view s) {
    // '+'-separated terms; each term is a coefficient atom, `F^i`, or
    // `atom*F^i`. Coefficient atoms may be parenthesized field expressions.
    std::vector<FieldElem> coeffs;
    auto put = [&](std::size_t i, const FieldElem& c) {
        if (coeffs.size() <= i)
            coeffs.resize(i + 1, F->zero());
        coeffs[i] += c;
    };
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    skip();
    if (i == s.size())
        fail(Errc::ParseError, "empty skew polynomial");
    while (i < s.size()) {
        // read one term up to a top-level '+'
        int depth = 0;
        std::size_t start = i;
        while (i < s.size() && (depth > 0 || s[i] != '+')) {
            if (s[i] == '(')
                ++depth;
            if (s[i] == ')')
                --depth;
            ++i;
        }
        std::string term(s.substr(start, i - start));
        if (i < s.size())
            ++i; // consume '+'

        // split off the F-part, if any
        std::size_t fpos = std::string::npos;
        depth = 0;
        for (std::size_t k = 0; k < term.size(); ++k) {
            if (term[k] == '(')
                ++depth;
            if (term[k] == ')')
                --depth;
            if (depth == 0 && term[k] == 'F') {
                fpos = k;
                break;
            }
        }
        std::size_t fexp = 0;
        std::string coef_text;
        if (fpos == std::string::npos) {
            coef_text = term;
        } else {
            std::size_t k = fpos + 1;
            fexp = 1;
            while (k < term.size() && std::isspace(static_cast<unsigned char>(term[k])))
                ++k;
            if (k < term.size() && term[k] == '^') {
                ++k;
                fexp = 0;
                bool any = false;
                while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) {
                    fexp = fexp * 10 + (term[k++] - '0');
                    any = true;
                }
                if (!any)
                    fail(Errc::ParseError, "bad F exponent in '" + term + "'");
            }
            while (k < term.size() && std::isspace(static_cast<unsigned char>(term[k])))
                ++k;
            if (k != term.size())
                fail(Errc::ParseError, "trailing characters after F power in '" + term + "'");
            coef_text = term.substr(0, fpos);
            // strip a trailing '*'
            while (!coef_text.empty() &&
                   std::isspace(static_cast<unsigned char>(coef_text.back())))
                coef_text.pop_back();
            if (!coef_text.empty() && coef_text.back() == '*')
                coef_text.pop_back();
        }
        FieldElem c = coef_text.empty() || coef_text.find_first_not_of(" \t") == std::string::npos
                          ? F->one()
                          : parse_field_elem(F, coef_text);
        put(fexp, c);
        skip();
    }
    return SkewPoly(F, std::move(coeffs));
}

} // namespace graded
