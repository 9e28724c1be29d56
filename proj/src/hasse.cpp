// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/hasse.hpp"

namespace graded {

namespace {

long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

std::optional<RussellElem> try_invert_elem(const RussellElem& x) {
    // units of ell (x) A are the homogeneous units of ell: monomials c*t^a
    // in the y^0, x^0 slot
    const auto& yc = x.y_coeffs();
    for (std::size_t j = 1; j < yc.size(); ++j)
        if (!yc[j].is_zero())
            return std::nullopt;
    if (!yc[0].is_monomial())
        return std::nullopt;
    const auto& [mo, c] = *yc[0].terms().begin();
    if (mo.v[0] != 0)
        return std::nullopt;
    GradedElem inv = x.form()->xring()->monomial(c.inv(), -mo.t, {0});
    return x.form()->from_xring(inv);
}

HigherDerivation HigherDerivation::standard(const GradedField& ell, int m_prime) {
    if (ell.stride != 1)
        fail(Errc::ParseError, "the standard derivation lives on the stride-1 field");
    if (m_prime < 1 || m_prime > 12)
        fail(Errc::ParseError, "exponent m' must be in 1..12");
    long long pm = 1;
    for (int i = 0; i < m_prime; ++i) {
        pm *= ell.coeff->p();
        if (pm > 4096)
            fail(Errc::ParseError, "rank p^m' - 1 exceeds the supported bound");
    }
    RingPtr R = GradedRing::field_ring(ell);
    int rank = static_cast<int>(pm) - 1;
    TruncSeries<GradedElem> timg(rank, R->zero());
    timg.at(0) = R->t_pow(1);
    if (rank >= 1)
        timg.at(1) = R->one();
    return with_images(R, rank, std::move(timg), {});
}

HigherDerivation HigherDerivation::with_images(RingPtr carrier, int rank,
                                               TruncSeries<GradedElem> t_image,
                                               std::vector<TruncSeries<GradedElem>> var_images) {
    if (var_images.size() != carrier->vars().size())
        fail(Errc::Internal, "need one image per ring variable");
    if (!(t_image[0] == carrier->t_pow(1)))
        fail(Errc::Internal, "t image must have S^0 component t");
    for (std::size_t i = 0; i < var_images.size(); ++i)
        if (!(var_images[i][0] == carrier->var(i)))
            fail(Errc::Internal, "variable image must have S^0 component the variable");
    HigherDerivation d;
    d.carrier_ = std::move(carrier);
    d.rank_ = rank;
    d.t_image_ = std::move(t_image);
    d.var_images_ = std::move(var_images);
    return d;
}

TruncSeries<GradedElem> HigherDerivation::operator()(const GradedElem& x) const {
    if (!x.ring()->equal(*carrier_))
        fail(Errc::OwnerMismatch, "element does not live on the derivation's carrier");
    TruncSeries<GradedElem> out(rank_, carrier_->zero());
    for (const auto& [mo, c] : x.terms()) {
        TruncSeries<GradedElem> term = TruncSeries<GradedElem>::constant(
            rank_, carrier_->monomial(c, 0, std::vector<int>(carrier_->vars().size(), 0)));
        if (mo.t != 0)
            term *= t_image_.pow(mo.t);
        for (std::size_t i = 0; i < var_images_.size(); ++i)
            if (mo.v[i] != 0)
                term *= var_images_[i].pow(mo.v[i]);
        out += term;
    }
    return out;
}

std::pair<int, int> mu_and_n(const HigherDerivation& d, const std::vector<GradedElem>& probes) {
    int m = d.rank();
    int mu = m + 1;
    for (const auto& z : probes) {
        TruncSeries<GradedElem> s = d(z);
        for (int j = 1; j < mu; ++j)
            if (!s[static_cast<std::size_t>(j)].is_zero()) {
                mu = j;
                break;
            }
    }
    if (mu > m)
        fail(Errc::TrivialOnProbes, "no probe witnesses a nonzero component");
    long long p = d.p();
    int n = 0;
    long long pn = 1;
    while (m >= mu * pn) {
        ++n;
        pn *= p;
    }
    return {mu, n};
}

bool is_constant(const HigherDerivation& d, const GradedElem& x) {
    return d(x) == TruncSeries<GradedElem>::constant(d.rank(), x);
}

namespace {

template <class Deriv, class Elem>
HeartReport heartsuit_impl(const Deriv& d, long long p, int mu, int n, long long declared_index,
                           const std::vector<Elem>& probes) {
    HeartReport rep;
    rep.mu = mu;
    rep.n = n;
    if (declared_index != pow_ll(p, n)) {
        rep.failing_clause = "[K:K'] = " + std::to_string(declared_index) +
                             " differs from p^n = " + std::to_string(pow_ll(p, n));
        return rep;
    }
    for (const auto& z : probes) {
        auto s = d(z);
        if (try_invert_elem(s[static_cast<std::size_t>(mu)]).has_value()) {
            rep.pass = true;
            rep.unit_witness = z.str();
            return rep;
        }
    }
    rep.failing_clause = "no probe has a unit component at mu = " + std::to_string(mu);
    return rep;
}

} // namespace

HeartReport heartsuit_check(const HigherDerivation& d, long long declared_index,
                            const std::vector<GradedElem>& probes) {
    auto [mu, n] = mu_and_n(d, probes);
    return heartsuit_impl(d, d.p(), mu, n, declared_index, probes);
}

BaseChangedDerivation::BaseChangedDerivation(HigherDerivation inner, FormPtr B)
    : inner_(std::move(inner)), B_(std::move(B)) {
    if (!inner_.carrier()->equal(*B_->scalar_ring()))
        fail(Errc::OwnerMismatch, "inner derivation must act on the coefficient field of B");
}

TruncSeries<RussellElem> BaseChangedDerivation::operator()(const RussellElem& z) const {
    if (!z.form()->equal(*B_))
        fail(Errc::OwnerMismatch, "element does not live on the base-changed form");
    int m = inner_.rank();
    TruncSeries<RussellElem> out(m, B_->zero());
    RingPtr scal = B_->scalar_ring();
    for (std::size_t j = 0; j < z.y_coeffs().size(); ++j) {
        const GradedElem& xc = z.y_coeffs()[j];
        if (xc.is_zero())
            continue;
        RussellElem ypow = B_->y().pow(static_cast<long long>(j));
        for (const auto& [mo, c] : xc.terms()) {
            TruncSeries<GradedElem> ser = inner_(scal->monomial(c, mo.t, {}));
            RussellElem xpow =
                B_->from_xring(B_->xring()->monomial(B_->base().coeff->one(), 0, {mo.v[0]}));
            for (int k = 0; k <= m; ++k) {
                if (ser[static_cast<std::size_t>(k)].is_zero())
                    continue;
                out.at(static_cast<std::size_t>(k)) +=
                    B_->scalar(ser[static_cast<std::size_t>(k)]) * xpow * ypow;
            }
        }
    }
    return out;
}

BaseChangedDerivation base_change(const HigherDerivation& d_ell, const FormPtr& B_over_ell) {
    return BaseChangedDerivation(d_ell, B_over_ell);
}

std::pair<int, int> mu_and_n(const BaseChangedDerivation& d,
                             const std::vector<RussellElem>& probes) {
    int m = d.rank();
    int mu = m + 1;
    for (const auto& z : probes) {
        TruncSeries<RussellElem> s = d(z);
        for (int j = 1; j < mu; ++j)
            if (!s[static_cast<std::size_t>(j)].is_zero()) {
                mu = j;
                break;
            }
    }
    if (mu > m)
        fail(Errc::TrivialOnProbes, "no probe witnesses a nonzero component");
    long long p = d.form()->p();
    int n = 0;
    long long pn = 1;
    while (m >= mu * pn) {
        ++n;
        pn *= p;
    }
    return {mu, n};
}

HeartReport heartsuit_check(const BaseChangedDerivation& d, long long declared_index,
                            const std::vector<RussellElem>& probes) {
    auto [mu, n] = mu_and_n(d, probes);
    return heartsuit_impl(d, d.form()->p(), mu, n, declared_index, probes);
}

std::optional<TruncSeries<GradedElem>> log_derivative(const HigherDerivation& d,
                                                      const GradedElem& z) {
    if (z.is_zero())
        fail(Errc::ZeroArgument, "logarithmic derivative of zero");
    TruncSeries<GradedElem> s = d(z);
    TruncSeries<GradedElem> out(d.rank(), d.carrier()->zero());
    for (int j = 0; j <= d.rank(); ++j) {
        auto q = try_divide_exact(s[static_cast<std::size_t>(j)], z);
        if (!q)
            return std::nullopt;
        out.at(static_cast<std::size_t>(j)) = *q;
    }
    return out;
}

} // namespace graded
