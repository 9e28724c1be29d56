// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/picard.hpp"

namespace graded {

namespace {

long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

PicardCtx PicardCtx::make(const FormPtr& A, const GradedField& ell) {
    PicardCtx ctx;
    ctx.n_ = A->n();
    ctx.p_ = A->p();
    ctx.pn_ = A->pn();
    ctx.tv_ = trivialize(A, ell);
    ctx.d_ell_ = HigherDerivation::standard(ell, ctx.n_);
    ctx.d_B_.emplace(base_change(ctx.d_ell_, ctx.tv_.AL));

    // d_L(T) through the coordinate change, component by component
    int m = static_cast<int>(ctx.pn_) - 1;
    TruncSeries<RussellElem> dtriv = (*ctx.d_B_)(ctx.tv_.triv);
    TruncSeries<GradedElem> image(m, ctx.tv_.Tring->zero());
    for (int k = 0; k <= m; ++k)
        image.at(static_cast<std::size_t>(k)) =
            to_T_coords(ctx.tv_, dtriv[static_cast<std::size_t>(k)]);
    ctx.d_T_image_ = image;

    TruncSeries<GradedElem> timg(m, ctx.tv_.Tring->zero());
    timg.at(0) = ctx.tv_.Tring->t_pow(1);
    if (m >= 1)
        timg.at(1) = ctx.tv_.Tring->one();
    ctx.d_T_ = HigherDerivation::with_images(ctx.tv_.Tring, m, timg, {image});

    auto w = log_derivative(ctx.d_T_, ctx.tv_.Tring->t_pow(1));
    if (!w)
        fail(Errc::Internal, "d(t)/t must be integral");
    ctx.w_ = *w;
    return ctx;
}

bool LogDerivClass::is_identity() const {
    for (std::size_t j = 0; j < nf_.components().size(); ++j) {
        const GradedElem& c = nf_[j];
        if (j == 0) {
            if (!(c == c.ring()->one()))
                return false;
        } else if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

LogDerivClass normalize_class(const PicardCtx& ctx, const TruncSeries<GradedElem>& s) {
    const RingPtr& R = ctx.tv().Tring;
    const FieldPtr& F = R->base().coeff;
    TruncSeries<GradedElem> r = s;
    for (int k = 0; k < ctx.n(); ++k) {
        long long pk = pow_ll(ctx.p(), k);
        // scalar coefficient at t^(-p^k) T^0 of the S^(p^k) component
        auto scalar_at = [&](const TruncSeries<GradedElem>& x) {
            const auto& terms = x[static_cast<std::size_t>(pk)].terms();
            auto it = terms.find(Monomial{-pk, {0}});
            return it == terms.end() ? F->zero() : it->second;
        };
        // multiply by the power of (d(t)/t)^(p^k) that minimizes the scalar
        FieldElem best = scalar_at(r);
        long long bestj = 0;
        FieldElem one = F->one();
        FieldElem cur = scalar_at(r);
        for (long long j = 1; j < ctx.p(); ++j) {
            cur += one;
            if (cur < best) {
                best = cur;
                bestj = j;
            }
        }
        if (bestj != 0)
            r *= ctx.w().pow(pk * bestj);
    }
    LogDerivClass cls;
    cls.nf_ = r;
    return cls;
}

LogDerivClass class_mul(const PicardCtx& ctx, const LogDerivClass& a, const LogDerivClass& b) {
    return normalize_class(ctx, a.nf_ * b.nf_);
}

std::vector<TruncSeries<GradedElem>> lprime_elements(const PicardCtx& ctx) {
    std::vector<TruncSeries<GradedElem>> out;
    TruncSeries<GradedElem> acc =
        TruncSeries<GradedElem>::constant(static_cast<int>(ctx.pn()) - 1,
                                          ctx.tv().Tring->one());
    for (long long j = 0; j < ctx.pn(); ++j) {
        out.push_back(acc);
        acc *= ctx.w();
    }
    return out;
}

std::optional<LogDerivClass> class_of(const PicardCtx& ctx, const GradedElem& z_in_T) {
    auto ld = log_derivative(ctx.d_T(), z_in_T);
    if (!ld)
        return std::nullopt;
    return normalize_class(ctx, *ld);
}

std::optional<LogDerivClass> class_of(const PicardCtx& ctx, const RussellElem& z) {
    return class_of(ctx, to_T_coords(ctx.tv(), z));
}

long long class_order(const PicardCtx& ctx, const LogDerivClass& cls) {
    LogDerivClass acc = cls;
    for (long long k = 1; k <= ctx.pn(); ++k) {
        if (acc.is_identity())
            return k;
        acc = class_mul(ctx, acc, cls);
    }
    fail(Errc::Internal, "class order exceeds p^n");
}

DTReport dT_criterion(const PicardCtx& ctx) {
    DTReport rep;
    for (const auto& comp : ctx.dLT().components())
        for (const auto& [mo, c] : comp.terms())
            rep.deg_T = std::max(rep.deg_T, mo.v[0]);
    rep.cyclic_certified = (rep.deg_T == 1);
    auto gen = class_of(ctx, ctx.tv().Tring->var(0));
    if (gen) {
        rep.generator = *gen;
        rep.generator_order = class_order(ctx, *gen);
    }
    return rep;
}

bool pth_root_criterion(const FormPtr& A) {
    if (A->n() != 1 || !(A->s() == A->r()))
        fail(Errc::WrongFamily, "the p-th root criterion applies to the n = 1, s = r family");
    const auto& a = A->f_coeffs();
    for (std::size_t i = 1; i < a.size(); ++i)
        if (!pn_th_root_scalar(a[i], 1).has_value())
            return false;
    return true;
}

} // namespace graded
