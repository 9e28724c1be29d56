// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/russell.hpp"

#include <map>

namespace graded {

namespace {

long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

// --- RussellForm ---

FormPtr RussellForm::create(const RussellSpec& spec) {
    if (spec.n < 1 || spec.n > 12)
        fail(Errc::ParseError, "Russell form needs 1 <= n <= 12");
    long long p = spec.base.coeff->p();
    long long pn = pow_ll(p, spec.n);
    if (pn > 4096)
        fail(Errc::ParseError, "p^n exceeds the supported bound 4096");
    if (spec.base.stride != pn)
        fail(Errc::ParseError, "base stride must be p^n = " + std::to_string(pn));
    if (spec.f_coeffs.empty() || spec.f_coeffs[0].is_zero())
        fail(Errc::ZeroLinearCoefficient, "a_0 must be nonzero");

    auto A = std::shared_ptr<RussellForm>(new RussellForm());
    A->base_ = spec.base;
    A->n_ = spec.n;
    A->p_ = p;
    A->pn_ = pn;
    A->r_ = spec.r;
    A->s_ = spec.s;
    A->scalar_ring_ = GradedRing::field_ring(spec.base);
    A->xring_ = GradedRing::make(spec.base, {{"x", spec.r.pow(pn), false}});

    // s must lie in the orbit of r under the unit degrees of ell = k^(p^-n),
    // whose Laurent generator has degree t_degree.
    auto ord = order_mod_subgroup(spec.s * spec.r.inverse(), {spec.base.t_degree});
    if (!(ord == 1))
        fail(Errc::RadiusNotInOrbit,
             "s = " + spec.s.str() + " is not in the unit-degree orbit of r = " + spec.r.str());

    Degree f_degree = spec.s.pow(pn);
    long long pw = 1;
    for (std::size_t i = 0; i < spec.f_coeffs.size(); ++i) {
        GradedElem ai = embed(spec.f_coeffs[i], A->scalar_ring_);
        Degree want = f_degree * spec.r.pow(pn).pow(pw).inverse();
        auto d = homogeneous_degree(ai);
        if (!d || (!ai.is_zero() && !(*d == want)))
            fail(Errc::NotHomogeneous, "coefficient a_" + std::to_string(i) +
                                           " must be homogeneous of degree " + want.str());
        A->a_.push_back(ai);
        pw *= p;
    }

    GradedElem f = A->xring_->zero();
    pw = 1;
    for (std::size_t i = 0; i < A->a_.size(); ++i) {
        f += A->xring_->monomial(A->base_.coeff->one(), 0, {static_cast<int>(pw)}) *
             evaluate(A->a_[i], A->xring_, {});
        pw *= p;
    }
    A->f_of_x_ = f;
    return A;
}

FormPtr RussellForm::create_unchecked(GradedField base, int n, Degree r, Degree s,
                                      const GradedElem& f_in_xring) {
    auto A = std::shared_ptr<RussellForm>(new RussellForm());
    long long p = base.coeff->p();
    A->base_ = std::move(base);
    A->n_ = n;
    A->p_ = p;
    A->pn_ = pow_ll(p, n);
    A->r_ = std::move(r);
    A->s_ = std::move(s);
    A->scalar_ring_ = GradedRing::field_ring(A->base_);
    A->xring_ = GradedRing::make(A->base_, {{"x", A->r_.pow(A->pn_), false}});
    A->f_of_x_ = embed(f_in_xring, A->xring_);
    return A;
}

FormPtr RussellForm::base_changed(const GradedField& ell) const {
    auto A = std::shared_ptr<RussellForm>(new RussellForm());
    A->base_ = ell;
    A->n_ = n_;
    A->p_ = p_;
    A->pn_ = pn_;
    A->r_ = r_;
    A->s_ = s_;
    A->scalar_ring_ = GradedRing::field_ring(ell);
    A->xring_ = GradedRing::make(ell, {{"x", r_.pow(pn_), false}});
    for (const auto& ai : a_)
        A->a_.push_back(embed(ai, A->scalar_ring_));
    A->f_of_x_ = embed(f_of_x_, A->xring_);
    return A;
}

bool RussellForm::equal(const RussellForm& o) const {
    return base_.same(o.base_) && n_ == o.n_ && r_ == o.r_ && s_ == o.s_ &&
           f_of_x_.terms() == o.f_of_x_.terms();
}

std::string RussellForm::str() const {
    return base_.coeff->spec_str() + "[" + base_.tname + "^+-" + std::to_string(base_.stride) +
           "][x,y]/(y^" + std::to_string(pn_) + " - (" + f_of_x_.str() + "))";
}

RussellElem RussellForm::zero() const {
    RussellElem e;
    e.A_ = shared_from_this();
    e.yc_.assign(static_cast<std::size_t>(pn_), xring_->zero());
    return e;
}

RussellElem RussellForm::one() const { return from_xring(xring_->one()); }

RussellElem RussellForm::x() const { return from_xring(xring_->var(0)); }

RussellElem RussellForm::y() const {
    RussellElem e = zero();
    e.yc_[1] = xring_->one();
    return e;
}

RussellElem RussellForm::scalar(const GradedElem& c) const {
    return from_xring(evaluate(c, xring_, {}));
}

RussellElem RussellForm::from_xring(const GradedElem& c) const {
    RussellElem e = zero();
    e.yc_[0] = embed(c, xring_);
    return e;
}

// --- RussellElem ---

namespace {

void check_same_form(const RussellElem& a, const RussellElem& b) {
    if (!a.form() || !b.form() || !a.form()->equal(*b.form()))
        fail(Errc::OwnerMismatch, "elements of different Russell forms");
}

} // namespace

bool RussellElem::is_zero() const {
    for (const auto& c : yc_)
        if (!c.is_zero())
            return false;
    return true;
}

RussellElem RussellElem::operator-() const {
    RussellElem r = *this;
    for (auto& c : r.yc_)
        c = -c;
    return r;
}

RussellElem& RussellElem::operator+=(const RussellElem& o) {
    check_same_form(*this, o);
    for (std::size_t j = 0; j < yc_.size(); ++j)
        yc_[j] += o.yc_[j];
    return *this;
}

RussellElem& RussellElem::operator-=(const RussellElem& o) {
    check_same_form(*this, o);
    for (std::size_t j = 0; j < yc_.size(); ++j)
        yc_[j] -= o.yc_[j];
    return *this;
}

RussellElem& RussellElem::operator*=(const RussellElem& o) {
    check_same_form(*this, o);
    std::size_t pn = yc_.size();
    std::vector<GradedElem> out(pn, A_->xring()->zero());
    const GradedElem& f = A_->f_of_x();
    for (std::size_t j1 = 0; j1 < pn; ++j1) {
        if (yc_[j1].is_zero())
            continue;
        for (std::size_t j2 = 0; j2 < pn; ++j2) {
            if (o.yc_[j2].is_zero())
                continue;
            std::size_t e = j1 + j2;
            GradedElem c = yc_[j1] * o.yc_[j2];
            if (e >= pn) {
                e -= pn;
                c *= f; // y^(p^n) = f(x)
            }
            out[e] += c;
        }
    }
    yc_ = std::move(out);
    return *this;
}

RussellElem RussellElem::pow(long long e) const {
    if (e < 0)
        fail(Errc::ParseError, "negative power of a quotient element");
    RussellElem acc = A_->one();
    RussellElem base = *this;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return acc;
}

bool RussellElem::operator==(const RussellElem& o) const {
    check_same_form(*this, o);
    for (std::size_t j = 0; j < yc_.size(); ++j)
        if (!(yc_[j] == o.yc_[j]))
            return false;
    return true;
}

std::string RussellElem::str() const {
    std::string s;
    for (std::size_t j = 0; j < yc_.size(); ++j) {
        if (yc_[j].is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        std::string cs = yc_[j].str();
        if (j == 0) {
            s += cs;
        } else {
            std::string yp = (j == 1) ? "y" : "y^" + std::to_string(j);
            if (cs == "1")
                s += yp;
            else
                s += "(" + cs + ")*" + yp;
        }
    }
    return s.empty() ? "0" : s;
}

std::optional<Degree> homogeneous_degree(const RussellElem& z) {
    std::optional<Degree> total;
    for (std::size_t j = 0; j < z.y_coeffs().size(); ++j) {
        const GradedElem& c = z.y_coeffs()[j];
        if (c.is_zero())
            continue;
        auto d = homogeneous_degree(c);
        if (!d)
            return std::nullopt;
        Degree dj = *d * z.form()->s().pow(static_cast<long long>(j));
        if (!total)
            total = dj;
        else if (!(*total == dj))
            return std::nullopt;
    }
    return total ? total : std::optional<Degree>(Degree::one());
}

// --- Hopf compatibility ---

namespace {

// Element of A (x) A in the basis {y^j1 (x) y^j2}, coefficients in the
// two-variable ring k[x1, x2]. Only what hopf_check needs.
struct TensorSquare {
    FormPtr A;
    RingPtr R2;
    std::map<std::pair<int, int>, GradedElem> c;

    void add(std::pair<int, int> key, const GradedElem& v) {
        if (v.is_zero())
            return;
        auto it = c.find(key);
        if (it == c.end()) {
            c.emplace(key, v);
        } else {
            it->second += v;
            if (it->second.is_zero())
                c.erase(it);
        }
    }

    TensorSquare mul(const TensorSquare& o, const GradedElem& f1, const GradedElem& f2) const {
        TensorSquare out{A, R2, {}};
        int pn = static_cast<int>(A->pn());
        for (const auto& [k1, v1] : c)
            for (const auto& [k2, v2] : o.c) {
                int e1 = k1.first + k2.first;
                int e2 = k1.second + k2.second;
                GradedElem v = v1 * v2;
                if (e1 >= pn) {
                    e1 -= pn;
                    v *= f1;
                }
                if (e2 >= pn) {
                    e2 -= pn;
                    v *= f2;
                }
                out.add({e1, e2}, v);
            }
        return out;
    }
};

} // namespace

HopfReport hopf_check(const FormPtr& A) {
    // tensor-square coefficient ring k[x1, x2]
    Degree xd = A->r().pow(A->pn());
    RingPtr R2 = GradedRing::make(A->base(), {{"x1", xd, false}, {"x2", xd, false}});
    GradedElem f1 = evaluate(A->f_of_x(), R2, {R2->var(0)});
    GradedElem f2 = evaluate(A->f_of_x(), R2, {R2->var(1)});

    // c(y)^(p^n) with c(y) = y (x) 1 + 1 (x) y
    TensorSquare cy{A, R2, {}};
    cy.add({1, 0}, R2->one());
    cy.add({0, 1}, R2->one());
    TensorSquare acc{A, R2, {}};
    acc.add({0, 0}, R2->one());
    for (long long e = 0; e < A->pn(); ++e)
        acc = acc.mul(cy, f1, f2);

    // f(c(x)) with c(x) = x (x) 1 + 1 (x) x, a y-free element
    GradedElem fcx = evaluate(A->f_of_x(), R2, {R2->var(0) + R2->var(1)});
    TensorSquare rhs{A, R2, {}};
    rhs.add({0, 0}, fcx);

    HopfReport rep;
    TensorSquare diff = acc;
    for (const auto& [k, v] : rhs.c)
        diff.add(k, -v);
    rep.pass = diff.c.empty();
    if (!rep.pass)
        rep.detail = "c(y)^(p^n) - f(c(x)) != 0: the relation polynomial is not additive";
    else
        rep.detail = "comultiplication is compatible with the defining relation";
    return rep;
}

// --- trivialization ---

Trivialization trivialize(const FormPtr& A, const GradedField& ell) {
    if (A->f_coeffs().empty())
        fail(Errc::Internal, "cannot trivialize a form without a coefficient list");
    int n = A->n();
    long long p = A->p();

    Trivialization tv;
    tv.AL = A->base_changed(ell);
    const FormPtr& AL = tv.AL;
    RingPtr sAL = AL->scalar_ring();

    std::vector<GradedElem> a;
    for (const auto& ai : A->f_coeffs())
        a.push_back(embed(ai, sAL));
    std::size_t m = a.size() - 1;
    tv.a0 = a[0];
    GradedElem a0inv = a[0].inv();

    auto root_or_fail = [&](const GradedElem& v, long long j, const std::string& label) {
        auto rt = pn_th_root_scalar(v, j);
        if (!rt)
            fail(Errc::RootUnavailable, "no p^" + std::to_string(j) + "-th root of " +
                                            label + " = " + v.str() + " in " +
                                            ell.coeff->spec_str() + "[" + ell.tname + "^+-" +
                                            std::to_string(ell.stride) + "]");
        return *rt;
    };

    // Step coefficients: the first step takes p-th roots of the a_i, the
    // later steps p^j-th roots of a_i * a_0^(-p^i).
    auto step_coeff = [&](std::size_t i, int j) {
        if (j == 1)
            return root_or_fail(a[i], 1, "a_" + std::to_string(i));
        GradedElem v = a[i] * a0inv.pow(pow_ll(p, static_cast<long long>(i)));
        return root_or_fail(v, j, "a_" + std::to_string(i) + " * a_0^(-p^" + std::to_string(i) + ")");
    };

    RussellElem x = AL->x();
    RussellElem y = AL->y();

    RussellElem t_prev = AL->zero(); // stands for x at the first step
    RussellElem t_cur = AL->zero();
    for (int j = 1; j <= n; ++j) {
        t_cur = y.pow(pow_ll(p, n - j));
        for (std::size_t i = 1; i <= m; ++i) {
            GradedElem g = step_coeff(i, j);
            RussellElem basepow = (j == 1) ? x.pow(pow_ll(p, static_cast<long long>(i) - 1))
                                           : t_prev.pow(pow_ll(p, static_cast<long long>(i) - 1));
            t_cur -= AL->scalar(g) * basepow;
        }
        RussellElem check = t_cur.pow(p);
        RussellElem want = (j == 1) ? AL->scalar(a[0]) * x : t_prev;
        if (!(check == want))
            fail(Errc::Internal, "splitting recursion violated t_j^p = t_(j-1) at step " +
                                     std::to_string(j));
        t_prev = t_cur;
    }
    tv.triv = t_cur;

    // y = triv + sum_i c_i triv^(p^i) with c_i = (a_i a_0^(-p^i))^(1/p^n)
    for (std::size_t i = 1; i <= m; ++i) {
        GradedElem v = a[i] * a0inv.pow(pow_ll(p, static_cast<long long>(i)));
        tv.h_coeffs.push_back(root_or_fail(v, n, "a_" + std::to_string(i) +
                                                     " * a_0^(-p^" + std::to_string(i) + ")"));
    }

    long long pn = AL->pn();
    if (!(tv.triv.pow(pn) == AL->scalar(a[0]) * x))
        fail(Errc::Internal, "trivialization identity triv^(p^n) = a_0 x failed");
    RussellElem h_of_t = tv.triv;
    long long pw = p;
    for (std::size_t i = 1; i <= m; ++i) {
        h_of_t += AL->scalar(tv.h_coeffs[i - 1]) * tv.triv.pow(pw);
        pw *= p;
    }
    if (!(h_of_t == y))
        fail(Errc::Internal, "trivialization identity y = h(triv) failed");
    auto td = homogeneous_degree(tv.triv);
    if (!td || !(*td == A->s()))
        fail(Errc::Internal, "trivializing element is not homogeneous of degree s");

    // dictionary in ell[s^-1 T]
    tv.Tring = GradedRing::make(ell, {{"T", A->s(), false}});
    GradedElem T = tv.Tring->var(0);
    tv.x_image = evaluate(a0inv, tv.Tring, {}) * T.pow(pn);
    tv.y_image = T;
    pw = p;
    for (std::size_t i = 1; i <= m; ++i) {
        tv.y_image += evaluate(tv.h_coeffs[i - 1], tv.Tring, {}) * T.pow(pw);
        pw *= p;
    }

    // round trip: the dictionary must kill the defining relation
    GradedElem relation = tv.y_image.pow(pn) - evaluate(AL->f_of_x(), tv.Tring, {tv.x_image});
    if (!relation.is_zero())
        fail(Errc::Internal, "dictionary does not satisfy the defining relation");
    return tv;
}

GradedElem to_T_coords(const Trivialization& tv, const RussellElem& z) {
    if (!z.form()->equal(*tv.AL))
        fail(Errc::OwnerMismatch, "element does not live on the trivialized form");
    GradedElem out = tv.Tring->zero();
    GradedElem ypow = tv.Tring->one();
    for (std::size_t j = 0; j < z.y_coeffs().size(); ++j) {
        if (!z.y_coeffs()[j].is_zero())
            out += evaluate(z.y_coeffs()[j], tv.Tring, {tv.x_image}) * ypow;
        ypow *= tv.y_image;
    }
    return out;
}

RussellElem from_T_coords(const Trivialization& tv, const GradedElem& w) {
    if (!w.ring()->equal(*tv.Tring))
        fail(Errc::OwnerMismatch, "element does not live in the T-coordinate ring");
    const FormPtr& AL = tv.AL;
    RussellElem out = AL->zero();
    for (const auto& [mo, c] : w.terms()) {
        RussellElem term = AL->scalar(AL->scalar_ring()->monomial(c, mo.t, {}));
        if (mo.v[0] != 0)
            term *= tv.triv.pow(mo.v[0]);
        out += term;
    }
    return out;
}

} // namespace graded
