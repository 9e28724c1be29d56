// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/upoly.hpp"

namespace graded {

EPoly ep_trim(EPoly a) {
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
    return a;
}

int ep_deg(const EPoly& a) { return static_cast<int>(a.size()) - 1; }

EPoly ep_add(const FieldPtr& F, const EPoly& a, const EPoly& b) {
    EPoly c(std::max(a.size(), b.size()), F->zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.size())
            c[i] += a[i];
        if (i < b.size())
            c[i] += b[i];
    }
    return ep_trim(std::move(c));
}

EPoly ep_sub(const FieldPtr& F, const EPoly& a, const EPoly& b) {
    EPoly c(std::max(a.size(), b.size()), F->zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.size())
            c[i] += a[i];
        if (i < b.size())
            c[i] -= b[i];
    }
    return ep_trim(std::move(c));
}

EPoly ep_mul(const FieldPtr& F, const EPoly& a, const EPoly& b) {
    if (a.empty() || b.empty())
        return {};
    EPoly c(a.size() + b.size() - 1, F->zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return ep_trim(std::move(c));
}

std::pair<EPoly, EPoly> ep_divrem(const FieldPtr& F, EPoly a, const EPoly& b) {
    if (b.empty())
        fail(Errc::DivisionByZero, "polynomial division by zero");
    EPoly q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, F->zero());
    FieldElem binv = b.back().inv();
    while (a.size() >= b.size()) {
        FieldElem coef = a.back() * binv;
        std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= coef * b[i];
        a = ep_trim(std::move(a));
    }
    return {ep_trim(std::move(q)), std::move(a)};
}

std::optional<EPoly> ep_divide_exact(const FieldPtr& F, const EPoly& a, const EPoly& b) {
    auto [q, r] = ep_divrem(F, a, b);
    if (!r.empty())
        return std::nullopt;
    return q;
}

} // namespace graded
