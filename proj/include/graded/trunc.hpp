// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_TRUNC_HPP
#define GRADED_TRUNC_HPP

#include "graded/error.hpp"

#include <optional>
#include <string>
#include <vector>

namespace graded {

/// Truncated polynomial ring A[S]_m, S^(m+1) = 0, over any carrier with ring
/// operations, a zero_like(x) factory and try_invert_elem(x). The carrier for
/// higher derivations and logarithmic derivatives.
template <class E>
class TruncSeries {
  public:
    TruncSeries() = default;
    TruncSeries(int rank, const E& zero) : c_(static_cast<std::size_t>(rank) + 1, zero) {}

    static TruncSeries constant(int rank, const E& x) {
        TruncSeries s(rank, zero_like(x));
        s.c_[0] = x;
        return s;
    }

    int rank() const { return static_cast<int>(c_.size()) - 1; }
    const E& operator[](std::size_t j) const { return c_[j]; }
    E& at(std::size_t j) { return c_[j]; }
    const std::vector<E>& components() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero())
                return false;
        return true;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_)
            x = -x;
        return r;
    }
    TruncSeries& operator+=(const TruncSeries& o) {
        check(o);
        for (std::size_t j = 0; j < c_.size(); ++j)
            c_[j] += o.c_[j];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check(o);
        for (std::size_t j = 0; j < c_.size(); ++j)
            c_[j] -= o.c_[j];
        return *this;
    }
    TruncSeries& operator*=(const TruncSeries& o) {
        check(o);
        std::vector<E> out(c_.size(), zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero())
                continue;
            for (std::size_t j = 0; i + j < c_.size(); ++j)
                out[i + j] += c_[i] * o.c_[j];
        }
        c_ = std::move(out);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const TruncSeries& b) { return a *= b; }

    bool operator==(const TruncSeries& o) const {
        check(o);
        for (std::size_t j = 0; j < c_.size(); ++j)
            if (!(c_[j] == o.c_[j]))
                return false;
        return true;
    }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    /// Unit test and inverse: invertible iff the S^0 component is.
    std::optional<TruncSeries> try_invert() const {
        auto c0inv = try_invert_elem(c_[0]);
        if (!c0inv)
            return std::nullopt;
        TruncSeries r(rank(), zero_like(c_[0]));
        r.c_[0] = *c0inv;
        for (std::size_t k = 1; k < c_.size(); ++k) {
            E acc = zero_like(c_[0]);
            for (std::size_t j = 1; j <= k; ++j)
                acc += c_[j] * r.c_[k - j];
            r.c_[k] = -(*c0inv * acc);
        }
        return r;
    }

    TruncSeries pow(long long e) const {
        if (e < 0) {
            auto inv = try_invert();
            if (!inv)
                fail(Errc::DivisionByZero, "negative power of a non-unit series");
            return inv->pow(-e);
        }
        TruncSeries acc = constant(rank(), unit_like(c_[0]));
        TruncSeries base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            e >>= 1;
            if (e > 0)
                base *= base;
        }
        return acc;
    }

    std::string str(const std::string& svar = "S") const {
        std::string s;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j].is_zero())
                continue;
            if (!s.empty())
                s += " + ";
            std::string cs = c_[j].str();
            if (j == 0) {
                s += cs;
            } else {
                std::string sp = (j == 1) ? svar : svar + "^" + std::to_string(j);
                s += (cs == "1") ? sp : "(" + cs + ")*" + sp;
            }
        }
        if (s.empty())
            s = "0";
        return s + " (mod " + svar + "^" + std::to_string(c_.size()) + ")";
    }

  private:
    std::vector<E> c_;
    void check(const TruncSeries& o) const {
        if (c_.size() != o.c_.size())
            fail(Errc::OwnerMismatch, "truncated series of different ranks");
    }
};

} // namespace graded

#endif
