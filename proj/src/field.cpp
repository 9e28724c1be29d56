// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/field.hpp"

#include <algorithm>
#include <cctype>

namespace graded {

namespace {

constexpr long long kMaxQ = 1 << 20;

bool is_prime(long long p) {
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) {
        r *= b;
        if (r > kMaxQ)
            fail(Errc::Internal, "field size exceeds supported bound");
    }
    return r;
}

long long modpow(long long b, long long e, long long mod) {
    if (mod == 1)
        return 0;
    long long r = 1 % mod;
    b %= mod;
    while (e > 0) {
        if (e & 1)
            r = static_cast<long long>(static_cast<__int128>(r) * b % mod);
        b = static_cast<long long>(static_cast<__int128>(b) * b % mod);
        e >>= 1;
    }
    return r;
}

// --- F_p[w] on coefficient vectors, used only to build the F_{p^m} tables ---

using PVec = std::vector<long long>;

PVec pv_trim(PVec a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

PVec pv_of_int(long long v, long long p) {
    PVec a;
    while (v > 0) {
        a.push_back(v % p);
        v /= p;
    }
    return a;
}

long long pv_to_int(const PVec& a, long long p) {
    long long v = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        v = v * p + a[i];
    return v;
}

PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& mod, long long p) {
    if (a.empty() || b.empty())
        return {};
    PVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    c = pv_trim(std::move(c));
    // reduce mod the monic modulus
    while (c.size() >= mod.size()) {
        long long lead = c.back();
        std::size_t shift = c.size() - mod.size();
        for (std::size_t i = 0; i < mod.size(); ++i) {
            long long& x = c[shift + i];
            x = ((x - lead * mod[i]) % p + p) % p;
        }
        c = pv_trim(std::move(c));
    }
    return c;
}

bool pv_divides(const PVec& d, PVec a, long long p) {
    // d monic
    while (a.size() >= d.size()) {
        long long lead = a.back();
        std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            long long& x = a[shift + i];
            x = ((x - lead * d[i]) % p + p) % p;
        }
        a = pv_trim(std::move(a));
    }
    return a.empty();
}

bool pv_irreducible(const PVec& f, long long p) {
    int m = static_cast<int>(f.size()) - 1;
    if (m < 1)
        return false;
    if (f[0] == 0)
        return m == 1; // divisible by w unless it is w itself
    for (int d = 1; 2 * d <= m; ++d) {
        long long count = ipow(p, d);
        for (long long c = 0; c < count; ++c) {
            PVec g = pv_of_int(c, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (pv_divides(g, f, p))
                return false;
        }
    }
    return true;
}

// --- u-polynomials with F_{p^m} coefficients stored as generator logs ---
// Dense by u-degree, -1 encodes a zero coefficient, no trailing zeros,
// the zero polynomial is the empty vector.

using UP = std::vector<long long>;

UP up_trim(UP a) {
    while (!a.empty() && a.back() == -1)
        a.pop_back();
    return a;
}

UP up_add(const Field& F, const UP& a, const UP& b) {
    UP c(std::max(a.size(), b.size()), -1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        long long x = i < a.size() ? a[i] : -1;
        long long y = i < b.size() ? b[i] : -1;
        c[i] = F.ff_add(x, y);
    }
    return up_trim(std::move(c));
}

UP up_neg(const Field& F, UP a) {
    for (auto& x : a)
        x = F.ff_neg(x);
    return a;
}

UP up_mul(const Field& F, const UP& a, const UP& b) {
    if (a.empty() || b.empty())
        return {};
    UP c(a.size() + b.size() - 1, -1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == -1)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.ff_add(c[i + j], F.ff_mul(a[i], b[j]));
    }
    return up_trim(std::move(c));
}

UP up_scale(const Field& F, UP a, long long c) {
    for (auto& x : a)
        x = F.ff_mul(x, c);
    return up_trim(std::move(a));
}

std::pair<UP, UP> up_divrem(const Field& F, UP a, const UP& b) {
    if (b.empty())
        fail(Errc::DivisionByZero, "u-polynomial division by zero");
    UP q;
    if (a.size() >= b.size())
        q.assign(a.size() - b.size() + 1, -1);
    long long binv = F.ff_inv(b.back());
    while (a.size() >= b.size()) {
        long long coef = F.ff_mul(a.back(), binv);
        std::size_t shift = a.size() - b.size();
        q[shift] = coef;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.ff_add(a[shift + i], F.ff_neg(F.ff_mul(coef, b[i])));
        a = up_trim(std::move(a));
    }
    return {up_trim(std::move(q)), std::move(a)};
}

UP up_gcd_monic(const Field& F, UP a, UP b) {
    while (!b.empty()) {
        auto [q, r] = up_divrem(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty())
        a = up_scale(F, std::move(a), F.ff_inv(a.back()));
    return a;
}

UP up_stretch_pow(const Field& F, const UP& a, long long n, long long pn) {
    // a(u)^(p^n) = sum a_i^(p^n) u^(i*p^n)
    if (a.empty())
        return {};
    UP c((a.size() - 1) * pn + 1, -1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != -1)
            c[i * pn] = F.ff_frob(a[i], n);
    return c;
}

} // namespace

// --- Field ---

FieldPtr Field::finite(long long p, int m) {
    if (!is_prime(p) || m < 1)
        fail(Errc::ParseError, "field characteristic must be prime, extension degree >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->desc_ = {p, m, FieldKind::Finite};
    f->init_tables();
    return f;
}

FieldPtr Field::rational_function(long long p, int m) {
    if (!is_prime(p) || m < 1)
        fail(Errc::ParseError, "field characteristic must be prime, extension degree >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->desc_ = {p, m, FieldKind::RationalFunction};
    f->init_tables();
    return f;
}

void Field::init_tables() {
    q_ = ipow(desc_.p, desc_.m);
    long long p = desc_.p;
    int m = desc_.m;

    // Lexicographically first irreducible monic modulus of degree m.
    for (long long c = 0; c < q_; ++c) {
        PVec f = pv_of_int(c, p);
        f.resize(m + 1, 0);
        f[m] = 1;
        if (pv_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }
    if (modulus_.empty())
        fail(Errc::Internal, "no irreducible modulus found");

    // First primitive element, walking it builds the exponent table.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    if (q_ == 2) {
        gen_polyint_ = 1;
        exp_[0] = 1;
        log_[1] = 0;
        return;
    }
    for (long long cand = 2; cand < q_; ++cand) {
        PVec g = pv_of_int(cand, p);
        PVec acc{1};
        long long order = 0;
        std::vector<long long> walk;
        do {
            walk.push_back(pv_to_int(acc, p));
            acc = pv_mulmod(acc, g, modulus_, p);
            ++order;
        } while (!(acc.size() == 1 && acc[0] == 1) && order <= q_);
        if (order == q_ - 1) {
            gen_polyint_ = cand;
            for (long long k = 0; k < q_ - 1; ++k) {
                exp_[k] = walk[k];
                log_[walk[k]] = k;
            }
            return;
        }
    }
    fail(Errc::Internal, "no primitive element found");
}

FieldPtr Field::parse_spec(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.rfind("GF(", 0) != 0)
        fail(Errc::ParseError, "field spec must look like GF(q) or GF(q)(u): '" + std::string(s) + "'");
    std::size_t close = t.find(')');
    if (close == std::string::npos)
        fail(Errc::ParseError, "unbalanced field spec: '" + std::string(s) + "'");
    long long q = 0;
    for (std::size_t i = 3; i < close; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            fail(Errc::ParseError, "bad field order: '" + std::string(s) + "'");
        q = q * 10 + (t[i] - '0');
    }
    if (q < 2)
        fail(Errc::ParseError, "field order must be >= 2");
    long long p = 0;
    for (long long d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int m = 0;
    long long v = q;
    while (v > 1) {
        if (v % p != 0)
            fail(Errc::ParseError, "field order must be a prime power: " + std::to_string(q));
        v /= p;
        ++m;
    }
    std::string rest = t.substr(close + 1);
    if (rest.empty())
        return finite(p, m);
    if (rest == "(u)")
        return rational_function(p, m);
    fail(Errc::ParseError, "trailing characters in field spec: '" + std::string(s) + "'");
}

std::string Field::spec_str() const {
    std::string s = "GF(" + std::to_string(q_) + ")";
    if (desc_.kind == FieldKind::RationalFunction)
        s += "(u)";
    return s;
}

std::string Field::modulus_str() const {
    if (desc_.m == 1)
        return "w - " + std::to_string((modulus_[0] ? desc_.p - modulus_[0] : 0));
    std::string s;
    for (int i = desc_.m; i >= 0; --i) {
        long long c = (i == desc_.m) ? 1 : modulus_[i];
        if (c == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1)
                s += std::to_string(c) + "*";
            s += (i == 1) ? "w" : "w^" + std::to_string(i);
        }
    }
    return s;
}

std::string Field::generator_str() const { return ff_str(q_ == 2 ? 0 : log_[gen_polyint_]); }

// --- finite layer ---

long long Field::ff_add(long long a, long long b) const {
    if (a == -1)
        return b;
    if (b == -1)
        return a;
    long long pa = exp_[a], pb = exp_[b];
    long long out = 0, mul = 1, p = desc_.p;
    while (pa > 0 || pb > 0) {
        out += ((pa % p) + (pb % p)) % p * mul;
        mul *= p;
        pa /= p;
        pb /= p;
    }
    return out == 0 ? -1 : log_[out];
}

long long Field::ff_neg(long long a) const {
    if (a == -1 || desc_.p == 2)
        return a;
    return ff_mul(a, ff_from_int(desc_.p - 1));
}

long long Field::ff_mul(long long a, long long b) const {
    if (a == -1 || b == -1)
        return -1;
    return (a + b) % (q_ - 1);
}

long long Field::ff_inv(long long a) const {
    if (a == -1)
        fail(Errc::DivisionByZero, "inverse of zero in " + spec_str());
    return (q_ - 1 - a) % (q_ - 1);
}

long long Field::ff_pow(long long a, long long e) const {
    if (a == -1) {
        if (e > 0)
            return -1;
        if (e == 0)
            return 0;
        fail(Errc::DivisionByZero, "negative power of zero");
    }
    long long n = q_ - 1;
    long long r = static_cast<long long>((static_cast<__int128>(a) * (e % n)) % n);
    return (r % n + n) % n;
}

long long Field::ff_frob(long long a, long long n) const {
    if (a == -1)
        return -1;
    return ff_pow(a, modpow(desc_.p, n, q_ - 1) + (q_ == 2 ? 1 : 0));
}

long long Field::ff_root(long long a, long long n) const {
    long long r = (desc_.m - (n % desc_.m)) % desc_.m;
    return ff_frob(a, r);
}

long long Field::ff_from_int(long long v) const {
    v %= desc_.p;
    if (v < 0)
        v += desc_.p;
    return v == 0 ? -1 : log_[v];
}

long long Field::polyint_of(long long log) const { return log == -1 ? 0 : exp_[log]; }

long long Field::log_of_polyint(long long pi) const { return pi == 0 ? -1 : log_[pi]; }

std::string Field::ff_str(long long a) const {
    long long pi = polyint_of(a);
    if (desc_.m == 1)
        return std::to_string(pi);
    if (pi == 0)
        return "0";
    std::string s;
    PVec c = pv_of_int(pi, desc_.p);
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        if (!s.empty())
            s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1)
                s += std::to_string(c[i]) + "*";
            s += (i == 1) ? "w" : "w^" + std::to_string(i);
        }
    }
    return s;
}

// --- element factories ---

FieldElem Field::zero() const {
    FieldElem e;
    e.F_ = shared_from_this();
    e.ff_ = -1;
    if (desc_.kind == FieldKind::RationalFunction)
        e.den_ = {0};
    return e;
}

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long v) const {
    FieldElem e = zero();
    long long log = ff_from_int(v);
    if (desc_.kind == FieldKind::Finite) {
        e.ff_ = log;
    } else if (log != -1) {
        e.num_ = {log};
    }
    return e;
}

FieldElem Field::u() const {
    if (desc_.kind != FieldKind::RationalFunction)
        fail(Errc::ParseError, "'u' only exists in a rational function field");
    FieldElem e = zero();
    e.num_ = {-1, 0};
    return e;
}

FieldElem Field::w() const {
    if (desc_.m == 1)
        fail(Errc::ParseError, "'w' only exists for extension degree m > 1");
    long long log = log_[desc_.p]; // polyint of w is p
    FieldElem e = zero();
    if (desc_.kind == FieldKind::Finite)
        e.ff_ = log;
    else
        e.num_ = {log};
    return e;
}

std::vector<FieldElem> Field::enumerate_elements(int height) const {
    std::vector<FieldElem> out;
    out.push_back(zero());
    auto units = enumerate_units(height);
    out.insert(out.end(), units.begin(), units.end());
    return out;
}

std::vector<FieldElem> Field::enumerate_units(int height) const {
    std::vector<FieldElem> out;
    if (desc_.kind == FieldKind::Finite) {
        for (long long k = 0; k < q_ - 1; ++k) {
            FieldElem e = zero();
            e.ff_ = k;
            out.push_back(e);
        }
        return out;
    }
    // Every reduced f/g with deg f, deg g <= height, g monic.
    auto polys_up_to = [&](int d) {
        std::vector<UP> ps;
        long long count = 1;
        for (int i = 0; i <= d; ++i)
            count *= q_;
        for (long long code = 0; code < count; ++code) {
            UP a;
            long long c = code;
            for (int i = 0; i <= d; ++i) {
                a.push_back(log_of_polyint(c % q_));
                c /= q_;
            }
            ps.push_back(up_trim(std::move(a)));
        }
        return ps;
    };
    auto nums = polys_up_to(height);
    for (const auto& den : polys_up_to(height)) {
        if (den.empty() || den.back() != 0)
            continue; // monic denominators only
        for (const auto& num : nums) {
            if (num.empty())
                continue;
            if (up_gcd_monic(*this, num, den).size() > 1)
                continue;
            FieldElem e = zero();
            e.num_ = num;
            e.den_ = den;
            out.push_back(e);
        }
    }
    return out;
}

// --- FieldElem ---

bool FieldElem::is_zero() const {
    return F_->desc().kind == FieldKind::Finite ? ff_ == -1 : num_.empty();
}

bool FieldElem::is_one() const {
    if (F_->desc().kind == FieldKind::Finite)
        return ff_ == 0;
    return num_ == UP{0} && den_ == UP{0};
}

void FieldElem::canonicalize() {
    num_ = up_trim(std::move(num_));
    den_ = up_trim(std::move(den_));
    if (den_.empty())
        fail(Errc::DivisionByZero, "zero denominator in " + F_->spec_str());
    if (num_.empty()) {
        den_ = {0};
        return;
    }
    UP g = up_gcd_monic(*F_, num_, den_);
    if (g.size() > 1) {
        num_ = up_divrem(*F_, std::move(num_), g).first;
        den_ = up_divrem(*F_, std::move(den_), g).first;
    }
    long long lead = den_.back();
    if (lead != 0) {
        long long inv = F_->ff_inv(lead);
        den_ = up_scale(*F_, std::move(den_), inv);
        num_ = up_scale(*F_, std::move(num_), inv);
    }
}

static void check_same_field(const FieldElem& a, const FieldElem& b) {
    if (!a.field() || !b.field() || !a.field()->same(*b.field()))
        fail(Errc::OwnerMismatch, "field elements from different fields");
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    if (F_->desc().kind == FieldKind::Finite)
        r.ff_ = F_->ff_neg(ff_);
    else
        r.num_ = up_neg(*F_, std::move(r.num_));
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same_field(*this, o);
    if (F_->desc().kind == FieldKind::Finite) {
        ff_ = F_->ff_add(ff_, o.ff_);
        return *this;
    }
    UP n = up_add(*F_, up_mul(*F_, num_, o.den_), up_mul(*F_, o.num_, den_));
    den_ = up_mul(*F_, den_, o.den_);
    num_ = std::move(n);
    canonicalize();
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    check_same_field(*this, o);
    if (F_->desc().kind == FieldKind::Finite) {
        ff_ = F_->ff_mul(ff_, o.ff_);
        return *this;
    }
    num_ = up_mul(*F_, num_, o.num_);
    den_ = up_mul(*F_, den_, o.den_);
    canonicalize();
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inv(); }

FieldElem FieldElem::inv() const {
    if (is_zero())
        fail(Errc::DivisionByZero, "inverse of zero in " + F_->spec_str());
    FieldElem r = *this;
    if (F_->desc().kind == FieldKind::Finite) {
        r.ff_ = F_->ff_inv(ff_);
        return r;
    }
    std::swap(r.num_, r.den_);
    r.canonicalize();
    return r;
}

FieldElem FieldElem::pow(long long e) const {
    if (e < 0)
        return inv().pow(-e);
    if (F_->desc().kind == FieldKind::Finite) {
        FieldElem r = *this;
        r.ff_ = F_->ff_pow(ff_, e);
        if (ff_ == -1 && e == 0)
            r.ff_ = 0;
        return r;
    }
    FieldElem acc = F_->one();
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_field(*this, o);
    if (F_->desc().kind == FieldKind::Finite)
        return ff_ == o.ff_;
    return num_ == o.num_ && den_ == o.den_;
}

bool FieldElem::operator<(const FieldElem& o) const {
    check_same_field(*this, o);
    if (F_->desc().kind == FieldKind::Finite)
        return ff_ < o.ff_;
    if (num_ != o.num_)
        return num_ < o.num_;
    return den_ < o.den_;
}

std::string FieldElem::str() const {
    if (F_->desc().kind == FieldKind::Finite)
        return F_->ff_str(ff_);
    if (num_.empty())
        return "0";
    auto poly_str = [&](const UP& a) {
        std::string s;
        bool multi_coeff = F_->ext_degree() > 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] == -1)
                continue;
            if (!s.empty())
                s += " + ";
            std::string c = F_->ff_str(a[i]);
            if (i == 0) {
                s += c;
            } else {
                std::string var = (i == 1) ? "u" : "u^" + std::to_string(i);
                if (a[i] == 0) {
                    s += var;
                } else {
                    bool wrap = multi_coeff && c.find('+') != std::string::npos;
                    s += (wrap ? "(" + c + ")" : c) + "*" + var;
                }
            }
        }
        return s;
    };
    std::string ns = poly_str(num_);
    if (den_ == UP{0})
        return ns;
    std::string ds = poly_str(den_);
    auto wrap = [](const std::string& s) {
        return s.find_first_of("+*") == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(ns) + "/" + wrap(ds);
}

FieldElem frobenius(const FieldElem& x, long long n) {
    if (n < 0)
        fail(Errc::ParseError, "frobenius exponent must be >= 0");
    const Field& F = *x.field();
    FieldElem r = x;
    if (F.desc().kind == FieldKind::Finite) {
        r.ff_ = F.ff_frob(x.ff_, n);
        return r;
    }
    long long pn = 1;
    for (long long i = 0; i < n; ++i)
        pn *= F.p();
    r.num_ = up_stretch_pow(F, x.num_, n, pn);
    r.den_ = up_stretch_pow(F, x.den_, n, pn);
    return r;
}

std::optional<FieldElem> pn_th_root(const FieldElem& x, long long n) {
    if (n < 0)
        fail(Errc::ParseError, "root exponent must be >= 0");
    const Field& F = *x.field();
    FieldElem r = x;
    if (F.desc().kind == FieldKind::Finite) {
        r.ff_ = F.ff_root(x.ff_, n);
        return r;
    }
    long long pn = 1;
    for (long long i = 0; i < n; ++i)
        pn *= F.p();
    auto shrink = [&](const UP& a) -> std::optional<UP> {
        if (a.empty())
            return UP{};
        UP c((a.size() - 1) / pn + 1, -1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == -1)
                continue;
            if (i % pn != 0)
                return std::nullopt;
            c[i / pn] = F.ff_root(a[i], n);
        }
        return c;
    };
    auto num = shrink(x.num_);
    auto den = shrink(x.den_);
    if (!num || !den)
        return std::nullopt;
    r.num_ = *num;
    r.den_ = *den;
    return r;
}

FieldElem substitute_u_power(const FieldElem& x, long long k) {
    if (k < 1)
        fail(Errc::ParseError, "substitution exponent must be >= 1");
    const Field& F = *x.field();
    if (F.desc().kind == FieldKind::Finite)
        return x;
    auto stretch = [&](const UP& a) {
        if (a.empty())
            return UP{};
        UP c((a.size() - 1) * k + 1, -1);
        for (std::size_t i = 0; i < a.size(); ++i)
            c[i * k] = a[i];
        return c;
    };
    FieldElem r = x;
    r.num_ = stretch(x.num_);
    r.den_ = stretch(x.den_);
    return r;
}

// --- element expression parser ---

namespace {

struct ElemParser {
    const FieldPtr& F;
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void err(const std::string& what) {
        fail(Errc::ParseError, what + " at position " + std::to_string(i) + " in '" + std::string(s) + "'");
    }

    long long integer() {
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
            neg = (s[i++] == '-');
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            err("expected integer");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    }

    FieldElem atom() {
        skip();
        if (i >= s.size())
            err("unexpected end of input");
        if (s[i] == '(') {
            ++i;
            FieldElem e = expr();
            if (!eat(')'))
                err("expected ')'");
            return e;
        }
        if (s[i] == '-') {
            ++i;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(s[i])))
            return F->from_int(integer());
        if (s[i] == 'u') {
            ++i;
            return F->u();
        }
        if (s[i] == 'w') {
            ++i;
            return F->w();
        }
        err("expected element atom");
    }

    FieldElem factor() {
        FieldElem e = atom();
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            e = e.pow(integer());
        }
        return e;
    }

    FieldElem term() {
        FieldElem e = factor();
        for (;;) {
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                e *= factor();
            } else if (i < s.size() && s[i] == '/') {
                ++i;
                e /= factor();
            } else {
                return e;
            }
        }
    }

    FieldElem expr() {
        skip();
        FieldElem e = term();
        for (;;) {
            skip();
            if (i < s.size() && s[i] == '+') {
                ++i;
                e += term();
            } else if (i < s.size() && s[i] == '-') {
                ++i;
                e -= term();
            } else {
                return e;
            }
        }
    }
};

} // namespace

FieldElem parse_field_elem(const FieldPtr& F, std::string_view s) {
    ElemParser p{F, s};
    FieldElem e = p.expr();
    p.skip();
    if (p.i != s.size())
        p.err("trailing characters");
    return e;
}

} // namespace graded
