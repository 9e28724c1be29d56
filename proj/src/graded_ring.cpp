// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/graded_ring.hpp"

#include "graded/upoly.hpp"

#include <algorithm>
#include <cctype>

namespace graded {

// --- GradedField ---

GradedField GradedField::make(FieldPtr coeff, Degree t_degree, int stride, std::string tname) {
    if (!coeff)
        fail(Errc::Internal, "graded field needs a coefficient field");
    if (stride < 1)
        fail(Errc::ParseError, "stride must be >= 1");
    if (t_degree.is_one())
        fail(Errc::ParseError, "the Laurent generator must have a nontrivial degree");
    GradedField f;
    f.coeff = std::move(coeff);
    f.tname = std::move(tname);
    f.t_degree = std::move(t_degree);
    f.stride = stride;
    return f;
}

GradedField GradedField::relaxed(int new_stride) const {
    if (new_stride < 1 || stride % new_stride != 0)
        fail(Errc::ParseError, "relaxed stride must divide the current stride");
    GradedField f = *this;
    f.stride = new_stride;
    return f;
}

bool GradedField::same(const GradedField& o) const {
    return coeff->same(*o.coeff) && tname == o.tname && t_degree == o.t_degree &&
           stride == o.stride;
}

// --- GradedRing ---

RingPtr GradedRing::make(GradedField base, std::vector<VarDecl> vars) {
    auto r = std::shared_ptr<GradedRing>(new GradedRing());
    r->base_ = std::move(base);
    r->vars_ = std::move(vars);
    return r;
}

std::size_t GradedRing::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name)
            return i;
    fail(Errc::ParseError, "unknown variable '" + std::string(name) + "' in " + str());
}

bool GradedRing::equal(const GradedRing& o) const {
    return base_.same(o.base_) && vars_ == o.vars_;
}

std::string GradedRing::str() const {
    std::string s = base_.coeff->spec_str() + "[" + base_.tname + "^+-" +
                    std::to_string(base_.stride) + "]";
    if (!vars_.empty()) {
        s += "{";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i)
                s += ", ";
            s += vars_[i].name + ":" + vars_[i].degree.str();
            if (vars_[i].laurent)
                s += " (laurent)";
        }
        s += "}";
    }
    return s;
}

Degree GradedRing::monomial_degree(const Monomial& m) const {
    Degree d = base_.t_degree.pow(m.t);
    for (std::size_t i = 0; i < vars_.size(); ++i)
        d *= vars_[i].degree.pow(static_cast<long long>(m.v[i]));
    return d;
}

GradedElem GradedRing::zero() const {
    GradedElem e;
    e.R_ = shared_from_this();
    return e;
}

GradedElem GradedRing::one() const { return scalar(base_.coeff->one()); }

GradedElem GradedRing::scalar(FieldElem c) const {
    return monomial(std::move(c), 0, std::vector<int>(vars_.size(), 0));
}

GradedElem GradedRing::t_pow(long long e) const {
    return monomial(base_.coeff->one(), e, std::vector<int>(vars_.size(), 0));
}

GradedElem GradedRing::var(std::size_t i, int e) const {
    if (i >= vars_.size())
        fail(Errc::Internal, "variable index out of range");
    if (e < 0 && !vars_[i].laurent)
        fail(Errc::ParseError, "negative exponent on non-Laurent variable " + vars_[i].name);
    std::vector<int> v(vars_.size(), 0);
    v[i] = e;
    return monomial(base_.coeff->one(), 0, std::move(v));
}

GradedElem GradedRing::monomial(FieldElem c, long long t, std::vector<int> v) const {
    if (v.size() != vars_.size())
        fail(Errc::Internal, "monomial arity mismatch");
    if (t % base_.stride != 0)
        fail(Errc::ParseError, "t exponent " + std::to_string(t) + " not in the stride-" +
                                   std::to_string(base_.stride) + " lattice");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0 && !vars_[i].laurent)
            fail(Errc::ParseError, "negative exponent on non-Laurent variable " + vars_[i].name);
    GradedElem e = zero();
    if (!c.is_zero())
        e.terms_.emplace(Monomial{t, std::move(v)}, std::move(c));
    return e;
}

// --- GradedElem ---

namespace {

void check_same_ring(const GradedElem& a, const GradedElem& b) {
    if (!a.ring() || !b.ring() || !a.ring()->equal(*b.ring()))
        fail(Errc::OwnerMismatch, "elements of different graded rings");
}

} // namespace

void GradedElem::add_term(const Monomial& m, const FieldElem& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GradedElem GradedElem::operator-() const {
    GradedElem r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

GradedElem& GradedElem::operator+=(const GradedElem& o) {
    check_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GradedElem& GradedElem::operator-=(const GradedElem& o) {
    check_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

GradedElem& GradedElem::operator*=(const GradedElem& o) {
    check_same_ring(*this, o);
    GradedElem r = R_->zero();
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            m.t += mb.t;
            for (std::size_t i = 0; i < m.v.size(); ++i)
                m.v[i] += mb.v[i];
            r.add_term(m, ca * cb);
        }
    terms_ = std::move(r.terms_);
    return *this;
}

GradedElem GradedElem::pow(long long e) const {
    if (e < 0)
        fail(Errc::ParseError, "negative power of a ring element");
    GradedElem acc = R_->one();
    GradedElem base = *this;
    while (e > 0) {
        if (e & 1)
            acc *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return acc;
}

bool GradedElem::operator==(const GradedElem& o) const {
    check_same_ring(*this, o);
    return terms_ == o.terms_;
}

std::optional<GradedElem> GradedElem::try_invert() const {
    if (terms_.size() != 1)
        return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    Monomial mi;
    mi.t = -m.t;
    mi.v.resize(m.v.size());
    for (std::size_t i = 0; i < m.v.size(); ++i) {
        if (m.v[i] != 0 && !R_->vars()[i].laurent)
            return std::nullopt;
        mi.v[i] = -m.v[i];
    }
    GradedElem r = R_->zero();
    r.terms_.emplace(mi, c.inv());
    return r;
}

GradedElem GradedElem::inv() const {
    auto r = try_invert();
    if (!r)
        fail(Errc::DivisionByZero, "element is not an invertible monomial: " + str());
    return *r;
}

std::string GradedElem::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty())
            s += " + ";
        std::vector<std::string> parts;
        std::string cs = c.str();
        bool trivial_mono = (m.t == 0 && std::all_of(m.v.begin(), m.v.end(),
                                                     [](int e) { return e == 0; }));
        if (!c.is_one() || trivial_mono) {
            bool wrap = cs.find_first_of("+/*") != std::string::npos;
            parts.push_back(wrap ? "(" + cs + ")" : cs);
        }
        if (m.t != 0)
            parts.push_back(m.t == 1 ? R_->base().tname
                                     : R_->base().tname + "^" + std::to_string(m.t));
        for (std::size_t i = 0; i < m.v.size(); ++i)
            if (m.v[i] != 0)
                parts.push_back(m.v[i] == 1 ? R_->vars()[i].name
                                            : R_->vars()[i].name + "^" +
                                                  std::to_string(m.v[i]));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                s += "*";
            s += parts[i];
        }
    }
    return s;
}

// --- homogeneity ---

std::map<Degree, GradedElem> homogeneous_components(const GradedElem& x) {
    std::map<Degree, GradedElem> out;
    for (const auto& [m, c] : x.terms()) {
        Degree d = x.ring()->monomial_degree(m);
        auto it = out.find(d);
        if (it == out.end())
            it = out.emplace(d, x.ring()->zero()).first;
        it->second += x.ring()->monomial(c, m.t, m.v);
    }
    return out;
}

std::optional<Degree> homogeneous_degree(const GradedElem& x) {
    if (x.is_zero())
        return Degree::one();
    std::optional<Degree> d;
    for (const auto& [m, c] : x.terms()) {
        Degree md = x.ring()->monomial_degree(m);
        if (!d)
            d = md;
        else if (!(*d == md))
            return std::nullopt;
    }
    return d;
}

Degree degree_of(const GradedElem& x) {
    auto d = homogeneous_degree(x);
    if (!d)
        fail(Errc::NotHomogeneous, "element is not homogeneous: " + x.str());
    return *d;
}

PPolyCheck is_homogeneous_p_polynomial(const GradedElem& f, const Degree& target_degree) {
    PPolyCheck out;
    const RingPtr& R = f.ring();
    if (R->vars().size() != 1)
        fail(Errc::Internal, "p-polynomial check needs a one-variable ring");
    long long p = R->p();
    const Degree& rv = R->vars()[0].degree;

    RingPtr scalar_ring = GradedRing::field_ring(R->base());
    // exponent p^i -> index i
    std::map<int, int> power_index;
    int mdeg = 0;
    for (const auto& [m, c] : f.terms()) {
        int e = m.v[0];
        long long pw = 1;
        int i = 0;
        while (pw < e) {
            pw *= p;
            ++i;
        }
        if (pw != e) {
            out.why = "exponent " + std::to_string(e) + " is not a power of p=" +
                      std::to_string(p);
            return out;
        }
        power_index[e] = i;
        mdeg = std::max(mdeg, i);
    }
    std::vector<GradedElem> coeffs(static_cast<std::size_t>(mdeg) + 1, scalar_ring->zero());
    for (const auto& [m, c] : f.terms()) {
        int i = power_index[m.v[0]];
        coeffs[i] += scalar_ring->monomial(c, m.t, {});
    }
    long long pw = 1;
    for (int i = 0; i <= mdeg; ++i) {
        Degree want = target_degree * rv.pow(pw).inverse();
        auto d = homogeneous_degree(coeffs[i]);
        if (!d || (!coeffs[i].is_zero() && !(*d == want))) {
            out.why = "coefficient a_" + std::to_string(i) +
                      " is not homogeneous of degree " + want.str();
            return out;
        }
        pw *= p;
    }
    out.ok = true;
    out.coeffs = std::move(coeffs);
    return out;
}

// --- Frobenius regrading ---

RingPtr twisted_ring(const RingPtr& R, long long n) {
    long long p = R->p();
    Rational factor(1);
    if (n >= 0) {
        long long pn = 1;
        for (long long i = 0; i < n; ++i)
            pn *= p;
        factor = Rational(1, pn);
    } else {
        long long pn = 1;
        for (long long i = 0; i < -n; ++i)
            pn *= p;
        factor = Rational(pn);
    }
    GradedField base = R->base();
    base.t_degree = base.t_degree.pow(factor);
    std::vector<VarDecl> vars = R->vars();
    for (auto& v : vars)
        v.degree = v.degree.pow(factor);
    return GradedRing::make(std::move(base), std::move(vars));
}

GradedElem frobenius_twist(const GradedElem& x, long long n) {
    RingPtr R2 = twisted_ring(x.ring(), n);
    GradedElem r = R2->zero();
    for (const auto& [m, c] : x.terms())
        r += R2->monomial(c, m.t, m.v);
    return r;
}

// --- fraction ring ---

RingPtr graded_fraction_ring(const RingPtr& R) {
    if (R->vars().size() != 1 || R->vars()[0].laurent)
        fail(Errc::Internal, "graded fraction ring needs one polynomial variable");
    const GradedField& k = R->base();
    Degree unit_deg = k.t_degree.pow(static_cast<long long>(k.stride));
    auto ord = order_mod_subgroup(R->vars()[0].degree, {unit_deg});
    if (ord.has_value())
        fail(Errc::FiniteOrderRadius,
             "variable degree " + R->vars()[0].degree.str() +
                 " has finite order modulo the unit degrees; the graded fraction field "
                 "is not of Laurent shape");
    std::vector<VarDecl> vars = R->vars();
    vars[0].laurent = true;
    return GradedRing::make(k, std::move(vars));
}

std::pair<int, int> trdeg_frac_components(const GradedField& k, const Degree& r) {
    Degree unit_deg = k.t_degree.pow(static_cast<long long>(k.stride));
    auto ord = order_mod_subgroup(r, {unit_deg});
    if (!ord.has_value())
        return {0, 1}; // degree-1 part stays k1; the degree lattice gains one line
    return {1, 0};     // after a finite extension this is k1(T) in degree 1
}

// --- movement ---

GradedElem embed(const GradedElem& x, const RingPtr& R2) {
    const GradedRing& R1 = *x.ring();
    if (!R1.base().coeff->same(*R2->base().coeff) || R1.base().tname != R2->base().tname ||
        !(R1.base().t_degree == R2->base().t_degree) || R1.vars() != R2->vars() ||
        R1.base().stride % R2->base().stride != 0)
        fail(Errc::OwnerMismatch, "cannot embed element of " + R1.str() + " into " + R2->str());
    GradedElem r = R2->zero();
    for (const auto& [m, c] : x.terms())
        r += R2->monomial(c, m.t, m.v);
    return r;
}

GradedElem evaluate(const GradedElem& f, const RingPtr& target,
                    const std::vector<GradedElem>& var_images) {
    const GradedRing& R1 = *f.ring();
    if (var_images.size() != R1.vars().size())
        fail(Errc::Internal, "evaluate: image count mismatch");
    if (!R1.base().coeff->same(*target->base().coeff) ||
        R1.base().tname != target->base().tname ||
        !(R1.base().t_degree == target->base().t_degree) ||
        R1.base().stride % target->base().stride != 0)
        fail(Errc::OwnerMismatch, "evaluate: incompatible base fields");
    GradedElem out = target->zero();
    for (const auto& [m, c] : f.terms()) {
        GradedElem term =
            target->monomial(c, m.t, std::vector<int>(target->vars().size(), 0));
        for (std::size_t i = 0; i < var_images.size(); ++i) {
            if (m.v[i] < 0)
                fail(Errc::Internal, "evaluate: negative variable exponent");
            if (m.v[i] != 0)
                term *= var_images[i].pow(m.v[i]);
        }
        out += term;
    }
    return out;
}

std::optional<GradedElem> try_divide_exact(const GradedElem& w, const GradedElem& z) {
    check_same_ring(w, z);
    if (z.is_zero())
        fail(Errc::DivisionByZero, "exact division by zero");
    const RingPtr& R = w.ring();
    std::size_t nv = R->vars().size();
    if (nv > 1)
        fail(Errc::Internal, "exact division supports at most one variable");
    if (w.is_zero())
        return w;

    const FieldPtr& F = R->base().coeff;
    // Shift t so both operands are t-polynomials with nonzero constant part.
    auto tmin = [](const GradedElem& x) {
        long long m = x.terms().begin()->first.t;
        for (const auto& [mo, c] : x.terms())
            m = std::min(m, mo.t);
        return m;
    };
    long long sw = tmin(w), sz = tmin(z);

    // var-exponent -> dense t-polynomial
    auto split = [&](const GradedElem& x, long long shift) {
        std::map<int, EPoly> out;
        for (const auto& [m, c] : x.terms()) {
            int ve = nv ? m.v[0] : 0;
            EPoly& pol = out[ve];
            std::size_t idx = static_cast<std::size_t>(m.t - shift);
            if (pol.size() <= idx)
                pol.resize(idx + 1, F->zero());
            pol[idx] = c;
        }
        return out;
    };
    std::map<int, EPoly> wp = split(w, sw), zp = split(z, sz);
    int zlead = zp.rbegin()->first;

    std::map<int, EPoly> quot;
    while (!wp.empty()) {
        int wlead = wp.rbegin()->first;
        if (wlead < zlead)
            return std::nullopt;
        auto q = ep_divide_exact(F, wp.rbegin()->second, zp.rbegin()->second);
        if (!q)
            return std::nullopt;
        int qv = wlead - zlead;
        quot[qv] = *q;
        // subtract q*T^qv * z from w
        for (const auto& [ve, pol] : zp) {
            EPoly prod = ep_mul(F, *q, pol);
            auto it = wp.find(ve + qv);
            EPoly cur = (it != wp.end()) ? it->second : EPoly{};
            EPoly next = ep_sub(F, cur, prod);
            if (next.empty())
                wp.erase(ve + qv);
            else
                wp[ve + qv] = std::move(next);
        }
    }

    long long tshift = sw - sz;
    int stride = R->base().stride;
    GradedElem out = R->zero();
    for (const auto& [ve, pol] : quot)
        for (std::size_t i = 0; i < pol.size(); ++i) {
            if (pol[i].is_zero())
                continue;
            long long te = static_cast<long long>(i) + tshift;
            if (te % stride != 0)
                return std::nullopt; // divisible in the ambient ring only
            out += R->monomial(pol[i], te, nv ? std::vector<int>{ve} : std::vector<int>{});
        }
    return out;
}

std::optional<GradedElem> pn_th_root_scalar(const GradedElem& x, long long n) {
    const RingPtr& R = x.ring();
    if (!R->vars().empty())
        fail(Errc::Internal, "scalar root expects a zero-variable ring");
    if (x.is_zero())
        return x;
    if (!x.is_monomial())
        return std::nullopt;
    const auto& [m, c] = *x.terms().begin();
    long long pn = 1;
    for (long long i = 0; i < n; ++i)
        pn *= R->p();
    if (m.t % pn != 0)
        return std::nullopt;
    long long te = m.t / pn;
    if (te % R->base().stride != 0)
        return std::nullopt;
    auto croot = pn_th_root(c, n);
    if (!croot)
        return std::nullopt;
    return R->monomial(*croot, te, {});
}

// --- parsing ---

namespace {

struct RingElemParser {
    const RingPtr& R;
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
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

    std::string ident() {
        skip();
        std::size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        return std::string(s.substr(start, i - start));
    }

    GradedElem piece() {
        skip();
        if (i >= s.size())
            err("unexpected end of input");
        if (s[i] == '(') {
            // parenthesized coefficient, delegated to the field parser
            int depth = 0;
            std::size_t start = i;
            do {
                if (s[i] == '(')
                    ++depth;
                if (s[i] == ')')
                    --depth;
                ++i;
                if (i > s.size())
                    err("unbalanced parentheses");
            } while (depth > 0);
            FieldElem c = parse_field_elem(R->base().coeff,
                                           s.substr(start + 1, i - start - 2));
            GradedElem e = R->scalar(c);
            if (i < s.size() && s[i] == '^')
                err("cannot raise a parenthesized coefficient; expand it instead");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            return R->scalar(R->base().coeff->from_int(integer()));
        }
        std::string name = ident();
        if (name.empty())
            err("expected a term piece");
        long long e = 1;
        skip();
        if (i < s.size() && s[i] == '^') {
            ++i;
            e = integer();
        }
        if (name == R->base().tname)
            return R->t_pow(e);
        if (name == "u" || name == "w") {
            FieldElem c = (name == "u") ? R->base().coeff->u() : R->base().coeff->w();
            return R->scalar(c.pow(e));
        }
        return R->var(R->var_index(name), static_cast<int>(e));
    }

    GradedElem term() {
        GradedElem e = piece();
        for (;;) {
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                e *= piece();
            } else {
                return e;
            }
        }
    }

    GradedElem expr() {
        skip();
        bool neg = false;
        if (i < s.size() && s[i] == '-') {
            neg = true;
            ++i;
        }
        GradedElem e = term();
        if (neg)
            e = -e;
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

GradedElem parse_graded_elem(const RingPtr& R, std::string_view s) {
    RingElemParser p{R, s};
    GradedElem e = p.expr();
    p.skip();
    if (p.i != s.size())
        p.err("trailing characters");
    return e;
}

RingPtr parse_ring_spec(std::string_view s) {
    std::size_t lb = s.find('[');
    if (lb == std::string_view::npos)
        fail(Errc::ParseError, "ring spec needs [t^+-e]: '" + std::string(s) + "'");
    FieldPtr F = Field::parse_spec(s.substr(0, lb));
    std::size_t rb = s.find(']', lb);
    if (rb == std::string_view::npos)
        fail(Errc::ParseError, "unbalanced '[' in ring spec");
    std::string inner(s.substr(lb + 1, rb - lb - 1));
    std::size_t caret = inner.find("^+-");
    if (caret == std::string::npos)
        fail(Errc::ParseError, "Laurent generator must look like t^+-e: '" + inner + "'");
    std::string tname = inner.substr(0, caret);
    std::string rest = inner.substr(caret + 3);
    std::string degname = "q";
    std::size_t colon = rest.find(':');
    if (colon != std::string::npos) {
        degname = rest.substr(colon + 1);
        rest = rest.substr(0, colon);
    }
    int stride = 0;
    for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(Errc::ParseError, "bad stride in ring spec: '" + rest + "'");
        stride = stride * 10 + (c - '0');
    }
    GradedField base = GradedField::make(F, Degree::generator(degname), stride, tname);

    std::vector<VarDecl> vars;
    std::size_t pos = rb + 1;
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos < s.size()) {
        if (s[pos] != '{' || s.back() != '}')
            fail(Errc::ParseError, "variables must be given as {NAME:degree, ...}");
        std::string list(s.substr(pos + 1, s.size() - pos - 2));
        std::size_t start = 0;
        while (start < list.size()) {
            std::size_t comma = list.find(',', start);
            std::string item = list.substr(start, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - start);
            std::size_t c2 = item.find(':');
            if (c2 == std::string::npos)
                fail(Errc::ParseError, "variable needs a degree: '" + item + "'");
            std::string name = item.substr(0, c2);
            std::erase_if(name, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
            vars.push_back({name, parse_degree(item.substr(c2 + 1)), false});
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    }
    return GradedRing::make(std::move(base), std::move(vars));
}

} // namespace graded
