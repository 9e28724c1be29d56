// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "graded/tame.hpp"

#include <algorithm>
#include <numeric>

namespace graded {

namespace {

// rowwise reduction: entry (i, j) mod orders[i]
void reduce_rows(IntMat& m, const std::vector<long long>& orders) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto& x : m[i]) {
            x %= orders[i];
            if (x < 0)
                x += orders[i];
        }
}

} // namespace

std::vector<long long> h1_cyclic(int e, const CyclicModule& mod) {
    std::size_t k = mod.orders.size();
    if (mod.action.size() != k)
        fail(Errc::Internal, "action matrix size mismatch");
    for (long long d : mod.orders)
        if (d < 1)
            fail(Errc::Internal, "module orders must be >= 1");

    // the action must be an endomorphism of the module with g^e = id
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if ((mod.action[i][j] * mod.orders[j]) % mod.orders[i] != 0)
                fail(Errc::ActionOrderMismatch, "matrix does not respect the module relations");
    IntMat power = identity_mat(k);
    for (int t = 0; t < e; ++t) {
        power = mat_mul(mod.action, power);
        reduce_rows(power, mod.orders);
    }
    IntMat idk = identity_mat(k);
    reduce_rows(idk, mod.orders);
    if (power != idk)
        fail(Errc::ActionOrderMismatch, "action order does not divide e");

    // Norm = 1 + g + ... + g^(e-1)
    IntMat norm(k, std::vector<long long>(k, 0));
    IntMat acc = identity_mat(k);
    for (int t = 0; t < e; ++t) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                norm[i][j] += acc[i][j];
        acc = mat_mul(mod.action, acc);
        reduce_rows(acc, mod.orders);
    }
    reduce_rows(norm, mod.orders);

    // L_K = {x : Norm x = 0 in M} as the projection of ker[Norm | -D]
    IntMat aug(k, std::vector<long long>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            aug[i][j] = norm[i][j];
        aug[i][k + i] = -mod.orders[i];
    }
    auto ker = integer_kernel(aug);
    IntMat span(k, std::vector<long long>(ker.size(), 0));
    for (std::size_t c = 0; c < ker.size(); ++c)
        for (std::size_t i = 0; i < k; ++i)
            span[i][c] = ker[c][i];

    // basis of L_K out of the spanning set: U * span * V = S diagonal gives
    // L_K = U^-1 * S-columns, so in the basis B_K = U^-1 S' the sublattice
    // L_I has coordinate matrix S'^-1 U [g-1 | D].
    SmithResult snf = smith_normal_form(span);
    if (snf.rank != k)
        fail(Errc::Internal, "kernel lattice is not full rank");

    IntMat li(k, std::vector<long long>(2 * k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            li[i][j] = mod.action[i][j] - (i == j ? 1 : 0);
        li[i][k + i] = mod.orders[i];
    }
    IntMat um = mat_mul(snf.u, li);
    for (std::size_t i = 0; i < k; ++i)
        for (auto& x : um[i]) {
            if (x % snf.s[i][i] != 0)
                fail(Errc::Internal, "coboundary lattice escapes the cocycle lattice");
            x /= snf.s[i][i];
        }

    SmithResult quot = smith_normal_form(um);
    std::vector<long long> factors;
    for (std::size_t i = 0; i < k; ++i) {
        if (i >= quot.rank)
            fail(Errc::Internal, "quotient is not finite");
        if (quot.s[i][i] > 1)
            factors.push_back(quot.s[i][i]);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

TameSetup TameSetup::make(long long q, int e, Degree r) {
    long long p = 0;
    for (long long d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        fail(Errc::ParseError, "q must be a prime power >= 2");
    int m = 0;
    long long v = q;
    while (v > 1) {
        if (v % p != 0)
            fail(Errc::ParseError, "q must be a prime power");
        v /= p;
        ++m;
    }
    if (e < 1 || std::gcd<long long, long long>(e, p) != 1)
        fail(Errc::ParseError, "e must be >= 1 and prime to p");
    if ((q - 1) % e != 0)
        fail(Errc::ParseError, "e must divide q - 1 (split tame setup)");

    TameSetup st;
    st.q = q;
    st.e = e;
    st.Fq = Field::finite(p, m);
    // primitive e-th root of unity: g^((q-1)/e) for the fixed generator
    st.zeta = st.Fq->enumerate_units(0)[static_cast<std::size_t>((q - 1) / e % (q - 1))];
    st.s_degree = Degree::generator("q_s");
    st.r = std::move(r);
    st.ell = GradedField::make(st.Fq, st.s_degree, 1, "s");
    st.BT = GradedRing::make(st.ell, {{"T", st.r, false}});
    return st;
}

Cocycle cocycle_from_radius(const TameSetup& st, long long j) {
    Cocycle c;
    for (int a = 0; a < st.e; ++a) {
        c.coeff.push_back(st.zeta.pow(a * j));
        c.s_exp.push_back(0);
    }
    return c;
}

bool cocycle_law_holds(const TameSetup& st, const Cocycle& c) {
    if (c.coeff.size() != static_cast<std::size_t>(st.e) || c.s_exp.size() != c.coeff.size())
        return false;
    // u_(g^(a+b)) = u_(g^a) * g^a(u_(g^b)); indices mod e since g^e = 1
    for (int a = 0; a < st.e; ++a)
        for (int b = 0; b < st.e; ++b) {
            int ab = (a + b) % st.e;
            FieldElem lhs = c.coeff[ab];
            int lhs_exp = c.s_exp[ab];
            FieldElem rhs = c.coeff[a] * c.coeff[b] * st.zeta.pow(a * c.s_exp[b]);
            int rhs_exp = c.s_exp[a] + c.s_exp[b];
            if (lhs != rhs || lhs_exp != rhs_exp)
                return false;
        }
    return true;
}

std::optional<CoboundaryWitness> cohomologous_test(const TameSetup& st, const Cocycle& c1,
                                                   const Cocycle& c2) {
    if (c1.coeff.size() != static_cast<std::size_t>(st.e) ||
        c2.coeff.size() != static_cast<std::size_t>(st.e))
        fail(Errc::SetupMismatch, "cocycles do not match the setup");
    if (c1.s_exp != std::vector<int>(st.e, 0) || c2.s_exp != std::vector<int>(st.e, 0))
        fail(Errc::SetupMismatch, "cohomologous test expects scalar cocycles");
    // b a_g = a'_g g(b) for b = c s^k reads a_g = a'_g zeta^k; the witness
    // must also preserve the grading, i.e. deg(b) = deg(s)^k = 1.
    for (int k = 0; k < st.e; ++k) {
        if (!(c1.coeff[1 % st.e] == c2.coeff[1 % st.e] * st.zeta.pow(k)))
            continue;
        if (!st.s_degree.pow(static_cast<long long>(k)).is_one())
            continue;
        return CoboundaryWitness{st.Fq->one(), k};
    }
    return std::nullopt;
}

Descent descend(const TameSetup& st, const Cocycle& c) {
    if (!cocycle_law_holds(st, c))
        fail(Errc::NotScalarCocycle, "input does not satisfy the cocycle law");
    for (int a = 0; a < st.e; ++a)
        if (c.s_exp[a] != 0)
            fail(Errc::NotScalarCocycle, "cocycle values must be scalars");
    // recover j from the value at the generator
    long long j = -1;
    for (long long cand = 0; cand < st.e; ++cand)
        if (c.coeff[std::min(1, st.e - 1)] == st.zeta.pow(cand)) {
            j = cand;
            break;
        }
    if (j < 0)
        fail(Errc::NotScalarCocycle, "value at the generator is not a power of zeta");

    // fixed points of gbar(c s^w T^i) = g(c) zeta^(ji) s^w T^i among monomials
    // of T-degree <= 8: exactly w + j i = 0 mod e, the k-multiples of (s^-j T)^i
    for (int i = 0; i <= 8; ++i)
        for (int w = -2 * st.e; w <= 2 * st.e; ++w) {
            bool fixed = st.zeta.pow(w + j * i).is_one();
            bool generated = ((w + j * i) % st.e == 0);
            if (fixed != generated)
                fail(Errc::Internal, "fixed-point solve disagrees with the generated algebra");
        }

    Descent d;
    d.j = j;
    d.generator = st.BT->monomial(st.Fq->one(), -j, {1});
    d.radius = st.s_degree.pow(-j) * st.r;
    return d;
}

Classification classify(const TameSetup& st) {
    Classification cl;
    for (long long j = 0; j < st.e; ++j)
        cl.classes.push_back(descend(st, cocycle_from_radius(st, j)));

    // independent count: H^1(Z/e, F_q^x) with the trivial action (the residue
    // field is fixed in the totally ramified split case)
    CyclicModule units{{st.q - 1}, {{1}}};
    cl.h1_factors = h1_cyclic(st.e, units);
    cl.h1_order = 1;
    for (long long f : cl.h1_factors)
        cl.h1_order *= f;
    cl.h1_count_matches = (cl.h1_order == static_cast<long long>(cl.classes.size()));
    return cl;
}

InertiaPairing inertia_pairing(const TameSetup& st) {
    InertiaPairing ip;
    for (int a = 0; a < st.e; ++a) {
        std::vector<FieldElem> row;
        for (int b = 0; b < st.e; ++b)
            row.push_back(st.zeta.pow(a * b));
        ip.table.push_back(std::move(row));
    }
    auto distinct = [&](bool rows) {
        for (int a = 0; a < st.e; ++a)
            for (int b = a + 1; b < st.e; ++b) {
                bool same = true;
                for (int k = 0; k < st.e; ++k) {
                    const FieldElem& x = rows ? ip.table[a][k] : ip.table[k][a];
                    const FieldElem& y = rows ? ip.table[b][k] : ip.table[k][b];
                    if (x != y) {
                        same = false;
                        break;
                    }
                }
                if (same)
                    return false;
            }
        return true;
    };
    ip.perfect = distinct(true) && distinct(false);
    return ip;
}

} // namespace graded
