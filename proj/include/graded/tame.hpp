// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_TAME_HPP
#define GRADED_TAME_HPP

#include "graded/graded_ring.hpp"
#include "graded/intlat.hpp"

#include <optional>
#include <vector>

namespace graded {

/// Finite abelian group sum Z/d_1 x ... x Z/d_k with an automorphism given by
/// an integer matrix on the basis.
struct CyclicModule {
    std::vector<long long> orders;
    IntMat action;
};

/// Invariant factors (each > 1, ascending) of H^1(Z/e, M) = ker(Norm)/im(g-1)
/// computed by exact integer linear algebra; empty means the group vanishes.
/// Throws ActionOrderMismatch unless the action has order dividing e.
std::vector<long long> h1_cyclic(int e, const CyclicModule& mod);

/// Split tame cyclic totally ramified descent data: k1 = l1 = F_q,
/// ell = F_q[s^(+-1)], k = F_q[s^(+-e)], G = <g> with g(s) = zeta * s for a
/// fixed primitive e-th root of unity (e | q-1 makes the setup Galois), and
/// the disc coordinate ring ell[r^-1 T].
struct TameSetup {
    long long q = 0;
    int e = 1;
    FieldPtr Fq;
    FieldElem zeta;
    Degree s_degree;
    Degree r;
    GradedField ell;
    RingPtr BT;

    static TameSetup make(long long q, int e, Degree r);
};

/// Scalar-type 1-cocycle: the automorphism attached to g^a sends T to
/// coeff[a] * s^(s_exp[a]) * T. The cocycle law u_(gh) = u_g g(u_h) forces
/// s_exp = 0 on cyclic groups; the slots are kept so that malformed inputs
/// can be detected rather than silently repaired.
struct Cocycle {
    std::vector<FieldElem> coeff;
    std::vector<int> s_exp;
};

/// theta_(g^a)(T) = g^a(s^j)/s^j * T = zeta^(aj) T.
Cocycle cocycle_from_radius(const TameSetup& st, long long j);

bool cocycle_law_holds(const TameSetup& st, const Cocycle& c);

struct CoboundaryWitness {
    FieldElem c;
    int k; // b = c * s^k
};

/// Searches homogeneous units b = c s^k of ell for b a_g = a'_g g(b) at the
/// generator; a witness must also give a degree-preserving automorphism
/// (deg b = 1), which is what separates the radius classes.
std::optional<CoboundaryWitness> cohomologous_test(const TameSetup& st, const Cocycle& c1,
                                                   const Cocycle& c2);

struct Descent {
    long long j = 0;       // recovered twist exponent
    GradedElem generator;  // s^-j T inside ell[r^-1 T]
    Degree radius;         // deg(s)^-j * r
};

/// Invariant subring of ell[r^-1 T] under the twisted semilinear action; the
/// fixed-point condition is solved per monomial and cross-checked against the
/// k-algebra generated by s^-j T. Throws NotScalarCocycle.
Descent descend(const TameSetup& st, const Cocycle& c);

struct Classification {
    std::vector<Descent> classes;
    std::vector<long long> h1_factors;
    long long h1_order = 1;
    bool h1_count_matches = false;
};

/// The e radius classes deg(s)^-j * r, j = 0..e-1, with the independent
/// cyclic-cohomology count of H^1(G, F_q^x).
Classification classify(const TameSetup& st);

struct InertiaPairing {
    std::vector<std::vector<FieldElem>> table; // psi_(g^a)(deg(s)^b) = zeta^(ab)
    bool perfect = false;
};

InertiaPairing inertia_pairing(const TameSetup& st);

} // namespace graded

#endif
