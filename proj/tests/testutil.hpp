// Shared helpers for the test suites: a seeded RNG and random generators for
// the algebraic types. Everything is deterministic under a fixed seed.
#ifndef GRADED_TESTUTIL_HPP
#define GRADED_TESTUTIL_HPP

#include "graded/degree.hpp"
#include "graded/field.hpp"
#include "graded/graded_ring.hpp"

#include <random>

namespace testutil {

using Rng = std::mt19937_64;

inline long long pick(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline graded::Rational random_rational(Rng& rng) {
    long long num = pick(rng, -9, 9);
    long long den = pick(rng, 1, 9);
    return graded::Rational(num, den);
}

inline graded::Degree random_degree(Rng& rng) {
    static const char* names[] = {"q", "r", "s"};
    graded::Degree d;
    for (const char* n : names)
        if (pick(rng, 0, 1))
            d *= graded::Degree::generator(n, random_rational(rng));
    return d;
}

inline graded::FieldElem random_elem(Rng& rng, const graded::FieldPtr& F) {
    if (F->desc().kind == graded::FieldKind::Finite) {
        long long k = pick(rng, 0, F->q() - 1);
        if (k == F->q() - 1)
            return F->zero();
        return F->enumerate_units(0)[static_cast<std::size_t>(k)];
    }
    // small random rational function
    auto rand_poly = [&](int maxdeg) {
        graded::FieldElem p = F->zero();
        graded::FieldElem u = F->u();
        int d = static_cast<int>(pick(rng, 0, maxdeg));
        for (int i = 0; i <= d; ++i)
            p += F->from_int(pick(rng, 0, F->p() - 1)) * u.pow(i);
        return p;
    };
    graded::FieldElem den = F->zero();
    while (den.is_zero())
        den = rand_poly(2);
    return rand_poly(2) / den;
}

inline graded::FieldElem random_unit(Rng& rng, const graded::FieldPtr& F) {
    graded::FieldElem e = F->zero();
    while (e.is_zero())
        e = random_elem(rng, F);
    return e;
}

// Random element of a graded ring: a few monomials with small exponents.
inline graded::GradedElem random_graded(Rng& rng, const graded::RingPtr& R, int max_terms = 3,
                                        int max_texp = 3, int max_vexp = 3) {
    graded::GradedElem e = R->zero();
    int stride = R->base().stride;
    long long nterms = pick(rng, 0, max_terms);
    for (long long k = 0; k < nterms; ++k) {
        long long t = pick(rng, -max_texp, max_texp) * stride;
        std::vector<int> v(R->vars().size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = static_cast<int>(
                pick(rng, R->vars()[i].laurent ? -max_vexp : 0, max_vexp));
        e += R->monomial(random_elem(rng, R->base().coeff), t, v);
    }
    return e;
}

inline graded::GradedElem random_graded_nonzero(Rng& rng, const graded::RingPtr& R,
                                                int max_terms = 3, int max_texp = 3,
                                                int max_vexp = 3) {
    graded::GradedElem e = R->zero();
    while (e.is_zero())
        e = random_graded(rng, R, max_terms, max_texp, max_vexp);
    return e;
}

} // namespace testutil

#endif
