#ifndef ROTINV_WIGNER_HPP
#define ROTINV_WIGNER_HPP

#include <gmpxx.h>

#include "rotinv/half_int.hpp"
#include "rotinv/sqrt_rational.hpp"

namespace rotinv {

/// n! as a big integer. Cached; safe for concurrent readers and growers.
const mpz_class& factorial(long n);

/// |a-b| <= c <= a+b together with a+b+c being an integer.
bool triangle_ok(HalfInt a, HalfInt b, HalfInt c);

/// Wigner 3-j symbol by the Racah sum, exact over SqrtRational. Violated
/// selection rules (m1+m2+m3 != 0, triangle, |m| > j) give zero; an m whose
/// parity does not match its j throws std::invalid_argument.
SqrtRational wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt m1, HalfInt m2, HalfInt m3);

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>, Condon-Shortley phase.
SqrtRational clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                            HalfInt j_total, HalfInt m_total);

/// Wigner 6-j symbol by the Racah single-sum formula, exact; zero whenever one
/// of the four triads violates the triangle rule.
SqrtRational wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3,
                       HalfInt j4, HalfInt j5, HalfInt j6);

}  // namespace rotinv

#endif  // ROTINV_WIGNER_HPP
