#ifndef ROTINV_SPHERICAL_TENSORS_HPP
#define ROTINV_SPHERICAL_TENSORS_HPP

#include "rotinv/half_int.hpp"
#include "rotinv/linalg.hpp"
#include "rotinv/sqrt_rational.hpp"

namespace rotinv {

/// Basis |j,m> of a spin-j space with m ascending from -j to +j.
struct SpinBasis {
    HalfInt j;

    explicit SpinBasis(HalfInt j_);

    int dim() const { return j.twice() + 1; }
    int index(HalfInt m) const;
    HalfInt m_at(int index) const;
};

// Angular momentum matrices in the ascending-m basis.
Matrix spin_z(HalfInt j);
Matrix spin_plus(HalfInt j);
Matrix spin_minus(HalfInt j);
Matrix spin_x(HalfInt j);
Matrix spin_y(HalfInt j);

/// <j,m|T_Kq|j,m'> = sqrt(2K+1) (-1)^(j-m) 3j(j, j, K; m, -m', -q), exact.
/// Zero when m - m' - q != 0; rejects k > 2j, |q| > k and out-of-basis m.
SqrtRational tensor_element(HalfInt j, int k, int q, HalfInt m, HalfInt m_prime);

/// The full (2j+1) x (2j+1) matrix of T_Kq. Entries are real by construction.
Matrix tensor_matrix(HalfInt j, int k, int q);

/// Rotation by pi about the y-axis: V_{m',m} = (-1)^(j-m') delta_{m',-m}.
Matrix pi_rotation_matrix(HalfInt j);

/// Time reversal of an operator on the spin-j space: theta B = V B^T V^dag.
Matrix time_reversal(HalfInt j, const Matrix& b);

/// Closed forms for the nonvanishing elements of the rank-1 and rank-2
/// tensors, independent of tensor_element and used to cross-check it:
///   T10: <j,m|T_10|j,m>        T11: <j,m|T_11^dag|j,m+1>
///   T20: <j,m|T_20|j,m>        T21: <j,m|T_21^dag|j,m+1>
///   T22: <j,m|T_22^dag|j,m+2>
enum class ClosedForm { T10, T11, T20, T21, T22 };

SqrtRational closed_form_element(HalfInt j, ClosedForm which, HalfInt m);

}  // namespace rotinv

#endif  // ROTINV_SPHERICAL_TENSORS_HPP
