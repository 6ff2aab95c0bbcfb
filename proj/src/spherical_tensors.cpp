#include "rotinv/spherical_tensors.hpp"

#include <stdexcept>

#include "rotinv/wigner.hpp"

namespace rotinv {

namespace {

mpq_class make_q(mpz_class num, mpz_class den) {
    mpq_class q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// N(N-1)(N+1) and (N+2)(N+1)N(N-1)(N-2) for N = 2j+1
mpz_class rank1_denominator(long n) { return mpz_class(n) * (n - 1) * (n + 1); }
mpz_class rank2_denominator(long n) {
    return mpz_class(n + 2) * (n + 1) * n * (n - 1) * (n - 2);
}

}  // namespace

SpinBasis::SpinBasis(HalfInt j_) : j(j_) {
    if (j.is_negative()) throw std::invalid_argument("SpinBasis: negative spin " + j.str());
}

int SpinBasis::index(HalfInt m) const {
    if (!(j + m).is_integer())
        throw std::invalid_argument("SpinBasis: m = " + m.str() + " has the wrong parity for j = " + j.str());
    if (abs(m) > j)
        throw std::out_of_range("SpinBasis: |m| > j for m = " + m.str() + ", j = " + j.str());
    return (m.twice() + j.twice()) / 2;
}

HalfInt SpinBasis::m_at(int index) const {
    if (index < 0 || index >= dim()) throw std::out_of_range("SpinBasis: basis index out of range");
    return HalfInt::from_twice(-j.twice() + 2 * index);
}

Matrix spin_z(HalfInt j) {
    SpinBasis basis(j);
    Matrix m = Matrix::Zero(basis.dim(), basis.dim());
    for (int i = 0; i < basis.dim(); ++i) m(i, i) = basis.m_at(i).to_double();
    return m;
}

Matrix spin_plus(HalfInt j) {
    SpinBasis basis(j);
    Matrix out = Matrix::Zero(basis.dim(), basis.dim());
    const long tj = j.twice();
    for (int i = 0; i + 1 < basis.dim(); ++i) {
        const long tm = basis.m_at(i).twice();
        // j(j+1) - m(m+1) = [tj(tj+2) - tm(tm+2)] / 4
        out(i + 1, i) = std::sqrt(0.25 * static_cast<double>(tj * (tj + 2) - tm * (tm + 2)));
    }
    return out;
}

Matrix spin_minus(HalfInt j) { return spin_plus(j).adjoint(); }

Matrix spin_x(HalfInt j) { return 0.5 * (spin_plus(j) + spin_minus(j)); }

Matrix spin_y(HalfInt j) {
    return Complex(0.0, -0.5) * (spin_plus(j) - spin_minus(j));
}

SqrtRational tensor_element(HalfInt j, int k, int q, HalfInt m, HalfInt m_prime) {
    if (k < 0 || k > j.twice())
        throw std::invalid_argument("tensor_element: rank k = " + std::to_string(k) +
                                    " outside 0..2j for j = " + j.str());
    if (q < -k || q > k)
        throw std::invalid_argument("tensor_element: |q| > k");
    SpinBasis basis(j);
    basis.index(m);
    basis.index(m_prime);
    SqrtRational three_j = wigner_3j(j, j, k, m, -m_prime, HalfInt(-q));
    if (three_j.is_zero()) return three_j;
    return SqrtRational::signed_sqrt(parity_sign(j - m), mpq_class(2 * k + 1)) * three_j;
}

Matrix tensor_matrix(HalfInt j, int k, int q) {
    SpinBasis basis(j);
    Matrix out = Matrix::Zero(basis.dim(), basis.dim());
    // selection rule m - m' = q: a single diagonal stripe
    for (int col = 0; col < basis.dim(); ++col) {
        const int row = col + q;
        if (row < 0 || row >= basis.dim()) continue;
        out(row, col) = tensor_element(j, k, q, basis.m_at(row), basis.m_at(col)).to_double();
    }
    return out;
}

Matrix pi_rotation_matrix(HalfInt j) {
    SpinBasis basis(j);
    Matrix v = Matrix::Zero(basis.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        const HalfInt m = basis.m_at(col);
        v(basis.index(-m), col) = parity_sign(j + m);
    }
    return v;
}

Matrix time_reversal(HalfInt j, const Matrix& b) {
    SpinBasis basis(j);
    if (b.rows() != basis.dim() || b.cols() != basis.dim())
        throw std::invalid_argument("time_reversal: operator dimension does not match 2j+1");
    const Matrix v = pi_rotation_matrix(j);
    return v * b.transpose() * v.adjoint();
}

SqrtRational closed_form_element(HalfInt j, ClosedForm which, HalfInt m) {
    SpinBasis basis(j);
    basis.index(m);  // validates m against j
    const long n = basis.dim();
    const long tm = m.twice();
    const long tj = j.twice();

    const bool rank2 = which == ClosedForm::T20 || which == ClosedForm::T21 || which == ClosedForm::T22;
    if ((rank2 && tj < 2) || tj < 1)
        throw std::invalid_argument("closed_form_element: tensor rank exceeds 2j");

    switch (which) {
        case ClosedForm::T10:
            // 2m sqrt(3 / (N(N-1)(N+1)))
            return SqrtRational::signed_sqrt(tm > 0 ? 1 : (tm < 0 ? -1 : 0),
                                             make_q(3 * mpz_class(tm) * tm, rank1_denominator(n)));
        case ClosedForm::T11: {
            // -sqrt(6 (j-m)(j+m+1) / (N(N-1)(N+1)))
            const long f1 = (j - m).to_int();
            const long f2 = (j + m + 1).to_int();
            if (f1 == 0 || f2 == 0) return SqrtRational::zero();
            return SqrtRational::signed_sqrt(-1, make_q(6 * mpz_class(f1) * f2, rank1_denominator(n)));
        }
        case ClosedForm::T20: {
            // 2 sqrt(5) [3m^2 - j(j+1)] / sqrt((N+2)(N+1)N(N-1)(N-2))
            const mpq_class x = make_q(3 * mpz_class(tm) * tm - mpz_class(tj) * (tj + 2), 4);
            if (x == 0) return SqrtRational::zero();
            return SqrtRational::signed_sqrt(sgn(x),
                                             20 * x * x / mpq_class(rank2_denominator(n)));
        }
        case ClosedForm::T21: {
            // -sqrt(5) (1+2m) sqrt(6 (j-m)(j+m+1) / ((N+2)(N+1)N(N-1)(N-2)))
            const long c = 1 + tm;
            const long f1 = (j - m).to_int();
            const long f2 = (j + m + 1).to_int();
            if (c == 0 || f1 == 0 || f2 == 0) return SqrtRational::zero();
            return SqrtRational::signed_sqrt(c > 0 ? -1 : 1,
                                             make_q(30 * mpz_class(c) * c * f1 * f2, rank2_denominator(n)));
        }
        case ClosedForm::T22: {
            // sqrt(5) sqrt(6 (j-m-1)(j-m)(j+m+1)(j+m+2) / ((N+2)(N+1)N(N-1)(N-2)))
            const mpz_class prod = mpz_class((j - m - 1).to_int()) * (j - m).to_int() *
                                   (j + m + 1).to_int() * (j + m + 2).to_int();
            if (prod == 0) return SqrtRational::zero();
            return SqrtRational::signed_sqrt(1, make_q(30 * prod, rank2_denominator(n)));
        }
    }
    throw std::invalid_argument("closed_form_element: unknown case");
}

}  // namespace rotinv
