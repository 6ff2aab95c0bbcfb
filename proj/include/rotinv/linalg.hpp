#ifndef ROTINV_LINALG_HPP
#define ROTINV_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace rotinv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense complex square matrix whose Hermiticity is checked on construction.
class HermitianOperator {
public:
    static constexpr double herm_tol = 1e-12;

    explicit HermitianOperator(Matrix m);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Matrix& mat() const { return mat_; }

    /// Real spectrum, ascending.
    Eigen::VectorXd eigenvalues() const;
    double min_eigenvalue() const;
    double max_eigenvalue() const;
    double trace() const { return mat_.trace().real(); }

private:
    Matrix mat_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// exp(i * angle * g) for a Hermitian generator g, by spectral decomposition.
Matrix expi(const Matrix& hermitian_generator, double angle);

}  // namespace rotinv

#endif  // ROTINV_LINALG_HPP
