#include "rotinv/linalg.hpp"

#include <stdexcept>

namespace rotinv {

HermitianOperator::HermitianOperator(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols())
        throw std::invalid_argument("HermitianOperator: matrix is not square");
    const double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > herm_tol)
        throw std::invalid_argument("HermitianOperator: matrix is not Hermitian (max deviation " +
                                    std::to_string(dev) + ")");
}

Eigen::VectorXd HermitianOperator::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(mat_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double HermitianOperator::min_eigenvalue() const { return eigenvalues().minCoeff(); }
double HermitianOperator::max_eigenvalue() const { return eigenvalues().maxCoeff(); }

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    return out;
}

Matrix expi(const Matrix& hermitian_generator, double angle) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_generator);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("expi: eigendecomposition failed");
    Vector phases(solver.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases[i] = std::exp(Complex(0.0, angle * solver.eigenvalues()[i]));
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace rotinv
