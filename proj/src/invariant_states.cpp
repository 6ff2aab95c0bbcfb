#include "rotinv/invariant_states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rotinv/wigner.hpp"

namespace rotinv {

namespace {

void require_dim(const HermitianOperator& op, const SpinPair& pair, const char* who) {
    if (op.dim() != pair.dim())
        throw std::invalid_argument(std::string(who) + ": operator dimension " +
                                    std::to_string(op.dim()) + " does not match N1*N2 = " +
                                    std::to_string(pair.dim()));
}

}  // namespace

SpinPair::SpinPair(HalfInt j1_, HalfInt j2_) : j1(j1_), j2(j2_) {
    if (j1.is_negative() || j2.is_negative())
        throw std::invalid_argument("SpinPair: negative spin");
    if (j2 < j1)
        throw std::invalid_argument("SpinPair: requires j1 <= j2, got j1 = " + j1.str() +
                                    ", j2 = " + j2.str());
}

HalfInt SpinPair::j_at(int slot) const {
    if (slot < 0 || slot >= n1()) throw std::out_of_range("SpinPair::j_at: slot out of range");
    return j_min() + slot;
}

int SpinPair::slot_of(HalfInt j_total) const {
    const HalfInt offset = j_total - j_min();
    if (!offset.is_integer() || offset.is_negative() || offset.to_int() >= n1())
        throw std::out_of_range("SpinPair::slot_of: J = " + j_total.str() +
                                " is not a coupled angular momentum of this pair");
    return offset.to_int();
}

AlphaVector::AlphaVector(SpinPair pair, Eigen::VectorXd components)
    : pair_(pair), values_(std::move(components)) {
    if (values_.size() != pair_.n1())
        throw std::invalid_argument("AlphaVector: expected " + std::to_string(pair_.n1()) +
                                    " components, got " + std::to_string(values_.size()));
}

double AlphaVector::trace() const {
    const double nn = pair_.n1() * pair_.n2();
    double sum = 0.0;
    for (int s = 0; s < pair_.n1(); ++s)
        sum += std::sqrt((pair_.j_at(s).twice() + 1.0) / nn) * values_[s];
    return sum;
}

bool AlphaVector::is_state(double pos_tol, double norm_tol) const {
    return values_.minCoeff() >= -pos_tol && std::abs(trace() - 1.0) <= norm_tol;
}

BetaVector::BetaVector(SpinPair pair, Eigen::VectorXd components)
    : pair_(pair), values_(std::move(components)) {
    if (values_.size() != pair_.n1())
        throw std::invalid_argument("BetaVector: expected " + std::to_string(pair_.n1()) +
                                    " components, got " + std::to_string(values_.size()));
}

bool BetaVector::is_state(double norm_tol) const {
    return std::abs(values_[0] - 1.0) <= norm_tol;
}

ProductState::ProductState(Vector phi1_, Vector phi2_)
    : phi1(std::move(phi1_)), phi2(std::move(phi2_)) {
    if (std::abs(phi1.norm() - 1.0) > norm_tol || std::abs(phi2.norm() - 1.0) > norm_tol)
        throw std::invalid_argument("ProductState: factors must be normalized");
}

Vector coupled_state(const SpinPair& pair, HalfInt j_total, HalfInt m_total) {
    if (!triangle_ok(pair.j1, pair.j2, j_total))
        throw std::invalid_argument("coupled_state: J = " + j_total.str() +
                                    " cannot be coupled from (" + pair.j1.str() + ", " +
                                    pair.j2.str() + ")");
    if (!(j_total + m_total).is_integer() || abs(m_total) > j_total)
        throw std::invalid_argument("coupled_state: invalid M = " + m_total.str());

    SpinBasis b1(pair.j1), b2(pair.j2);
    Vector v = Vector::Zero(pair.dim());
    for (int i1 = 0; i1 < pair.n1(); ++i1) {
        const HalfInt m1 = b1.m_at(i1);
        const HalfInt m2 = m_total - m1;
        if (abs(m2) > pair.j2) continue;
        const SqrtRational cg = clebsch_gordan(pair.j1, m1, pair.j2, m2, j_total, m_total);
        if (cg.is_zero()) continue;
        v[i1 * pair.n2() + b2.index(m2)] = cg.to_double();
    }
    return v;
}

HermitianOperator projector_pj(const SpinPair& pair, HalfInt j_total) {
    Matrix p = Matrix::Zero(pair.dim(), pair.dim());
    for (HalfInt m = -j_total; m <= j_total; m += 1) {
        const Vector v = coupled_state(pair, j_total, m);
        p += v * v.adjoint();
    }
    return HermitianOperator(std::move(p));
}

HermitianOperator operator_qk(const SpinPair& pair, int k) {
    if (k < 0 || k > pair.j1.twice())
        throw std::out_of_range("operator_qk: K = " + std::to_string(k) +
                                " outside 0..2j1 for j1 = " + pair.j1.str());
    Matrix q = Matrix::Zero(pair.dim(), pair.dim());
    for (int qq = -k; qq <= k; ++qq)
        q += kron(tensor_matrix(pair.j1, k, qq), tensor_matrix(pair.j2, k, qq).adjoint());
    return HermitianOperator(std::move(q));
}

HermitianOperator rho_from_alpha(const AlphaVector& alpha) {
    const SpinPair& pair = alpha.pair();
    const double scale = 1.0 / std::sqrt(static_cast<double>(pair.n1()) * pair.n2());
    Matrix rho = Matrix::Zero(pair.dim(), pair.dim());
    for (int s = 0; s < pair.n1(); ++s) {
        const HalfInt j_total = pair.j_at(s);
        rho += scale * alpha[s] / std::sqrt(j_total.twice() + 1.0) *
               projector_pj(pair, j_total).mat();
    }
    return HermitianOperator(std::move(rho));
}

HermitianOperator rho_from_beta(const BetaVector& beta) {
    const SpinPair& pair = beta.pair();
    const double scale = 1.0 / std::sqrt(static_cast<double>(pair.n1()) * pair.n2());
    Matrix rho = Matrix::Zero(pair.dim(), pair.dim());
    for (int k = 0; k < pair.n1(); ++k)
        rho += scale * beta[k] / std::sqrt(2.0 * k + 1.0) * operator_qk(pair, k).mat();
    return HermitianOperator(std::move(rho));
}

std::pair<AlphaVector, BetaVector> twirl(const HermitianOperator& rho, const SpinPair& pair) {
    require_dim(rho, pair, "twirl");
    const double nn = static_cast<double>(pair.n1()) * pair.n2();
    Eigen::VectorXd alpha(pair.n1()), beta(pair.n1());
    for (int s = 0; s < pair.n1(); ++s) {
        const HalfInt j_total = pair.j_at(s);
        const double tr = (projector_pj(pair, j_total).mat() * rho.mat()).trace().real();
        alpha[s] = std::sqrt(nn / (j_total.twice() + 1.0)) * tr;
    }
    for (int k = 0; k < pair.n1(); ++k) {
        const double tr = (operator_qk(pair, k).mat() * rho.mat()).trace().real();
        beta[k] = std::sqrt(nn / (2.0 * k + 1.0)) * tr;
    }
    return {AlphaVector(pair, std::move(alpha)), BetaVector(pair, std::move(beta))};
}

LMatrix l_matrix(const SpinPair& pair, LMethod method) {
    const int n1 = pair.n1();
    LMatrix out;
    out.values = Eigen::MatrixXd::Zero(n1, n1);
    out.row_valid.assign(n1, method != LMethod::closed_rows);

    switch (method) {
        case LMethod::trace: {
            for (int k = 0; k < n1; ++k) {
                const Matrix qk = operator_qk(pair, k).mat();
                for (int s = 0; s < n1; ++s) {
                    const HalfInt j_total = pair.j_at(s);
                    const double tr = (qk * projector_pj(pair, j_total).mat()).trace().real();
                    out.values(k, s) = tr / std::sqrt((2.0 * k + 1.0) * (j_total.twice() + 1.0));
                }
            }
            break;
        }
        case LMethod::six_j: {
            for (int k = 0; k < n1; ++k)
                for (int s = 0; s < n1; ++s) {
                    const HalfInt j_total = pair.j_at(s);
                    const SqrtRational sj =
                        wigner_6j(pair.j1, pair.j2, j_total, pair.j2, pair.j1, HalfInt(k));
                    const double pre = parity_sign(pair.j1 + pair.j2 + j_total) *
                                       std::sqrt((2.0 * k + 1.0) * (j_total.twice() + 1.0));
                    out.values(k, s) = pre * sj.to_double();
                }
            break;
        }
        case LMethod::closed_rows: {
            const double nn1 = n1, nn2 = pair.n2();
            // j(j+1) in twice arithmetic
            const auto jj = [](HalfInt j) {
                return 0.25 * j.twice() * (j.twice() + 2.0);
            };
            for (int s = 0; s < n1; ++s) {
                const HalfInt j_total = pair.j_at(s);
                const double two_j1 = j_total.twice() + 1.0;
                out.values(0, s) = std::sqrt(two_j1 / (nn1 * nn2));
                const double x = jj(pair.j1) + jj(pair.j2) - jj(j_total);
                if (n1 >= 2) {
                    const double den =
                        (nn1 - 1) * nn1 * (nn1 + 1) * (nn2 - 1) * nn2 * (nn2 + 1);
                    out.values(1, s) = -2.0 * std::sqrt(3.0 * two_j1) * x / std::sqrt(den);
                }
                if (n1 >= 3) {
                    const double den = (nn1 - 2) * (nn1 - 1) * nn1 * (nn1 + 1) * (nn1 + 2) *
                                       (nn2 - 2) * (nn2 - 1) * nn2 * (nn2 + 1) * (nn2 + 2);
                    const double num = 3.0 * x * (x - 1.0) - 4.0 * jj(pair.j1) * jj(pair.j2);
                    out.values(2, s) = 2.0 * std::sqrt(5.0 * two_j1) * num / std::sqrt(den);
                }
            }
            for (int k = 0; k < n1; ++k) out.row_valid[k] = k <= 2;
            break;
        }
    }
    return out;
}

HermitianOperator partial_transpose(const HermitianOperator& rho, const SpinPair& pair) {
    require_dim(rho, pair, "partial_transpose");
    const int n1 = pair.n1(), n2 = pair.n2();
    Matrix out(pair.dim(), pair.dim());
    for (int i1 = 0; i1 < n1; ++i1)
        for (int i2 = 0; i2 < n2; ++i2)
            for (int k1 = 0; k1 < n1; ++k1)
                for (int k2 = 0; k2 < n2; ++k2)
                    out(i1 * n2 + i2, k1 * n2 + k2) = rho.mat()(i1 * n2 + k2, k1 * n2 + i2);
    return HermitianOperator(std::move(out));
}

BetaVector partial_time_reversal(const BetaVector& beta) {
    Eigen::VectorXd flipped = beta.values();
    for (int k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
    return BetaVector(beta.pair(), std::move(flipped));
}

BetaEvaluator::BetaEvaluator(SpinPair pair) : pair_(pair) {
    t1_.resize(pair_.n1());
    t2_.resize(pair_.n1());
    for (int k = 0; k < pair_.n1(); ++k)
        for (int q = -k; q <= k; ++q) {
            t1_[k].push_back(tensor_matrix(pair_.j1, k, q));
            t2_[k].push_back(tensor_matrix(pair_.j2, k, q));
        }
}

Eigen::VectorXd BetaEvaluator::evaluate(const Vector& phi1, const Vector& phi2) const {
    Eigen::VectorXd beta(pair_.n1());
    const double nn = static_cast<double>(pair_.n1()) * pair_.n2();
    for (int k = 0; k < pair_.n1(); ++k) {
        Complex acc = 0.0;
        for (int qi = 0; qi < 2 * k + 1; ++qi) {
            const Complex e1 = phi1.dot(t1_[k][qi] * phi1);
            const Complex e2 = phi2.dot(t2_[k][qi] * phi2);
            acc += e1 * std::conj(e2);
        }
        if (std::abs(acc.imag()) > 1e-12)
            throw std::logic_error("BetaEvaluator: beta_K acquired an imaginary part");
        beta[k] = std::sqrt(nn / (2.0 * k + 1.0)) * acc.real();
    }
    return beta;
}

BetaVector BetaEvaluator::operator()(const ProductState& state) const {
    if (state.phi1.size() != pair_.n1() || state.phi2.size() != pair_.n2())
        throw std::invalid_argument("BetaEvaluator: state dimensions do not match the pair");
    return BetaVector(pair_, evaluate(state.phi1, state.phi2));
}

BetaVector beta_functionals(const ProductState& state, const SpinPair& pair) {
    return BetaEvaluator(pair)(state);
}

}  // namespace rotinv
