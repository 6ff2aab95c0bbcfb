#ifndef ROTINV_INVARIANT_STATES_HPP
#define ROTINV_INVARIANT_STATES_HPP

#include <utility>
#include <vector>

#include "rotinv/half_int.hpp"
#include "rotinv/linalg.hpp"
#include "rotinv/spherical_tensors.hpp"

namespace rotinv {

/// Two spins j1 <= j2. The composite space C^{N1} (x) C^{N2} uses the product
/// basis index i1 * N2 + i2 with both factors ordered by ascending m; every
/// operator in this library sticks to that one layout.
struct SpinPair {
    HalfInt j1, j2;

    SpinPair(HalfInt j1_, HalfInt j2_);

    int n1() const { return j1.twice() + 1; }
    int n2() const { return j2.twice() + 1; }
    int dim() const { return n1() * n2(); }

    HalfInt j_min() const { return j2 - j1; }
    HalfInt j_max() const { return j1 + j2; }

    /// Total angular momentum held in coordinate slot 0..N1-1 (ascending).
    HalfInt j_at(int slot) const;
    int slot_of(HalfInt j_total) const;

    friend bool operator==(const SpinPair& a, const SpinPair& b) {
        return a.j1 == b.j1 && a.j2 == b.j2;
    }
};

/// Coordinates of an invariant operator over the total-angular-momentum
/// projectors: slot s holds alpha_J for J = j2 - j1 + s.
class AlphaVector {
public:
    AlphaVector(SpinPair pair, Eigen::VectorXd components);

    const SpinPair& pair() const { return pair_; }
    const Eigen::VectorXd& values() const { return values_; }
    double operator[](int slot) const { return values_[slot]; }
    HalfInt j_at(int slot) const { return pair_.j_at(slot); }

    /// Sum_J sqrt((2J+1)/(N1 N2)) alpha_J, i.e. the trace of the operator.
    double trace() const;
    /// All alpha_J >= -pos_tol and unit trace within norm_tol.
    bool is_state(double pos_tol = 1e-12, double norm_tol = 1e-10) const;

private:
    SpinPair pair_;
    Eigen::VectorXd values_;
};

/// Coordinates over the invariant tensor operators Q_K: slot K = 0..N1-1.
class BetaVector {
public:
    BetaVector(SpinPair pair, Eigen::VectorXd components);

    const SpinPair& pair() const { return pair_; }
    const Eigen::VectorXd& values() const { return values_; }
    double operator[](int slot) const { return values_[slot]; }
    int k_at(int slot) const { return slot; }

    /// Unit trace, i.e. beta_0 = 1 within norm_tol.
    bool is_state(double norm_tol = 1e-10) const;

private:
    SpinPair pair_;
    Eigen::VectorXd values_;
};

/// Pure product state phi1 (x) phi2 with unit-norm factors.
struct ProductState {
    Vector phi1, phi2;

    static constexpr double norm_tol = 1e-12;
    ProductState(Vector phi1_, Vector phi2_);
};

/// |J M> of the coupled pair expanded in the product basis.
Vector coupled_state(const SpinPair& pair, HalfInt j_total, HalfInt m_total);

/// Projector onto the total-angular-momentum-J eigenspace.
HermitianOperator projector_pj(const SpinPair& pair, HalfInt j_total);

/// Q_K = sum_q T^(1)_Kq (x) T^(2)dag_Kq, Hermitian and rotation invariant.
HermitianOperator operator_qk(const SpinPair& pair, int k);

HermitianOperator rho_from_alpha(const AlphaVector& alpha);
HermitianOperator rho_from_beta(const BetaVector& beta);

/// Coordinates of the group average of rho: alpha_J and beta_K picked up by
/// tracing against P_J and Q_K. For invariant rho this inverts rho_from_alpha.
std::pair<AlphaVector, BetaVector> twirl(const HermitianOperator& rho, const SpinPair& pair);

enum class LMethod { trace, six_j, closed_rows };

/// beta = L alpha. closed_rows only defines rows K = 0..2; the mask marks
/// which rows were filled.
struct LMatrix {
    Eigen::MatrixXd values;
    std::vector<bool> row_valid;
};

LMatrix l_matrix(const SpinPair& pair, LMethod method);

/// Transpose of the second tensor factor in the fixed product basis.
HermitianOperator partial_transpose(const HermitianOperator& rho, const SpinPair& pair);

/// beta_K -> (-1)^K beta_K, the reflection induced on coordinates by time
/// reversal of the second spin.
BetaVector partial_time_reversal(const BetaVector& beta);

/// Tensor matrices of both factors, prebuilt for evaluating the invariant
/// coordinates of twirled product states in bulk.
class BetaEvaluator {
public:
    explicit BetaEvaluator(SpinPair pair);

    const SpinPair& pair() const { return pair_; }

    /// beta_K = sqrt(N1 N2 / (2K+1)) sum_q <phi1|T_Kq|phi1> <phi2|T_Kq|phi2>*.
    /// The result is real; residual imaginary parts beyond 1e-12 throw.
    BetaVector operator()(const ProductState& state) const;
    Eigen::VectorXd evaluate(const Vector& phi1, const Vector& phi2) const;

private:
    SpinPair pair_;
    std::vector<std::vector<Matrix>> t1_, t2_;  // [K][q + K]
};

/// One-shot form of BetaEvaluator.
BetaVector beta_functionals(const ProductState& state, const SpinPair& pair);

}  // namespace rotinv

#endif  // ROTINV_INVARIANT_STATES_HPP
