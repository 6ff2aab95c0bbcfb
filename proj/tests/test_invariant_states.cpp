#include <doctest.h>

#include <cmath>

#include "rotinv/invariant_states.hpp"
#include "rotinv/oracle.hpp"
#include "rotinv/wigner.hpp"

using namespace rotinv;

namespace {

const HalfInt half = HalfInt::from_twice(1);

std::vector<SpinPair> small_pairs() {
    std::vector<SpinPair> pairs;
    for (int t1 = 0; t1 <= 4; ++t1)
        for (int t2 = t1; t2 <= 4; ++t2)
            pairs.emplace_back(HalfInt::from_twice(t1), HalfInt::from_twice(t2));
    return pairs;
}

AlphaVector random_state_alpha(const SpinPair& pair, Rng& rng) {
    return sample_invariant_state(pair, rng);
}

}  // namespace

TEST_CASE("spin pair bookkeeping") {
    const SpinPair pair(1, HalfInt::from_twice(3));
    CHECK(pair.n1() == 3);
    CHECK(pair.n2() == 4);
    CHECK(pair.dim() == 12);
    CHECK(pair.j_min() == half);
    CHECK(pair.j_max() == HalfInt::from_twice(5));
    CHECK(pair.j_at(1) == HalfInt::from_twice(3));
    CHECK(pair.slot_of(HalfInt::from_twice(5)) == 2);
    CHECK_THROWS_AS(SpinPair(1, half), std::invalid_argument);
    CHECK_THROWS_AS(pair.slot_of(HalfInt(4)), std::out_of_range);
}

TEST_CASE("coupled states") {
    // stretched state is the aligned product state
    for (const auto& pair : small_pairs()) {
        const Vector v = coupled_state(pair, pair.j_max(), pair.j_max());
        Vector expected = Vector::Zero(pair.dim());
        expected[pair.dim() - 1] = 1.0;  // both factors at m = +j
        CHECK((v - expected).cwiseAbs().maxCoeff() < 1e-15);
    }

    // the spin-1/2 singlet
    const SpinPair pair(half, half);
    const Vector singlet = coupled_state(pair, 0, 0);
    CHECK(singlet[2].real() == doctest::Approx(std::sqrt(0.5)));   // |+1/2, -1/2> component
    CHECK(singlet[1].real() == doctest::Approx(-std::sqrt(0.5)));  // |-1/2, +1/2> component

    // unit norm across a sweep
    for (const auto& p : small_pairs())
        for (int s = 0; s < p.n1(); ++s) {
            const HalfInt j_total = p.j_at(s);
            for (HalfInt m = -j_total; m <= j_total; m += 1)
                CHECK(coupled_state(p, j_total, m).norm() == doctest::Approx(1.0).epsilon(1e-13));
        }

    CHECK_THROWS_AS(coupled_state(pair, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(coupled_state(pair, 1, 2), std::invalid_argument);
}

TEST_CASE("projectors are a complete orthogonal resolution") {
    for (const auto& pair : small_pairs()) {
        Matrix sum = Matrix::Zero(pair.dim(), pair.dim());
        for (int s = 0; s < pair.n1(); ++s) {
            const HalfInt j_total = pair.j_at(s);
            const Matrix p = projector_pj(pair, j_total).mat();
            sum += p;
            CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(p.trace().real() == doctest::Approx(j_total.twice() + 1.0).epsilon(1e-12));
            for (int s2 = 0; s2 < s; ++s2) {
                const Matrix q = projector_pj(pair, pair.j_at(s2)).mat();
                CHECK((p * q).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
        CHECK((sum - Matrix::Identity(pair.dim(), pair.dim())).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("invariant tensor operators Q_K") {
    for (const auto& pair : small_pairs()) {
        // Q_0 is the normalized identity
        const Matrix q0 = operator_qk(pair, 0).mat();
        const double norm = 1.0 / std::sqrt(double(pair.dim()));
        CHECK((q0 - norm * Matrix::Identity(pair.dim(), pair.dim())).cwiseAbs().maxCoeff() < 1e-14);

        // tr(Q_K Q_K') = (2K+1) delta
        for (int k = 0; k < pair.n1(); ++k)
            for (int k2 = 0; k2 <= k; ++k2) {
                const double tr =
                    (operator_qk(pair, k).mat() * operator_qk(pair, k2).mat()).trace().real();
                CHECK(tr == doctest::Approx(k == k2 ? 2.0 * k + 1.0 : 0.0).epsilon(1e-12));
            }
    }

    // Q_1 is proportional to the scalar product of the spin vectors
    for (const auto& pair : small_pairs()) {
        if (pair.j1.twice() < 1) continue;
        const Matrix q1 = operator_qk(pair, 1).mat();
        const Matrix dot = kron(spin_x(pair.j1), spin_x(pair.j2)) +
                           kron(spin_y(pair.j1), spin_y(pair.j2)) +
                           kron(spin_z(pair.j1), spin_z(pair.j2));
        const auto a = [](int n) { return 2.0 * std::sqrt(3.0 / (double(n) * n * n - n)); };
        CHECK((q1 - a(pair.n1()) * a(pair.n2()) * dot).cwiseAbs().maxCoeff() < 1e-12);
    }

    CHECK_THROWS_AS(operator_qk(SpinPair(1, 1), 3), std::out_of_range);
}

TEST_CASE("rho_from_alpha reproduces the distinguished states") {
    for (const auto& pair : small_pairs()) {
        const double nn = pair.dim();

        // pure top-J state
        Eigen::VectorXd top = Eigen::VectorXd::Zero(pair.n1());
        top[pair.n1() - 1] = std::sqrt(nn / (pair.j_max().twice() + 1.0));
        const AlphaVector alpha_top(pair, top);
        CHECK(alpha_top.is_state());
        const Matrix expected =
            projector_pj(pair, pair.j_max()).mat() / (pair.j_max().twice() + 1.0);
        CHECK((rho_from_alpha(alpha_top).mat() - expected).cwiseAbs().maxCoeff() < 1e-13);

        // maximally mixed state
        Eigen::VectorXd mixed(pair.n1());
        for (int s = 0; s < pair.n1(); ++s)
            mixed[s] = std::sqrt((pair.j_at(s).twice() + 1.0) / nn);
        const AlphaVector alpha_mixed(pair, mixed);
        CHECK(alpha_mixed.is_state());
        CHECK((rho_from_alpha(alpha_mixed).mat() -
               Matrix::Identity(pair.dim(), pair.dim()) / nn)
                  .cwiseAbs()
                  .maxCoeff() < 1e-14);
        CHECK(rho_from_alpha(alpha_mixed).trace() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("twirl projects onto invariant coordinates") {
    Rng rng(20240811);
    for (const auto& pair : small_pairs()) {
        // twirl of P_J / (2J+1) has a single unit alpha coordinate pattern
        for (int s = 0; s < pair.n1(); ++s) {
            const HalfInt j_total = pair.j_at(s);
            const HermitianOperator rho(projector_pj(pair, j_total).mat() /
                                        (j_total.twice() + 1.0));
            const auto [alpha, beta] = twirl(rho, pair);
            CHECK(alpha.is_state());
            CHECK(beta.is_state());
            for (int s2 = 0; s2 < pair.n1(); ++s2) {
                const double expected =
                    s2 == s ? std::sqrt(double(pair.dim()) / (j_total.twice() + 1.0)) : 0.0;
                CHECK(alpha[s2] == doctest::Approx(expected).epsilon(1e-12));
            }
        }

        // reconstruction round trip and idempotence on random invariant states
        const AlphaVector alpha = random_state_alpha(pair, rng);
        const HermitianOperator rho = rho_from_alpha(alpha);
        const auto [alpha2, beta2] = twirl(rho, pair);
        CHECK((alpha2.values() - alpha.values()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((rho_from_alpha(alpha2).mat() - rho.mat()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((rho_from_beta(beta2).mat() - rho.mat()).cwiseAbs().maxCoeff() < 1e-12);

        // beta coordinates follow from alpha through L
        const Eigen::MatrixXd l = l_matrix(pair, LMethod::six_j).values;
        CHECK((l * alpha.values() - beta2.values()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("L matrix: three constructions agree and L is orthogonal") {
    for (const auto& pair : small_pairs()) {
        const LMatrix by_trace = l_matrix(pair, LMethod::trace);
        const LMatrix by_six_j = l_matrix(pair, LMethod::six_j);
        const LMatrix by_rows = l_matrix(pair, LMethod::closed_rows);

        CHECK((by_trace.values - by_six_j.values).cwiseAbs().maxCoeff() < 1e-12);
        for (int k = 0; k < pair.n1(); ++k) {
            CHECK(by_rows.row_valid[k] == (k <= 2));
            if (by_rows.row_valid[k])
                CHECK((by_rows.values.row(k) - by_six_j.values.row(k)).cwiseAbs().maxCoeff() <
                      1e-12);
        }

        const Eigen::MatrixXd gram = by_six_j.values * by_six_j.values.transpose();
        CHECK((gram - Eigen::MatrixXd::Identity(pair.n1(), pair.n1())).cwiseAbs().maxCoeff() <
              1e-12);
    }

    // j1 = j2 = 1/2 in closed form
    const Eigen::MatrixXd l = l_matrix(SpinPair(half, half), LMethod::six_j).values;
    CHECK(l(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(l(0, 1) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(l(1, 0) == doctest::Approx(-std::sqrt(3.0) / 2).epsilon(1e-15));
    CHECK(l(1, 1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("partial transpose") {
    const SpinPair pair(half, 1);
    Rng rng(7);

    // acts as A (x) B -> A (x) B^T on product operators
    Matrix a = Matrix::Random(2, 2), b = Matrix::Random(3, 3);
    a = (a + a.adjoint()).eval();
    b = (b + b.adjoint()).eval();
    const HermitianOperator ab(kron(a, b));
    CHECK((partial_transpose(ab, pair).mat() - kron(a, b.transpose())).cwiseAbs().maxCoeff() <
          1e-14);

    // involution
    const AlphaVector alpha = random_state_alpha(pair, rng);
    const HermitianOperator rho = rho_from_alpha(alpha);
    CHECK((partial_transpose(partial_transpose(rho, pair), pair).mat() - rho.mat())
              .cwiseAbs()
              .maxCoeff() < 1e-15);

    // the singlet projector is the canonical NPT witness case
    const SpinPair qubits(half, half);
    const Vector singlet = coupled_state(qubits, 0, 0);
    const HermitianOperator rho_singlet((singlet * singlet.adjoint()).eval());
    CHECK(partial_transpose(rho_singlet, qubits).min_eigenvalue() ==
          doctest::Approx(-0.5).epsilon(1e-12));

    CHECK_THROWS_AS(partial_transpose(rho_singlet, pair), std::invalid_argument);
}

TEST_CASE("partial time reversal flips odd coordinates") {
    const SpinPair pair(1, HalfInt::from_twice(3));
    Eigen::VectorXd b(3);
    b << 1.0, 0.4, -0.2;
    const BetaVector beta(pair, b);
    const BetaVector flipped = partial_time_reversal(beta);
    CHECK(flipped[0] == 1.0);
    CHECK(flipped[1] == -0.4);
    CHECK(flipped[2] == -0.2);

    // fixed points have vanishing odd coordinates
    Eigen::VectorXd even(3);
    even << 1.0, 0.0, 0.7;
    const BetaVector fixed(pair, even);
    CHECK((partial_time_reversal(fixed).values() - fixed.values()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial transpose and partial time reversal agree on invariant states") {
    Rng rng(99);
    for (const auto& pair : small_pairs()) {
        for (int rep = 0; rep < 3; ++rep) {
            const AlphaVector alpha = random_state_alpha(pair, rng);
            const HermitianOperator rho = rho_from_alpha(alpha);
            const auto [a0, beta] = twirl(rho, pair);

            // coordinates: twirl(T2 rho) = theta2 beta
            const auto [a1, beta_pt] = twirl(partial_transpose(rho, pair), pair);
            CHECK((beta_pt.values() - partial_time_reversal(beta).values())
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);

            // spectra: eig(T2 rho) equals eig(theta2 rho) as multisets
            Eigen::VectorXd spec_t2 = partial_transpose(rho, pair).eigenvalues();
            Eigen::VectorXd spec_theta = rho_from_beta(partial_time_reversal(beta)).eigenvalues();
            CHECK((spec_t2 - spec_theta).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("beta functionals on closed-form product states") {
    for (int n = 3; n <= 9; ++n) {
        const SpinPair pair(1, HalfInt::from_twice(n - 1));
        const SpinBasis b2(pair.j2);
        const double nd = n;
        const BetaEvaluator eval(pair);

        Vector phi1 = Vector::Zero(3);
        phi1[1] = 1.0;  // |1, 0>

        // phi2 = |j2, +j2>: beta = (1, ..., -sqrt(2(N-1)(N-2)/((N+1)(N+2))))
        Vector coherent = Vector::Zero(n);
        coherent[n - 1] = 1.0;
        const BetaVector beta_d = eval(ProductState(phi1, coherent));
        CHECK(beta_d[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(beta_d[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(beta_d[2] ==
              doctest::Approx(-std::sqrt(2.0 * (nd - 1) * (nd - 2) / ((nd + 1) * (nd + 2))))
                  .epsilon(1e-12));

        if (n % 2 == 1) {
            // phi2 = |j2, 0>: beta_2 = sqrt((N+1)(N-1)/(2(N+2)(N-2)))
            Vector axis = Vector::Zero(n);
            axis[b2.index(HalfInt(0))] = 1.0;
            const BetaVector beta_e = eval(ProductState(phi1, axis));
            CHECK(beta_e[1] == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(beta_e[2] ==
                  doctest::Approx(std::sqrt((nd + 1) * (nd - 1) / (2 * (nd + 2) * (nd - 2))))
                      .epsilon(1e-12));
        } else {
            // phi2 = |j2, +1/2>: beta_2 = sqrt((N+2)(N-2)/(2(N+1)(N-1)))
            Vector axis = Vector::Zero(n);
            axis[b2.index(half)] = 1.0;
            const BetaVector beta_f = eval(ProductState(phi1, axis));
            CHECK(beta_f[1] == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(beta_f[2] ==
                  doctest::Approx(std::sqrt((nd + 2) * (nd - 2) / (2 * (nd + 1) * (nd - 1))))
                      .epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(ProductState(Vector::Zero(3), Vector::Zero(4)), std::invalid_argument);
}

TEST_CASE("beta functionals are invariant under simultaneous rotations") {
    Rng rng(4242);
    for (const auto& pair : small_pairs()) {
        const BetaEvaluator eval(pair);
        for (int rep = 0; rep < 3; ++rep) {
            const ProductState state = sample_product_state(pair, rng);
            const Eigen::VectorXd beta = eval.evaluate(state.phi1, state.phi2);

            // pi rotation about y on both factors
            {
                const Vector r1 = pi_rotation_matrix(pair.j1) * state.phi1;
                const Vector r2 = pi_rotation_matrix(pair.j2) * state.phi2;
                CHECK((eval.evaluate(r1, r2) - beta).cwiseAbs().maxCoeff() < 1e-12);
            }
            // generic simultaneous rotation generated by j_y
            for (double angle : {0.3, 1.7}) {
                const Vector r1 = expi(spin_y(pair.j1), angle) * state.phi1;
                const Vector r2 = expi(spin_y(pair.j2), angle) * state.phi2;
                CHECK((eval.evaluate(r1, r2) - beta).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }
}

TEST_CASE("time reversal of the second factor reflects beta constructively") {
    Rng rng(31337);
    for (const auto& pair : small_pairs()) {
        const BetaEvaluator eval(pair);
        const Matrix v2 = pi_rotation_matrix(pair.j2);
        for (int rep = 0; rep < 5; ++rep) {
            const ProductState state = sample_product_state(pair, rng);
            const Eigen::VectorXd beta = eval.evaluate(state.phi1, state.phi2);

            // theta phi = V conj(phi) is again a product-state factor
            const Vector reversed = v2 * state.phi2.conjugate();
            Eigen::VectorXd reflected = eval.evaluate(state.phi1, reversed);
            for (int k = 1; k < reflected.size(); k += 2) reflected[k] = -reflected[k];
            CHECK((reflected - beta).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}
