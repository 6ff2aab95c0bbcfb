#ifndef ROTINV_ORACLE_HPP
#define ROTINV_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rotinv/geometry.hpp"
#include "rotinv/invariant_states.hpp"

namespace rotinv {

/// Deterministic sampling source: mt19937_64 under an explicit 64-bit seed,
/// uniforms from the top 53 bits of the raw stream, Gaussians by Box-Muller.
/// The byte-identical sequence reproduces on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal.
    double gaussian();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Haar-uniform pure product state: each factor is a normalized vector of
/// i.i.d. standard complex Gaussians.
ProductState sample_product_state(const SpinPair& pair, Rng& rng);

/// Random invariant state, uniform over the probability simplex of the
/// total-angular-momentum weights.
AlphaVector sample_invariant_state(const SpinPair& pair, Rng& rng);

/// Cloud of invariant coordinates of twirled product states.
struct SampleCloud {
    SpinPair pair;
    std::uint64_t seed = 0;
    std::vector<Eigen::VectorXd> betas;

    /// (beta_1, beta_2) projection; requires N1 >= 3.
    std::vector<Point2> points2() const;
};

/// count twirled product-state coordinate vectors. Work is split into fixed
/// chunks with chunk c reseeded at seed + c, so the output is bit-identical
/// for every parallelism width.
SampleCloud wbeta_cloud(const SpinPair& pair, std::size_t count, std::uint64_t seed,
                        int parallelism = 1);

/// Every |j1,m1> (x) |j2,m2> basis product. Their twirls sit at the extreme
/// points of the attainable coordinate set (coherent corners and the axis
/// states), which Haar samples only approach; appending them lets hulls and
/// attainment checks reach the analytic vertices exactly.
std::vector<ProductState> basis_product_states(const SpinPair& pair);

/// Peres-Horodecki check by dense eigensolve: true iff the minimum eigenvalue
/// of the partial transpose is >= -tol.
bool ppt_bruteforce(const HermitianOperator& rho, const SpinPair& pair, double tol);

}  // namespace rotinv

#endif  // ROTINV_ORACLE_HPP
