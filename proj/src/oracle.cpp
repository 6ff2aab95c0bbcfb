#include "rotinv/oracle.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace rotinv {

namespace {

constexpr std::size_t chunk_size = 1024;

Vector sample_factor(int dim, Rng& rng) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        v[i] = Complex(re, im);
    }
    return v / v.norm();
}

}  // namespace

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]: keeps the log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

ProductState sample_product_state(const SpinPair& pair, Rng& rng) {
    Vector phi1 = sample_factor(pair.n1(), rng);
    Vector phi2 = sample_factor(pair.n2(), rng);
    return ProductState(std::move(phi1), std::move(phi2));
}

AlphaVector sample_invariant_state(const SpinPair& pair, Rng& rng) {
    // exponential weights normalized on the p-simplex, mapped to alpha
    Eigen::VectorXd alpha(pair.n1());
    double total = 0.0;
    for (int s = 0; s < pair.n1(); ++s) {
        alpha[s] = -std::log(1.0 - rng.uniform());
        total += alpha[s];
    }
    const double nn = static_cast<double>(pair.n1()) * pair.n2();
    for (int s = 0; s < pair.n1(); ++s)
        alpha[s] = alpha[s] / total * std::sqrt(nn / (pair.j_at(s).twice() + 1.0));
    return AlphaVector(pair, std::move(alpha));
}

std::vector<Point2> SampleCloud::points2() const {
    if (pair.n1() < 3)
        throw std::logic_error("SampleCloud::points2: needs at least three coordinates");
    std::vector<Point2> pts;
    pts.reserve(betas.size());
    for (const auto& b : betas) pts.push_back({b[1], b[2]});
    return pts;
}

SampleCloud wbeta_cloud(const SpinPair& pair, std::size_t count, std::uint64_t seed,
                        int parallelism) {
    if (count == 0) throw std::invalid_argument("wbeta_cloud: count must be positive");
    if (parallelism < 1) throw std::invalid_argument("wbeta_cloud: parallelism must be >= 1");

    const BetaEvaluator eval(pair);
    const std::size_t n_chunks = (count + chunk_size - 1) / chunk_size;
    std::vector<std::vector<Eigen::VectorXd>> per_chunk(n_chunks);

    const auto run_chunk = [&](std::size_t c) {
        Rng rng(seed + c);
        const std::size_t n = std::min(chunk_size, count - c * chunk_size);
        auto& out = per_chunk[c];
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const ProductState state = sample_product_state(pair, rng);
            out.push_back(eval.evaluate(state.phi1, state.phi2));
        }
    };

    if (parallelism == 1 || n_chunks == 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const int width = std::min<std::size_t>(parallelism, n_chunks);
        workers.reserve(width);
        for (int w = 0; w < width; ++w)
            workers.emplace_back([&] {
                for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& t : workers) t.join();
    }

    SampleCloud cloud{pair, seed, {}};
    cloud.betas.reserve(count);
    for (auto& chunk : per_chunk)
        for (auto& b : chunk) cloud.betas.push_back(std::move(b));
    return cloud;
}

std::vector<ProductState> basis_product_states(const SpinPair& pair) {
    std::vector<ProductState> states;
    states.reserve(pair.dim());
    for (int i1 = 0; i1 < pair.n1(); ++i1)
        for (int i2 = 0; i2 < pair.n2(); ++i2) {
            Vector phi1 = Vector::Zero(pair.n1());
            Vector phi2 = Vector::Zero(pair.n2());
            phi1[i1] = 1.0;
            phi2[i2] = 1.0;
            states.emplace_back(std::move(phi1), std::move(phi2));
        }
    return states;
}

bool ppt_bruteforce(const HermitianOperator& rho, const SpinPair& pair, double tol) {
    return partial_transpose(rho, pair).min_eigenvalue() >= -tol;
}

}  // namespace rotinv
