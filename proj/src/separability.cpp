#include "rotinv/separability.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rotinv/wigner.hpp"

namespace rotinv {

namespace {

void require_n(int n) {
    if (n < 3) throw std::invalid_argument("3xN analysis requires N >= 3, got N = " + std::to_string(n));
}

void require_even(int n, const char* who) {
    if (n % 2 != 0)
        throw std::domain_error(std::string(who) + ": defined for even N only, got N = " +
                                std::to_string(n));
}

HalfInt second_spin(int n) { return HalfInt::from_twice(n - 1); }

double validated_probability_sum(const std::array<double, 3>& p, const char* who) {
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= -1e-12))
            throw std::invalid_argument(std::string(who) + ": negative probability");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(who) + ": probabilities sum to " +
                                    std::to_string(sum) + ", not 1");
    return sum;
}

}  // namespace

SpinPair pair_3xn(int n) {
    require_n(n);
    return SpinPair(HalfInt(1), second_spin(n));
}

std::array<AlphaVector, 3> simplex_vertices_alpha(int n) {
    const SpinPair pair = pair_3xn(n);
    const double nd = n;
    Eigen::VectorXd top = Eigen::VectorXd::Zero(3);      // pure J = j2 + 1
    Eigen::VectorXd bottom = Eigen::VectorXd::Zero(3);   // pure J = j2 - 1
    Eigen::VectorXd middle = Eigen::VectorXd::Zero(3);   // pure J = j2
    top[2] = std::sqrt(3.0 * nd / (nd + 2.0));
    bottom[0] = std::sqrt(3.0 * nd / (nd - 2.0));
    middle[1] = std::sqrt(3.0);
    return {AlphaVector(pair, top), AlphaVector(pair, bottom), AlphaVector(pair, middle)};
}

Point2 vertex_a(int n) {
    require_n(n);
    const double nd = n;
    return {std::sqrt(3.0 * (nd - 1.0) / (2.0 * (nd + 1.0))),
            std::sqrt((nd - 1.0) * (nd - 2.0) / (2.0 * (nd + 1.0) * (nd + 2.0)))};
}

Point2 vertex_b(int n) {
    require_n(n);
    const double nd = n;
    return {-std::sqrt(3.0 * (nd + 1.0) / (2.0 * (nd - 1.0))),
            std::sqrt((nd + 1.0) * (nd + 2.0) / (2.0 * (nd - 1.0) * (nd - 2.0)))};
}

Point2 vertex_c(int n) {
    require_n(n);
    const double nd = n;
    return {-std::sqrt(6.0 / ((nd - 1.0) * (nd + 1.0))),
            -std::sqrt(2.0 * (nd - 2.0) * (nd + 2.0) / ((nd - 1.0) * (nd + 1.0)))};
}

Point2 vertex_a_prime(int n) {
    Point2 a = vertex_a(n);
    return {-a.beta1, a.beta2};
}

Point2 vertex_d(int n) {
    require_n(n);
    const double nd = n;
    return {0.0, -std::sqrt(2.0 * (nd - 1.0) * (nd - 2.0) / ((nd + 1.0) * (nd + 2.0)))};
}

Point2 vertex_e(int n) {
    require_n(n);
    const double nd = n;
    return {0.0, std::sqrt((nd + 1.0) * (nd - 1.0) / (2.0 * (nd + 2.0) * (nd - 2.0)))};
}

Point2 vertex_f(int n) {
    require_n(n);
    require_even(n, "vertex_f");
    const double nd = n;
    return {0.0, std::sqrt((nd + 2.0) * (nd - 2.0) / (2.0 * (nd + 1.0) * (nd - 1.0)))};
}

Region2 state_triangle(int n) {
    Region2 region;
    region.kind = RegionKind::polygon;
    region.vertices = {vertex_a(n), vertex_b(n), vertex_c(n)};
    return region;
}

Region2 ppt_polygon(int n) {
    Region2 region;
    region.kind = RegionKind::polygon;
    region.vertices = {vertex_a(n), vertex_e(n), vertex_a_prime(n), vertex_d(n)};
    return region;
}

Region2 separable_region(int n) { return separable_region(n, {}, 101); }

Region2 separable_region(int n, std::span<const Point2> extra_attainable_points,
                         int curve_samples) {
    require_n(n);
    if (n % 2 == 1) return ppt_polygon(n);

    if (curve_samples < 2)
        throw std::invalid_argument("separable_region: need at least 2 curve samples");
    Region2 region;
    region.kind = RegionKind::polygon_plus_curve;
    std::vector<Point2> points = {vertex_a(n), vertex_a_prime(n), vertex_d(n)};
    for (int i = 0; i < curve_samples; ++i) {
        const double mu = -1.0 + 2.0 * i / (curve_samples - 1);
        const CurvePoint cp{mu, ellipse_curve(n, mu)};
        region.curve.push_back(cp);
        points.push_back(cp.p);
    }
    points.insert(points.end(), extra_attainable_points.begin(), extra_attainable_points.end());
    Hull2D hull = convex_hull_2d(points);
    if (hull.degenerate)
        throw std::logic_error("separable_region: degenerate hull");
    region.vertices = std::move(hull.vertices);
    return region;
}

HermitianOperator h_lambda(int n, double lambda) {
    require_n(n);
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::domain_error("h_lambda: lambda must lie in [0, 1]");
    const HalfInt j2 = second_spin(n);
    const Matrix t20 = tensor_matrix(j2, 2, 0);
    const Matrix t22 = tensor_matrix(j2, 2, 2);
    Matrix h = std::sqrt(n / 10.0) * t20 +
               lambda * 0.5 * std::sqrt(3.0 * n / 5.0) * (t22 + t22.adjoint());
    return HermitianOperator(std::move(h));
}

double epsilon0(int n, double lambda) { return h_lambda(n, lambda).max_eigenvalue(); }

Point2 ellipse_curve(int n, double mu) {
    require_n(n);
    require_even(n, "ellipse_curve");
    if (!(mu >= -1.0 && mu <= 1.0))
        throw std::domain_error("ellipse_curve: mu must lie in [-1, 1]");
    const double nd = n;
    const double b1 = std::sqrt(3.0 * nd * nd / (8.0 * (nd + 1.0) * (nd - 1.0))) * mu;
    const double b2 = 0.25 * epsilon0(n, 1.0) * (1.0 + 3.0 * std::sqrt(1.0 - mu * mu));
    return {b1, b2};
}

ProductState ellipse_state(int n, double mu) {
    require_n(n);
    require_even(n, "ellipse_state");
    if (!(mu >= -1.0 && mu <= 1.0))
        throw std::domain_error("ellipse_state: mu must lie in [-1, 1]");
    const double r = 0.5 * (1.0 + mu);

    Vector phi1 = Vector::Zero(3);
    phi1[2] = std::sqrt(r);        // m = +1
    phi1[0] = std::sqrt(1.0 - r);  // m = -1

    // second factor: (|j_y = +1/2> - i |j_y = -1/2>) / sqrt(2) with the
    // j_y eigenstates built as exp(i pi/2 j_x) |j, m = +-1/2>
    const HalfInt j2 = second_spin(n);
    const SpinBasis basis(j2);
    const Matrix u = expi(spin_x(j2), 0.5 * std::numbers::pi);
    const Vector plus = u.col(basis.index(HalfInt::from_twice(1)));
    const Vector minus = u.col(basis.index(HalfInt::from_twice(-1)));
    Vector phi2 = (plus - Complex(0.0, 1.0) * minus) / std::sqrt(2.0);
    phi2 /= phi2.norm();
    return ProductState(std::move(phi1), std::move(phi2));
}

HermitianOperator witness_operator(int n) {
    const SpinPair pair = pair_3xn(n);
    const HalfInt j2 = pair.j2;
    Matrix w = -projector_pj(pair, j2 - 1).mat() / (n - 2.0) + projector_pj(pair, j2).mat() +
               projector_pj(pair, j2 + 1).mat() / (n + 2.0);
    return HermitianOperator(std::move(w));
}

double witness_value(const std::array<double, 3>& p, int n) {
    require_n(n);
    validated_probability_sum(p, "witness_value");
    return -p[0] / (n - 2.0) + p[1] + p[2] / (n + 2.0);
}

std::pair<double, double> ppt_inequalities(const std::array<double, 3>& p, int n) {
    require_n(n);
    validated_probability_sum(p, "ppt_inequalities");
    const double nd = n;
    const double first = -2.0 * p[0] / (nd - 1.0) +
                         (nd * nd - 5.0) * p[1] / ((nd + 1.0) * (nd - 1.0)) +
                         2.0 * p[2] / (nd + 1.0);
    const double second = 2.0 * p[0] / ((nd - 1.0) * (nd - 2.0)) - 2.0 * p[1] / (nd - 1.0) + p[2];
    return {first, second};
}

std::string to_string(StateClass cls) {
    switch (cls) {
        case StateClass::NotAState: return "NotAState";
        case StateClass::Separable: return "Separable";
        case StateClass::PptEntangled: return "PptEntangled";
        case StateClass::NptEntangled: return "NptEntangled";
        case StateClass::Unknown: return "Unknown";
    }
    return "Unknown";
}

Verdict classify(const BetaVector& beta) {
    const int n = beta.pair().n2();
    return classify(beta, separable_region(n));
}

Verdict classify(const BetaVector& beta, const Region2& certified_separable) {
    const SpinPair& pair = beta.pair();
    if (pair.n1() != 3)
        throw std::invalid_argument("classify: only 3xN systems are classified");
    if (!beta.is_state())
        throw std::invalid_argument("classify: beta_0 must equal 1");
    const int n = pair.n2();
    const Point2 pt{beta[1], beta[2]};

    if (!point_in_convex_polygon(pt, state_triangle(n).vertices, region_tol))
        return {StateClass::NotAState, "outside the state triangle ABC"};

    if (!point_in_convex_polygon(pt, ppt_polygon(n).vertices, region_tol))
        return {StateClass::NptEntangled,
                "inside ABC but outside the PPT polygon AEA'D: partial transpose has a "
                "negative eigenvalue"};

    if (n % 2 == 1)
        return {StateClass::Separable,
                "PPT region equals the separable region for odd N"};

    if (point_in_convex_polygon(pt, certified_separable.vertices, -certify_margin))
        return {StateClass::Separable,
                "inside the certified hull of twirled product states"};

    const double line_h = epsilon0(n, 1.0);
    if (pt.beta2 > line_h + region_tol)
        return {StateClass::PptEntangled,
                "PPT but above the tangent line h (beta_2 > eps0(1)): witness expectation "
                "is negative"};

    return {StateClass::Unknown,
            "PPT, between the certified separable hull and the tangent line h"};
}

std::array<double, 3> probabilities_from_beta(const BetaVector& beta) {
    const SpinPair& pair = beta.pair();
    if (pair.n1() != 3)
        throw std::invalid_argument("probabilities_from_beta: only 3xN systems");
    const int n = pair.n2();
    const Eigen::MatrixXd l = l_matrix(pair, LMethod::six_j).values;
    const Eigen::VectorXd alpha = l.transpose() * beta.values();
    std::array<double, 3> p{};
    for (int s = 0; s < 3; ++s)
        p[s] = std::sqrt((pair.j_at(s).twice() + 1.0) / (3.0 * n)) * alpha[s];
    return p;
}

BetaVector beta_from_probabilities(const std::array<double, 3>& p, int n) {
    validated_probability_sum(p, "beta_from_probabilities");
    const SpinPair pair = pair_3xn(n);
    Eigen::VectorXd alpha(3);
    for (int s = 0; s < 3; ++s)
        alpha[s] = p[s] * std::sqrt(3.0 * n / (pair.j_at(s).twice() + 1.0));
    const Eigen::MatrixXd l = l_matrix(pair, LMethod::six_j).values;
    return BetaVector(pair, l * alpha);
}

BetaVector beta_vector_3xn(int n, double beta1, double beta2) {
    const SpinPair pair = pair_3xn(n);
    Eigen::VectorXd b(3);
    b << 1.0, beta1, beta2;
    return BetaVector(pair, std::move(b));
}

}  // namespace rotinv
