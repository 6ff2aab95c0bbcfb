#ifndef ROTINV_SEPARABILITY_HPP
#define ROTINV_SEPARABILITY_HPP

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rotinv/geometry.hpp"
#include "rotinv/invariant_states.hpp"

namespace rotinv {

// Geometry and classification of invariant 3 (x) N systems in the
// (beta_1, beta_2) plane. Separability splits on the parity of N: for odd N
// the PPT polygon is exactly the separable set, for even N the separable set
// is strictly smaller with a curved upper boundary tangent to the line
// beta_2 = eps0(1) at the point F.

/// Boundary band counted as inside a region.
inline constexpr double region_tol = 1e-10;
/// Shrink applied to the certified separable hull before a Separable verdict.
inline constexpr double certify_margin = 1e-9;

/// The pair (j1 = 1, j2 = (N-1)/2); throws unless N >= 3.
SpinPair pair_3xn(int n);

enum class RegionKind { polygon, polygon_plus_curve };

struct CurvePoint {
    double mu = 0.0;
    Point2 p;
};

struct Region2 {
    RegionKind kind = RegionKind::polygon;
    std::vector<Point2> vertices;   // counterclockwise
    std::vector<CurvePoint> curve;  // concave upper arc, when present
};

/// Extreme points of the invariant-state simplex in alpha coordinates,
/// ordered as (pure J = j2+1, pure J = j2-1, pure J = j2).
std::array<AlphaVector, 3> simplex_vertices_alpha(int n);

// Closed-form vertices of the state triangle and the PPT polygon.
Point2 vertex_a(int n);
Point2 vertex_b(int n);
Point2 vertex_c(int n);
Point2 vertex_a_prime(int n);
Point2 vertex_d(int n);
Point2 vertex_e(int n);
/// Tangent point of the line h; even N only.
Point2 vertex_f(int n);

/// The state triangle A, B, C.
Region2 state_triangle(int n);
/// The PPT region A, E, A', D (the triangle clipped with its reflection).
Region2 ppt_polygon(int n);
/// For odd N the PPT polygon itself. For even N the certified inner bound:
/// the hull of A, A', D, the sampled ellipse arc, and any extra attainable
/// points supplied by the caller.
Region2 separable_region(int n);
Region2 separable_region(int n, std::span<const Point2> extra_attainable_points,
                         int curve_samples = 101);

/// H(lambda) = sqrt(N/10) T_20 + (lambda/2) sqrt(3N/5) (T_22 + T_22^dag) on
/// the second spin; lambda must lie in [0, 1].
HermitianOperator h_lambda(int n, double lambda);
/// Largest eigenvalue of H(lambda).
double epsilon0(int n, double lambda);

/// The ellipse through A, F, A' traced by the twirled product states of
/// ellipse_state; even N, -1 <= mu <= 1.
Point2 ellipse_curve(int n, double mu);
/// The product state behind ellipse_curve(n, mu): first spin
/// sqrt(r)|1,+1> + sqrt(1-r)|1,-1> with r = (1+mu)/2, second spin the fixed
/// superposition of the j_y = +-1/2 eigenstates that maximizes <H(1)>.
ProductState ellipse_state(int n, double mu);

/// W = -P_{j2-1}/(N-2) + P_{j2} + P_{j2+1}/(N+2); nonnegative in expectation
/// on every separable state and negative on the bound-entangled region.
HermitianOperator witness_operator(int n);

/// Witness expectation from measured total-angular-momentum probabilities
/// p = (p_{j2-1}, p_{j2}, p_{j2+1}).
double witness_value(const std::array<double, 3>& p, int n);

/// Left-hand sides of the two linear inequalities equivalent to PPT.
std::pair<double, double> ppt_inequalities(const std::array<double, 3>& p, int n);

enum class StateClass { NotAState, Separable, PptEntangled, NptEntangled, Unknown };
std::string to_string(StateClass cls);

struct Verdict {
    StateClass cls = StateClass::Unknown;
    std::string certificate;
};

/// Classification of an invariant state given its beta coordinates
/// (beta_0 must equal 1). Unknown can only occur for even N, in the sliver
/// between the certified separable hull and the tangent line h.
Verdict classify(const BetaVector& beta);
Verdict classify(const BetaVector& beta, const Region2& certified_separable);

// Plumbing between measurement probabilities and coordinates.
std::array<double, 3> probabilities_from_beta(const BetaVector& beta);
BetaVector beta_from_probabilities(const std::array<double, 3>& p, int n);
BetaVector beta_vector_3xn(int n, double beta1, double beta2);

}  // namespace rotinv

#endif  // ROTINV_SEPARABILITY_HPP
