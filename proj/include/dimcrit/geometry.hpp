#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "dimcrit/graph.hpp"

namespace dimcrit {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or an integer "p". Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline constexpr double kConstructionTolerance = 1e-9;
inline constexpr double kVerifyTolerance = 1e-7;
inline constexpr double kSeparationTolerance = 1e-6;
inline constexpr double kDiscriminantFloor = 1e-12;

/// Unit-distance drawing: row i holds the coordinates of vertex i.
struct Embedding {
  int dimension = 0;
  Eigen::MatrixXd points;

  int vertex_count() const { return static_cast<int>(points.rows()); }
};

// Angle as an exact multiple of pi, or nullopt when irrational.
struct RationalAngle {
  std::optional<Rational> multiple_of_pi;

  bool is_rational() const { return multiple_of_pi.has_value(); }
};

/// (1/pi) arcsin(sqrt(r)) for exact rational r in [0, 1].
///
/// The value is rational only for r in {0, 1/4, 1/2, 3/4, 1}, giving
/// 0, 1/6, 1/4, 1/3, 1/2; every other rational input is irrational.
RationalAngle rational_arcsin_sqrt(const Rational& r);

enum class CircleObstruction {
  None,
  NoUnitChord,        // radius < 1/2
  IrrationalAngle,    // central angle of a unit chord is irrational in pi
  WindingMismatch,    // m steps never close up
  CoincidentVertices, // closes up, but with fewer than m distinct points
};

std::string to_string(CircleObstruction o);

struct CycleOnCircle {
  bool feasible = false;
  CircleObstruction obstruction = CircleObstruction::None;
  // Central angle of a unit chord as a multiple of 2*pi, when rational.
  std::optional<Rational> turn;
  std::optional<long long> winding;
};

/// Whether C_m has a unit-distance drawing with pairwise distinct vertices
/// on a circle of squared radius r_squared, decided in exact arithmetic.
CycleOnCircle cycle_on_circle_feasible(const Rational& r_squared, long long m);

struct SphereSpec {
  double radius = 1.0;
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
};

enum class ApexSide { Positive, Negative };

// Both points of the sphere at distance 1 from p1 and p2; the first lies on
// the positive side of the plane through the center, p1 and p2.
std::array<Eigen::Vector3d, 2> apex_points(const SphereSpec& sphere,
                                           const Eigen::Vector3d& p1,
                                           const Eigen::Vector3d& p2);

Eigen::Vector3d apex_point(const SphereSpec& sphere, const Eigen::Vector3d& p1,
                           const Eigen::Vector3d& p2, ApexSide side);

/// n unit-spaced points in R^(n-1), centroid at the origin.
Embedding regular_simplex(int n);

// sqrt((n-1)/(2n)): circumradius of the unit regular simplex on n points.
double simplex_circumradius(int n);

/// m-cycle with unit edges on the origin-centred sphere of radius r in R^3.
///
/// Odd m: the odd-indexed vertices are anchors on the equator, the first and
/// last exactly a unit chord apart and the rest evenly spread over the arc
/// between them; each even-indexed vertex is an apex over its two anchors,
/// alternating above and below the equator. Even m: the (m-1)-cycle is built
/// the same way and its closing chord is replaced by one more apex.
Embedding embed_cycle_on_sphere(int m, double r);

/// K_n + C_m in R^(n+2): a unit simplex for the clique, the cycle on a
/// sphere of radius sqrt(1/2 + 1/(2n)) in three extra coordinates.
Embedding embed_join_clique_cycle(const JoinSpec& spec);

// The cycle edge removed by embed_join_minus_edge: first to last cycle vertex.
Edge join_closing_edge(const JoinSpec& spec);

/// (K_n + C_m) minus its closing cycle edge, in R^(n+1): the cycle becomes a
/// path laid around a circle of radius sqrt((n+1)/(2n)).
Embedding embed_join_minus_edge(const JoinSpec& spec);

// Each component path laid along the real line at consecutive integers.
Embedding embed_path_forest(const Graph& g);

struct VerificationReport {
  double max_edge_residual = 0.0;
  double min_separation = 0.0;
  double tolerance = kVerifyTolerance;
  double separation_tolerance = kSeparationTolerance;
  bool passed = false;
};

VerificationReport verify_embedding(const Graph& g, const Embedding& emb,
                                    double tol = kVerifyTolerance,
                                    double separation = kSeparationTolerance);

}  // namespace dimcrit
