#include "dimcrit/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

namespace dimcrit {

namespace mp = boost::multiprecision;

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

mp::cpp_int parse_integer(std::string_view s) {
  if (!is_integer_literal(s))
    throw DomainError("malformed rational component '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mp::cpp_int(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const mp::cpp_int num = parse_integer(text.substr(0, slash));
  const mp::cpp_int den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

RationalAngle rational_arcsin_sqrt(const Rational& r) {
  if (r < 0 || r > 1)
    throw DomainError("arcsin(sqrt(r)) needs 0 <= r <= 1, got " + to_string(r));
  static const std::array<std::pair<Rational, Rational>, 5> table = {{
      {Rational(0), Rational(0)},
      {Rational(1, 4), Rational(1, 6)},
      {Rational(1, 2), Rational(1, 4)},
      {Rational(3, 4), Rational(1, 3)},
      {Rational(1), Rational(1, 2)},
  }};
  const auto& den = mp::denominator(r);
  if (den != 1 && den != 2 && den != 4) return {std::nullopt};
  for (const auto& [value, angle] : table)
    if (r == value) return {angle};
  return {std::nullopt};
}

std::string to_string(CircleObstruction o) {
  switch (o) {
    case CircleObstruction::None: return "none";
    case CircleObstruction::NoUnitChord: return "no-unit-chord";
    case CircleObstruction::IrrationalAngle: return "irrational-angle";
    case CircleObstruction::WindingMismatch: return "winding-mismatch";
    case CircleObstruction::CoincidentVertices: return "coincident-vertices";
  }
  return "unknown";
}

CycleOnCircle cycle_on_circle_feasible(const Rational& r_squared, long long m) {
  if (r_squared <= 0) throw DomainError("squared radius must be positive");
  if (m < 3) throw DomainError("cycle length must be >= 3");
  CycleOnCircle out;
  // A unit chord subtends theta with sin(theta/2) = 1/(2r).
  const Rational half_sine_sq = 1 / (4 * r_squared);
  if (half_sine_sq > 1) {
    out.obstruction = CircleObstruction::NoUnitChord;
    return out;
  }
  const auto half = rational_arcsin_sqrt(half_sine_sq);
  if (!half.is_rational()) {
    out.obstruction = CircleObstruction::IrrationalAngle;
    return out;
  }
  // theta / (2 pi) equals arcsin(1/(2r)) / pi.
  const Rational turn = *half.multiple_of_pi;
  out.turn = turn;
  const Rational total = turn * m;
  if (mp::denominator(total) != 1) {
    out.obstruction = CircleObstruction::WindingMismatch;
    return out;
  }
  // The m partial rotations are distinct exactly when the reduced
  // denominator of the turn is m itself.
  if (mp::denominator(turn) != m) {
    out.obstruction = CircleObstruction::CoincidentVertices;
    return out;
  }
  out.feasible = true;
  out.winding = static_cast<long long>(mp::numerator(total));
  return out;
}

std::array<Eigen::Vector3d, 2> apex_points(const SphereSpec& sphere,
                                           const Eigen::Vector3d& p1,
                                           const Eigen::Vector3d& p2) {
  const double radius = sphere.radius;
  if (!(radius > std::numbers::sqrt2 / 2))
    throw DomainError("apex construction needs sphere radius > sqrt(2)/2");
  const Eigen::Vector3d a = p1 - sphere.center;
  const Eigen::Vector3d b = p2 - sphere.center;
  const double on_sphere_tol = 1e-9 * std::max(1.0, radius);
  if (std::abs(a.norm() - radius) > on_sphere_tol ||
      std::abs(b.norm() - radius) > on_sphere_tol)
    throw DomainError("apex anchors must lie on the sphere");
  const double chord = (p1 - p2).norm();
  if (chord <= 0.0) throw DomainError("apex anchors coincide");
  if (chord > 1.0 + 1e-12) throw DomainError("apex anchors farther apart than 1");

  // p on the sphere with |p - p_i| = 1  <=>  p . p_i = R^2 - 1/2.
  const double k = radius * radius - 0.5;
  const double aa = a.dot(a);
  const double ab = a.dot(b);
  const double bb = b.dot(b);
  const double det = aa * bb - ab * ab;
  const double ca = k * (bb - ab) / det;
  const double cb = k * (aa - ab) / det;
  const Eigen::Vector3d base = ca * a + cb * b;
  const double disc = radius * radius - base.squaredNorm();
  if (disc < 0.0) {
    std::ostringstream os;
    os << "no apex point: discriminant " << disc;
    throw DomainError(os.str());
  }
  const Eigen::Vector3d normal = a.cross(b).normalized();
  const double t = disc <= kDiscriminantFloor ? 0.0 : std::sqrt(disc);
  return {sphere.center + base + t * normal, sphere.center + base - t * normal};
}

Eigen::Vector3d apex_point(const SphereSpec& sphere, const Eigen::Vector3d& p1,
                           const Eigen::Vector3d& p2, ApexSide side) {
  auto both = apex_points(sphere, p1, p2);
  return side == ApexSide::Positive ? both[0] : both[1];
}

double simplex_circumradius(int n) {
  return std::sqrt(static_cast<double>(n - 1) / (2.0 * n));
}

Embedding regular_simplex(int n) {
  if (n < 1) throw DomainError("simplex needs at least one vertex");
  // Scaled standard basis e_i / sqrt(2), written in the Helmert basis of the
  // hyperplane sum(x) = 0.
  Embedding emb{n - 1, Eigen::MatrixXd::Zero(n, n - 1)};
  for (int k = 1; k < n; ++k) {
    const double norm = std::sqrt(2.0 * k * (k + 1));
    for (int i = 0; i < k; ++i) emb.points(i, k - 1) = 1.0 / norm;
    emb.points(k, k - 1) = -k / norm;
  }
  return emb;
}

namespace {

Eigen::Vector3d on_equator(double r, double angle) {
  return {r * std::cos(angle), r * std::sin(angle), 0.0};
}

bool near_any(const std::vector<Eigen::Vector3d>& placed, const Eigen::Vector3d& p) {
  return std::any_of(placed.begin(), placed.end(), [&](const Eigen::Vector3d& q) {
    return (p - q).norm() < kSeparationTolerance;
  });
}

// Apex whose z-coordinate has the requested sign, unless that point would
// coincide with something already placed.
Eigen::Vector3d pick_apex(const SphereSpec& sphere, const Eigen::Vector3d& p1,
                          const Eigen::Vector3d& p2, bool want_up,
                          const std::vector<Eigen::Vector3d>& placed) {
  auto both = apex_points(sphere, p1, p2);
  if (both[0].z() < both[1].z()) std::swap(both[0], both[1]);
  const Eigen::Vector3d& first = want_up ? both[0] : both[1];
  const Eigen::Vector3d& second = want_up ? both[1] : both[0];
  if (near_any(placed, first) && !near_any(placed, second)) return second;
  return first;
}

std::vector<Eigen::Vector3d> odd_cycle_on_sphere(int m, double r,
                                                 int& gap_count) {
  const SphereSpec sphere{r, Eigen::Vector3d::Zero()};
  const int anchors = (m + 1) / 2;
  const double unit_angle = 2.0 * std::asin(1.0 / (2.0 * r));
  std::vector<Eigen::Vector3d> pts(m);
  for (int j = 0; j < anchors; ++j)
    pts[2 * j] = on_equator(r, unit_angle * j / (anchors - 1));
  std::vector<Eigen::Vector3d> placed;
  for (int j = 0; j < anchors; ++j) placed.push_back(pts[2 * j]);
  gap_count = anchors - 1;
  for (int j = 0; j < gap_count; ++j) {
    pts[2 * j + 1] = pick_apex(sphere, pts[2 * j], pts[2 * j + 2], j % 2 == 0, placed);
    placed.push_back(pts[2 * j + 1]);
  }
  return pts;
}

}  // namespace

Embedding embed_cycle_on_sphere(int m, double r) {
  if (m < 3) throw DomainError("cycle length must be >= 3");
  if (!(r > std::numbers::sqrt2 / 2) || r > 1.0)
    throw DomainError("cycle-on-sphere radius must lie in (sqrt(2)/2, 1]");
  int gaps = 0;
  std::vector<Eigen::Vector3d> pts;
  if (m % 2 == 1) {
    pts = odd_cycle_on_sphere(m, r, gaps);
  } else {
    pts = odd_cycle_on_sphere(m - 1, r, gaps);
    // Replace the closing unit chord (last anchor, first anchor) by an apex.
    const SphereSpec sphere{r, Eigen::Vector3d::Zero()};
    pts.push_back(pick_apex(sphere, pts.back(), pts.front(), gaps % 2 == 0, pts));
  }
  Embedding emb{3, Eigen::MatrixXd(m, 3)};
  for (int i = 0; i < m; ++i) emb.points.row(i) = pts[i].transpose();
  return emb;
}

Embedding embed_join_clique_cycle(const JoinSpec& spec) {
  spec.validate();
  const int n = spec.clique_size;
  const int m = spec.cycle_length;
  if (n < 2) throw DomainError("join construction needs clique size >= 2");
  const double r2 = std::sqrt(0.5 + 0.5 / n);
  const Embedding simplex = regular_simplex(n);
  const Embedding cycle = embed_cycle_on_sphere(m, r2);
  Embedding emb{n + 2, Eigen::MatrixXd::Zero(n + m, n + 2)};
  emb.points.block(0, 0, n, n - 1) = simplex.points;
  emb.points.block(n, n - 1, m, 3) = cycle.points;
  return emb;
}

Edge join_closing_edge(const JoinSpec& spec) {
  return make_edge(spec.clique_size, spec.clique_size + spec.cycle_length - 1);
}

Embedding embed_join_minus_edge(const JoinSpec& spec) {
  spec.validate();
  const int n = spec.clique_size;
  const int m = spec.cycle_length;
  if (n < 2) throw DomainError("join construction needs clique size >= 2");
  const double r2 = std::sqrt((n + 1.0) / (2.0 * n));
  const double theta = 2.0 * std::asin(1.0 / (2.0 * r2));
  Embedding emb{n + 1, Eigen::MatrixXd::Zero(n + m, n + 1)};
  emb.points.block(0, 0, n, n - 1) = regular_simplex(n).points;
  for (int k = 0; k < m; ++k) {
    emb.points(n + k, n - 1) = r2 * std::cos(k * theta);
    emb.points(n + k, n) = r2 * std::sin(k * theta);
  }
  return emb;
}

Embedding embed_path_forest(const Graph& g) {
  if (!is_path_forest(g)) throw DomainError("graph is not a path forest");
  const int n = g.vertex_count();
  Embedding emb{n >= 2 ? 1 : 0, Eigen::MatrixXd::Zero(n, n >= 2 ? 1 : 0)};
  if (n < 2) return emb;
  std::vector<bool> seen(n, false);
  double position = 0.0;
  auto walk = [&](Vertex start) {
    Vertex prev = -1;
    Vertex cur = start;
    while (cur >= 0) {
      seen[cur] = true;
      emb.points(cur, 0) = position;
      position += 1.0;
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur))
        if (w != prev && !seen[w]) next = w;
      prev = cur;
      cur = next;
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v] && g.degree(v) <= 1) walk(v);
  return emb;
}

VerificationReport verify_embedding(const Graph& g, const Embedding& emb,
                                    double tol, double separation) {
  if (emb.vertex_count() != g.vertex_count())
    throw DomainError("embedding has " + std::to_string(emb.vertex_count()) +
                      " points for " + std::to_string(g.vertex_count()) + " vertices");
  if (emb.points.cols() != emb.dimension)
    throw DomainError("coordinate vectors do not match the embedding dimension");
  VerificationReport rep;
  rep.tolerance = tol;
  rep.separation_tolerance = separation;
  for (const auto& e : g.edges()) {
    const double len = (emb.points.row(e.u) - emb.points.row(e.v)).norm();
    rep.max_edge_residual = std::max(rep.max_edge_residual, std::abs(len - 1.0));
  }
  rep.min_separation = std::numeric_limits<double>::infinity();
  for (int a = 0; a < emb.vertex_count(); ++a)
    for (int b = a + 1; b < emb.vertex_count(); ++b)
      rep.min_separation = std::min(
          rep.min_separation, (emb.points.row(a) - emb.points.row(b)).norm());
  rep.passed = rep.max_edge_residual <= tol && rep.min_separation > separation;
  return rep;
}

}  // namespace dimcrit
