// Computable points of the Berkovich projective line: classical rational
// points (type I, including infinity) and closed disks with rational center
// and rational height (type II). Height s means radius p^{-s}.
#pragma once

#include "berkdyn/padic.hpp"
#include "berkdyn/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace berkdyn {

class BerkPoint {
 public:
  enum class Kind { TypeI, TypeII };

  static BerkPoint type_one(const Rational& value);
  static BerkPoint infinity();
  static BerkPoint type_two(const Rational& center, const Rational& height);
  /// The Gauss point: the closed unit disk around 0.
  static BerkPoint gauss() { return type_two(Rational(0), Rational(0)); }

  Kind kind() const { return kind_; }
  bool is_type_one() const { return kind_ == Kind::TypeI; }
  bool is_type_two() const { return kind_ == Kind::TypeII; }
  bool is_infinity() const { return kind_ == Kind::TypeI && at_infinity_; }

  /// Type I finite value, or type II center.
  const Rational& center() const;
  /// Type II only.
  const Rational& height() const;

  /// Structural comparison of the stored fields; use equal() for point equality.
  friend bool operator==(const BerkPoint&, const BerkPoint&) = default;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::TypeII;
  bool at_infinity_ = false;
  Rational center_;
  Rational height_;
};

/// Point equality: type II points (a, s), (b, t) coincide iff s = t and
/// val_p(a - b) >= s.
bool equal(const BerkPoint& x, const BerkPoint& y, const Prime& p);

/// Representative with a canonical center (p-adic digits of the center below
/// the height). Equal points have identical canonical forms.
BerkPoint canonical(const BerkPoint& x, const Prime& p);

/// True when the disk of x contains the disk (or type I point) of y.
bool contains(const BerkPoint& x, const BerkPoint& y, const Prime& p);

/// min_k val_p(c_k) + k s, with c_k the coefficients of f(t + a).
ExtRat seminorm_eval(const BerkPoint& nu, const RatPoly& f, const Prime& p);

/// Hyperbolic distance between type II points.
Rational dist_H(const BerkPoint& x, const BerkPoint& y, const Prime& p);

/// Smallest closed disk containing both points. Throws std::invalid_argument
/// when either argument is infinity or both are the same type I point.
BerkPoint join(const BerkPoint& x, const BerkPoint& y, const Prime& p);

/// Median of three type II points (the branch point of their hull).
BerkPoint median(const BerkPoint& x, const BerkPoint& y, const BerkPoint& z, const Prime& p);

/// The point at hyperbolic distance `distance` from type II `from` along the
/// path toward `toward` (clamped at `toward` when it is type II).
BerkPoint walk_toward(const BerkPoint& from, const BerkPoint& toward, const Rational& distance,
                      const Prime& p);

struct TreeVertex {
  /// Always type II.
  BerkPoint point;
  /// Set when this vertex is the truncation of a type I end.
  std::optional<BerkPoint> end;
};

/// Edges point from the larger disk (parent) to the smaller one when built by
/// hull(); `length` is the hyperbolic distance of the endpoints.
struct TreeEdge {
  int from;
  int to;
  Rational length;
};

/// A point of a finite tree: either a vertex, or an interior point of an edge
/// at `offset` from edge.from (0 < offset < length).
struct TreePosition {
  int vertex = -1;
  int edge = -1;
  Rational offset;

  static TreePosition at_vertex(int v) { return {v, -1, Rational(0)}; }
  bool is_vertex() const { return vertex >= 0; }
  friend bool operator==(const TreePosition&, const TreePosition&) = default;
  friend bool operator<(const TreePosition& a, const TreePosition& b);
};

class FiniteTree {
 public:
  /// Validates connectivity, acyclicity, type II vertices and edge lengths.
  FiniteTree(Prime p, std::vector<TreeVertex> vertices, std::vector<TreeEdge> edges, int root);

  const Prime& prime() const { return p_; }
  const std::vector<TreeVertex>& vertices() const { return vertices_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  int root() const { return root_; }
  /// Incident edge ids of a vertex.
  const std::vector<int>& incident(int v) const { return adjacency_[static_cast<size_t>(v)]; }
  int other_end(int edge, int v) const;

  /// True if every edge goes from a disk to a strictly smaller disk inside it.
  bool is_monotone() const;

  /// Canonical form: offsets 0/length become vertices.
  TreePosition normalize(TreePosition pos) const;
  BerkPoint point_at(const TreePosition& pos) const;
  /// Tree distance between positions.
  Rational distance(const TreePosition& a, const TreePosition& b) const;
  std::optional<int> find_vertex(const BerkPoint& x) const;

  /// New tree in which the given positions are vertices; `index` receives the
  /// vertex id of each input position.
  FiniteTree subdivide(const std::vector<TreePosition>& positions, std::vector<int>* index) const;

 private:
  Prime p_;
  std::vector<TreeVertex> vertices_;
  std::vector<TreeEdge> edges_;
  int root_;
  std::vector<std::vector<int>> adjacency_;
};

/// Convex hull of {root} and the points; type I points are truncated at
/// hyperbolic distance depth_cap from the root (infinity via center of root,
/// decreasing heights). The root is vertex 0.
FiniteTree hull(const std::vector<BerkPoint>& points, const BerkPoint& root, const Rational& depth_cap,
                const Prime& p);

/// Nearest point of the tree to x (entry point of the path from x into T).
TreePosition retract(const BerkPoint& x, const FiniteTree& tree);

}  // namespace berkdyn
