// Laplacians and Poisson problems on finite metric trees.
//
// Sign convention: the Laplacian mass at a vertex is the sum of the outgoing
// slopes of g along its incident edges, so for g = dist(., a) on a segment
// [a, b] (constant beyond) one gets delta_a - delta_b.
#pragma once

#include "berkdyn/measures.hpp"

#include <vector>

namespace berkdyn {

/// Values at the tree's vertices, affine along edges.
struct PiecewiseAffinePotential {
  TreeRef tree;
  std::vector<Rational> values;

  /// Slope along the edge, oriented from edge.from to edge.to.
  Rational slope(int edge) const;
  Rational at(const TreePosition& pos) const;
  Rational sup_norm() const;
};

/// Signed vertex masses, indexed like tree().vertices().
using VertexMeasure = std::vector<Rational>;

VertexMeasure laplacian(const PiecewiseAffinePotential& g);

/// The unique g with laplacian(g) = rho - M delta_base and g(base) = 0.
/// Throws std::invalid_argument if rho has atoms inside edges.
PiecewiseAffinePotential solve_poisson(const ProjectedMeasure& rho, int base_vertex);

/// Vertex masses of a measure whose atoms all sit on vertices.
VertexMeasure vertex_masses(const ProjectedMeasure& rho);

/// x -> g(retract(R_* x)) sampled at the vertices of g's tree.
PiecewiseAffinePotential compose_with_pushforward(const PiecewiseAffinePotential& g, const RationalMap& r);

struct PotentialIteration {
  /// The input tree subdivided so that the one-step pullback sits on vertices.
  TreeRef tree;
  int base_vertex;
  /// g with D^{-1} R^* delta_nu = delta_nu + laplacian(g) on the window.
  PiecewiseAffinePotential one_step;
  /// g_1, ..., g_{n_max}; g_n = sum_{k<n} D^{-k} g o R^k_*.
  std::vector<PiecewiseAffinePotential> potentials;
  /// sup |g_{n+1} - g_n| for n = 1 .. n_max - 1.
  std::vector<Rational> increments;
};

/// nu must be a vertex of the tree.
PotentialIteration potential_iteration(const RationalMap& r, const BerkPoint& nu, const TreeRef& tree, int n_max,
                                       long degree_cap = kDefaultDegreeCap);

}  // namespace berkdyn
