#include "berkdyn/potential.hpp"

#include <algorithm>

namespace berkdyn {

Rational PiecewiseAffinePotential::slope(int edge) const {
  const auto& e = tree->edges()[static_cast<size_t>(edge)];
  return (values[static_cast<size_t>(e.to)] - values[static_cast<size_t>(e.from)]) / e.length;
}

Rational PiecewiseAffinePotential::at(const TreePosition& pos) const {
  TreePosition n = tree->normalize(pos);
  if (n.is_vertex()) return values[static_cast<size_t>(n.vertex)];
  const auto& e = tree->edges()[static_cast<size_t>(n.edge)];
  return values[static_cast<size_t>(e.from)] + slope(n.edge) * n.offset;
}

Rational PiecewiseAffinePotential::sup_norm() const {
  Rational s(0);
  for (const auto& v : values) s = std::max(s, Rational(abs(v)));
  return s;
}

VertexMeasure laplacian(const PiecewiseAffinePotential& g) {
  const FiniteTree& t = *g.tree;
  VertexMeasure out(t.vertices().size());
  for (size_t e = 0; e < t.edges().size(); ++e) {
    const auto& ed = t.edges()[e];
    Rational s = g.slope(static_cast<int>(e));
    out[static_cast<size_t>(ed.from)] += s;
    out[static_cast<size_t>(ed.to)] -= s;
  }
  return out;
}

VertexMeasure vertex_masses(const ProjectedMeasure& rho) {
  VertexMeasure out(rho.tree().vertices().size());
  for (const auto& [pos, w] : rho.atoms()) {
    if (!pos.is_vertex()) throw std::invalid_argument("measure has atoms inside edges; subdivide first");
    out[static_cast<size_t>(pos.vertex)] += w;
  }
  return out;
}

PiecewiseAffinePotential solve_poisson(const ProjectedMeasure& rho, int base_vertex) {
  const FiniteTree& t = rho.tree();
  VertexMeasure mass = vertex_masses(rho);
  const size_t nv = t.vertices().size();
  // depth-first order from the base
  std::vector<int> order{base_vertex}, parent_edge(nv, -1);
  std::vector<bool> seen(nv, false);
  seen[static_cast<size_t>(base_vertex)] = true;
  for (size_t i = 0; i < order.size(); ++i)
    for (int e : t.incident(order[i])) {
      int w = t.other_end(e, order[i]);
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = true;
      parent_edge[static_cast<size_t>(w)] = e;
      order.push_back(w);
    }
  std::vector<Rational> subtree = mass;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int e = parent_edge[static_cast<size_t>(*it)];
    if (e >= 0) subtree[static_cast<size_t>(t.other_end(e, *it))] += subtree[static_cast<size_t>(*it)];
  }
  // slope away from the base on edge e equals -(mass beyond e)
  PiecewiseAffinePotential g{rho.tree_ref(), std::vector<Rational>(nv)};
  for (int v : order) {
    int e = parent_edge[static_cast<size_t>(v)];
    if (e < 0) continue;
    int up = t.other_end(e, v);
    g.values[static_cast<size_t>(v)] =
        g.values[static_cast<size_t>(up)] - subtree[static_cast<size_t>(v)] * t.edges()[static_cast<size_t>(e)].length;
  }
  return g;
}

PiecewiseAffinePotential compose_with_pushforward(const PiecewiseAffinePotential& g, const RationalMap& r) {
  const FiniteTree& t = *g.tree;
  PiecewiseAffinePotential out{g.tree, {}};
  for (const auto& v : t.vertices()) out.values.push_back(g.at(retract(pushforward_type_two(r, v.point), t)));
  return out;
}

PotentialIteration potential_iteration(const RationalMap& r, const BerkPoint& nu, const TreeRef& tree, int n_max,
                                       long degree_cap) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  iterates(r, n_max, degree_cap);  // cap check only
  auto base = tree->find_vertex(nu);
  if (!base) throw std::invalid_argument("potential base point is not a vertex of the tree");

  ProjectedMeasure pulled = retract_pullback(r, nu, tree);
  std::vector<TreePosition> cuts;
  for (const auto& [pos, w] : pulled.atoms()) cuts.push_back(pos);
  std::vector<int> index;
  auto fine = std::make_shared<const FiniteTree>(tree->subdivide(cuts, &index));
  ProjectedMeasure on_fine(fine);
  size_t i = 0;
  for (const auto& [pos, w] : pulled.atoms()) on_fine.add(TreePosition::at_vertex(index[i++]), w);

  PotentialIteration out{fine, *base, solve_poisson(on_fine, *base), {}, {}};
  const FiniteTree& t = *fine;
  const Rational d(r.degree());
  std::vector<BerkPoint> orbit;
  for (const auto& v : t.vertices()) orbit.push_back(v.point);
  std::vector<Rational> acc(t.vertices().size());
  Rational weight(1);
  for (int n = 1; n <= n_max; ++n) {
    Rational sup(0);
    for (size_t x = 0; x < orbit.size(); ++x) {
      Rational term = weight * out.one_step.at(retract(orbit[x], t));
      acc[x] += term;
      sup = std::max(sup, Rational(abs(term)));
      orbit[x] = pushforward_type_two(r, orbit[x]);
    }
    if (n > 1) out.increments.push_back(sup);
    out.potentials.push_back({fine, acc});
    weight /= d;
  }
  return out;
}

}  // namespace berkdyn
