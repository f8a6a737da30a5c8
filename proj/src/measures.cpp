#include "berkdyn/measures.hpp"

#include <algorithm>
#include <functional>

namespace berkdyn {

Rational AtomicMeasure::mass() const {
  Rational m(0);
  for (const auto& [x, w] : atoms) m += w;
  return m;
}

ProjectedMeasure::ProjectedMeasure(TreeRef tree) : tree_(std::move(tree)) {
  if (!tree_) throw std::invalid_argument("measure without a tree");
}

void ProjectedMeasure::add(const TreePosition& pos, const Rational& w) {
  Rational weight = w;
  weight.canonicalize();
  if (weight == 0) return;
  TreePosition n = tree_->normalize(pos);
  auto it = atoms_.find(n);
  if (it == atoms_.end()) {
    atoms_.emplace(n, weight);
    return;
  }
  it->second += weight;
  if (it->second == 0) atoms_.erase(it);
}

Rational ProjectedMeasure::mass() const {
  Rational m(0);
  for (const auto& [pos, w] : atoms_) m += w;
  return m;
}

Rational ProjectedMeasure::mass_at(const TreePosition& pos) const {
  auto it = atoms_.find(tree_->normalize(pos));
  return it == atoms_.end() ? Rational(0) : it->second;
}

Rational ProjectedMeasure::clamped_mass() const {
  Rational m(0);
  for (const auto& [pos, w] : atoms_)
    if (pos.is_vertex() && tree_->vertices()[static_cast<size_t>(pos.vertex)].end) m += w;
  return m;
}

ProjectedMeasure retract_measure(const AtomicMeasure& mu, const TreeRef& tree) {
  ProjectedMeasure out(tree);
  for (const auto& [x, w] : mu.atoms) out.add(retract(x, *tree), w);
  return out;
}

namespace {

using ProfileFn = std::function<ValuationMultiset(const Rational&)>;

// Places `total` preimages, described by their valuation profiles at the
// vertex centers, on a monotone tree. Preimages outside the top disk (or at
// infinity) land on the top vertex.
ProjectedMeasure place_by_profiles(const TreeRef& tree, const ProfileFn& profile, int total) {
  const FiniteTree& t = *tree;
  if (!t.is_monotone()) throw std::invalid_argument("profile retraction needs a monotone tree");
  std::map<Rational, ValuationMultiset> cache;
  auto prof = [&](const Rational& c) -> const ValuationMultiset& {
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, profile(c)).first;
    return it->second;
  };
  const size_t nv = t.vertices().size();
  std::vector<bool> has_parent(nv, false);
  for (const auto& e : t.edges()) has_parent[static_cast<size_t>(e.to)] = true;

  ProjectedMeasure out(tree);
  const Rational unit(1, total);
  for (size_t u = 0; u < nv; ++u) {
    const BerkPoint& pu = t.vertices()[u].point;
    ExtRat hu(pu.height());
    long count = has_parent[u] ? count_above(prof(pu.center()), hu, false) : total;
    for (int e : t.incident(static_cast<int>(u))) {
      const auto& ed = t.edges()[static_cast<size_t>(e)];
      if (ed.from != static_cast<int>(u)) continue;
      const BerkPoint& pv = t.vertices()[static_cast<size_t>(ed.to)].point;
      count -= count_above(prof(pv.center()), hu, true);
    }
    if (count < 0) throw std::logic_error("inconsistent preimage profiles at " + pu.to_string());
    out.add(TreePosition::at_vertex(static_cast<int>(u)), unit * count);
  }
  for (size_t e = 0; e < t.edges().size(); ++e) {
    const auto& ed = t.edges()[e];
    const Rational& hu = t.vertices()[static_cast<size_t>(ed.from)].point.height();
    const BerkPoint& pv = t.vertices()[static_cast<size_t>(ed.to)].point;
    for (const auto& [y, m] : prof(pv.center())) {
      if (y.is_infinite() || y.value() <= hu || y.value() >= pv.height()) continue;
      out.add({-1, static_cast<int>(e), Rational(y.value() - hu)}, unit * m);
    }
  }
  return out;
}

}  // namespace

ProjectedMeasure retract_from_profiles(const RationalMap& iterate, const BerkPoint& z, const TreeRef& tree) {
  if (!z.is_type_one()) throw std::invalid_argument("retract_from_profiles needs a type I start");
  auto profile = [&](const Rational& c) { return preimage_profile(iterate, 0, z, c).multiset; };
  return place_by_profiles(tree, profile, iterate.degree());
}

ProjectedMeasure retract_from_profiles(const RationalMap& r, int n, const BerkPoint& z, const TreeRef& tree) {
  return retract_from_profiles(iterates(r, n).back(), z, tree);
}

ProjectedMeasure retract_pullback(const RationalMap& iterate, const BerkPoint& nu, const TreeRef& tree) {
  auto profile = [&](const Rational& c) { return generic_preimage_profile(iterate, nu, c); };
  return place_by_profiles(tree, profile, iterate.degree());
}

namespace {

struct Orientation {
  std::vector<int> child;       // per edge: vertex on the side away from the root
  std::vector<int> order;       // vertices, root first (parents before children)
  std::vector<int> parent_edge; // per vertex, -1 at the root
};

Orientation orient(const FiniteTree& t) {
  Orientation o;
  const size_t nv = t.vertices().size();
  o.child.assign(t.edges().size(), -1);
  o.parent_edge.assign(nv, -1);
  std::vector<bool> seen(nv, false);
  o.order.push_back(t.root());
  seen[static_cast<size_t>(t.root())] = true;
  for (size_t i = 0; i < o.order.size(); ++i) {
    int v = o.order[i];
    for (int e : t.incident(v)) {
      int w = t.other_end(e, v);
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = true;
      o.child[static_cast<size_t>(e)] = w;
      o.parent_edge[static_cast<size_t>(w)] = e;
      o.order.push_back(w);
    }
  }
  return o;
}

}  // namespace

Rational w1_distance(const ProjectedMeasure& a, const ProjectedMeasure& b) {
  if (a.tree_ref() != b.tree_ref()) throw std::invalid_argument("w1_distance: measures on different trees");
  if (a.mass() != b.mass()) throw std::invalid_argument("w1_distance: unequal masses");
  const FiniteTree& t = a.tree();
  Orientation o = orient(t);
  const size_t ne = t.edges().size();
  // signed mass difference per vertex, and per-edge interior atoms as
  // (distance from the root-side end, signed mass)
  std::vector<Rational> vertex_diff(t.vertices().size());
  std::vector<std::vector<std::pair<Rational, Rational>>> interior(ne);
  auto collect = [&](const ProjectedMeasure& m, int sign) {
    for (const auto& [pos, w] : m.atoms()) {
      if (pos.is_vertex()) {
        vertex_diff[static_cast<size_t>(pos.vertex)] += w * sign;
        continue;
      }
      const auto& ed = t.edges()[static_cast<size_t>(pos.edge)];
      Rational from_root = ed.to == o.child[static_cast<size_t>(pos.edge)] ? pos.offset : ed.length - pos.offset;
      interior[static_cast<size_t>(pos.edge)].emplace_back(from_root, w * sign);
    }
  };
  collect(a, 1);
  collect(b, -1);
  // subtree differences, children first
  std::vector<Rational> subtree = vertex_diff;
  for (auto it = o.order.rbegin(); it != o.order.rend(); ++it) {
    int e = o.parent_edge[static_cast<size_t>(*it)];
    if (e < 0) continue;
    Rational edge_sum(0);
    for (const auto& [d, w] : interior[static_cast<size_t>(e)]) edge_sum += w;
    int parent = t.other_end(e, *it);
    subtree[static_cast<size_t>(parent)] += subtree[static_cast<size_t>(*it)] + edge_sum;
  }
  Rational total(0);
  for (size_t e = 0; e < ne; ++e) {
    auto& atoms = interior[e];
    std::sort(atoms.begin(), atoms.end());
    // F(t) = subtree(child) + interior atoms beyond t, walking from the child end
    Rational f = subtree[static_cast<size_t>(o.child[e])];
    Rational upper = t.edges()[e].length;
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
      total += abs(f) * (upper - it->first);
      f += it->second;
      upper = it->first;
    }
    total += abs(f) * upper;
  }
  return total;
}

PushforwardResult pushforward_measure(const RationalMap& r, const ProjectedMeasure& mu) {
  PushforwardResult out{ProjectedMeasure(mu.tree_ref()), Rational(0)};
  const FiniteTree& t = mu.tree();
  for (const auto& [pos, w] : mu.atoms()) {
    if (pos.is_vertex() && t.vertices()[static_cast<size_t>(pos.vertex)].end) {
      out.excluded_mass += w;
      continue;
    }
    BerkPoint image = pushforward_type_two(r, t.point_at(pos));
    out.measure.add(retract(image, t), w);
  }
  return out;
}

std::vector<EquidistStep> equidist_run(const RationalMap& r, const BerkPoint& z, const TreeRef& tree, int n_max,
                                       long degree_cap) {
  if (!z.is_type_one()) throw std::invalid_argument("equidistribution starts at a type I point");
  if (r.degree() < 2) throw std::invalid_argument("equidistribution needs degree >= 2");
  ExceptionalSet e = exceptional_set(r);
  if (e.contains(z)) throw ExceptionalStart("start point " + z.to_string() + " is totally invariant under R or R^2");
  for (const auto& f : e.unresolved)
    if (!z.is_infinity() && f(z.center()) == 0)
      throw ExceptionalStart("start point " + z.to_string() + " may be exceptional");
  std::vector<RationalMap> its = iterates(r, n_max, degree_cap);
  std::vector<ProjectedMeasure> levels;
  for (const auto& it : its) levels.push_back(retract_from_profiles(it, z, tree));
  std::vector<EquidistStep> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto& m = levels[static_cast<size_t>(n - 1)];
    std::optional<Rational> prev;
    if (n > 1) prev = w1_distance(levels[static_cast<size_t>(n - 2)], m);
    out.push_back({n, m, prev, w1_distance(m, levels.back())});
  }
  return out;
}

}  // namespace berkdyn
