#include "berkdyn/berkovich.hpp"

#include "berkdyn/newton.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace berkdyn {

BerkPoint BerkPoint::type_one(const Rational& value) {
  BerkPoint b;
  b.kind_ = Kind::TypeI;
  b.center_ = value;
  b.center_.canonicalize();
  return b;
}

BerkPoint BerkPoint::infinity() {
  BerkPoint b;
  b.kind_ = Kind::TypeI;
  b.at_infinity_ = true;
  return b;
}

BerkPoint BerkPoint::type_two(const Rational& center, const Rational& height) {
  BerkPoint b;
  b.kind_ = Kind::TypeII;
  b.center_ = center;
  b.height_ = height;
  b.center_.canonicalize();
  b.height_.canonicalize();
  return b;
}

const Rational& BerkPoint::center() const {
  if (is_infinity()) throw std::domain_error("center of the point at infinity");
  return center_;
}

const Rational& BerkPoint::height() const {
  if (kind_ != Kind::TypeII) throw std::domain_error("height of a type I point");
  return height_;
}

std::string BerkPoint::to_string() const {
  if (is_infinity()) return "inf";
  if (is_type_one()) return berkdyn::to_string(center_);
  return "nu(" + berkdyn::to_string(center_) + ", " + berkdyn::to_string(height_) + ")";
}

bool operator<(const TreePosition& a, const TreePosition& b) {
  if (a.vertex != b.vertex) return a.vertex < b.vertex;
  if (a.edge != b.edge) return a.edge < b.edge;
  return a.offset < b.offset;
}

bool equal(const BerkPoint& x, const BerkPoint& y, const Prime& p) {
  if (x.kind() != y.kind()) return false;
  if (x.is_type_one()) {
    if (x.is_infinity() || y.is_infinity()) return x.is_infinity() == y.is_infinity();
    return x.center() == y.center();
  }
  return x.height() == y.height() && val_p(Rational(x.center() - y.center()), p) >= ExtRat(x.height());
}

BerkPoint canonical(const BerkPoint& x, const Prime& p) {
  if (x.is_type_one()) return x;
  const Rational& a = x.center();
  const Rational& s = x.height();
  ExtRat va = val_p(a, p);
  if (va >= ExtRat(s)) return BerkPoint::type_two(Rational(0), s);
  long k = va.value().get_num().get_si();
  long n = ceil(s).get_si();
  Rational unit = unit_part(a, p);
  BigInt mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p.value()), static_cast<unsigned long>(n - k));
  BigInt inv;
  BigInt den = unit.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  BigInt digits = (unit.get_num() * inv) % mod;
  if (digits < 0) digits += mod;
  return BerkPoint::type_two(Rational(digits) * prime_power(p, k), s);
}

bool contains(const BerkPoint& x, const BerkPoint& y, const Prime& p) {
  if (x.is_type_one()) return equal(x, y, p);
  if (y.is_infinity()) return false;
  ExtRat v = val_p(Rational(x.center() - y.center()), p);
  if (v < ExtRat(x.height())) return false;
  return y.is_type_one() || y.height() >= x.height();
}

ExtRat seminorm_eval(const BerkPoint& nu, const RatPoly& f, const Prime& p) {
  if (!nu.is_type_two()) throw std::invalid_argument("seminorm_eval needs a type II point");
  return generic_val({taylor_shift(f, nu.center()), ExtRat(nu.height())}, p).val;
}

Rational dist_H(const BerkPoint& x, const BerkPoint& y, const Prime& p) {
  if (!x.is_type_two() || !y.is_type_two()) throw std::invalid_argument("dist_H needs type II points");
  ExtRat m = min(min(ExtRat(x.height()), ExtRat(y.height())), val_p(Rational(x.center() - y.center()), p));
  return (x.height() - m.value()) + (y.height() - m.value());
}

BerkPoint join(const BerkPoint& x, const BerkPoint& y, const Prime& p) {
  if (x.is_infinity() || y.is_infinity()) throw std::invalid_argument("join with infinity");
  if (x.is_type_one() && y.is_type_one() && x.center() == y.center())
    throw std::invalid_argument("join of a type I point with itself");
  ExtRat h = val_p(Rational(x.center() - y.center()), p);
  if (x.is_type_two()) h = min(h, ExtRat(x.height()));
  if (y.is_type_two()) h = min(h, ExtRat(y.height()));
  return BerkPoint::type_two(x.center(), h.value());
}

BerkPoint median(const BerkPoint& x, const BerkPoint& y, const BerkPoint& z, const Prime& p) {
  BerkPoint best = join(x, y, p);
  for (const auto& c : {join(y, z, p), join(x, z, p)})
    if (c.height() > best.height()) best = c;
  return best;
}

BerkPoint walk_toward(const BerkPoint& from, const BerkPoint& toward, const Rational& distance,
                      const Prime& p) {
  if (!from.is_type_two()) throw std::invalid_argument("walk_toward starts at a type II point");
  if (toward.is_infinity()) return BerkPoint::type_two(from.center(), from.height() - distance);
  BerkPoint j = join(from, toward, p);
  Rational down = from.height() - j.height();
  if (distance <= down) return BerkPoint::type_two(from.center(), from.height() - distance);
  Rational h = j.height() + (distance - down);
  if (toward.is_type_two() && h > toward.height()) h = toward.height();
  return BerkPoint::type_two(toward.center(), h);
}

// ---------------------------------------------------------------------------

FiniteTree::FiniteTree(Prime p, std::vector<TreeVertex> vertices, std::vector<TreeEdge> edges, int root)
    : p_(p), vertices_(std::move(vertices)), edges_(std::move(edges)), root_(root) {
  const int n = static_cast<int>(vertices_.size());
  if (n == 0) throw std::invalid_argument("tree without vertices");
  if (root_ < 0 || root_ >= n) throw std::invalid_argument("tree root out of range");
  if (static_cast<int>(edges_.size()) != n - 1) throw std::invalid_argument("tree must have |V|-1 edges");
  for (auto& e : edges_) e.length.canonicalize();
  for (const auto& v : vertices_)
    if (!v.point.is_type_two()) throw std::invalid_argument("tree vertices must be type II");
  adjacency_.assign(static_cast<size_t>(n), {});
  for (size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (ed.from < 0 || ed.from >= n || ed.to < 0 || ed.to >= n || ed.from == ed.to)
      throw std::invalid_argument("tree edge endpoint out of range");
    if (ed.length <= 0) throw std::invalid_argument("tree edge length must be positive");
    Rational d = dist_H(vertices_[static_cast<size_t>(ed.from)].point, vertices_[static_cast<size_t>(ed.to)].point, p_);
    if (d != ed.length) throw std::invalid_argument("tree edge length differs from hyperbolic distance");
    adjacency_[static_cast<size_t>(ed.from)].push_back(static_cast<int>(e));
    adjacency_[static_cast<size_t>(ed.to)].push_back(static_cast<int>(e));
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<int> stack{root_};
  seen[static_cast<size_t>(root_)] = true;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int e : adjacency_[static_cast<size_t>(v)]) {
      int w = other_end(e, v);
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw std::invalid_argument("tree is not connected");
}

int FiniteTree::other_end(int edge, int v) const {
  const auto& e = edges_[static_cast<size_t>(edge)];
  return e.from == v ? e.to : e.from;
}

bool FiniteTree::is_monotone() const {
  for (const auto& e : edges_) {
    const auto& a = vertices_[static_cast<size_t>(e.from)].point;
    const auto& b = vertices_[static_cast<size_t>(e.to)].point;
    if (!(contains(a, b, p_) && b.height() > a.height())) return false;
  }
  return true;
}

TreePosition FiniteTree::normalize(TreePosition pos) const {
  pos.offset.canonicalize();
  if (pos.is_vertex()) {
    if (pos.vertex >= static_cast<int>(vertices_.size())) throw std::out_of_range("vertex id");
    return TreePosition::at_vertex(pos.vertex);
  }
  if (pos.edge < 0 || pos.edge >= static_cast<int>(edges_.size())) throw std::out_of_range("edge id");
  const auto& e = edges_[static_cast<size_t>(pos.edge)];
  if (pos.offset < 0 || pos.offset > e.length) throw std::out_of_range("edge offset");
  if (pos.offset == 0) return TreePosition::at_vertex(e.from);
  if (pos.offset == e.length) return TreePosition::at_vertex(e.to);
  return pos;
}

BerkPoint FiniteTree::point_at(const TreePosition& pos) const {
  TreePosition n = normalize(pos);
  if (n.is_vertex()) return vertices_[static_cast<size_t>(n.vertex)].point;
  const auto& e = edges_[static_cast<size_t>(n.edge)];
  return walk_toward(vertices_[static_cast<size_t>(e.from)].point, vertices_[static_cast<size_t>(e.to)].point,
                     n.offset, p_);
}

Rational FiniteTree::distance(const TreePosition& a, const TreePosition& b) const {
  return dist_H(point_at(a), point_at(b), p_);
}

std::optional<int> FiniteTree::find_vertex(const BerkPoint& x) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (equal(vertices_[i].point, x, p_)) return static_cast<int>(i);
  return std::nullopt;
}

FiniteTree FiniteTree::subdivide(const std::vector<TreePosition>& positions, std::vector<int>* index) const {
  std::vector<std::vector<Rational>> cuts(edges_.size());
  std::vector<TreePosition> norm;
  norm.reserve(positions.size());
  for (const auto& pos : positions) {
    norm.push_back(normalize(pos));
    if (!norm.back().is_vertex()) cuts[static_cast<size_t>(norm.back().edge)].push_back(norm.back().offset);
  }
  std::vector<TreeVertex> verts = vertices_;
  std::vector<TreeEdge> new_edges;
  // (edge, offset) -> new vertex id
  std::vector<std::vector<std::pair<Rational, int>>> created(edges_.size());
  for (size_t e = 0; e < edges_.size(); ++e) {
    auto& c = cuts[e];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    const auto& ed = edges_[e];
    int prev = ed.from;
    Rational prev_off(0);
    for (const auto& off : c) {
      int id = static_cast<int>(verts.size());
      verts.push_back({point_at({-1, static_cast<int>(e), off}), std::nullopt});
      new_edges.push_back({prev, id, off - prev_off});
      created[e].emplace_back(off, id);
      prev = id;
      prev_off = off;
    }
    new_edges.push_back({prev, ed.to, ed.length - prev_off});
  }
  if (index) {
    index->clear();
    for (const auto& pos : norm) {
      if (pos.is_vertex()) {
        index->push_back(pos.vertex);
        continue;
      }
      for (const auto& [off, id] : created[static_cast<size_t>(pos.edge)])
        if (off == pos.offset) index->push_back(id);
    }
  }
  return FiniteTree(p_, std::move(verts), std::move(new_edges), root_);
}

// ---------------------------------------------------------------------------

FiniteTree hull(const std::vector<BerkPoint>& points, const BerkPoint& root, const Rational& depth_cap,
                const Prime& p) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  if (!root.is_type_two()) throw std::invalid_argument("hull root must be type II");
  if (depth_cap <= 0) throw std::invalid_argument("depth_cap must be positive");

  std::vector<TreeVertex> verts{{canonical(root, p), std::nullopt}};
  auto add = [&](const BerkPoint& x, std::optional<BerkPoint> end) {
    BerkPoint c = canonical(x, p);
    for (auto& v : verts)
      if (v.point == c) {
        if (!v.end && end) v.end = end;
        return;
      }
    verts.push_back({c, std::move(end)});
  };
  for (const auto& x : points) {
    if (x.is_type_two()) add(x, std::nullopt);
    else add(walk_toward(root, x, depth_cap, p), x);
  }
  // Close under pairwise joins.
  const size_t base = verts.size();
  for (size_t i = 0; i < base; ++i)
    for (size_t j = i + 1; j < base; ++j) add(join(verts[i].point, verts[j].point, p), std::nullopt);

  std::vector<TreeEdge> edges;
  for (size_t v = 0; v < verts.size(); ++v) {
    int parent = -1;
    for (size_t w = 0; w < verts.size(); ++w) {
      if (w == v || !contains(verts[w].point, verts[v].point, p)) continue;
      if (parent < 0 || verts[w].point.height() > verts[static_cast<size_t>(parent)].point.height())
        parent = static_cast<int>(w);
    }
    if (parent >= 0)
      edges.push_back({parent, static_cast<int>(v),
                       verts[v].point.height() - verts[static_cast<size_t>(parent)].point.height()});
  }
  return FiniteTree(p, std::move(verts), std::move(edges), 0);
}

namespace {

// A type II point on the path from the type I point x into the tree, beyond
// every vertex.
BerkPoint proxy(const BerkPoint& x, const FiniteTree& tree) {
  const Prime& p = tree.prime();
  if (x.is_infinity()) {
    Rational h = tree.vertices().front().point.height();
    for (const auto& v : tree.vertices()) {
      h = std::min(h, v.point.height());
      ExtRat vc = val_p(v.point.center(), p);
      if (!vc.is_infinite()) h = std::min(h, vc.value());
    }
    return BerkPoint::type_two(Rational(0), h - 1);
  }
  Rational h = tree.vertices().front().point.height();
  for (const auto& v : tree.vertices()) {
    h = std::max(h, v.point.height());
    ExtRat vc = val_p(Rational(v.point.center() - x.center()), p);
    if (!vc.is_infinite()) h = std::max(h, vc.value());
  }
  return BerkPoint::type_two(x.center(), h + 1);
}

}  // namespace

TreePosition retract(const BerkPoint& x, const FiniteTree& tree) {
  const Prime& p = tree.prime();
  if (tree.edges().empty()) return TreePosition::at_vertex(0);
  BerkPoint y = x.is_type_one() ? proxy(x, tree) : x;
  std::optional<Rational> best;
  TreePosition out;
  for (size_t e = 0; e < tree.edges().size(); ++e) {
    const auto& ed = tree.edges()[e];
    const auto& u = tree.vertices()[static_cast<size_t>(ed.from)].point;
    const auto& v = tree.vertices()[static_cast<size_t>(ed.to)].point;
    BerkPoint m = median(y, u, v, p);
    Rational d = dist_H(y, m, p);
    if (!best || d < *best) {
      best = d;
      out = tree.normalize({-1, static_cast<int>(e), dist_H(u, m, p)});
    }
  }
  return out;
}

}  // namespace berkdyn
