// Atomic measures, their retractions onto finite trees, and the
// equidistribution driver.
#pragma once

#include "berkdyn/berkovich.hpp"
#include "berkdyn/dynamics.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace berkdyn {

using TreeRef = std::shared_ptr<const FiniteTree>;

struct AtomicMeasure {
  std::vector<std::pair<BerkPoint, Rational>> atoms;

  static AtomicMeasure dirac(const BerkPoint& x) { return {{{x, Rational(1)}}}; }
  Rational mass() const;
};

/// Weighted atoms at normalized positions of a fixed tree.
class ProjectedMeasure {
 public:
  explicit ProjectedMeasure(TreeRef tree);

  /// Normalizes the position and merges with an existing atom; zero weights are dropped.
  void add(const TreePosition& pos, const Rational& weight);

  const FiniteTree& tree() const { return *tree_; }
  const TreeRef& tree_ref() const { return tree_; }
  const std::map<TreePosition, Rational>& atoms() const { return atoms_; }
  Rational mass() const;
  Rational mass_at(const TreePosition& pos) const;
  /// Mass sitting on vertices that truncate a type I end.
  Rational clamped_mass() const;

  friend bool operator==(const ProjectedMeasure& a, const ProjectedMeasure& b) {
    return a.tree_ == b.tree_ && a.atoms_ == b.atoms_;
  }

 private:
  TreeRef tree_;
  std::map<TreePosition, Rational> atoms_;
};

ProjectedMeasure retract_measure(const AtomicMeasure& mu, const TreeRef& tree);

/// Retraction of D^{-n} R^{n*} delta_z, where `iterate` = R^n, computed from
/// preimage profiles at the centers of the tree's vertices. The tree must be
/// monotone (as built by hull()). Throws std::logic_error if the profiles
/// are inconsistent.
ProjectedMeasure retract_from_profiles(const RationalMap& iterate, const BerkPoint& z, const TreeRef& tree);
ProjectedMeasure retract_from_profiles(const RationalMap& r, int n, const BerkPoint& z, const TreeRef& tree);

/// Retraction of D^{-n} R^{n*} delta_nu for a type II point nu.
ProjectedMeasure retract_pullback(const RationalMap& iterate, const BerkPoint& nu, const TreeRef& tree);

/// Exact Wasserstein-1 distance; throws std::invalid_argument on unequal
/// masses or different trees.
Rational w1_distance(const ProjectedMeasure& a, const ProjectedMeasure& b);

struct PushforwardResult {
  ProjectedMeasure measure;
  /// Mass of atoms at type I truncations, which are not pushed.
  Rational excluded_mass;
};

PushforwardResult pushforward_measure(const RationalMap& r, const ProjectedMeasure& mu);

class ExceptionalStart : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EquidistStep {
  int n;
  ProjectedMeasure measure;
  std::optional<Rational> w1_prev;
  Rational w1_final;
};

/// Levels 1..n_max. Throws ExceptionalStart for exceptional z and CapExceeded
/// when D^n_max exceeds the cap.
std::vector<EquidistStep> equidist_run(const RationalMap& r, const BerkPoint& z, const TreeRef& tree, int n_max,
                                       long degree_cap = kDefaultDegreeCap);

}  // namespace berkdyn
