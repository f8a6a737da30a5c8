#include "berkdyn/cli.hpp"

#include "berkdyn/serialize.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace berkdyn {

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  std::optional<int> n_max;
  std::optional<std::string> depth_cap;
  bool with_float = false;
};

struct Experiment {
  std::optional<RationalMap> map;
  Json raw;
};

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

RationalMap read_map(const Json& cfg) {
  return map_from_json(cfg.contains("map") ? cfg.at("map") : cfg);
}

int read_n_max(const Json& cfg, const Options& opt) {
  int n = opt.n_max ? *opt.n_max : (cfg.contains("n_max") ? cfg.at("n_max").get<int>() : 6);
  if (n < 1) throw ConfigError("n_max must be >= 1");
  return n;
}

Rational read_depth_cap(const Json& cfg, const Options& opt) {
  Rational cap = opt.depth_cap ? parse_rational(*opt.depth_cap)
                               : (cfg.contains("depth_cap") ? parse_rational(cfg.at("depth_cap").get<std::string>())
                                                            : Rational(5));
  if (cap <= 0) throw ConfigError("depth_cap must be positive");
  return cap;
}

BerkPoint read_root(const Json& cfg) {
  if (!cfg.contains("root")) return BerkPoint::gauss();
  BerkPoint r = point_from_json(cfg.at("root"));
  if (!r.is_type_two()) throw ConfigError("root must be a type II point");
  return r;
}

std::vector<BerkPoint> read_centers(const Json& cfg, const Prime& p) {
  std::vector<BerkPoint> pts;
  if (!cfg.contains("centers")) return {BerkPoint::type_one(Rational(0)), BerkPoint::infinity()};
  for (const auto& c : cfg.at("centers")) {
    BerkPoint x = point_from_json(c);
    for (const auto& y : pts)
      if (equal(x, y, p)) throw ConfigError("observation centers must be pairwise distinct");
    pts.push_back(x);
  }
  if (pts.empty()) throw ConfigError("observation centers must be nonempty");
  return pts;
}

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f) throw ConfigError("cannot write '" + opt.out_path + "'");
  f << text;
}

std::string cmd_analyze(const Json& cfg) {
  RationalMap r = read_map(cfg);
  Json out;
  out["map"] = to_json(r);
  out["degree"] = r.degree();
  if (r.degree() >= 2) out["exceptional_set"] = to_json(exceptional_set(r));
  else out["exceptional_set"] = nullptr;
  ReductionReport rep = good_reduction(r);
  out["reduction"] = to_json(rep);
  Json inv = nullptr, conj = nullptr;
  if (r.degree() >= 2) {
    InvariantSearch s = totally_invariant_type_two(r);
    if (s.point) {
      inv = to_json(canonical(*s.point, r.prime()));
      if (auto phi = normalizing_conjugacy(*s.point, r.prime())) {
        RationalMap c = conjugate(r, *phi);
        conj = Json{{"phi", {to_string(phi->a), to_string(phi->b), to_string(phi->c), to_string(phi->d)}},
                    {"conjugated_map", to_json(c)},
                    {"good_reduction", good_reduction(c).good}};
      }
    }
    out["candidates_checked"] = s.candidates.size();
  }
  out["invariant_point"] = inv;
  out["conjugacy"] = conj;
  return out.dump(2) + "\n";
}

std::string cmd_equidist(const Json& cfg, const Options& opt) {
  RationalMap r = read_map(cfg);
  if (!cfg.contains("z")) throw ConfigError("equidist needs a start point 'z'");
  BerkPoint z = point_from_json(cfg.at("z"));
  if (!z.is_type_one()) throw ConfigError("start point must be type I");
  int n_max = read_n_max(cfg, opt);
  auto tree = std::make_shared<const FiniteTree>(
      hull(read_centers(cfg, r.prime()), read_root(cfg), read_depth_cap(cfg, opt), r.prime()));
  auto steps = equidist_run(r, z, tree, n_max);

  // Reference atom: the configured target, else a certified totally invariant
  // point when it lies on the window.
  std::optional<ProjectedMeasure> target;
  std::optional<BerkPoint> target_point;
  if (cfg.contains("target")) {
    target_point = point_from_json(cfg.at("target"));
  } else if (r.degree() >= 2) {
    if (auto inv = totally_invariant_type_two(r).point) {
      TreePosition pos = retract(*inv, *tree);
      if (equal(tree->point_at(pos), *inv, r.prime())) target_point = inv;
    }
  }
  if (target_point) {
    target.emplace(tree);
    target->add(retract(*target_point, *tree), Rational(1));
  }
  auto w1_target = [&](const EquidistStep& s) -> std::optional<Rational> {
    if (!target) return std::nullopt;
    return w1_distance(s.measure, *target);
  };

  if (opt.format == "csv") {
    std::ostringstream os;
    os << "n,w1_target,w1_prev,w1_final,clamped_mass";
    if (opt.with_float) os << ",w1_target_float,w1_prev_float,w1_final_float";
    os << "\n";
    for (const auto& s : steps) {
      auto wt = w1_target(s);
      os << s.n << "," << (wt ? to_string(*wt) : "") << "," << (s.w1_prev ? to_string(*s.w1_prev) : "") << "," << to_string(s.w1_final) << ","
         << to_string(s.measure.clamped_mass());
      if (opt.with_float)
        os << "," << (wt ? decimal(*wt) : "") << "," << (s.w1_prev ? decimal(*s.w1_prev) : "") << "," << decimal(s.w1_final);
      os << "\n";
    }
    return os.str();
  }
  Json levels = Json::array();
  for (const auto& s : steps) {
    Json rec;
    rec["n"] = s.n;
    rec["atoms"] = atoms_to_json(s.measure);
    auto wt = w1_target(s);
    rec["w1_target"] = wt ? Json(to_string(*wt)) : Json(nullptr);
    rec["w1_prev"] = s.w1_prev ? Json(to_string(*s.w1_prev)) : Json(nullptr);
    rec["w1_final"] = to_string(s.w1_final);
    rec["clamped_mass"] = to_string(s.measure.clamped_mass());
    if (opt.with_float) {
      rec["w1_target_float"] = wt ? Json(decimal(*wt)) : Json(nullptr);
      rec["w1_prev_float"] = s.w1_prev ? Json(decimal(*s.w1_prev)) : Json(nullptr);
      rec["w1_final_float"] = decimal(s.w1_final);
    }
    levels.push_back(rec);
  }
  Json out{{"map", to_json(r)},
           {"z", to_json(z)},
           {"target", target_point ? to_json(canonical(*target_point, r.prime())) : Json(nullptr)},
           {"tree", to_json(*tree)},
           {"levels", levels}};
  return out.dump(2) + "\n";
}

std::string cmd_potential(const Json& cfg, const Options& opt) {
  RationalMap r = read_map(cfg);
  if (r.degree() < 2) throw ConfigError("potential iteration needs degree >= 2");
  int n_max = read_n_max(cfg, opt);
  BerkPoint root = read_root(cfg);
  BerkPoint nu = cfg.contains("nu") ? point_from_json(cfg.at("nu")) : root;
  if (!nu.is_type_two()) throw ConfigError("potential base point must be type II");
  auto pts = read_centers(cfg, r.prime());
  pts.push_back(nu);
  auto tree = std::make_shared<const FiniteTree>(hull(pts, root, read_depth_cap(cfg, opt), r.prime()));
  PotentialIteration it = potential_iteration(r, nu, tree, n_max);
  Json pots = Json::array();
  for (size_t i = 0; i < it.potentials.size(); ++i) {
    Json g = to_json(it.potentials[i]);
    pots.push_back(Json{{"n", i + 1}, {"vertex_values", g["vertex_values"]}});
  }
  Json inc = Json::array();
  for (size_t i = 0; i < it.increments.size(); ++i) {
    Json rec{{"n", i + 1}, {"sup_increment", to_string(it.increments[i])}};
    if (opt.with_float) rec["sup_increment_float"] = decimal(it.increments[i]);
    inc.push_back(rec);
  }
  Json out{{"map", to_json(r)},
           {"nu", to_json(nu)},
           {"tree", to_json(*it.tree)},
           {"base_vertex", it.base_vertex},
           {"one_step", to_json(it.one_step)},
           {"one_step_sup", to_string(it.one_step.sup_norm())},
           {"potentials", pots},
           {"increments", inc}};
  return out.dump(2) + "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-adic dynamics on the Berkovich line"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "JSON experiment config")->required();
    sub->add_option("--out", opt.out_path, "output file (default: stdout)");
  };
  auto* analyze = app.add_subcommand("analyze", "degree, exceptional set, reduction, invariant point");
  add_common(analyze);
  auto* equidist = app.add_subcommand("equidist", "retracted preimage measures and W1 table");
  add_common(equidist);
  equidist->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* potential = app.add_subcommand("potential", "Poisson solve and potential iteration");
  add_common(potential);
  for (auto* sub : {equidist, potential}) {
    sub->add_option("--n-max", opt.n_max, "number of levels");
    sub->add_option("--depth-cap", opt.depth_cap, "truncation distance of type I ends");
    sub->add_flag("--float", opt.with_float, "add decimal approximations");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: config: " << e.what() << "\n";
    return kExitConfig;
  }
  try {
    Json cfg = load_config(opt.config_path);
    std::string text;
    if (analyze->parsed()) text = cmd_analyze(cfg);
    else if (equidist->parsed()) text = cmd_equidist(cfg, opt);
    else text = cmd_potential(cfg, opt);
    emit(opt, text, out);
    return kExitOk;
  } catch (const ExceptionalStart& e) {
    err << "error: exceptional: " << e.what() << "\n";
    return kExitExceptional;
  } catch (const CapExceeded& e) {
    err << "error: cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Json::exception& e) {
    err << "error: config: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace berkdyn
