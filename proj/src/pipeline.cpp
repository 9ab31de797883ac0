#include "svfractal/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "svfractal/errors.hpp"

namespace svf {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << body;
}

std::filesystem::path prepare_dir(const std::string& out_dir) {
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// CSV with `t,lower,upper` rows (convex case) or `t,part_index,lower,upper`
// when any value has several parts.
std::string function_csv(const SetFunction& f) {
  bool convex = true;
  for (const auto& v : f.values())
    if (!v.is_interval()) {
      convex = false;
      break;
    }
  std::ostringstream os;
  if (convex) {
    os << "t,lower,upper\n";
    for (std::size_t i = 0; i < f.grid().size(); ++i) {
      const auto& v = f.value_at(i);
      os << fmt_double(f.grid()[i]) << ',' << fmt_double(v.lo()) << ','
         << fmt_double(v.hi()) << '\n';
    }
  } else {
    os << "t,part_index,lower,upper\n";
    for (std::size_t i = 0; i < f.grid().size(); ++i) {
      const auto& parts = f.value_at(i).parts();
      for (std::size_t k = 0; k < parts.size(); ++k)
        os << fmt_double(f.grid()[i]) << ',' << k << ','
           << fmt_double(parts[k].lo) << ',' << fmt_double(parts[k].hi)
           << '\n';
    }
  }
  return os.str();
}

std::string cloud_csv(const GraphCloud& cloud) {
  std::ostringstream os;
  os << "t,lower,upper\n";
  for (const auto& x : cloud)
    os << fmt_double(x.t) << ',' << fmt_double(x.s.lo) << ','
       << fmt_double(x.s.hi) << '\n';
  return os.str();
}

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ConfigError("missing or non-numeric field '" + key + "'");
  return j[key].get<double>();
}

}  // namespace

Config Config::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  Config c;
  if (j.contains("interval")) {
    if (!j["interval"].is_array() || j["interval"].size() != 2)
      throw ConfigError("'interval' must be [t1, t_inf]");
    c.t1 = j["interval"][0].get<double>();
    c.t_inf = j["interval"][1].get<double>();
    if (!(c.t1 < c.t_inf)) throw ConfigError("'interval' must be increasing");
  }
  if (j.contains("partition")) {
    const json& p = j["partition"];
    const std::string family = p.value("family", "dyadic");
    if (family == "dyadic") {
      c.family = PartitionFamily::Dyadic;
      c.ratio = 0.5;
    } else if (family == "geometric") {
      c.family = PartitionFamily::Geometric;
      c.ratio = require_number(p, "ratio");
      if (!(c.ratio > 0.0 && c.ratio < 1.0))
        throw ConfigError("'partition.ratio' must lie in (0,1)");
    } else if (family == "explicit") {
      c.family = PartitionFamily::ExplicitPrefix;
      if (!p.contains("nodes") || !p["nodes"].is_array())
        throw ConfigError("explicit partition needs 'partition.nodes'");
      c.explicit_nodes = p["nodes"].get<std::vector<double>>();
    } else {
      throw ConfigError("unknown partition family '" + family + "'");
    }
    if (p.contains("N")) {
      c.truncation = p["N"].get<int>();
      if (c.truncation < 1) throw ConfigError("'partition.N' must be >= 1");
    }
  }
  c.alpha = require_number(j, "alpha");
  if (!(std::fabs(c.alpha) < 1.0))
    throw ConfigError("'alpha' must satisfy |alpha| < 1");
  if (!j.contains("phi") || !j["phi"].is_object())
    throw ConfigError("missing 'phi' envelope object");
  c.phi_lower = j["phi"].value("lower", "");
  c.phi_upper = j["phi"].value("upper", "");
  if (c.phi_lower.empty() || c.phi_upper.empty())
    throw ConfigError("'phi' needs 'lower' and 'upper' expression strings");
  c.h = j.value("h", "1");
  if (j.contains("base")) {
    const std::string kind = j["base"].value("kind", "example");
    if (kind == "example") {
      c.base_kind = BaseKind::Example;
    } else if (kind == "explicit") {
      c.base_kind = BaseKind::Explicit;
      c.base_lower = j["base"].value("lower", "");
      c.base_upper = j["base"].value("upper", "");
      if (c.base_lower.empty() || c.base_upper.empty())
        throw ConfigError("explicit base needs 'lower' and 'upper'");
    } else {
      throw ConfigError("unknown base kind '" + kind + "'");
    }
  }
  if (j.contains("grid_size")) {
    c.grid_size = j["grid_size"].get<int>();
    if (c.grid_size < 3) throw ConfigError("'grid_size' must be >= 3");
  }
  if (j.contains("tolerance")) {
    c.tolerance = j["tolerance"].get<double>();
    if (!(c.tolerance > 0.0)) throw ConfigError("'tolerance' must be > 0");
  }
  if (j.contains("measure")) {
    const json& m = j["measure"];
    if (m.contains("p") && m["p"].is_array()) {
      c.measure.explicit_p = m["p"].get<std::vector<double>>();
    } else if (m.contains("p") && m["p"] != "proportional") {
      throw ConfigError("'measure.p' must be \"proportional\" or a list");
    }
    c.measure.allow_degenerate = m.value("allow_degenerate", false);
    c.measure.n = m.value("n", c.measure.n);
    c.measure.burn_in = m.value("burn_in", c.measure.burn_in);
    c.measure.seed = m.value("seed", c.measure.seed);
    if (c.measure.n <= 0 || c.measure.burn_in < 0)
      throw ConfigError("'measure.n' must be > 0 and burn_in >= 0");
  }
  if (j.contains("dimension")) {
    const json& d = j["dimension"];
    c.dimension.k_max = d.value("k_max", c.dimension.k_max);
    if (d.contains("scales"))
      c.dimension.scales = d["scales"].get<std::vector<double>>();
    if (c.dimension.k_max < 2)
      throw ConfigError("'dimension.k_max' must be >= 2");
  }
  // Expressions must parse up front so config errors surface as such.
  for (const std::string* s :
       {&c.phi_lower, &c.phi_upper, &c.h, &c.base_lower, &c.base_upper}) {
    if (s->empty()) continue;
    try {
      Expr::parse(*s);
    } catch (const SyntaxError& e) {
      throw ConfigError("bad expression '" + *s + "': " + e.what());
    }
  }
  return c;
}

Config Config::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return from_json_text(body.str());
}

Pipeline::Pipeline(Config cfg) : cfg_(std::move(cfg)) {}

const Partition& Pipeline::partition() {
  if (!partition_) {
    switch (cfg_.family) {
      case PartitionFamily::Dyadic:
        partition_ = Partition::dyadic(cfg_.t1, cfg_.t_inf, cfg_.truncation);
        break;
      case PartitionFamily::Geometric:
        partition_ = Partition::geometric(cfg_.t1, cfg_.t_inf, cfg_.ratio,
                                          cfg_.truncation);
        break;
      case PartitionFamily::ExplicitPrefix:
        partition_ = Partition::explicit_prefix(cfg_.explicit_nodes,
                                                cfg_.t_inf, cfg_.truncation);
        break;
    }
  }
  return *partition_;
}

const FractalSystem& Pipeline::system() {
  if (!system_) {
    const Partition& p = partition();
    SetFunction phi = SetFunction::from_envelopes(
        Expr::parse(cfg_.phi_lower), Expr::parse(cfg_.phi_upper),
        cfg_.grid_size, p);
    SetFunction base =
        cfg_.base_kind == BaseKind::Example
            ? base_function(phi, Expr::parse(cfg_.h), p)
            : SetFunction::from_envelopes(Expr::parse(cfg_.base_lower),
                                          Expr::parse(cfg_.base_upper),
                                          phi.grid_ptr());
    system_.emplace(std::move(phi), std::move(base), cfg_.alpha, p, false);
  }
  return *system_;
}

const FractalFunction& Pipeline::fractal() {
  if (!fractal_) fractal_ = fixed_point(system(), cfg_.tolerance);
  return *fractal_;
}

ProbabilityVector Pipeline::probability() {
  if (cfg_.measure.explicit_p)
    return ProbabilityVector::explicit_weights(*cfg_.measure.explicit_p,
                                               cfg_.measure.allow_degenerate);
  return ProbabilityVector::proportional(partition());
}

void Pipeline::cmd_build(const std::string& out_dir) {
  const auto dir = prepare_dir(out_dir);
  const FractalFunction& ff = fractal();
  write_file(dir / "phi_alpha.csv", function_csv(ff.result));
  json meta;
  meta["alpha"] = cfg_.alpha;
  meta["N"] = cfg_.truncation;
  meta["grid_size"] = cfg_.grid_size;
  meta["iterations"] = ff.iterations;
  meta["residual"] = ff.residual;
  meta["tolerance"] = cfg_.tolerance;
  meta["endpoint_defect"] = system().endpoint_defect();
  meta["generator"] = "mt19937_64";
  write_file(dir / "metadata.json", meta.dump(2) + "\n");
  if (ff.residual > cfg_.tolerance * 10.0 + 1e-15)
    throw NoConvergence("residual above tolerance after convergence");
}

bool Pipeline::cmd_verify(const std::string& out_dir) {
  const auto dir = prepare_dir(out_dir);
  const FractalSystem& sys = system();
  const FractalFunction& ff = fractal();
  const Partition& p = partition();
  json rep;
  bool all_pass = true;
  auto record = [&](const std::string& name, double value, double threshold,
                    const std::string& note = "") {
    const bool pass = value <= threshold;
    json e;
    e["value"] = value;
    e["threshold"] = threshold;
    e["pass"] = pass;
    if (!note.empty()) e["note"] = note;
    rep[name] = e;
    all_pass = all_pass && pass;
  };

  // RB operator contraction on random convex pairs.
  {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 32; ++trial) {
      auto random_fn = [&]() {
        const double a0 = coef(rng), a1 = coef(rng), a2 = coef(rng);
        const double w0 = 0.1 + 0.5 * std::fabs(coef(rng));
        return sys.phi().map([&](double t, const CompactSet&) {
          const double mid = a0 + a1 * t + a2 * t * t;
          return CompactSet(mid - w0, mid + w0);
        });
      };
      const SetFunction u = random_fn(), v = random_fn();
      const double d0 = sup_metric(u, v);
      if (d0 < 1e-9) continue;
      const double d1 = sup_metric(apply_rb(sys, u), apply_rb(sys, v));
      worst = std::max(worst, d1 - std::fabs(cfg_.alpha) * d0);
    }
    record("rb_contraction_excess", worst, 1e-9);
  }
  record("fixed_point_residual", ff.residual,
         std::max(1e-8, 10.0 * cfg_.tolerance));
  record("endpoint_condition", sys.endpoint_defect(), 1e-9,
         sys.endpoint_defect() > 1e-9 ? "EndpointHypothesisViolated" : "");

  // Node interpolation only holds when Phi and B agree (single-valued)
  // at both endpoints.
  {
    const CompactSet zero(0.0);
    const bool interpolating =
        hausdorff_distance(set_difference(sys.phi().evaluate(p.t1()),
                                          sys.base().evaluate(p.t1())),
                           zero) <= 1e-9 &&
        hausdorff_distance(set_difference(sys.phi().evaluate(p.t_inf()),
                                          sys.base().evaluate(p.t_inf())),
                           zero) <= 1e-9;
    if (interpolating) {
      double worst = 0.0;
      for (int i = 1; i <= cfg_.truncation + 1; ++i) {
        const double t = p.node(i);
        worst = std::max(worst, hausdorff_distance(ff.result.evaluate(t),
                                                   sys.phi().evaluate(t)));
      }
      record("node_interpolation", worst, 1e-7);
    } else {
      rep["node_interpolation"] = {{"skipped", true},
                                   {"note", "not in the interpolating regime"}};
    }
  }

  {
    const ErrorReport er = check_error(sys, cfg_.tolerance);
    record("error_bound_excess", er.measured - er.bound, 1e-9);
  }

  // Operator continuity under a +{eps} translation of phi.
  {
    const double eps = 1e-2;
    const SetFunction shifted = sys.phi().map([&](double, const CompactSet& v) {
      return minkowski_sum(v, CompactSet(eps));
    });
    const FractalFunction pert = fractal_operator(sys, shifted, std::nullopt,
                                                  cfg_.tolerance);
    record("operator_continuity_excess",
           sup_metric(pert.result, ff.result) -
               eps / (1.0 - std::fabs(cfg_.alpha)),
           1e-9);
  }

  {
    const ContractionReport cr = verify_contraction(sys, ff.result, 2000);
    record("cifs_contraction_excess", cr.max_excess, 1e-3,
           "interpolation-limited numerical slack");
  }
  record("attractor_defect", attractor_defect(sys, ff.result, 2048), 1e-3);

  write_file(dir / "verify.json", rep.dump(2) + "\n");
  return all_pass;
}

void Pipeline::cmd_chaos(const std::string& out_dir) {
  const auto dir = prepare_dir(out_dir);
  const ProbabilityVector p = probability();
  const EmpiricalMeasure m =
      chaos_game(system(), fractal().result, p, cfg_.measure.n,
                 cfg_.measure.burn_in, cfg_.measure.seed);
  write_file(dir / "atoms.csv", cloud_csv(m.atoms));

  json meta;
  meta["seed"] = cfg_.measure.seed;
  meta["n"] = cfg_.measure.n;
  meta["burn_in"] = cfg_.measure.burn_in;
  meta["p_spec"] =
      cfg_.measure.explicit_p ? json(*cfg_.measure.explicit_p)
                              : json("proportional");
  meta["generator"] = "mt19937_64";
  write_file(dir / "measure_metadata.json", meta.dump(2) + "\n");

  json defect;
  const double support = support_check(m, fractal().result, 1e-3);
  defect["support_fraction"] = support;
  defect["support_eps"] = 1e-3;
  const int n_ot = 512;
  const double self_def = self_similarity_defect(
      system(), fractal().result, p, n_ot, cfg_.measure.seed);
  const EmpiricalMeasure a = chaos_game(system(), fractal().result, p, n_ot,
                                        cfg_.measure.burn_in,
                                        cfg_.measure.seed + 1);
  const EmpiricalMeasure b = chaos_game(system(), fractal().result, p, n_ot,
                                        cfg_.measure.burn_in,
                                        cfg_.measure.seed + 2);
  const double baseline = mk_distance(a, b);
  defect["self_similarity_defect"] = self_def;
  defect["two_seed_baseline"] = baseline;
  defect["pass"] = support >= 0.999 && self_def <= 2.0 * baseline;
  write_file(dir / "defect.json", defect.dump(2) + "\n");
}

void Pipeline::cmd_dims(const std::string& out_dir) {
  const auto dir = prepare_dir(out_dir);
  const FractalSystem& sys = system();
  const RatioSequence lower = RatioSequence::from_system(
      sys, RatioSequence::Kind::Lower, cfg_.dimension.k_max);
  const RatioSequence upper = RatioSequence::from_system(
      sys, RatioSequence::Kind::Upper, cfg_.dimension.k_max);
  const SStarResult low = s_star(lower, cfg_.dimension.k_max);
  const double up = s_upper(upper, cfg_.dimension.k_max);
  const GraphCloud cloud =
      sample_graph(fractal().result, 8192, cfg_.t1, cfg_.t_inf);
  const double box = box_count_estimate(cloud, cfg_.dimension.scales);

  json rep;
  rep["s_star"] = low.s_star;
  rep["s_k"] = low.s_k;
  rep["s_upper"] = std::isfinite(up) ? json(up) : json("inf");
  rep["box_estimate"] = box;
  write_file(dir / "dimension.json", rep.dump(2) + "\n");
}

void Pipeline::cmd_render(const std::string& out_dir) {
  const auto dir = prepare_dir(out_dir);
  const SetFunction& f = fractal().result;
  const Grid& g = f.grid();

  double y_min = f.value_at(0).lo(), y_max = f.value_at(0).hi();
  for (const auto& v : f.values()) {
    y_min = std::min(y_min, v.lo());
    y_max = std::max(y_max, v.hi());
  }
  const double pad = 0.05 * std::max(1e-9, y_max - y_min);
  y_min -= pad;
  y_max += pad;
  const double w = 900.0, hpx = 600.0;
  auto X = [&](double t) {
    return w * (t - cfg_.t1) / (cfg_.t_inf - cfg_.t1);
  };
  auto Y = [&](double y) { return hpx * (y_max - y) / (y_max - y_min); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << hpx << "\" viewBox=\"0 0 " << w << " " << hpx
      << "\">\n";
  // Band between the hull envelopes of phi^alpha.
  svg << "<path fill=\"#4a90d9\" fill-opacity=\"0.35\" stroke=\"none\" d=\"M";
  const std::size_t stride = std::max<std::size_t>(1, g.size() / 2000);
  for (std::size_t i = 0; i < g.size(); i += stride)
    svg << (i ? " L" : "") << X(g[i]) << ' ' << Y(f.value_at(i).hi());
  for (std::size_t i = g.size(); i-- > 0;) {
    if (i % stride) continue;
    svg << " L" << X(g[i]) << ' ' << Y(f.value_at(i).lo());
  }
  svg << " Z\"/>\n";
  // Chaos-game atoms on top.
  const EmpiricalMeasure m =
      chaos_game(system(), f, probability(),
                 std::min(cfg_.measure.n, 4000), cfg_.measure.burn_in,
                 cfg_.measure.seed);
  for (const auto& atom : m.atoms) {
    const double cy = 0.5 * (atom.s.lo + atom.s.hi);
    svg << "<circle cx=\"" << X(atom.t) << "\" cy=\"" << Y(cy)
        << "\" r=\"1\" fill=\"#c0392b\"/>\n";
  }
  svg << "</svg>\n";
  write_file(dir / "render.svg", svg.str());
}

}  // namespace svf
