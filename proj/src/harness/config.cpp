#include "invlearn/harness/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "invlearn/multi_echelon.hpp"
#include "invlearn/multi_product.hpp"
#include "invlearn/owms.hpp"

namespace invlearn {

namespace {

using nlohmann::json;

Vec read_vec(const json& j) { return j.get<std::vector<double>>(); }

DemandSpec parse_demand(const json& j) {
  DemandSpec d;
  d.family = j.at("family").get<std::string>();
  d.dimension = j.value("dimension", 1);
  if (d.family == "uniform") {
    d.a = j.at("a").get<double>();
    d.b = j.at("b").get<double>();
  } else if (d.family == "normal") {
    d.mu = j.at("mu").get<double>();
    d.sigma = j.at("sigma").get<double>();
  } else if (d.family == "poisson") {
    d.lambda = j.at("lambda").get<double>();
  } else if (d.family == "geometric") {
    d.pgeom = j.at("p").get<double>();
  } else if (d.family == "gamma") {
    d.r = j.at("r").get<double>();
    d.lambda = j.at("lambda").get<double>();
  } else {
    throw std::invalid_argument("unknown demand family: " + d.family);
  }
  if (j.contains("correlation")) {
    const auto& rows = j.at("correlation");
    for (const auto& row : rows)
      for (const auto& v : row) d.correlation.push_back(v.get<double>());
  }
  d.density_upper = j.value("density_upper", 0.0);
  d.density_lower = j.value("density_lower", 0.0);
  return d;
}

PolicySpec parse_policy(const json& j) {
  PolicySpec p;
  p.type = j.at("type").get<std::string>();
  p.name = j.value("name", p.type);
  p.eta = j.value("eta", 0.1);
  if (p.type == "meta") {
    const auto& s = j.at("schedule");
    p.schedule_kind = s.at("kind").get<std::string>();
    p.K = s.value("K", 1L);
    p.alpha = s.value("alpha", 0.0);
    p.varsigma = s.value("varsigma", 0.0);
  } else if (p.type == "sgd") {
    p.p = j.value("p", 0.5);
  } else if (p.type == "saa") {
    p.initial_level = j.value("initial_level", 0.0);
  } else if (p.type != "planner") {  // planner: two_echelon's doubling-epoch runner
    throw std::invalid_argument("unknown policy type: " + p.type);
  }
  return p;
}

std::string trim_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// "eta_grid"/"base_grid" expand one spec into one policy per grid value
void expand_policy(const json& j, std::vector<PolicySpec>& out) {
  const PolicySpec base = parse_policy(j);
  const bool eta_grid = j.value("eta_grid", false);
  const bool base_grid =
      j.contains("schedule") && j.at("schedule").value("base_grid", false);
  std::vector<PolicySpec> expanded{base};
  if (eta_grid) {
    expanded.clear();
    for (double eta : kEtaGrid) {
      PolicySpec p = base;
      p.eta = eta;
      p.name = base.name + "-eta" + trim_number(eta);
      expanded.push_back(p);
    }
  }
  if (base_grid) {
    std::vector<PolicySpec> with_base;
    for (const PolicySpec& e : expanded) {
      for (double vs : kBaseGrid) {
        PolicySpec p = e;
        p.schedule_kind = "exponential_base";
        p.varsigma = vs;
        p.name = e.name + "-base" + trim_number(vs);
        with_base.push_back(p);
      }
    }
    expanded = std::move(with_base);
  }
  for (auto& p : expanded) out.push_back(std::move(p));
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  const json j = json::parse(text);
  ExperimentConfig cfg;
  cfg.application = j.at("application").get<std::string>();
  cfg.demand = parse_demand(j.at("demand"));
  if (j.contains("instance")) {
    const auto& inst = j.at("instance");
    if (inst.contains("h")) cfg.h = read_vec(inst.at("h"));
    if (inst.contains("b")) cfg.b = read_vec(inst.at("b"));
    if (inst.contains("c")) cfg.c = read_vec(inst.at("c"));
    if (inst.contains("rho")) cfg.rho = read_vec(inst.at("rho"));
    if (inst.contains("box_upper")) cfg.box_upper = read_vec(inst.at("box_upper"));
    if (inst.contains("A")) {
      for (const auto& row : inst.at("A"))
        for (const auto& v : row) cfg.A.push_back(v.get<double>());
    }
    cfg.owms_halt_most_beneficial = inst.value("halt_most_beneficial", false);
    if (cfg.application == "two_echelon") {
      auto& te = cfg.two_echelon;
      te.h1 = inst.value("h1", te.h1);
      te.h2 = inst.value("h2", te.h2);
      te.p1 = inst.value("p1", te.p1);
      te.s_max = inst.value("s_max", te.s_max);
      te.C1 = inst.value("C1", te.C1);
      te.dbar = inst.value("dbar", te.dbar);
      te.eta = inst.value("eta", te.eta);
      te.K = inst.value("K", te.K);
      te.s1_init = inst.value("s1_init", te.s1_init);
      te.s2_init = inst.value("s2_init", te.s2_init);
    }
  }
  for (const auto& p : j.at("policies")) expand_policy(p, cfg.policies);
  for (const auto& t : j.at("horizons")) cfg.horizons.push_back(t.get<long>());
  cfg.replications = j.value("replications", 100L);
  cfg.seed = j.value("seed", 1ULL);
  cfg.output = j.value("output", std::string("results.csv"));
  cfg.curves = j.value("curves", false);
  cfg.timing = j.value("timing", true);
  cfg.oracle_samples = j.value("oracle_samples", 1000000L);
  cfg.oracle_iters = j.value("oracle_iters", 10000L);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

DemandModel make_demand(const DemandSpec& spec) {
  DemandModel m = [&spec]() {
    if (spec.family == "uniform") return DemandModel::uniform(spec.a, spec.b, spec.dimension);
    if (spec.family == "normal")
      return DemandModel::clipped_normal(spec.mu, spec.sigma, spec.dimension);
    if (spec.family == "poisson") return DemandModel::poisson(spec.lambda, spec.dimension);
    if (spec.family == "geometric") return DemandModel::geometric(spec.pgeom, spec.dimension);
    if (spec.family == "gamma")
      return DemandModel::clipped_gamma(spec.r, spec.lambda, spec.dimension);
    throw std::invalid_argument("unknown demand family: " + spec.family);
  }();
  if (!spec.correlation.empty()) m = m.with_correlation(spec.correlation);
  if (spec.density_upper > 0.0) m = m.with_density_upper(spec.density_upper);
  if (spec.density_lower > 0.0) m = m.with_density_lower(spec.density_lower);
  return m;
}

std::unique_ptr<Application> make_application(const ExperimentConfig& cfg) {
  DemandModel demand = make_demand(cfg.demand);
  if (cfg.application == "multiproduct") {
    const int n = static_cast<int>(cfg.h.size());
    std::vector<Halfspace> hs;
    if (!cfg.A.empty()) {
      const int m = static_cast<int>(cfg.rho.size());
      if (static_cast<int>(cfg.A.size()) != m * n)
        throw std::invalid_argument("multiproduct: A must be m x n with m = len(rho)");
      for (int i = 0; i < m; ++i)
        hs.push_back({Vec(cfg.A.begin() + i * n, cfg.A.begin() + (i + 1) * n), cfg.rho[i]});
    }
    std::optional<Vec> box;
    if (!cfg.box_upper.empty()) box = cfg.box_upper;
    ConstraintSet set(n, Vec(n, 0.0), box, std::move(hs));
    return std::make_unique<MultiProductInstance>(cfg.h, cfg.b, std::move(set),
                                                  std::move(demand));
  }
  if (cfg.application == "multiechelon")
    return std::make_unique<MultiEchelonInstance>(cfg.h, cfg.b, cfg.rho, std::move(demand));
  if (cfg.application == "owms")
    return std::make_unique<OwmsInstance>(cfg.h, cfg.b, cfg.c, cfg.rho, std::move(demand),
                                          cfg.owms_halt_most_beneficial);
  throw std::invalid_argument("unknown application: " + cfg.application);
}

BatchSchedule make_schedule(const PolicySpec& spec, long T) {
  if (spec.schedule_kind == "fixed_time") return BatchSchedule::fixed_time(T);
  if (spec.schedule_kind == "any_time_linear") return BatchSchedule::any_time_linear(spec.K);
  if (spec.schedule_kind == "exponential") {
    if (spec.varsigma > 0.0) return BatchSchedule::exponential_base(spec.varsigma);
    return BatchSchedule::exponential(spec.eta, spec.alpha);
  }
  if (spec.schedule_kind == "exponential_base")
    return BatchSchedule::exponential_base(spec.varsigma);
  throw std::invalid_argument("unknown schedule kind: " + spec.schedule_kind);
}

std::vector<std::string> validate_config(const ExperimentConfig& cfg) {
  std::vector<std::string> notes;
  if (cfg.horizons.empty()) notes.push_back("error: empty horizon list");
  for (long T : cfg.horizons)
    if (T < 1) notes.push_back("error: horizon must be >= 1");
  if (cfg.replications < 1) notes.push_back("error: replications must be >= 1");

  DemandModel demand = make_demand(cfg.demand);
  for (const auto& w : demand.warnings()) notes.push_back("demand: " + w);

  if (cfg.application == "two_echelon") {
    if (cfg.two_echelon.s_max <= 0.0) notes.push_back("error: two_echelon needs s_max > 0");
    if (cfg.two_echelon.dbar <= 1.0) notes.push_back("error: two_echelon needs dbar > 1");
    const double q =
        (cfg.two_echelon.h2 + cfg.two_echelon.p1) / (cfg.two_echelon.h1 + cfg.two_echelon.p1);
    if (!(q > 0.0 && q <= 1.0))
      notes.push_back("error: quantile target (h2+p1)/(h1+p1) outside (0,1]");
    return notes;
  }

  auto app = make_application(cfg);
  if (auto* owms = dynamic_cast<const OwmsInstance*>(app.get()))
    for (const auto& w : owms->warnings()) notes.push_back("instance: " + w);
  const TheoryConstants constants = app->theory_constants();
  const long Tmax = *std::max_element(cfg.horizons.begin(), cfg.horizons.end());
  for (const auto& spec : cfg.policies) {
    if (spec.type != "meta") continue;
    const BatchSchedule schedule = make_schedule(spec, Tmax);
    for (const auto& w : stepsize_warnings(schedule, spec.eta, constants))
      notes.push_back("policy " + spec.name + ": " + w);
  }
  return notes;
}

}  // namespace invlearn
