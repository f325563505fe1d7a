#include "critmult/cli.hpp"

#include "critmult/conditions.hpp"
#include "critmult/errors.hpp"
#include "critmult/expansion_lab.hpp"
#include "critmult/solver_1d.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

namespace critmult {

namespace {

using json = nlohmann::json;

// Malformed or unknown input; maps to the usage exit status.
struct UsageError : Error {
  using Error::Error;
};

std::string num(double x) {
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  if (std::isnan(x))
    return "nan";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

class Params {
public:
  Params(Command c, const std::map<std::string, std::string>& raw) : raw_(raw) {
    const auto& docs = parameter_docs(c);
    for (const auto& [k, v] : raw)
      if (!docs.count(k))
        throw UsageError("unknown parameter '" + k + "' for " +
                         std::string(to_string(c)));
  }

  bool has(const std::string& k) const { return raw_.count(k) > 0; }

  std::string str(const std::string& k, std::string def) const {
    auto it = raw_.find(k);
    return it == raw_.end() ? def : it->second;
  }

  double real(const std::string& k, double def) const {
    auto it = raw_.find(k);
    if (it == raw_.end())
      return def;
    const auto& s = it->second;
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
      throw UsageError("parameter '" + k + "' is not a finite number: " + s);
    return v;
  }

  long integer(const std::string& k, long def) const {
    auto it = raw_.find(k);
    if (it == raw_.end())
      return def;
    const auto& s = it->second;
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw UsageError("parameter '" + k + "' is not an integer: " + s);
    return v;
  }

  bool flag(const std::string& k) const {
    const auto s = str(k, "false");
    if (s == "true" || s == "1")
      return true;
    if (s == "false" || s == "0")
      return false;
    throw UsageError("parameter '" + k + "' is not a boolean: " + s);
  }

private:
  const std::map<std::string, std::string>& raw_;
};

int threads_from_env() {
  const char* v = std::getenv("CRITMULT_THREADS");
  if (!v)
    return 1;
  int n = 0;
  const std::string s(v);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n < 1)
    throw UsageError("CRITMULT_THREADS must be a positive integer");
  return n;
}

// ---- interval / table ----

ExampleParams example_params(ExampleId id, const Params& p) {
  ExampleParams e = default_params(id);
  e.n = static_cast<int>(p.integer("n", e.n));
  e.t = p.real("t", e.t);
  e.a = p.real("a", e.a);
  e.b2 = p.real("b2", e.b2);
  e.A1 = static_cast<int>(p.integer("A1", e.A1));
  e.A2 = static_cast<int>(p.integer("A2", e.A2));
  return e;
}

FProfile f_profile(ExampleId id, const ExampleParams& e, const Params& p) {
  FProfile f = default_f_profile(id, e);
  f.f_max = p.real("fmax", f.f_max);
  f.f_at_peak = f.f_max;
  f.f_min = p.real("fmin", f.f_min);
  f.f_avg = p.real("favg", f.f_avg);
  f.laplacian_at_peak = p.real("f-lap", f.laplacian_at_peak);
  f.vanishing_order = static_cast<int>(p.integer("f-order", f.vanishing_order));
  return f;
}

json params_json(const ExampleParams& e) {
  return {{"n", e.n}, {"t", e.t}, {"a", e.a}, {"b2", e.b2}, {"A1", e.A1}, {"A2", e.A2}};
}

json interval_json(const ExampleInterval& r, const FProfile& f) {
  const auto& I = r.interval;
  json diag = json::array();
  for (const auto& d : I.diagnostics)
    diag.push_back({{"label", d.label},
                    {"status", to_string(d.status)},
                    {"detail", d.detail},
                    {"threshold", d.threshold}});
  json bounds = json::array();
  for (const auto& b : r.bounds)
    bounds.push_back({{"label", b.label},
                      {"lo", b.bound.lo()},
                      {"hi", b.bound.hi()},
                      {"source", b.source}});
  return {{"example", to_string(r.id)},
          {"params", params_json(r.params)},
          {"f_profile",
           {{"fmax", f.f_max},
            {"fmin", f.f_min},
            {"favg", f.f_avg},
            {"f_lap", f.laplacian_at_peak},
            {"f_order", f.vanishing_order}}},
          {"lo", I.lo},
          {"hi", I.hi},
          {"lo_strict", I.lo_strict},
          {"hi_strict", I.hi_strict},
          {"empty", I.empty},
          {"unknown", I.unknown},
          {"diagnostics", diag},
          {"bounds", bounds}};
}

const char* kIntervalCsvHeader =
    "example,n,t,a,b2,A1,A2,lo,hi,lo_strict,hi_strict,empty,unknown\n";

std::string interval_csv_row(const ExampleInterval& r) {
  const auto& e = r.params;
  const auto& I = r.interval;
  std::ostringstream o;
  o << to_string(r.id) << ',' << e.n << ',' << num(e.t) << ',' << num(e.a)
    << ',' << num(e.b2) << ',' << e.A1 << ',' << e.A2 << ',' << num(I.lo)
    << ',' << num(I.hi) << ',' << I.lo_strict << ',' << I.hi_strict << ','
    << I.empty << ',' << I.unknown << '\n';
  return o.str();
}

std::string run_interval(const RunRequest& req) {
  Params p(req.command, req.parameters);
  if (!p.has("example"))
    throw UsageError("interval requires --example");
  const auto id = parse_example_id(p.str("example", ""));
  if (!id)
    throw UsageError("unknown example '" + p.str("example", "") + "'");
  const auto e = example_params(*id, p);
  const auto f = f_profile(*id, e, p);
  const auto r = example_interval(*id, e, f);
  if (req.format == OutputFormat::Csv)
    return kIntervalCsvHeader + interval_csv_row(r);
  return interval_json(r, f).dump(2) + "\n";
}

std::string run_table(const RunRequest& req) {
  Params p(req.command, req.parameters);
  std::vector<ExampleId> ids;
  if (p.flag("all")) {
    ids.assign(std::begin(kAllExamples), std::end(kAllExamples));
  } else if (p.has("example")) {
    const auto id = parse_example_id(p.str("example", ""));
    if (!id)
      throw UsageError("unknown example '" + p.str("example", "") + "'");
    ids.push_back(*id);
  } else {
    throw UsageError("table requires --all or --example");
  }
  std::vector<ExampleInterval> rows;
  std::vector<FProfile> fs;
  for (auto id : ids) {
    const auto e = default_params(id);
    fs.push_back(default_f_profile(id, e));
    rows.push_back(example_interval(id, e, fs.back()));
  }
  if (req.format == OutputFormat::Json) {
    json arr = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
      arr.push_back(interval_json(rows[i], fs[i]));
    return json{{"rows", arr}}.dump(2) + "\n";
  }
  std::ostringstream o;
  o << "# default parameters per row; f profile: f=1 for constant-weight "
       "examples, else fmax=1 favg=1e-6 fmin=1e-7 flat to order n at the peak\n";
  o << kIntervalCsvHeader;
  for (const auto& r : rows)
    o << interval_csv_row(r);
  return o.str();
}

// ---- solve ----

std::vector<StartKind> parse_starts(const std::string& s) {
  std::vector<StartKind> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto k = parse_start_kind(tok);
    if (!k)
      throw UsageError("unknown start kind '" + tok + "'");
    out.push_back(*k);
  }
  return out;
}

std::string run_solve(const RunRequest& req) {
  Params p(req.command, req.parameters);
  const long grid = p.integer("grid", 256);
  if (grid < 1 || grid > (1L << 24))
    throw PreconditionError("grid size out of range");
  const double length = p.real("length", 2.0 * std::numbers::pi);
  auto pr = ReducedProblem::uniform(length, p.real("weight", 1.0),
                                    p.real("alpha", 1.0), p.real("p", 5.0),
                                    static_cast<int>(grid));
  const std::string fkind = p.str("f", "constant");
  const double fh = p.real("f-height", 0.5);
  const double fk = p.real("f-concentration", 4.0);
  if (fkind == "constant") {
    for (auto& v : pr.f_samples)
      v = p.real("f-value", 1.0);
  } else if (fkind == "bump") {
    // von Mises bump centred at length / 2
    for (int i = 0; i < pr.grid(); ++i) {
      const double th = 2.0 * std::numbers::pi * i / pr.grid();
      pr.f_samples[i] = 1.0 + fh * std::exp(fk * (std::cos(th - std::numbers::pi) - 1.0));
    }
  } else {
    throw UsageError("unknown f model '" + fkind + "'");
  }
  if (p.has("orbit-volume"))
    pr.orbit_volume = p.real("orbit-volume", 1.0);

  SolverConfig cfg;
  if (p.has("starts"))
    cfg.starts = parse_starts(p.str("starts", ""));
  cfg.seed = static_cast<std::uint64_t>(p.integer("seed", static_cast<long>(cfg.seed)));
  cfg.threads = threads_from_env();
  pr.validate();
  cfg.validate();
  const auto r = minimize(pr, cfg);

  auto samples_csv = [&] {
    std::ostringstream o;
    o << "s,u,f\n";
    for (int i = 0; i < pr.grid(); ++i)
      o << num(i * pr.h()) << ',' << num(r.u[i]) << ',' << num(pr.f_samples[i]) << '\n';
    return o.str();
  };
  if (p.has("dump")) {
    std::ofstream out(p.str("dump", ""));
    if (!out)
      throw UsageError("cannot write '" + p.str("dump", "") + "'");
    out << samples_csv();
  }
  if (req.format == OutputFormat::Csv)
    return samples_csv();

  const auto [mn, mx] = std::minmax_element(r.u.begin(), r.u.end());
  json j = {{"length", pr.length},
            {"weight", pr.weight},
            {"alpha", pr.alpha},
            {"p", pr.p},
            {"grid", pr.grid()},
            {"quotient_value", r.quotient_value},
            {"quotient_value_meaning", "upper bound for the invariant infimum"},
            {"energy", r.energy},
            {"el_residual", r.el_residual},
            {"classification", to_string(r.classification)},
            {"threshold", r.threshold ? json(*r.threshold) : json(nullptr)},
            {"below_threshold", r.below_threshold},
            {"converged", r.converged},
            {"start", to_string(r.start)},
            {"seed", r.seed},
            {"descent_iterations", r.descent_iterations},
            {"newton_iterations", r.newton_iterations},
            {"u_min", *mn},
            {"u_max", *mx}};
  return j.dump(2) + "\n";
}

// ---- expansion ----

std::string run_expansion(const RunRequest& req) {
  Params p(req.command, req.parameters);
  ExpansionConfig c;
  c.N = static_cast<int>(p.integer("N", 6));
  c.delta = p.real("delta", 1.0);
  c.alpha = p.real("alpha", 1.0);
  c.A = p.real("A", 1.0);
  const auto model = p.str("model", "euclidean");
  if (model == "euclidean")
    c.model = DensityModel::Euclidean;
  else if (model == "round-sphere")
    c.model = DensityModel::RoundSphere;
  else
    throw UsageError("unknown density model '" + model + "'");
  c.curvature = p.real("curvature", 1.0);
  c.q = p.real("q", 0.0);
  c.f0 = p.real("f0", 1.0);
  c.lap_f = p.real("f-lap", 0.0);
  const double lo = p.real("eps-min", 1e-6), hi = p.real("eps-max", 1e-3);
  const long count = p.integer("eps-count", 8);
  if (!(lo > 0.0 && lo < hi) || count < 4 || count > 1000)
    throw PreconditionError("epsilon window needs 0 < eps-min < eps-max and 4..1000 points");
  for (long i = 0; i < count; ++i)
    c.epsilons.push_back(c.delta * c.delta * hi *
                         std::pow(lo / hi, static_cast<double>(i) / (count - 1)));
  const auto fit = fit_and_compare(c);
  if (req.format == OutputFormat::Csv) {
    std::ostringstream o;
    o << "epsilon,quotient\n";
    for (std::size_t i = 0; i < fit.epsilons.size(); ++i)
      o << num(fit.epsilons[i]) << ',' << num(fit.values[i]) << '\n';
    return o.str();
  }
  json j = {{"N", c.N},
            {"delta", c.delta},
            {"alpha", c.alpha},
            {"A", c.A},
            {"model", to_string(c.model)},
            {"curvature", c.curvature},
            {"q", c.q},
            {"f0", c.f0},
            {"f_lap", c.lap_f},
            {"limit_fitted", fit.limit_fitted},
            {"limit_exact", fit.limit_exact},
            {"c1_fitted", fit.c1_fitted},
            {"c1_predicted", fit.c1_predicted},
            {"window", {{"eps_min", fit.eps_min}, {"eps_max", fit.eps_max}}}};
  return j.dump(2) + "\n";
}

} // namespace

std::string_view to_string(Command c) {
  switch (c) {
  case Command::Interval:
    return "interval";
  case Command::Solve:
    return "solve";
  case Command::Expansion:
    return "expansion";
  case Command::Table:
    return "table";
  }
  return "interval";
}

std::optional<Command> parse_command(std::string_view s) {
  for (auto c : {Command::Interval, Command::Solve, Command::Expansion, Command::Table})
    if (to_string(c) == s)
      return c;
  return std::nullopt;
}

const std::map<std::string, std::string>& parameter_docs(Command c) {
  static const std::map<std::string, std::string> interval = {
      {"example", "example id"},
      {"n", "manifold dimension"},
      {"t", "circle radius"},
      {"a", "circle radius (three-factor product)"},
      {"b2", "squared radius of the 2-sphere factor"},
      {"A1", "order of the first group"},
      {"A2", "order of the second group"},
      {"fmax", "max f"},
      {"fmin", "min f"},
      {"favg", "mean of f"},
      {"f-lap", "Laplacian of f at its maximum"},
      {"f-order", "order to which derivatives of f vanish at its maximum"}};
  static const std::map<std::string, std::string> table = {
      {"all", "all examples at default parameters"},
      {"example", "a single example at default parameters"}};
  static const std::map<std::string, std::string> solve = {
      {"length", "circle length"},
      {"weight", "fiber weight of every integral"},
      {"alpha", "linear coefficient"},
      {"p", "exponent"},
      {"grid", "number of grid points"},
      {"starts", "comma-separated start kinds"},
      {"seed", "seed of the random start"},
      {"f", "constant | bump"},
      {"f-value", "value of a constant f"},
      {"f-height", "bump height above 1"},
      {"f-concentration", "bump concentration"},
      {"orbit-volume", "minimal orbit volume for the threshold comparison"},
      {"dump", "write (s, u, f) samples as CSV to this path"}};
  static const std::map<std::string, std::string> expansion = {
      {"N", "quotient dimension"},
      {"delta", "cutoff radius"},
      {"alpha", "linear coefficient"},
      {"A", "fiber volume at the centre"},
      {"model", "euclidean | round-sphere"},
      {"curvature", "sectional curvature of the round-sphere model"},
      {"q", "Laplacian of the fiber volume at the centre divided by A"},
      {"f0", "f at the centre"},
      {"f-lap", "Laplacian of f at the centre"},
      {"eps-min", "smallest epsilon / delta^2"},
      {"eps-max", "largest epsilon / delta^2"},
      {"eps-count", "number of epsilons"}};
  switch (c) {
  case Command::Interval:
    return interval;
  case Command::Table:
    return table;
  case Command::Solve:
    return solve;
  case Command::Expansion:
    return expansion;
  }
  return interval;
}

RunResult run(const RunRequest& req) {
  RunResult res;
  try {
    switch (req.command) {
    case Command::Interval:
      res.output = run_interval(req);
      break;
    case Command::Table:
      res.output = run_table(req);
      break;
    case Command::Solve:
      res.output = run_solve(req);
      break;
    case Command::Expansion:
      res.output = run_expansion(req);
      break;
    }
    if (req.output_path) {
      std::ofstream out(*req.output_path);
      if (!out)
        throw UsageError("cannot write '" + *req.output_path + "'");
      out << res.output;
      res.output.clear();
    }
  } catch (const UsageError& e) {
    res = {exit_code::usage, {}, e.what()};
  } catch (const HypothesisError& e) {
    res = {exit_code::hypothesis, {}, std::string("hypothesis violated: ") + e.what()};
  } catch (const PreconditionError& e) {
    res = {exit_code::hypothesis, {}, std::string("precondition violated: ") + e.what()};
  } catch (const DomainError& e) {
    res = {exit_code::hypothesis, {}, std::string("outside the domain: ") + e.what()};
  } catch (const NumericError& e) {
    res = {exit_code::numeric, {}, std::string("numerical failure: ") + e.what()};
  }
  return res;
}

} // namespace critmult
