#include "henon/harness.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "henon/bifurcation.hpp"
#include "henon/io.hpp"
#include "henon/lyapunov.hpp"
#include "henon/transition.hpp"

namespace henon {

const char* version() { return HENONLAB_VERSION; }

EscapeSummary escape_stats(const MapDistribution& dist, const std::vector<C2Point>& grid, int sequences_per_point,
                           int max_iter, SequenceSeed seed) {
  if (sequences_per_point < 1) throw LabError(ErrorCode::invalid_argument, "sequences_per_point must be >= 1");
  const auto shared = std::make_shared<const MapDistribution>(dist);
  const FiltrationParams params = dist.filtration();
  const long total = static_cast<long>(grid.size()) * sequences_per_point;
  std::vector<Verdict> v(static_cast<size_t>(total));
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < total; ++k) {
    const MapSequence seq = MapSequence::sampled(shared, derive_stream(seed, static_cast<std::uint64_t>(k)));
    v[k] = classify_orbit(seq, grid[static_cast<size_t>(k / sequences_per_point)], params, max_iter).status;
  }
  EscapeSummary s;
  s.total = total;
  for (Verdict x : v) {
    if (x == Verdict::escaped) ++s.escaped;
    else if (x == Verdict::bounded) ++s.bounded;
    else ++s.uncertain;
  }
  return s;
}

std::vector<C2Point> slice_points(const SliceSpec& spec) {
  spec.validate();
  std::vector<C2Point> out;
  out.reserve(static_cast<size_t>(spec.resolution) * spec.resolution);
  for (int j = 0; j < spec.resolution; ++j) {
    for (int i = 0; i < spec.resolution; ++i) out.push_back(spec.pixel(i, j));
  }
  return out;
}

namespace {

struct Context {
  std::string command;
  json config;
  json resolved = json::object();
  std::filesystem::path out_dir;
  SequenceSeed seed;
  std::ostream* out = nullptr;

  ConfigReader reader() { return ConfigReader(config, resolved); }

  void write(const std::string& name, const std::string& bytes) const {
    write_atomic(out_dir / name, bytes);
    *out << "wrote " << (out_dir / name).string() << "\n";
  }

  json report(json result) const {
    return {{"tool", "henonlab"}, {"version", version()}, {"command", command}, {"config", resolved},
            {"result", std::move(result)}};
  }

  void write_json(const std::string& name, const json& result) const { write(name, report(result).dump(2) + "\n"); }
};

MapDistribution read_distribution(Context& ctx) {
  MapDistribution d = parse_distribution(ctx.config, "");
  for (const char* key : {"kind", "maps", "weights", "base", "radius"}) {
    if (ctx.config.contains(key)) ctx.resolved[key] = ctx.config[key];
  }
  if (!ctx.resolved.contains("kind")) ctx.resolved["kind"] = "finite";
  return d;
}

// Explicit point list, or a slice object whose pixel centres form the grid.
std::vector<C2Point> read_points(const ConfigReader& r, const std::string& key) {
  if (!r.has(key)) throw ConfigError(r.at(key), "missing required field");
  const json& v = r.raw(key);
  if (v.is_array()) return parse_points(v, r.at(key));
  return slice_points(parse_slice(r.child(key)));
}

DiscoveryParams read_discovery(const ConfigReader& r, bool* refine) {
  DiscoveryParams d;
  d.burn_in = static_cast<int>(r.integer("burn_in", d.burn_in));
  d.n_record = static_cast<int>(r.integer("n_record", d.n_record));
  d.cluster_eps = r.number("cluster_eps", d.cluster_eps);
  d.support_samples = static_cast<int>(r.integer("support_samples", d.support_samples));
  d.max_rounds = static_cast<int>(r.integer("max_rounds", d.max_rounds));
  d.max_cloud = static_cast<std::size_t>(r.integer("max_cloud", static_cast<long>(d.max_cloud)));
  d.certify_probes = static_cast<int>(r.integer("certify_probes", d.certify_probes));
  d.certify_steps = static_cast<int>(r.integer("certify_steps", d.certify_steps));
  if (d.burn_in < 1000) throw ConfigError(r.at("burn_in"), "must be >= 1000");
  if (!(d.cluster_eps > 0.0)) throw ConfigError(r.at("cluster_eps"), "must be positive");
  if (refine) *refine = r.flag("refine", true);
  return d;
}

int positive(const ConfigReader& r, const std::string& key, long fallback, long minimum = 1) {
  const long v = r.integer(key, fallback);
  if (v < minimum) throw ConfigError(r.at(key), "must be >= " + std::to_string(minimum));
  return static_cast<int>(v);
}

json set_json(const MinimalSetDescriptor& L) {
  json cloud = json::array();
  for (const auto& p : L.cloud) cloud.push_back(point_json(p));
  return {{"id", L.is_infinity() ? json("INFINITY") : json(L.id)},
          {"period", L.period},
          {"parts", L.parts},
          {"capture_radius", L.capture_radius},
          {"contraction", L.contraction},
          {"certified", L.certified},
          {"converged", L.converged},
          {"cloud", cloud}};
}

json issues_json(const std::vector<DiscoveryIssue>& issues) {
  json out = json::array();
  for (const auto& i : issues) out.push_back({{"code", to_string(i.code)}, {"message", i.message}});
  return out;
}

std::string set_label(int id) { return id == kInfinityId ? "T_inf" : "T_" + std::to_string(id); }

DiscoveryResult run_discovery(Context& ctx, const MapDistribution& dist) {
  ConfigReader r = ctx.reader();
  bool refine = true;
  const DiscoveryParams dp = read_discovery(r.child("discovery"), &refine);
  const std::vector<C2Point> grid = read_points(r, "grid");
  const FiltrationParams params = dist.filtration();
  return refine ? discover_with_refinement(dist, params, grid, dp, ctx.seed)
                : discover_minimal_sets(dist, params, grid, dp, ctx.seed);
}

void cmd_render(Context& ctx) {
  const MapDistribution dist = read_distribution(ctx);
  ConfigReader r = ctx.reader();
  const SliceSpec spec = parse_slice(r.child("slice"));
  const int max_iter = positive(r, "max_iter", 2000);
  const double tol = r.number("tol", 1e-6);
  if (!(tol > 0.0)) throw ConfigError(r.at("tol"), "must be positive");
  const std::uint64_t stream = r.u64("stream", 0);
  const MapSequence seq = MapSequence::sampled(dist, {ctx.seed.master_seed, stream});
  const FiltrationParams params = dist.filtration();
  const Raster raster = raster_slice(seq, spec, params, max_iter, tol);

  double v_max = 0.0;
  for (const auto& c : raster.cells) {
    if (c.verdict == Verdict::escaped) v_max = std::max(v_max, c.green);
  }
  std::vector<std::uint16_t> pix(raster.cells.size(), 0);
  for (std::size_t k = 0; k < pix.size(); ++k) {
    const auto& c = raster.cells[k];
    if (c.verdict != Verdict::escaped || v_max <= 0.0) continue;
    pix[k] = static_cast<std::uint16_t>(std::clamp(std::lround(65535.0 * c.green / v_max), 1L, 65535L));
  }
  ctx.write("julia.pgm", pgm_bytes(raster.width, raster.height, pix));

  CsvWriter cells({"i", "j", "verdict", "green", "n"});
  for (int j = 0; j < raster.height; ++j) {
    for (int i = 0; i < raster.width; ++i) {
      const auto& c = raster.at(i, j);
      cells.cell(i).cell(j).cell(std::string(to_string(c.verdict))).cell(c.green).cell(c.n).end_row();
    }
  }
  ctx.write("raster.csv", cells.str());
  const auto boundary = boundary_extract(raster);
  CsvWriter bcsv({"i", "j"});
  for (const auto& p : boundary) bcsv.cell(p.i).cell(p.j).end_row();
  ctx.write("boundary.csv", bcsv.str());
  ctx.write_json("julia.json", {{"v_max", v_max},
                                {"R", params.R},
                                {"c_tel", params.c_tel},
                                {"pixel_pitch", spec.pitch()},
                                {"escaped", raster.count(Verdict::escaped)},
                                {"bounded", raster.count(Verdict::bounded)},
                                {"uncertain", raster.count(Verdict::uncertain)},
                                {"boundary_pixels", boundary.size()}});
}

void cmd_green(Context& ctx) {
  const MapDistribution dist = read_distribution(ctx);
  ConfigReader r = ctx.reader();
  const std::vector<C2Point> pts = read_points(r, "points");
  const int max_iter = positive(r, "max_iter", 2000);
  const double tol = r.number("tol", 1e-6);
  if (!(tol > 0.0)) throw ConfigError(r.at("tol"), "must be positive");
  const std::string dir = r.text("direction", "plus");
  if (dir != "plus" && dir != "minus") throw ConfigError(r.at("direction"), "must be \"plus\" or \"minus\"");
  const std::uint64_t stream = r.u64("stream", 0);
  const FiltrationParams params = dist.filtration();
  const MapSequence seq = MapSequence::sampled(dist, {ctx.seed.master_seed, stream});

  CsvWriter csv({"index", "x_re", "x_im", "y_re", "y_im", "status", "value", "n_used", "error_bound"});
  json rows = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    std::string status = "OK";
    GreenEstimate g;
    try {
      g = dir == "plus" ? green_plus(seq, pts[k], params, tol, max_iter) : green_minus(seq, pts[k], params, tol, max_iter);
    } catch (const GreenIndeterminate& e) {
      status = "UNCERTAIN";
      g = e.partial();
    }
    const auto& z = pts[k];
    csv.cell(static_cast<long>(k)).cell(z.x.real()).cell(z.x.imag()).cell(z.y.real()).cell(z.y.imag());
    csv.cell(status).cell(g.value).cell(g.n_used).cell(g.error_bound).end_row();
    rows.push_back({{"status", status}, {"value", g.value}, {"n_used", g.n_used}, {"error_bound", g.error_bound}});
  }
  ctx.write("green.csv", csv.str());
  ctx.write_json("green.json", {{"R", params.R}, {"c_tel", params.c_tel}, {"c_tel_minus", params.c_tel_minus},
                                {"points", rows}});
}

json lyapunov_json(const LyapunovReport& rep) {
  return {{"exponent", rep.exponent},  {"ci95", rep.ci95_halfwidth},
          {"n", rep.n_steps},          {"samples", rep.samples},
          {"escaped_fraction", rep.escaped_fraction}};
}

void cmd_lyapunov(Context& ctx) {
  const MapDistribution dist = read_distribution(ctx);
  ConfigReader r = ctx.reader();
  const C2Point z = parse_point(r.value("point", point_json({})), r.at("point"));
  const int samples = positive(r, "samples", 100, 10);
  const int n = positive(r, "n", 10000, 100);
  const std::string dir = r.text("direction", "forward");
  if (dir != "forward" && dir != "backward") throw ConfigError(r.at("direction"), "must be \"forward\" or \"backward\"");
  if (dir == "backward" && dist.kind() != DistKind::finite) {
    throw ConfigError("/kind", "backward statistics need a finite distribution");
  }
  auto emit = [&](const LyapunovReport& rep) {
    CsvWriter csv({"run", "escaped", "exponent", "escape_step"});
    for (const auto& run : rep.runs) {
      csv.cell(static_cast<long>(run.stream)).cell(run.escaped ? 1 : 0).cell(run.escaped ? std::string("") : fmt(run.exponent));
      csv.cell(run.escape_step).end_row();
    }
    ctx.write("lyapunov_runs.csv", csv.str());
    ctx.write_json("lyapunov.json", lyapunov_json(rep));
  };
  try {
    emit(dir == "forward" ? lyapunov_statistics(dist, z, samples, n, ctx.seed)
                          : backward_lyapunov_statistics(dist, z, samples, n, ctx.seed));
  } catch (const AllEscaped& e) {
    emit(e.report());
    throw;
  }
}

void cmd_minsets(Context& ctx) {
  const MapDistribution dist = read_distribution(ctx);
  const DiscoveryResult found = run_discovery(ctx, dist);
  json sets = json::array();
  for (const auto& L : found.sets) sets.push_back(set_json(L));
  ctx.write_json("minsets.json", {{"sets", sets},
                                  {"finite_count", found.finite_count()},
                                  {"grid_escaped", found.grid_escaped},
                                  {"grid_bounded", found.grid_bounded},
                                  {"issues", issues_json(found.issues)}});
}

void cmd_tl(Context& ctx) {
  const MapDistribution dist = read_distribution(ctx);
  const DiscoveryResult found = run_discovery(ctx, dist);
  ConfigReader r = ctx.reader();
  const std::vector<C2Point> pts = read_points(r, "points");
  ConfigReader t = r.child("tl");
  const int samples = positive(t, "samples", 1000, 100);
  const int max_iter = positive(t, "max_iter", 10000);
  const CaptureMap cap(found.sets, dist.filtration().R);

  std::vector<std::string> header{"index", "x_re", "x_im", "y_re", "y_im"};
  for (const auto& L : found.sets) header.push_back(set_label(L.id));
  header.push_back("unresolved");
  CsvWriter csv(header);
  double worst_unresolved = 0.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto out = basin_outcomes(dist, cap, pts[k], samples, max_iter, derive_stream(ctx.seed, k));
    const BasinEstimate est = tally_outcomes(found.sets, cap, out);
    const auto& z = pts[k];
    csv.cell(static_cast<long>(k)).cell(z.x.real()).cell(z.x.imag()).cell(z.y.real()).cell(z.y.imag());
    for (double p : est.probabilities) csv.cell(p);
    csv.cell(est.unresolved).end_row();
    worst_unresolved = std::max(worst_unresolved, est.unresolved);
  }
  ctx.write("tl.csv", csv.str());
  json sets = json::array();
  for (const auto& L : found.sets) sets.push_back(set_json(L));
  ctx.write_json("tl.json", {{"sets", sets}, {"points", pts.size()}, {"max_unresolved", worst_unresolved},
                             {"issues", issues_json(found.issues)}});
}

void cmd_mop(Context& ctx) {
  const MapDistribution dist = read_distribution(ctx);
  const DiscoveryResult found = run_discovery(ctx, dist);
  ConfigReader r = ctx.reader();
  const std::vector<C2Point> pts = read_points(r, "test_points");
  ConfigReader m = r.child("mop");
  const int L = static_cast<int>(m.integer("L", 0));
  const int n_lo = positive(m, "n_lo", 1, 0);
  const int n_hi = positive(m, "n_hi", 30);
  RateOptions opt;
  opt.tl_samples = positive(m, "tl_samples", opt.tl_samples, 100);
  opt.tl_max_iter = positive(m, "tl_max_iter", opt.tl_max_iter);
  opt.iterate.budget = m.number("budget", opt.iterate.budget);
  opt.iterate.mc_samples = positive(m, "mc_samples", opt.iterate.mc_samples, 2);
  opt.iterate.seed = derive_stream(ctx.seed, 0x30Bu);
  const RateFit fit = fit_convergence_rate(dist, found.sets, L, pts, n_lo, n_hi, ctx.seed, opt);
  CsvWriter csv({"n", "sup_error"});
  for (std::size_t k = 0; k < fit.ns.size(); ++k) csv.cell(fit.ns[k]).cell(fit.sup_errors[k]).end_row();
  ctx.write("mop.csv", csv.str());
  ctx.write_json("mop.json", {{"lambda_hat", fit.lambda_hat},
                              {"slope", fit.slope},
                              {"r_squared", fit.r_squared},
                              {"n_range", {fit.n_lo, fit.n_hi}},
                              {"floor", fit.floor},
                              {"rate_reported", fit.rate_reported},
                              {"sup_errors", fit.sup_errors},
                              {"note", "sup-norm decay over the probe set; a lower-bound style observation"}});
}

void cmd_dtl(Context& ctx) {
  const MapDistribution dist = read_distribution(ctx);
  if (dist.kind() != DistKind::finite) throw ConfigError("/kind", "dtl needs a finite distribution");
  const DiscoveryResult found = run_discovery(ctx, dist);
  ConfigReader r = ctx.reader();
  const std::vector<C2Point> pts = read_points(r, "points");
  ConfigReader d = r.child("dtl");
  const int L = static_cast<int>(d.integer("L", 0));
  const int i = static_cast<int>(d.integer("i", 0));
  const double h = d.number("h", 0.05);
  const int fd_samples = positive(d, "fd_samples", 20000, 100);
  NeumannOptions opt;
  opt.eps_trunc = d.number("eps_trunc", opt.eps_trunc);
  opt.tl_samples = positive(d, "tl_samples", opt.tl_samples, 100);
  opt.tl_max_iter = positive(d, "max_iter", opt.tl_max_iter);

  CsvWriter csv({"index", "x_re", "x_im", "y_re", "y_im", "neumann", "neumann_error", "finite_difference", "fd_error",
                 "abs_diff", "tolerance"});
  json rows = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const DerivativeEstimate ns = weight_derivative_TL(dist, found.sets, L, i, pts[k], derive_stream(ctx.seed, k), opt);
    const DerivativeEstimate fd = fd_derivative_TL(dist, found.sets, L, i, pts[k], h, fd_samples, opt.tl_max_iter,
                                                   derive_stream(ctx.seed, 0xFD00ULL + k));
    const double diff = std::abs(ns.value - fd.value);
    const double tol = std::max(0.02, 3.0 * std::hypot(ns.error, fd.error));
    const auto& z = pts[k];
    csv.cell(static_cast<long>(k)).cell(z.x.real()).cell(z.x.imag()).cell(z.y.real()).cell(z.y.imag());
    csv.cell(ns.value).cell(ns.error).cell(fd.value).cell(fd.error).cell(diff).cell(tol).end_row();
    rows.push_back({{"neumann", ns.value}, {"terms", ns.terms}, {"finite_difference", fd.value}, {"abs_diff", diff},
                    {"tolerance", tol}});
  }
  ctx.write("dtl.csv", csv.str());
  ctx.write_json("dtl.json", {{"points", rows}});
}

void cmd_bifurcate(Context& ctx) {
  ConfigReader r = ctx.reader();
  if (!r.has("family")) throw ConfigError("/family", "missing required field");
  const NoiseFamily fam = parse_family(r.raw("family"), "/family");
  std::vector<double> t_grid;
  const json tg = r.value("t_grid", json{{"steps", 11}});
  if (tg.is_array()) {
    for (std::size_t k = 0; k < tg.size(); ++k) {
      if (!tg[k].is_number()) throw ConfigError("/t_grid/" + std::to_string(k), "expected a number");
      t_grid.push_back(tg[k].get<double>());
    }
  } else if (tg.is_object() && tg.contains("steps") && tg["steps"].is_number_integer() && tg["steps"].get<int>() >= 2) {
    const int steps = tg["steps"].get<int>();
    for (int k = 0; k < steps; ++k) t_grid.push_back(static_cast<double>(k) / (steps - 1));
  } else {
    throw ConfigError("/t_grid", "expected a list of t values or {\"steps\": n >= 2}");
  }
  if (!std::is_sorted(t_grid.begin(), t_grid.end()) || t_grid.empty() || t_grid.front() < 0.0 || t_grid.back() > 1.0) {
    throw ConfigError("/t_grid", "t values must be sorted within [0, 1]");
  }
  ScanParams sp;
  sp.discovery = read_discovery(r.child("discovery"), nullptr);
  sp.grid = read_points(r, "grid");
  if (r.has("probe_points")) sp.probe_points = read_points(r, "probe_points");
  sp.tl_samples = positive(r, "tl_samples", sp.tl_samples);
  sp.tl_max_iter = positive(r, "tl_max_iter", sp.tl_max_iter);

  const SweepReport rep = scan_family(fam, t_grid, sp, ctx.seed);
  const auto intervals = locate_bifurcations(rep);
  CsvWriter csv({"t", "minset_count", "all_attracting"});
  json per_t = json::array();
  for (const auto& rec : rep.per_t) {
    csv.cell(rec.t).cell(rec.minset_count).cell(rec.all_attracting ? 1 : 0).end_row();
    json ds = json::array();
    for (const auto& s : rec.descriptors) {
      ds.push_back({{"period", s.period}, {"cloud_size", s.cloud_size}, {"capture_radius", s.capture_radius},
                    {"contraction", s.contraction}, {"certified", s.certified}});
    }
    per_t.push_back({{"t", rec.t},
                     {"radius", rec.radius},
                     {"minset_count", rec.minset_count},
                     {"finite_minsets", rec.finite_minsets},
                     {"all_attracting", rec.all_attracting},
                     {"unresolved_mass", rec.unresolved_mass},
                     {"mean_stable", rec.mean_stable},
                     {"descriptors", ds},
                     {"issues", issues_json(rec.issues)}});
  }
  ctx.write("bifurcate.csv", csv.str());
  json iv = json::array();
  for (const auto& [a, b] : intervals) iv.push_back({a, b});
  ctx.write_json("bifurcate.json",
                 {{"t_grid", rep.t_grid}, {"per_t", per_t}, {"intervals", iv},
                  {"monotonicity_violations", rep.monotonicity_violations}});
}

void cmd_escape_stats(Context& ctx) {
  const MapDistribution dist = read_distribution(ctx);
  ConfigReader r = ctx.reader();
  const std::vector<C2Point> grid = read_points(r, "grid");
  const int per_point = positive(r, "sequences_per_point", 1);
  const int max_iter = positive(r, "max_iter", 10000);
  const EscapeSummary s = escape_stats(dist, grid, per_point, max_iter, ctx.seed);
  ctx.write_json("escape_stats.json", {{"pairs", s.total},
                                       {"escaped", s.escaped},
                                       {"bounded", s.bounded},
                                       {"uncertain", s.uncertain},
                                       {"escaped_fraction", s.escaped_fraction()},
                                       {"bounded_fraction", s.bounded_fraction()},
                                       {"uncertain_fraction", s.uncertain_fraction()}});
}

json load_config(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("/", "cannot read config file " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("/", "config must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw ConfigError("/", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random Henon-map dynamics laboratory", "henonlab"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  int threads = 0;
  app.add_option("--config", config_path, "experiment config (JSON path, or - for stdin)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "master seed (overrides the config)");
  app.add_option("--threads", threads, "worker threads (default: hardware)")->check(CLI::NonNegativeNumber);

  const std::vector<std::pair<std::string, void (*)(Context&)>> commands = {
      {"render-julia", cmd_render},  {"green", cmd_green}, {"lyapunov", cmd_lyapunov},
      {"minsets", cmd_minsets},      {"tl", cmd_tl},       {"mop", cmd_mop},
      {"dtl", cmd_dtl},              {"bifurcate", cmd_bifurcate},
      {"escape-stats", cmd_escape_stats}};
  for (const auto& c : commands) app.add_subcommand(c.first, "run the " + c.first + " experiment");
  app.add_subcommand("selftest", "run the built-in example suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (threads > 0) omp_set_num_threads(threads);

  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "selftest") {
    const SelftestResult r = run_selftest(out);
    out << r.passed << " passed, " << r.failed << " failed\n";
    return r.failed == 0 ? 0 : 3;
  }

  try {
    if (config_path.empty()) throw ConfigError("/", "--config is required for " + name);
    Context ctx;
    ctx.command = name;
    ctx.out = &out;
    ctx.config = load_config(config_path);
    ctx.out_dir = out_dir;
    {
      ConfigReader r = ctx.reader();
      const std::uint64_t s = seed ? *seed : r.u64("seed", 1);
      ctx.resolved["seed"] = s;
      ctx.seed = {s, 0};
    }
    std::filesystem::create_directories(ctx.out_dir);
    for (const auto& c : commands) {
      if (c.first == name) c.second(ctx);
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const LabError& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::invalid_argument ? 2 : 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace henon
