#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "su2f/su2f.h"

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, long long, std::string, bool>;

constexpr const char* kOutputDirEnv = "SU2F_OUTPUT_DIR";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> failures;
};

void check(su2f_status status) {
  if (status == SU2F_OK) return;
  throw UsageError(std::string(su2f_status_string(status)) + ": " + su2f_last_error());
}

struct Series {
  su2f_series* ptr = nullptr;
  Series(const std::string& spec, int n_max) { check(su2f_series_from_spec(spec.c_str(), n_max, &ptr)); }
  Series(const Series&) = delete;
  Series& operator=(const Series&) = delete;
  ~Series() { su2f_series_free(ptr); }
};

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  struct {
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string out = "\"";
      for (char ch : v) out += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
      return out + "\"";
    }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

std::string json_cell(const Cell& c) {
  struct {
    std::string operator()(double v) const { return std::isfinite(v) ? format_double(v) : "null"; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const { return Json(v).dump(); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

std::string wall_clock_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// The wall-clock line (CSV) or meta.wall_clock member (JSON) is the only
// part of the output that varies between runs with the same config and seed.
std::string render_csv(const std::string& command, const Json& config, std::uint64_t seed, const Table& t,
                       const std::string& started, double elapsed) {
  std::ostringstream out;
  out << "# wall_clock: " << started << " elapsed_s=" << format_double(elapsed) << "\n";
  out << "# su2f " << su2f_version() << "\n";
  out << "# command: " << command << "\n";
  out << "# config: " << config.dump() << "\n";
  out << "# seed: " << seed << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string render_json(const std::string& command, const Json& config, std::uint64_t seed, const Table& t,
                        const std::string& started, double elapsed) {
  std::ostringstream out;
  out << "{\"meta\":{\"wall_clock\":{\"started\":" << Json(started).dump()
      << ",\"elapsed_s\":" << format_double(elapsed) << "},";
  out << "\"version\":" << Json(su2f_version()).dump() << ",\"command\":" << Json(command).dump()
      << ",\"config\":" << config.dump() << ",\"seed\":" << seed << ",\"columns\":" << Json(t.columns).dump()
      << "},\n\"rows\":[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out << (r ? ",\n" : "\n") << "{";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      out << (i ? "," : "") << Json(t.columns[i]).dump() << ":" << json_cell(t.rows[r][i]);
    out << "}";
  }
  out << "\n]}\n";
  return out.str();
}

std::vector<long long> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw UsageError(flag + ": cannot parse '" + s + "' as an integer");
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(item));
      continue;
    }
    const long long lo = to_int(item.substr(0, dots));
    const long long hi = to_int(item.substr(dots + 2));
    if (hi < lo) throw UsageError(flag + ": empty range '" + item + "'");
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = (item == "pi") ? std::numbers::pi : std::stod(item, &used);
      if (item == "pi") used = item.size();
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw UsageError(flag + ": cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

int to_int_checked(long long v, const std::string& flag) {
  if (v < 0 || v > 1'000'000'000) throw UsageError(flag + ": value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

su2f_mode parse_mode(const std::string& m) {
  if (m == "polyhedral") return SU2F_POLYHEDRAL;
  if (m == "spherical") return SU2F_SPHERICAL;
  throw UsageError("--mode: expected polyhedral or spherical, got '" + m + "'");
}

struct Common {
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = 0;
};

struct KernelCheck {
  std::string N = "0..200";
  std::size_t grid = 2000;
  double pole_radius = 1e-3;
};

Table run_kernel_check(const KernelCheck& o, Json& config) {
  config["N"] = o.N;
  config["grid"] = o.grid;
  config["pole_radius"] = o.pole_radius;
  if (o.grid < 2) throw UsageError("--grid: need at least 2 points");
  Table t{{"N", "max_abs_diff", "tolerance", "pass"}, {}, {}};
  const double pi = std::numbers::pi;
  for (long long N : parse_int_list(o.N, "--N")) {
    const int n = to_int_checked(N, "--N");
    double worst = 0.0;
    for (std::size_t i = 0; i < o.grid; ++i) {
      const double theta = o.pole_radius + (pi - 2.0 * o.pole_radius) * static_cast<double>(i) / (o.grid - 1);
      double direct = 0.0, closed = 0.0;
      check(su2f_dirichlet_direct(n, theta, &direct));
      check(su2f_dirichlet_closed(n, theta, &closed));
      worst = std::max(worst, std::abs(direct - closed));
    }
    const double tol = 1e-8 * std::pow(n + 1.0, 3);
    const bool pass = worst <= tol;
    if (!pass) t.failures.push_back("N=" + std::to_string(n) + " diff=" + format_double(worst));
    t.rows.push_back({N, worst, tol, pass});
  }
  return t;
}

Table run_lebesgue(const std::string& n_list, Json& config) {
  config["n"] = n_list;
  Table t{{"n", "L1", "asymptote", "gap"}, {}, {}};
  for (long long n : parse_int_list(n_list, "--n")) {
    double L = 0.0;
    check(su2f_lebesgue(to_int_checked(n, "--n"), &L));
    const double asym = 4.0 / (std::numbers::pi * std::numbers::pi) * std::log(n + 1.0);
    t.rows.push_back({n, L, asym, L - asym});
  }
  return t;
}

struct ChainOpts {
  std::string n = "2..64";
  double alpha = 0.5;
};

Table run_chain(const ChainOpts& o, Json& config) {
  config["n"] = o.n;
  config["alpha"] = o.alpha;
  Table t{{"n", "min_margin", "identity_error", "dirichlet_value", "dirichlet_floor", "term1", "term2", "phi",
           "lebesgue", "final_lower_bound", "doubled_bound", "doubled_bound_met", "lipalpha_norm",
           "functional_ratio", "passed"},
          {},
          {}};
  for (long long n : parse_int_list(o.n, "--n")) {
    su2f_chain* c = nullptr;
    check(su2f_chain_verify(to_int_checked(n, "--n"), o.alpha, &c));
    su2f_chain_summary s{};
    const su2f_status st = su2f_chain_summary_get(c, &s);
    su2f_chain_free(c);
    check(st);
    if (!s.passed) t.failures.push_back("n=" + std::to_string(n) + " min_margin=" + format_double(s.min_margin));
    t.rows.push_back({n, s.min_margin, s.identity_error, s.dirichlet_value, s.dirichlet_floor, s.term1, s.term2,
                      s.phi_value, s.lebesgue, s.final_lower_bound, s.doubled_bound, s.doubled_bound_met != 0,
                      s.lipalpha_norm, s.functional_ratio, s.passed != 0});
  }
  return t;
}

struct DivergeOpts {
  std::string points = "random:3";
  std::string n = "4,8,16";
  std::size_t haar_order = 192;
  double tolerance = 1e-4;
};

std::vector<std::pair<std::string, su2f_element>> parse_points(const std::string& text, std::uint64_t seed) {
  std::vector<std::pair<std::string, su2f_element>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    su2f_element z{};
    if (item == "identity") {
      check(su2f_identity(&z));
      out.emplace_back(item, z);
    } else if (item.rfind("random:", 0) == 0) {
      const auto k = parse_int_list(item.substr(7), "--points");
      if (k.size() != 1 || k[0] < 1 || k[0] > 10000) throw UsageError("--points: bad count in '" + item + "'");
      std::vector<su2f_element> zs(k[0]);
      check(su2f_random_elements(seed, zs.size(), zs.data()));
      for (std::size_t i = 0; i < zs.size(); ++i) out.emplace_back("random#" + std::to_string(i), zs[i]);
    } else if (item.rfind("torus:", 0) == 0) {
      const auto th = parse_double_list(item.substr(6), "--points");
      check(su2f_torus(th[0], &z));
      out.emplace_back(item, z);
    } else {
      throw UsageError("--points: expected identity, random:<k> or torus:<theta>, got '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--points: empty list");
  return out;
}

Table run_diverge(const DivergeOpts& o, std::uint64_t seed, Json& config) {
  config["points"] = o.points;
  config["n"] = o.n;
  config["haar_order"] = o.haar_order;
  config["tolerance"] = o.tolerance;
  Table t{{"point", "z_a_re", "z_a_im", "z_b_re", "z_b_im", "n", "general_abs", "central_abs", "relative_gap",
           "growth"},
          {},
          {}};
  const auto points = parse_points(o.points, seed);
  const auto ns = parse_int_list(o.n, "--n");
  for (const auto& [label, z] : points) {
    for (long long n : ns) {
      su2f_divergence_row r{};
      check(su2f_divergence(&z, to_int_checked(n, "--n"), o.haar_order, &r));
      if (!(r.relative_gap < o.tolerance))
        t.failures.push_back(label + " n=" + std::to_string(n) + " gap=" + format_double(r.relative_gap));
      t.rows.push_back({label, z.a_re, z.a_im, z.b_re, z.b_im, n, r.general_abs, r.central_abs, r.relative_gap,
                        r.growth});
    }
  }
  return t;
}

struct PartialSumOpts {
  std::string f = "sawtooth:7";
  std::string N = "0..8";
  std::string mode = "polyhedral";
  std::string theta;
  std::size_t grid = 9;
};

Table run_partial_sum(const PartialSumOpts& o, Json& config) {
  config["f"] = o.f;
  config["N"] = o.N;
  config["mode"] = o.mode;
  config["theta"] = o.theta;
  config["grid"] = o.grid;
  const su2f_mode mode = parse_mode(o.mode);
  const auto Ns = parse_int_list(o.N, "--N");
  std::vector<double> thetas;
  if (!o.theta.empty()) {
    thetas = parse_double_list(o.theta, "--theta");
  } else {
    if (o.grid < 2) throw UsageError("--grid: need at least 2 points");
    for (std::size_t i = 0; i < o.grid; ++i) thetas.push_back(std::numbers::pi * static_cast<double>(i) / (o.grid - 1));
  }
  const long long top = *std::max_element(Ns.begin(), Ns.end());
  const Series s(o.f, to_int_checked(top + 1, "--N"));
  Table t{{"N", "mode", "theta", "partial_sum", "value", "error"}, {}, {}};
  for (long long N : Ns) {
    for (double theta : thetas) {
      double ps = 0.0, v = 0.0;
      check(su2f_series_partial_sum(s.ptr, to_int_checked(N, "--N"), mode, theta, &ps));
      check(su2f_series_eval(s.ptr, theta, &v));
      t.rows.push_back({N, o.mode, theta, ps, v, ps - v});
    }
  }
  return t;
}

struct ModulusOpts {
  std::string f = "sawtooth:5";
  double t_min = 1e-4;
  double t_max = 1.0;
  int per_decade = 16;
  std::size_t samples = 64;
  int n_max = 4096;
  std::size_t haar_order = 0;
};

Table run_modulus(const ModulusOpts& o, std::uint64_t seed, Json& config) {
  config["f"] = o.f;
  config["t_min"] = o.t_min;
  config["t_max"] = o.t_max;
  config["per_decade"] = o.per_decade;
  config["samples"] = o.samples;
  config["n_max"] = o.n_max;
  config["haar_order"] = o.haar_order;
  const Series s(o.f, o.n_max);
  Table t{{"t", "omega"}, {}, {}};
  if (o.haar_order == 0) {
    std::size_t count = 0;
    check(su2f_modulus_profile_length(o.t_min, o.t_max, o.per_decade, &count));
    std::vector<double> ts(count), ws(count);
    check(su2f_modulus_profile(s.ptr, o.t_min, o.t_max, o.per_decade, o.samples, seed, ts.data(), ws.data(), count,
                               &count));
    for (std::size_t i = 0; i < count; ++i) t.rows.push_back({ts[i], ws[i]});
    return t;
  }
  // quadrature path: independent estimate per radius, no nesting
  if (!(o.t_min > 0.0 && o.t_min < o.t_max) || o.per_decade < 1)
    throw UsageError("--t-min/--t-max/--per-decade: need 0 < t_min < t_max and per_decade >= 1");
  const int count = static_cast<int>(std::ceil(std::log10(o.t_max / o.t_min) * o.per_decade)) + 1;
  for (int i = 0; i < count; ++i) {
    const double tv = (i == count - 1) ? o.t_min : o.t_max * std::pow(o.t_min / o.t_max, double(i) / (count - 1));
    double w = 0.0;
    check(su2f_modulus(s.ptr, tv, o.samples, seed, o.haar_order, &w));
    t.rows.push_back({tv, w});
  }
  return t;
}

struct DiniOpts {
  std::string f = "cos-power:0.5";
  std::string t_min = "1e-3,1e-4";
  int per_decade = 16;
  std::size_t samples = 8;
  int n_max = 65536;
  double tolerance = 0.0;
};

Table run_dini(const DiniOpts& o, std::uint64_t seed, Json& config) {
  config["f"] = o.f;
  config["t_min"] = o.t_min;
  config["per_decade"] = o.per_decade;
  config["samples"] = o.samples;
  config["n_max"] = o.n_max;
  config["tolerance"] = o.tolerance;
  const auto t_mins = parse_double_list(o.t_min, "--t-min");
  const double smallest = *std::min_element(t_mins.begin(), t_mins.end());
  const Series s(o.f, o.n_max);
  std::size_t count = 0;
  check(su2f_modulus_profile_length(smallest, 1.0, o.per_decade, &count));
  std::vector<double> ts(count), ws(count);
  check(su2f_modulus_profile(s.ptr, smallest, 1.0, o.per_decade, o.samples, seed, ts.data(), ws.data(), count,
                             &count));
  Table t{{"t_min", "dini", "increment"}, {}, {}};
  double prev = std::nan("");
  for (double tm : t_mins) {
    double d = 0.0;
    check(su2f_dini_integral(ts.data(), ws.data(), count, tm, &d));
    const double inc = d - prev;
    if (o.tolerance > 0.0 && std::isfinite(inc) && !(std::abs(inc) < o.tolerance))
      t.failures.push_back("t_min=" + format_double(tm) + " increment=" + format_double(inc));
    t.rows.push_back({tm, d, inc});
    prev = d;
  }
  return t;
}

struct JacksonOpts {
  std::string f = "sawtooth:9";
  std::string k = "1..6";
  std::size_t samples = 64;
  int n_max = 4096;
};

Table run_jackson(const JacksonOpts& o, std::uint64_t seed, Json& config) {
  config["f"] = o.f;
  config["k"] = o.k;
  config["samples"] = o.samples;
  config["n_max"] = o.n_max;
  const Series s(o.f, o.n_max);
  Table t{{"k", "best_approx", "omega", "ratio", "status"}, {}, {}};
  for (long long k : parse_int_list(o.k, "--k")) {
    const int kk = to_int_checked(k, "--k");
    if (kk > 30) throw UsageError("--k: values above 30 are not supported");
    double e = 0.0, w = 0.0, r = std::nan("");
    check(su2f_series_best_approx(s.ptr, 1 << kk, &e));
    check(su2f_modulus(s.ptr, std::ldexp(1.0, -kk), o.samples, seed, 0, &w));
    const su2f_status st = su2f_jackson_ratio(s.ptr, kk, o.samples, seed, &r);
    if (st != SU2F_OK && st != SU2F_DEGENERATE) check(st);
    t.rows.push_back({k, e, w, st == SU2F_OK ? r : std::nan(""), std::string(su2f_status_string(st))});
  }
  return t;
}

struct RmOpts {
  std::string f = "sawtooth:5";
  std::string J = "1024,4096";
  double tolerance = 0.0;
};

Table run_rm_sum(const RmOpts& o, Json& config) {
  config["f"] = o.f;
  config["J"] = o.J;
  config["tolerance"] = o.tolerance;
  const auto Js = parse_int_list(o.J, "--J");
  const Series s(o.f, to_int_checked(*std::max_element(Js.begin(), Js.end()), "--J"));
  Table t{{"J", "sum", "increment"}, {}, {}};
  double prev = std::nan("");
  for (long long J : Js) {
    double v = 0.0;
    check(su2f_series_rm_sum(s.ptr, to_int_checked(J, "--J"), &v));
    const double inc = v - prev;
    if (o.tolerance > 0.0 && std::isfinite(inc) && !(std::abs(inc) < o.tolerance))
      t.failures.push_back("J=" + std::to_string(J) + " increment=" + format_double(inc));
    t.rows.push_back({J, v, inc});
    prev = v;
  }
  return t;
}

struct UniformOpts {
  std::string f = "cusp:0.5";
  std::string N = "64,128,256";
  double delta = 0.3;
  std::size_t grid = 2001;
  bool require_decreasing = false;
};

Table run_uniform(const UniformOpts& o, Json& config) {
  config["f"] = o.f;
  config["N"] = o.N;
  config["delta"] = o.delta;
  config["grid"] = o.grid;
  config["require_decreasing"] = o.require_decreasing;
  const auto Ns = parse_int_list(o.N, "--N");
  const Series s(o.f, to_int_checked(*std::max_element(Ns.begin(), Ns.end()), "--N"));
  Table t{{"N", "delta", "max_error"}, {}, {}};
  double prev = std::numeric_limits<double>::infinity();
  for (long long N : Ns) {
    double err = 0.0;
    check(su2f_series_uniform_error(s.ptr, to_int_checked(N, "--N"), o.delta, o.grid, &err));
    if (o.require_decreasing && !(err < prev))
      t.failures.push_back("N=" + std::to_string(N) + " error did not decrease");
    t.rows.push_back({N, o.delta, err});
    prev = err;
  }
  return t;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output,-o", c.output, "output file; default $SU2F_OUTPUT_DIR/<command>.<format> or stdout");
  sub->add_option("--seed", c.seed, "master seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier partial sums on SU(2): kernels, divergence witnesses, convergence diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(su2f_version()));

  Common common;
  KernelCheck kernel;
  std::string lebesgue_n = "1,10,100,1000";
  ChainOpts chain;
  DivergeOpts diverge;
  PartialSumOpts partial;
  ModulusOpts mod;
  DiniOpts dini;
  JacksonOpts jackson;
  RmOpts rm;
  UniformOpts uniform;

  auto* k = app.add_subcommand("kernel-check", "direct vs closed-form Dirichlet kernel");
  k->add_option("--N", kernel.N, "list or range, e.g. 0..200");
  k->add_option("--grid", kernel.grid);
  k->add_option("--pole-radius", kernel.pole_radius);

  auto* l = app.add_subcommand("lebesgue", "Lebesgue constants against (4/pi^2) log(n+1)");
  l->add_option("--n", lebesgue_n);

  auto* c = app.add_subcommand("chain", "sawtooth lower-bound chain");
  c->add_option("--n", chain.n);
  c->add_option("--alpha", chain.alpha);

  auto* d = app.add_subcommand("diverge", "translated sawtooth partial sums on the Haar path");
  d->add_option("--points", diverge.points, "identity, random:<k>, torus:<theta>; comma separated");
  d->add_option("--n", diverge.n);
  d->add_option("--haar-order", diverge.haar_order);
  d->add_option("--tolerance", diverge.tolerance);

  auto* p = app.add_subcommand("partial-sum", "central partial sums against the function");
  p->add_option("--f", partial.f, "sawtooth:<n>, char:<k>, cos-power:<a>, cusp:<a>, const:<c>");
  p->add_option("--N", partial.N);
  p->add_option("--mode", partial.mode);
  p->add_option("--theta", partial.theta, "explicit angles; overrides --grid");
  p->add_option("--grid", partial.grid);

  auto* m = app.add_subcommand("modulus", "integral modulus of continuity profile");
  m->add_option("--f", mod.f);
  m->add_option("--t-min", mod.t_min);
  m->add_option("--t-max", mod.t_max);
  m->add_option("--per-decade", mod.per_decade);
  m->add_option("--samples", mod.samples);
  m->add_option("--n-max", mod.n_max);
  m->add_option("--haar-order", mod.haar_order, "0 uses the coefficient path");

  auto* di = app.add_subcommand("dini", "int_{t_min}^1 Omega^2(f, t) / t dt");
  di->add_option("--f", dini.f);
  di->add_option("--t-min", dini.t_min, "comma separated");
  di->add_option("--per-decade", dini.per_decade);
  di->add_option("--samples", dini.samples);
  di->add_option("--n-max", dini.n_max);
  di->add_option("--tolerance", dini.tolerance, "fail when a successive increment reaches this (0: off)");

  auto* j = app.add_subcommand("jackson", "E_{2^k}(f) / Omega(f, 2^-k)");
  j->add_option("--f", jackson.f);
  j->add_option("--k", jackson.k);
  j->add_option("--samples", jackson.samples);
  j->add_option("--n-max", jackson.n_max);

  auto* r = app.add_subcommand("rm-sum", "sum_{j=2}^J log(j) c_j^2");
  r->add_option("--f", rm.f);
  r->add_option("--J", rm.J);
  r->add_option("--tolerance", rm.tolerance, "fail when a successive increment reaches this (0: off)");

  auto* u = app.add_subcommand("uniform-central", "max |S_N f - f| on [delta, pi - delta]");
  u->add_option("--f", uniform.f);
  u->add_option("--N", uniform.N);
  u->add_option("--delta", uniform.delta);
  u->add_option("--grid", uniform.grid);
  u->add_flag("--require-decreasing", uniform.require_decreasing);

  for (auto* sub : {k, l, c, d, p, m, di, j, r, u}) add_common(sub, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  Json config;
  config["format"] = common.format;
  const std::string started = wall_clock_utc();
  const auto t0 = std::chrono::steady_clock::now();

  Table table;
  try {
    if (sub == k) table = run_kernel_check(kernel, config);
    else if (sub == l) table = run_lebesgue(lebesgue_n, config);
    else if (sub == c) table = run_chain(chain, config);
    else if (sub == d) table = run_diverge(diverge, common.seed, config);
    else if (sub == p) table = run_partial_sum(partial, config);
    else if (sub == m) table = run_modulus(mod, common.seed, config);
    else if (sub == di) table = run_dini(dini, common.seed, config);
    else if (sub == j) table = run_jackson(jackson, common.seed, config);
    else if (sub == r) table = run_rm_sum(rm, config);
    else table = run_uniform(uniform, config);
  } catch (const UsageError& e) {
    std::cerr << command << ": " << e.what() << "\n";
    return 2;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string text = common.format == "json"
                               ? render_json(command, config, common.seed, table, started, elapsed)
                               : render_csv(command, config, common.seed, table, started, elapsed);

  std::string path = common.output;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0')
      path = (std::filesystem::path(dir) / (command + "." + common.format)).string();
  }
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << command << ": cannot write " << path << "\n";
      return 2;
    }
    out << text;
    std::cerr << "wrote " << path << "\n";
  }

  if (!table.failures.empty()) {
    for (const auto& f : table.failures) std::cerr << command << ": margin failure: " << f << "\n";
    return 1;
  }
  return 0;
}
