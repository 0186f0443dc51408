#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "siprox/errors.hpp"
#include "siprox/objective.hpp"
#include "siprox/oracle.hpp"
#include "siprox/prox_h1.hpp"
#include "siprox/prox_h2.hpp"
#include "siprox/prox_l0.hpp"
#include "siprox/signed_permutation.hpp"

namespace siprox::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProxOptions {
  std::string fn;
  double rho = 0.0;
  std::string x;
  Tolerances tol;
  double init_fraction = kDefaultInitFraction;
};

struct RegionOptions {
  std::string fn;
  double rho = 0.0;
  double xmax = 0.0;
  std::size_t grid = 0;
  std::string mode = "zero-map";
  bool include_boundary = false;
};

struct SpectrumOptions {
  double rho = 0.0;
  std::string x;
};

struct OracleOptions {
  std::string fn;
  double rho = 0.0;
  std::string x;
  double resolution = 1e-3;
  std::optional<double> tolerance;
};

void require_positive(double v, const char* flag) {
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(flag) + " must be positive");
}

ProxSet evaluate(const std::string& fn, const DenseVector& x, double rho, const Tolerances& tol,
                 double init_fraction) {
  if (fn == "l0") return prox_l0(x, rho, tol);
  if (fn == "h1") return prox_h1(x, rho, tol, init_fraction);
  return prox_h2(x, rho, tol);
}

double penalty(const std::string& fn, const DenseVector& u) {
  if (fn == "l0") return l0_value(u);
  if (fn == "h1") return h1_value(u);
  return h2_value(u);
}

json to_json(const DenseVector& v) { return json(v.values()); }

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

const char* label_of(const ProxSet& s) {
  if (s.contains_zero && s.points.empty()) return "zero";
  if (s.contains_zero) return "tie";
  return "nonzero";
}

int cmd_prox(const ProxOptions& o, std::ostream& out) {
  require_positive(o.rho, "--rho");
  const DenseVector x = parse_vector(o.x);
  try {
    o.tol.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(o.init_fraction >= 0.25 && o.init_fraction <= 0.75)) {
    throw UsageError("--init-fraction must lie in [0.25, 0.75]");
  }
  const ProxSet s = evaluate(o.fn, x, o.rho, o.tol, o.init_fraction);
  json j;
  j["contains_zero"] = s.contains_zero;
  j["points"] = json::array();
  for (const auto& p : s.points) j["points"].push_back(to_json(p));
  j["family"] = s.family == SetFamily::UniformSphere ? json("uniform_sphere") : json(nullptr);
  j["certified"] = s.certified;
  j["g_value"] = s.g_value;
  if (s.ties_truncated) j["ties_truncated"] = true;
  out << j.dump() << '\n';
  return kOk;
}

int cmd_region(const RegionOptions& o, std::ostream& out) {
  require_positive(o.rho, "--rho");
  require_positive(o.xmax, "--xmax");
  if (o.grid == 0) throw UsageError("--grid must be positive");
  const bool prox_map = o.mode == "prox-map";
  const double h = o.xmax / static_cast<double>(o.grid);
  const double offset = o.include_boundary ? 0.0 : 0.5;
  const std::size_t count = o.include_boundary ? o.grid + 1 : o.grid;
  const Tolerances tol;

  out << (prox_map ? "x1,x2,label,u1,u2\n" : "x1,x2,label\n");
  for (std::size_t i = 0; i < count; ++i) {
    const double x1 = (static_cast<double>(i) + offset) * h;
    for (std::size_t j = 0; j <= i; ++j) {
      const double x2 = (static_cast<double>(j) + offset) * h;
      const DenseVector x{x1, x2};
      const ProxSet s = evaluate(o.fn, x, o.rho, tol, kDefaultInitFraction);
      out << fmt9(x1) << ',' << fmt9(x2) << ',' << label_of(s);
      if (prox_map) {
        const DenseVector u = s.representative();
        out << ',' << fmt9(u[0]) << ',' << fmt9(u[1]);
      }
      out << '\n';
    }
  }
  return kOk;
}

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
  require_positive(o.rho, "--rho");
  const DenseVector x = parse_vector(o.x);
  const DenseVector sorted = normalize(x).sorted;
  const H2Spectrum sp = h2_spectrum(sorted, o.rho);
  json j;
  j["delta"] = sp.delta;
  j["alpha_lo"] = sp.alpha_lo;
  j["alpha_hi"] = sp.alpha_hi;
  j["lambda_pos"] = sp.lambda_pos;
  j["lambda_neg"] = sp.lambda_neg;
  j["w_lo"] = to_json(sp.w_lo);
  j["w_hi"] = to_json(sp.w_hi);
  j["w_lo_unit"] = to_json(scaled(sp.w_lo, 1.0 / norm2(sp.w_lo.span())));
  out << j.dump() << '\n';
  return kOk;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  require_positive(o.rho, "--rho");
  require_positive(o.resolution, "--resolution");
  const DenseVector x = parse_vector(o.x);
  if (x.size() > 3) throw UsageError("oracle supports at most 3 entries");
  const DenseVector sorted = normalize(x).sorted;

  const ProxSet s = evaluate(o.fn, sorted, o.rho, Tolerances{}, kDefaultInitFraction);
  double f_analytic = std::numeric_limits<double>::infinity();
  for (const auto& u : s.members()) {
    f_analytic = std::min(f_analytic, objective_F(u, sorted, o.rho, penalty(o.fn, u)));
  }

  const oracle::Penalty pen = o.fn == "l0"   ? oracle::Penalty::L0
                              : o.fn == "h1" ? oracle::Penalty::H1
                                             : oracle::Penalty::H2;
  const double box = sorted[0] + 1.0;
  const oracle::ProxResult ref = oracle::brute_prox(sorted, o.rho, pen, box, o.resolution);

  double dist = std::numeric_limits<double>::infinity();
  for (const auto& u : s.members()) dist = std::min(dist, distance(u.span(), ref.u.span()));

  const double ns = norm2_squared(sorted.span());
  const double bound = o.tolerance ? *o.tolerance : oracle::oracle_tolerance(o.resolution, o.rho, ns);
  const double gap = std::abs(f_analytic - ref.f_min);
  const bool pass = gap <= bound;

  out << "function        " << o.fn << '\n'
      << "x (sorted)      ";
  for (std::size_t i = 0; i < sorted.size(); ++i) out << (i ? "," : "") << fmt9(sorted[i]);
  out << '\n'
      << "analytic F      " << fmt9(f_analytic) << '\n'
      << "oracle F        " << fmt9(ref.f_min) << '\n'
      << "|difference|    " << fmt9(gap) << '\n'
      << "tolerance       " << fmt9(bound) << '\n'
      << "point distance  " << fmt9(dist) << '\n'
      << "result          " << (pass ? "pass" : "fail") << '\n';
  return pass ? kOk : kCheckFailed;
}

}  // namespace

DenseVector parse_vector(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::size_t b = pos, e = end;
    while (b < e && text[b] == ' ') ++b;
    while (e > b && text[e - 1] == ' ') --e;
    if (b == e) throw std::invalid_argument("empty entry in vector '" + text + "'");
    const char* first = text.data() + b;
    if (*first == '+') ++first;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, text.data() + e, v);
    if (ec != std::errc() || ptr != text.data() + e || !std::isfinite(v)) {
      throw std::invalid_argument("malformed entry '" + text.substr(b, e - b) + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return DenseVector(std::move(values));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proximity operators of l0, (l1/l2)^2 and l1/l2", "siprox"};
  app.require_subcommand(1);
  const std::vector<std::string> fns{"l0", "h1", "h2"};

  ProxOptions prox;
  auto* p = app.add_subcommand("prox", "Evaluate a proximity operator at a point");
  p->add_option("--fn", prox.fn, "Penalty")->required()->check(CLI::IsMember(fns));
  p->add_option("--rho", prox.rho, "Quadratic weight rho > 0")->required();
  p->add_option("--x", prox.x, "Comma-separated vector")->required()->allow_extra_args(false);
  p->add_option("--tie-tol", prox.tol.tie_tol, "Relative tie tolerance");
  p->add_option("--pgd-tol", prox.tol.pgd_tol, "Projected gradient stop tolerance");
  p->add_option("--max-iter", prox.tol.max_iter, "Projected gradient iteration cap");
  p->add_option("--init-fraction", prox.init_fraction, "Initial radius for projected gradient");

  RegionOptions region;
  auto* r = app.add_subcommand("region", "Classify a grid over the sorted quadrant of R^2");
  r->add_option("--fn", region.fn, "Penalty")->required()->check(CLI::IsMember(fns));
  r->add_option("--rho", region.rho, "Quadratic weight rho > 0")->required();
  r->add_option("--xmax", region.xmax, "Upper bound on x1")->required();
  r->add_option("--grid", region.grid, "Cells per axis")->required();
  r->add_option("--mode", region.mode, "zero-map or prox-map")
      ->check(CLI::IsMember({"zero-map", "prox-map"}));
  r->add_flag("--include-boundary", region.include_boundary, "Sample grid nodes instead of cell centers");

  SpectrumOptions spectrum;
  auto* s = app.add_subcommand("spectrum", "Rank-two eigen data for the (l1/l2)^2 w-step");
  s->add_option("--rho", spectrum.rho, "Quadratic weight rho > 0")->required();
  s->add_option("--x", spectrum.x, "Comma-separated vector")->required();

  OracleOptions orc;
  auto* o = app.add_subcommand("oracle", "Compare against the brute-force grid (n <= 3)");
  o->add_option("--fn", orc.fn, "Penalty")->required()->check(CLI::IsMember(fns));
  o->add_option("--rho", orc.rho, "Quadratic weight rho > 0")->required();
  o->add_option("--x", orc.x, "Comma-separated vector")->required();
  o->add_option("--resolution", orc.resolution, "Grid spacing");
  o->add_option("--tolerance", orc.tolerance, "Override the pass bound on |F difference|");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (p->parsed()) return cmd_prox(prox, out);
    if (r->parsed()) return cmd_region(region, out);
    if (s->parsed()) return cmd_spectrum(spectrum, out);
    return cmd_oracle(orc, out);
  } catch (const DegenerateInput& e) {
    err << "error: " << e.what() << " (the rank-two spectrum is undefined there)\n";
    return kDegenerate;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace siprox::cli
