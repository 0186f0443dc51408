// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "siprox/bisection.hpp"
#include "siprox/objective.hpp"
#include "siprox/oracle.hpp"
#include "siprox/projection.hpp"
#include "siprox/prox_h1.hpp"
#include "siprox/prox_h2.hpp"
#include "siprox/prox_l0.hpp"
#include "siprox/signed_permutation.hpp"
#include "test_support.hpp"

using namespace siprox;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = ms_since(t0);
  if (!o.pass) ++failures;
  std::printf("[%s] %s %s: %s (%.1f ms)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), ms);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string cli_out(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  const int c = cli::run_cli(args, out, err);
  if (code) *code = c;
  return out.str();
}

double penalty_value(oracle::Penalty p, const DenseVector& u) {
  switch (p) {
    case oracle::Penalty::L0: return l0_value(u);
    case oracle::Penalty::H1: return h1_value(u);
    case oracle::Penalty::H2: return h2_value(u);
  }
  return 0.0;
}

double best_member_f(const ProxSet& s, const DenseVector& x, double rho, oracle::Penalty p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& u : s.members()) best = std::min(best, objective_F(u, x, rho, penalty_value(p, u)));
  return best;
}

double nearest_member(const ProxSet& s, const DenseVector& u) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : s.members()) best = std::min(best, distance(m.span(), u.span()));
  return best;
}

struct OracleStats {
  int count = 0;
  int f_fail = 0;
  int d_fail = 0;
  double worst_f_excess = 0.0;  // |dF| - bound, largest seen
  double worst_dist = 0.0;
};

void oracle_check(OracleStats& st, const ProxSet& s, const DenseVector& x, double rho,
                  oracle::Penalty p, double res) {
  const auto ref = oracle::brute_prox(x, rho, p, 0.0, res, oracle::Parameterization::SphereRadial);
  const double fa = best_member_f(s, x, rho, p);
  const double bound = oracle::oracle_tolerance(res, rho, norm2_squared(x.span()));
  const double gap = std::abs(fa - ref.f_min);
  const double dist = nearest_member(s, ref.u);
  ++st.count;
  if (gap > bound) ++st.f_fail;
  if (dist > 1e-3) ++st.d_fail;
  st.worst_f_excess = std::max(st.worst_f_excess, gap - bound);
  st.worst_dist = std::max(st.worst_dist, dist);
}

std::string describe(const OracleStats& st, const char* label) {
  std::ostringstream os;
  os << label << " " << st.count << " cases, F failures " << st.f_fail << ", distance failures "
     << st.d_fail << ", max distance " << fmt("%.2e", st.worst_dist);
  return os.str();
}

// ---------------------------------------------------------------------------

Outcome ac1() {
  const DenseVector x{2.5, 1.5, 1.0, 0.5};
  const std::vector<double> want_a{0.8598, 0.4481, 0.2422, 0.0363};
  const std::vector<double> want_b{0.8804, 0.4286, 0.2027, 0.0};

  const auto t0 = Clock::now();
  const H2WStep a = wstep_h2(x, 2.5);
  const H2WStep b = wstep_h2(x, 1.8);
  const double elapsed = ms_since(t0);

  double err_a = 0.0, err_b = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    err_a = std::max(err_a, std::abs(a.solution.w_star[i] - want_a[i]));
    err_b = std::max(err_b, std::abs(b.solution.w_star[i] - want_b[i]));
  }
  const std::size_t trunc_a = a.mu - a.effective_k;
  const std::size_t trunc_b = b.mu - b.effective_k;

  int code = -1;
  const auto j = nlohmann::json::parse(cli_out({"spectrum", "--rho", "2.5", "--x", "2.5,1.5,1,0.5"}, &code));
  const std::vector<double> cli_w = j["w_lo_unit"].get<std::vector<double>>();
  double err_cli = 0.0;
  for (std::size_t i = 0; i < 4; ++i) err_cli = std::max(err_cli, std::abs(cli_w[i] - want_a[i]));

  const bool pass = err_a <= 5e-4 && err_b <= 5e-4 && err_cli <= 5e-4 && trunc_a == 0 &&
                    trunc_b == 1 && code == 0 && elapsed < 1.0;
  std::ostringstream os;
  os << "rho=2.5 max err " << fmt("%.1e", err_a) << " (truncations " << trunc_a << "), rho=1.8 max err "
     << fmt("%.1e", err_b) << " (truncations " << trunc_b << "), spectrum command err "
     << fmt("%.1e", err_cli) << ", w-step time " << fmt("%.3f", elapsed) << " ms";
  return {pass, os.str()};
}

Outcome ac2() {
  int bad = 0;
  double worst_res = 0.0, worst_trace = 0.0;
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = testing::uniform_int(2, 64);
    const DenseVector x = normalize(testing::random_vector(n, -3.0, 3.0)).sorted;
    const double rho = testing::uniform(0.1, 5.0);
    const H2Spectrum sp = h2_spectrum(x, rho);
    const DenseVector a_lo = h2_apply(x, rho, sp.w_lo);
    const DenseVector a_hi = h2_apply(x, rho, sp.w_hi);
    double r_lo = 0.0, r_hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      r_lo += std::pow(a_lo[i] - sp.lambda_neg * sp.w_lo[i], 2);
      r_hi += std::pow(a_hi[i] - sp.lambda_pos * sp.w_hi[i], 2);
    }
    const double rel = std::max(std::sqrt(r_lo) / norm2(sp.w_lo.span()),
                                std::sqrt(r_hi) / norm2(sp.w_hi.span()));
    const double trace = std::abs(sp.lambda_pos + sp.lambda_neg -
                                  (2.0 * static_cast<double>(n) - rho * norm2_squared(x.span())));
    worst_res = std::max(worst_res, rel);
    worst_trace = std::max(worst_trace, trace);
    if (rel > 1e-9 || trace > 1e-9 || !(sp.lambda_pos > 0.0) || !(sp.lambda_neg < 0.0)) ++bad;
  }
  const double elapsed = ms_since(t0);
  std::ostringstream os;
  os << "1000 cases, violations " << bad << ", max relative residual " << fmt("%.1e", worst_res)
     << ", max trace error " << fmt("%.1e", worst_trace);
  return {bad == 0 && elapsed < 1000.0, os.str()};
}

Outcome ac3() {
  int support_mismatch = 0, value_mismatch = 0, copied_mismatch = 0, count_mismatch = 0;
  double worst_rel = 0.0;
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = testing::uniform_int(1, 16);
    const double rho = testing::uniform(0.2, 5.0);
    const double t = std::sqrt(2.0 / rho);
    std::vector<double> v(n);
    for (double& e : v) {
      do {
        e = testing::uniform(-3.0 * t, 3.0 * t);
      } while (std::abs(std::abs(e) - t) < 1e-6 * t);
    }
    const DenseVector x(v);
    const ProxSet a = prox_l0(x, rho);
    const ProxSet b = prox_l0_wrd(x, rho);
    if (a.contains_zero != b.contains_zero || a.points.size() != b.points.size()) {
      ++count_mismatch;
      continue;
    }
    for (std::size_t k = 0; k < a.points.size(); ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const double p = a.points[k][i], q = b.points[k][i];
        if ((p == 0.0) != (q == 0.0)) ++support_mismatch;
        if (p != 0.0 && p != x[i]) ++copied_mismatch;
        if (p != 0.0) {
          const double rel = std::abs(p - q) / std::abs(p);
          worst_rel = std::max(worst_rel, rel);
          if (rel > 1e-12) ++value_mismatch;
        }
      }
    }
  }
  const double elapsed = ms_since(t0);
  std::ostringstream os;
  os << "10000 cases, set-shape mismatches " << count_mismatch << ", support mismatches "
     << support_mismatch << ", kept-value mismatches " << value_mismatch
     << " (max relative deviation of the rescaled path " << fmt("%.1e", worst_rel)
     << "), componentwise entries not copied " << copied_mismatch;
  return {count_mismatch == 0 && support_mismatch == 0 && value_mismatch == 0 && copied_mismatch == 0 &&
              elapsed < 1000.0,
          os.str()};
}

Outcome ac4() {
  OracleStats s2, s3;
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const DenseVector x = testing::random_sorted(2, 0.0, 3.0);
    const double rho = testing::uniform(0.2, 3.0);
    oracle_check(s2, prox_h2(x, rho), x, rho, oracle::Penalty::H2, 2e-4);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const DenseVector x = testing::random_sorted(3, 0.0, 3.0);
    const double rho = testing::uniform(0.2, 3.0);
    oracle_check(s3, prox_h2(x, rho), x, rho, oracle::Penalty::H2, 2e-3);
  }
  const double elapsed = ms_since(t0);
  const bool pass = s2.f_fail + s2.d_fail + s3.f_fail + s3.d_fail == 0 && elapsed < 120000.0;
  return {pass, describe(s2, "n=2:") + "; " + describe(s3, "n=3:")};
}

Outcome ac5() {
  OracleStats s2, s3;
  int compared = 0, disagree = 0;
  double worst = 0.0;
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 500; ++trial) {
    DenseVector x = testing::random_sorted(2, 0.0, 3.0);
    const double rho = testing::uniform(0.2, 3.0);
    const ProxSet s = prox_h1_r2(x, rho);
    oracle_check(s2, s, x, rho, oracle::Penalty::H1, 2e-4);
    if (x[1] > 0.0 && !s.points.empty() && classify_r2(x, rho).region != R2Region::Uniform) {
      const WStepSolution closed = wstep_h1_r2(x, rho);
      const DenseVector w0 = project_ball_cone(scaled(x, kDefaultInitFraction / norm2(x.span())));
      const PgdResult p = pgd_wstep(x, rho, w0);
      if (p.branch == PgdBranch::Sphere) {
        // Closed-form rows that fix w = e1 are compared through their prox point.
        const DenseVector w_closed = s.points.front().is_zero()
                                         ? closed.w_star
                                         : scaled(s.points.front(), 1.0 / norm2(s.points.front().span()));
        const double d = distance(p.candidate.w_star.span(), w_closed.span());
        ++compared;
        worst = std::max(worst, d);
        if (d > 1e-5) ++disagree;
      }
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const DenseVector x = testing::random_sorted(3, 0.0, 3.0);
    const double rho = testing::uniform(0.2, 3.0);
    oracle_check(s3, prox_h1(x, rho), x, rho, oracle::Penalty::H1, 2e-3);
  }
  const double elapsed = ms_since(t0);
  std::ostringstream os;
  os << describe(s2, "R^2 closed form:") << "; " << describe(s3, "R^3 projected gradient:")
     << "; gradient vs closed form " << compared << " nonzero cases, " << disagree
     << " above 1e-5 (max " << fmt("%.1e", worst) << ")";
  const bool pass =
      s2.f_fail + s2.d_fail + s3.f_fail + s3.d_fail == 0 && disagree == 0 && elapsed < 180000.0;
  return {pass, os.str()};
}

Outcome ac6() {
  int bad = 0, checks = 0;
  auto expect = [&](const ProxSet& s, bool zero, bool point) {
    ++checks;
    if (s.contains_zero != zero || s.points.empty() == point) ++bad;
  };
  for (double rho : {0.3, 1.0, 2.0, 3.7}) {
    for (std::size_t n : {1u, 2u, 3u, 5u, 16u}) {
      const double nd = static_cast<double>(n);
      const double t2 = std::sqrt(2.0 / rho);
      expect(prox_h2_uniform(t2 * (1.0 - 1e-6), n, rho), true, false);
      expect(prox_h2_uniform(t2, n, rho), true, true);
      expect(prox_h2_uniform(t2 * (1.0 + 1e-6), n, rho), false, true);
      if (n > 1) {
        ++checks;
        if (prox_h2_uniform(t2, n, rho).family != SetFamily::UniformSphere) ++bad;
      }

      const double t1 = std::sqrt(2.0 / (rho * std::sqrt(nd)));
      expect(prox_h1_uniform(t1 * (1.0 - 1e-6), n, rho), true, false);
      expect(prox_h1_uniform(t1, n, rho), true, true);
      expect(prox_h1_uniform(t1 * (1.0 + 1e-6), n, rho), false, true);
    }
    const double ta = std::sqrt(2.0 / rho);
    expect(prox_h1_axis(ta * (1.0 - 1e-6), rho), true, false);
    expect(prox_h1_axis(ta, rho), true, true);
    expect(prox_h1_axis(ta * (1.0 + 1e-6), rho), false, true);
  }
  std::ostringstream os;
  os << checks << " threshold checks across rho and n, " << bad << " wrong";
  return {bad == 0, os.str()};
}

struct CsvRow {
  double x1, x2;
  std::string label;
  double u1 = 0.0, u2 = 0.0;
};

std::vector<CsvRow> parse_csv(const std::string& text, bool with_point) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    CsvRow r{std::stod(f[0]), std::stod(f[1]), f[2]};
    if (with_point) {
      r.u1 = std::stod(f[3]);
      r.u2 = std::stod(f[4]);
    }
    rows.push_back(r);
  }
  return rows;
}

Outcome ac7() {
  const double rho = 2.0, xmax = 3.0;
  const std::size_t grid = 400;
  const double h = xmax / grid;
  const double t = std::sqrt(2.0 / rho);
  std::ostringstream os;
  bool pass = true;

  // h2 zero-map: the zero class is exactly x1 < sqrt(2/rho).
  const auto zero_rows = parse_csv(
      cli_out({"region", "--fn", "h2", "--rho", "2", "--xmax", "3", "--grid", "400"}), false);
  int zero_far = 0, zero_near = 0;
  for (const auto& r : zero_rows) {
    const std::string want = r.x1 < t ? "zero" : "nonzero";
    if (r.label != want) (std::abs(r.x1 - t) <= h ? zero_near : zero_far)++;
  }

  // h2 prox-map: axis points below x2 = 2/(rho x1), two positive entries above.
  const auto map_rows = parse_csv(cli_out({"region", "--fn", "h2", "--rho", "2", "--xmax", "3", "--grid",
                                           "400", "--mode", "prox-map"}),
                                  true);
  int map_far = 0, map_near = 0;
  for (const auto& r : map_rows) {
    std::string want, got;
    if (r.x1 < t) {
      want = "zero";
    } else if (r.x2 <= 2.0 / (rho * r.x1)) {
      want = "axis";
    } else {
      want = "interior";
    }
    if (r.label == "zero") {
      got = "zero";
    } else if (r.u2 == 0.0 && r.u1 == r.x1) {
      got = "axis";
    } else if (r.u1 > 0.0 && r.u2 > 0.0) {
      got = "interior";
    } else {
      got = "other";
    }
    if (got != want) {
      const double d_line = std::abs(r.x1 - t);
      const double d_hyp = std::abs(r.x1 * r.x2 - 2.0 / rho) / std::hypot(r.x1, r.x2);
      (std::min(d_line, d_hyp) <= h ? map_near : map_far)++;
    }
  }
  os << "h2: " << zero_rows.size() << " cells, zero-map misclassified " << zero_far << " far / "
     << zero_near << " near boundary, prox-map misclassified " << map_far << " far / " << map_near
     << " near";
  pass = pass && zero_rows.size() == grid * (grid + 1) / 2 && zero_far == 0 && map_far == 0;

  // h1 zero-map.
  const auto h1_rows = parse_csv(
      cli_out({"region", "--fn", "h1", "--rho", "2", "--xmax", "3", "--grid", "400"}), false);
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  int s_violations = 0, disk_violations = 0, edge_violations = 0;
  int n_zero = 0, n_nonzero = 0, n_tie = 0;
  for (const auto& r : h1_rows) {
    if (r.label == "zero") ++n_zero;
    if (r.label == "nonzero") ++n_nonzero;
    if (r.label == "tie") ++n_tie;
    const double k = r.x2 / r.x1;
    const bool s1 = r.x1 > t;
    const bool s2 = r.x1 > std::sqrt(2.0 * (1.0 + k) / (rho * std::pow(1.0 + k * k, 1.5)));
    if ((s1 || s2) && r.label != "nonzero") ++s_violations;
    if (std::hypot(r.x1, r.x2) <= t && r.label == "nonzero") ++disk_violations;
    if (k <= golden && rho * r.x1 * r.x2 <= 1.0 && r.label != (r.x1 < t ? "zero" : "nonzero")) ++edge_violations;
  }
  os << "; h1: S1 u S2 cells not nonzero " << s_violations << ", disk cells without the origin "
     << disk_violations << ", cells with x2 <= 0.618 x1 and rho x1 x2 <= 1 off the x1 = 1 edge " << edge_violations
     << " (zero " << n_zero << ", nonzero " << n_nonzero << ", tie " << n_tie << ")";
  pass = pass && s_violations == 0 && disk_violations == 0 && edge_violations == 0;
  return {pass, os.str()};
}

Outcome ac8() {
  const double k = curve_intersection_kappa(1e-12);
  const double c1 = std::sqrt(2.0);
  const double c2 = std::sqrt(2.0 * (1.0 + k) / std::pow(1.0 + k * k, 1.5));
  const double printed = bisect([](double q) { return std::pow(q, 5) + 3 * q * q + 2 * q - 2; }, 0.0, 1.0, 1e-12);
  const double c2p = std::sqrt(2.0 * (1.0 + printed) / std::pow(1.0 + printed * printed, 1.5));
  std::ostringstream os;
  os << "root of k^5+3k^3+2k-2 (curves equal) is " << fmt("%.7f", k) << ", radius gap there "
     << fmt("%.1e", std::abs(c1 - c2)) << "; the printed form k^5+3k^2+2k-2 has root "
     << fmt("%.7f", printed) << " where the radius gap is " << fmt("%.1e", std::abs(c1 - c2p));
  return {std::abs(k - 0.6124) <= 5e-5 && std::abs(c1 - c2) <= 1e-9, os.str()};
}

Outcome ac9() {
  struct Op {
    const char* name;
    std::function<ProxSet(const DenseVector&, double)> f;
  };
  const std::vector<Op> ops{
      {"l0", [](const DenseVector& x, double r) { return prox_l0(x, r); }},
      {"h1", [](const DenseVector& x, double r) { return prox_h1(x, r); }},
      {"h2", [](const DenseVector& x, double r) { return prox_h2(x, r); }},
  };
  std::ostringstream os;
  bool pass = true;
  for (const auto& op : ops) {
    int perm_bad = 0, scale_bad = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = testing::uniform_int(1, 8);
      const DenseVector x = testing::random_vector(n, -3.0, 3.0);
      const double rho = testing::uniform(0.2, 3.0);
      const SignedPermutation p = testing::random_signed_permutation(n);

      const ProxSet base = op.f(x, rho);
      const ProxSet moved = op.f(p.apply(x), rho);
      const ProxSet mapped = map_points(base, n, [&](const DenseVector& u) { return p.apply(u); });
      if (!testing::same_set(moved, mapped, 1e-8)) ++perm_bad;
      worst = std::max(worst, testing::hausdorff(moved.points, mapped.points));

      const double a = testing::uniform(0.2, 5.0);
      const ProxSet big = op.f(scaled(x, a), rho);
      const ProxSet small = op.f(x, rho * a * a);
      const ProxSet grown = map_points(small, n, [&](const DenseVector& u) { return scaled(u, a); });
      if (!testing::same_set(big, grown, 1e-8)) ++scale_bad;
      worst = std::max(worst, testing::hausdorff(big.points, grown.points));
    }
    os << op.name << " permutation " << perm_bad << "/500, scale " << scale_bad << "/500 failing; ";
    pass = pass && perm_bad == 0 && scale_bad == 0;
    (void)worst;
  }
  std::string d = os.str();
  d.resize(d.size() - 2);
  return {pass, d};
}

Outcome ac10() {
  int non_monotone = 0, off_band = 0, capped = 0, origin = 0, sphere = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = testing::uniform_int(2, 12);
    const DenseVector x = testing::random_sorted(n, 0.05, 3.0);
    const double rho = testing::uniform(0.05, 3.0);
    const double frac = testing::uniform(0.25, 0.75);
    const PgdResult p = pgd_wstep(x, rho, project_ball_cone(scaled(x, frac / norm2(x.span()))));
    if (!p.monotone) ++non_monotone;
    if (p.limit_norm > kPgdBranchTol && p.limit_norm < 1.0 - kPgdBranchTol) ++off_band;
    if (p.status == PgdStatus::MaxIterations) ++capped;
    (p.branch == PgdBranch::Sphere ? sphere : origin)++;
  }
  int qp_bad = 0;
  double worst_res = 0.0, worst_norm = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::uniform_int(1, 12);
    const DenseVector x = testing::random_sorted(n, 0.0, 3.0);
    const double rho = testing::uniform(0.2, 3.0);
    const SphereQpSolution q = sphere_qp_lambda(x, rho);
    const double res = std::abs(sphere_qp_quartic(q.q_star, x, rho));
    const double nerr = std::abs(norm2(q.w.span()) - 1.0);
    const bool negative = std::all_of(q.w.begin(), q.w.end(), [](double v) { return v < 0.0; });
    worst_res = std::max(worst_res, res);
    worst_norm = std::max(worst_norm, nerr);
    if (res > 1e-9 || nerr > 1e-9 || !negative) ++qp_bad;
  }
  std::ostringstream os;
  os << "1000 gradient runs (" << origin << " origin, " << sphere << " sphere): non-monotone "
     << non_monotone << ", limit norm off both bands " << off_band << ", hit max_iter " << capped
     << "; 200 sphere stationary points: failing " << qp_bad << ", max quartic residual "
     << fmt("%.1e", worst_res) << ", max norm error " << fmt("%.1e", worst_norm);
  return {non_monotone == 0 && off_band == 0 && qp_bad == 0, os.str()};
}

}  // namespace

int main() {
  report("AC1", "reference w-step reproduction", ac1);
  report("AC2", "eigenstructure suite", ac2);
  report("AC3", "l0 equivalence", ac3);
  report("AC4", "h2 oracle equivalence", ac4);
  report("AC5", "h1 oracle equivalence", ac5);
  report("AC6", "threshold boundaries", ac6);
  report("AC7", "region maps", ac7);
  report("AC8", "curve intersection constant", ac8);
  report("AC9", "invariance suite", ac9);
  report("AC10", "projected gradient behavior", ac10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
