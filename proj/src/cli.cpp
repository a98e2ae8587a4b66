#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "critline/cli.hpp"
#include "critline/criteria.hpp"
#include "critline/error.hpp"
#include "critline/io.hpp"
#include "critline/zero_finder.hpp"
#include "critline/zeta.hpp"

namespace critline::cli {
namespace {

// Bad flag values found after parsing; reported with the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

struct PrecisionFlags {
  std::int64_t N = PrecisionParams{}.N;
  int K = PrecisionParams{}.K;
  double tol = PrecisionParams{}.tol;
  double pole_radius = PrecisionParams{}.pole_radius;

  void attach(CLI::App* app) {
    app->add_option("--N", N, "series truncation length");
    app->add_option("--K", K, "continuation depth");
    app->add_option("--tol", tol, "target absolute error");
    app->add_option("--pole-radius", pole_radius, "exclusion radius around z = 0 and z = 1");
  }

  PrecisionParams params() const {
    PrecisionParams p{N, K, pole_radius, tol};
    try {
      p.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<double> parse_alphas(const std::string& text) {
  if (text.find(',') == std::string::npos && text.find('.') == std::string::npos &&
      text.find('/') == std::string::npos) {
    int count = 0;
    try {
      std::size_t used = 0;
      count = std::stoi(text, &used);
      require(used == text.size(), "--alphas: bad count '" + text + "'");
    } catch (const std::logic_error&) {
      throw UsageError("--alphas: bad count '" + text + "'");
    }
    require(count >= 1, "--alphas: count must be >= 1");
    return reciprocal_alphas(count);
  }
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      require(used == item.size(), "--alphas: bad value '" + item + "'");
    } catch (const std::logic_error&) {
      throw UsageError("--alphas: bad value '" + item + "'");
    }
  }
  require(!out.empty(), "--alphas: empty list");
  return out;
}

int cmd_eval(double re, double im, const std::string& engine, const PrecisionFlags& pf,
             std::ostream& out) {
  require(std::isfinite(re) && std::isfinite(im), "--re/--im must be finite");
  const PrecisionParams p = pf.params();
  const Complex z(re, im);
  EvalResult r;
  if (engine == "auto") {
    r = zeta(z, p);
  } else {
    Engine e{};
    try {
      e = engine_from_string(engine);
    } catch (const Error& ex) {
      throw UsageError(ex.what());
    }
    r = zeta_with(e, z, p);
  }
  out << io::eval_to_json(z, r) << '\n';
  return kExitOk;
}

int cmd_zeros(double y_min, double y_max, double step, const std::string& path,
              const PrecisionFlags& pf, std::ostream& out, std::ostream& err) {
  require(std::isfinite(y_min) && std::isfinite(y_max) && y_min < y_max,
          "--ymin must be below --ymax");
  require(y_min >= 0.0, "--ymin must be >= 0");
  require(step > 0.0 && step <= 0.25, "--step must be in (0, 0.25]");
  const PrecisionParams p = pf.params();
  const std::vector<ZeroRecord> existing = io::read_cache(path);

  const ZeroSearch search = find_zeros(y_min, y_max, step, p);
  std::vector<ZeroRecord> verified;
  int failures = 0;
  for (const ZeroRecord& r : search.records) {
    const VerifyReport v = verify_record(r, p);
    if (v.pass) {
      verified.push_back(r);
    } else {
      ++failures;
      err << "VERIFICATION_FAILED: y=" << io::format_double(r.y) << " " << v.failing << '\n';
    }
  }
  const io::MergeResult merged = io::merge_records(existing, verified);
  if (merged.appended > 0 || !std::filesystem::exists(path)) {
    io::write_cache(path, merged.records);
  }
  out << "found=" << search.records.size() << " verified=" << verified.size() << " range=["
      << fmt(y_min) << "," << fmt(y_max) << "] appended=" << merged.appended << '\n';
  return failures == 0 ? kExitOk : kExitVerification;
}

struct ScanFlags {
  double x_min = 0.1, x_max = 0.9, y_min = 2.0, y_max = 50.0, dx = 0.02, dy = 0.02;
  std::string csv;
};

int cmd_scan(const ScanFlags& f, const PrecisionFlags& pf, std::ostream& out) {
  for (double v : {f.x_min, f.x_max, f.y_min, f.y_max}) require(std::isfinite(v), "non-finite bound");
  require(f.dx > 0.0 && f.dy > 0.0, "--dx and --dy must be positive");
  require(f.x_min <= f.x_max && f.y_min <= f.y_max, "empty-or-inverted rectangle");
  const PrecisionParams p = pf.params();
  ScanReport rep;
  if (f.x_min == f.x_max || f.y_min == f.y_max) {
    // A flat rectangle has no area and hence no grid.
    rep.x_min = f.x_min;
    rep.x_max = f.x_max;
    rep.y_min = f.y_min;
    rep.y_max = f.y_max;
    rep.dx = f.dx;
    rep.dy = f.dy;
  } else {
    require(f.x_min > 0.0 && f.x_max < 1.0, "scan needs 0 < xmin and xmax < 1");
    rep = scan_rectangle(f.x_min, f.x_max, f.y_min, f.y_max, f.dx, f.dy, p, !f.csv.empty());
  }
  if (!f.csv.empty()) io::write_scan_csv(std::filesystem::path(f.csv), rep);
  out << io::scan_report_to_json(rep) << '\n';
  return kExitOk;
}

struct VerifyFlags {
  std::string zeros;
  bool fe_grid = false;
  double x_min = -0.85, x_max = 0.85, y_min = 1.0, y_max = 20.0;
  int nx = 7, ny = 5;
  double fe_threshold = 1e-6;
};

int cmd_verify(const VerifyFlags& f, const PrecisionFlags& pf, std::ostream& out) {
  require(!f.zeros.empty() || f.fe_grid, "verify needs --zeros or --fe-grid");
  const PrecisionParams p = pf.params();
  int failures = 0;
  int items = 0;
  if (!f.zeros.empty()) {
    require(std::filesystem::exists(f.zeros), "no such cache: " + f.zeros);
    for (const ZeroRecord& r : io::read_cache(f.zeros)) {
      const VerifyReport v = verify_record(r, p);
      ++items;
      out << "zero y=" << io::format_double(r.y) << " abs_zeta=" << fmt(v.abs_zeta)
          << " char_residual=" << fmt(v.char_residual)
          << " reflect_residual=" << fmt(v.reflect_residual) << ' '
          << (v.pass ? std::string("PASS") : "FAIL(" + v.failing + ")") << '\n';
      if (!v.pass) ++failures;
    }
  }
  if (f.fe_grid) {
    require(f.nx >= 1 && f.ny >= 1, "--nx and --ny must be >= 1");
    require(f.x_min <= f.x_max && f.y_min <= f.y_max, "inverted grid");
    for (int i = 0; i < f.nx; ++i) {
      const double x = f.nx == 1 ? f.x_min : f.x_min + (f.x_max - f.x_min) * i / (f.nx - 1);
      for (int j = 0; j < f.ny; ++j) {
        const double y = f.ny == 1 ? f.y_min : f.y_min + (f.y_max - f.y_min) * j / (f.ny - 1);
        const double res = functional_equation_residual(Complex(x, y), p);
        const bool ok = res < f.fe_threshold;
        ++items;
        if (!ok) ++failures;
        out << "fe x=" << fmt(x) << " y=" << fmt(y) << " residual=" << fmt(res) << ' '
            << (ok ? "PASS" : "FAIL") << '\n';
      }
    }
  }
  if (failures == 0) {
    out << "PASS items=" << items << '\n';
    return kExitOk;
  }
  out << "FAIL items=" << items << " failed=" << failures << '\n';
  return kExitVerification;
}

int cmd_report(const std::string& path, std::ostream& out) {
  require(std::filesystem::exists(path), "no such cache: " + path);
  const std::vector<ZeroRecord> recs = io::read_cache(path);
  double max_abs = 0.0, max_char = 0.0, max_reflect = 0.0;
  for (const ZeroRecord& r : recs) {
    max_abs = std::max(max_abs, r.abs_zeta);
    max_char = std::max(max_char, r.char_residual);
    max_reflect = std::max(max_reflect, r.reflect_residual);
  }
  bool sorted = true;
  for (std::size_t i = 1; i < recs.size(); ++i) sorted = sorted && recs[i - 1].y < recs[i].y;
  out << "{\"count\":" << recs.size();
  if (!recs.empty()) {
    out << ",\"y_first\":" << io::format_double(recs.front().y)
        << ",\"y_last\":" << io::format_double(recs.back().y);
  }
  out << ",\"max_abs_zeta\":" << io::format_double(max_abs)
      << ",\"max_char_residual\":" << io::format_double(max_char)
      << ",\"max_reflect_residual\":" << io::format_double(max_reflect)
      << ",\"strictly_increasing\":" << (sorted ? "true" : "false") << "}\n";
  return kExitOk;
}

int emit(const CriterionReport& rep, std::ostream& out) {
  out << io::criterion_report_to_json(rep) << '\n';
  return rep.pass || rep.informational ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann zeta evaluation, zero search and criterion checks"};
  app.require_subcommand(1);
  std::optional<int> threads;
  app.add_option("--threads", threads, "worker threads (CRITLINE_THREADS overrides)");

  PrecisionFlags eval_p, zeros_p, scan_p, verify_p, lfun_p;

  double re = 0.0, im = 0.0;
  std::string engine = "auto";
  CLI::App* eval = app.add_subcommand("eval", "evaluate zeta at one point");
  eval->add_option("--re", re, "real part")->required();
  eval->add_option("--im", im, "imaginary part")->required();
  eval->add_option("--engine", engine, "auto, direct, eq1, levelk or eta");
  eval_p.attach(eval);

  double zy_min = 0.0, zy_max = 0.0, zstep = 0.05;
  std::string zout;
  CLI::App* zeros = app.add_subcommand("zeros", "find, verify and cache critical-line zeros");
  zeros->add_option("--ymin", zy_min)->required();
  zeros->add_option("--ymax", zy_max)->required();
  zeros->add_option("--step", zstep, "scan step");
  zeros->add_option("--out", zout, "zero cache (JSON lines)")->required();
  zeros_p.attach(zeros);

  ScanFlags sf;
  CLI::App* scan = app.add_subcommand("scan", "scan |zeta| over a rectangle of the strip");
  scan->add_option("--xmin", sf.x_min);
  scan->add_option("--xmax", sf.x_max);
  scan->add_option("--ymin", sf.y_min);
  scan->add_option("--ymax", sf.y_max);
  scan->add_option("--dx", sf.dx);
  scan->add_option("--dy", sf.dy);
  scan->add_option("--csv", sf.csv, "grid output file");
  scan_p.attach(scan);

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "re-verify a zero cache or the functional equation");
  verify->add_option("--zeros", vf.zeros, "zero cache to re-verify");
  verify->add_flag("--fe-grid", vf.fe_grid, "check the functional equation on a grid");
  verify->add_option("--xmin", vf.x_min);
  verify->add_option("--xmax", vf.x_max);
  verify->add_option("--ymin", vf.y_min);
  verify->add_option("--ymax", vf.y_max);
  verify->add_option("--nx", vf.nx);
  verify->add_option("--ny", vf.ny);
  verify->add_option("--threshold", vf.fe_threshold, "functional-equation residual threshold");
  verify_p.attach(verify);

  std::string report_path;
  CLI::App* report = app.add_subcommand("report", "summarize a zero cache");
  report->add_option("--zeros", report_path)->required();

  CLI::App* criteria = app.add_subcommand("criteria", "equivalent-criterion checks");
  criteria->require_subcommand(1);

  int red_n = 500;
  bool red_growth = false;
  std::int64_t red_max_n = 10000;
  double red_eps = 0.25;
  CLI::App* red = criteria->add_subcommand("redheffer", "det A(n) against Mertens, or growth C(eps)");
  red->add_option("--n", red_n, "check every dimension up to n");
  red->add_flag("--growth", red_growth, "report the empirical C(eps) instead");
  red->add_option("--max-n", red_max_n, "growth range");
  red->add_option("--eps", red_eps, "growth exponent slack");

  std::int64_t lag_max_n = 1000000;
  CLI::App* lag = criteria->add_subcommand("lagarias", "sigma(n) <= H_n + exp(H_n) log H_n");
  lag->add_option("--max-n", lag_max_n);

  std::string nb_alphas = "8";
  std::int64_t nb_cap = 1000;
  CLI::App* nb = criteria->add_subcommand("nyman-beurling", "distance from 1 to span N_alpha");
  nb->add_option("--alphas", nb_alphas, "count (1/2 .. 1/(count+1)) or comma list");
  nb->add_option("--cap", nb_cap, "t_min = 1/cap");

  std::int64_t lf_k = 1;
  double lf_re = 0.5, lf_im = 14.134725141734694;
  CLI::App* lf = criteria->add_subcommand("lfunction", "principal-character L-function");
  lf->add_option("--k", lf_k, "modulus");
  lf->add_option("--re", lf_re);
  lf->add_option("--im", lf_im);
  lfun_p.attach(lf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.back()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    set_thread_count(resolve_thread_count(threads));
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(re, im, engine, eval_p, out);
    if (zeros->parsed()) return cmd_zeros(zy_min, zy_max, zstep, zout, zeros_p, out, err);
    if (scan->parsed()) return cmd_scan(sf, scan_p, out);
    if (verify->parsed()) return cmd_verify(vf, verify_p, out);
    if (report->parsed()) return cmd_report(report_path, out);
    if (red->parsed()) {
      if (red_growth) {
        require(red_max_n >= 1 && red_eps > 0.0, "--max-n >= 1 and --eps > 0");
        return emit(redheffer_growth(red_max_n, red_eps), out);
      }
      require(red_n >= 1 && red_n <= kMaxRedhefferDim, "--n must be in [1, 2000]");
      return emit(redheffer_check(red_n), out);
    }
    if (lag->parsed()) {
      require(lag_max_n >= 1 && lag_max_n <= kMaxLagariasN, "--max-n must be in [1, 1e7]");
      return emit(lagarias_check(lag_max_n), out);
    }
    if (nb->parsed()) {
      const std::vector<double> alphas = parse_alphas(nb_alphas);
      const int size = static_cast<int>(alphas.size());
      return emit(nyman_beurling_chain(alphas, std::span<const int>(&size, 1), nb_cap), out);
    }
    if (lf->parsed()) {
      require(lf_k >= 1, "--k must be >= 1");
      return emit(lfunction_check(Complex(lf_re, lf_im), lf_k, lfun_p.params()), out);
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitCompute;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace critline::cli
