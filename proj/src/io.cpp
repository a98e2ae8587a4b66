#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "critline/error.hpp"
#include "critline/io.hpp"
#include "json.hpp"

namespace critline::io {
namespace {

using ordered_json = nlohmann::ordered_json;

// Non-finite numbers become null.
ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json sample_json(const GridSample& s) {
  return ordered_json{{"x", s.x}, {"y", s.y}, {"abs_zeta", number(s.abs_zeta)}};
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string record_to_json(const ZeroRecord& r) {
  std::string s = "{\"y\":" + format_double(r.y);
  s += ",\"abs_zeta\":" + format_double(r.abs_zeta);
  s += ",\"char_residual\":" + format_double(r.char_residual);
  s += ",\"reflect_residual\":" + format_double(r.reflect_residual);
  s += ",\"iterations\":" + std::to_string(r.iterations);
  s += ",\"engine\":\"" + std::string(to_string(r.engine)) + "\"";
  s += ",\"N\":" + std::to_string(r.params.N);
  s += ",\"K\":" + std::to_string(r.params.K) + "}";
  return s;
}

ZeroRecord record_from_json(std::string_view line) {
  try {
    const nlohmann::json j = nlohmann::json::parse(line);
    ZeroRecord r;
    r.y = j.at("y").get<double>();
    r.abs_zeta = j.at("abs_zeta").get<double>();
    r.char_residual = j.at("char_residual").get<double>();
    r.reflect_residual = j.at("reflect_residual").get<double>();
    r.iterations = j.at("iterations").get<int>();
    r.engine = engine_from_string(j.at("engine").get<std::string>());
    r.params.N = j.at("N").get<std::int64_t>();
    r.params.K = j.at("K").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad cache record: ") + e.what());
  }
}

std::vector<ZeroRecord> read_cache(const std::filesystem::path& path) {
  std::vector<ZeroRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(record_from_json(line));
  }
  return out;
}

void write_cache(const std::filesystem::path& path, const std::vector<ZeroRecord>& records) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kInvalidArgument, "cannot write " + tmp.string());
    }
    for (const ZeroRecord& r : records) out << record_to_json(r) << '\n';
    if (!out.flush()) throw Error(ErrorCode::kInvalidArgument, "write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

MergeResult merge_records(const std::vector<ZeroRecord>& existing,
                          const std::vector<ZeroRecord>& fresh) {
  MergeResult out;
  out.records = existing;
  for (const ZeroRecord& r : fresh) {
    const bool dup = std::any_of(out.records.begin(), out.records.end(), [&](const ZeroRecord& e) {
      return std::abs(e.y - r.y) <= kDuplicateTolerance;
    });
    if (dup) continue;
    out.records.push_back(r);
    ++out.appended;
  }
  std::stable_sort(out.records.begin(), out.records.end(),
                   [](const ZeroRecord& a, const ZeroRecord& b) { return a.y < b.y; });
  return out;
}

void write_scan_csv(std::ostream& out, const ScanReport& report) {
  out << kCsvHeader << '\n';
  for (const GridSample& s : report.samples) {
    out << format_double(s.x) << ',' << format_double(s.y) << ',' << format_double(s.abs_zeta)
        << ',' << (std::isfinite(s.char_residual) ? format_double(s.char_residual) : "") << '\n';
  }
}

void write_scan_csv(const std::filesystem::path& path, const ScanReport& report) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  write_scan_csv(out, report);
}

std::string eval_to_json(Complex z, const EvalResult& r) {
  const ordered_json j{
      {"re", z.real()},           {"im", z.imag()},
      {"zeta_re", r.value.real()}, {"zeta_im", r.value.imag()},
      {"err_bound", number(r.err_bound)}, {"engine", std::string(to_string(r.engine))},
      {"N", r.params.N},          {"K", r.params.K},
  };
  return j.dump();
}

std::string scan_report_to_json(const ScanReport& r) {
  ordered_json minima = ordered_json::array();
  for (const GridSample& s : r.minima) minima.push_back(sample_json(s));
  ordered_json violations = ordered_json::array();
  for (const GridSample& s : r.off_line_violations) violations.push_back(sample_json(s));
  const ordered_json j{
      {"x_min", r.x_min}, {"x_max", r.x_max}, {"y_min", r.y_min}, {"y_max", r.y_max},
      {"dx", r.dx},       {"dy", r.dy},       {"nx", r.nx},       {"ny", r.ny},
      {"points", r.samples.size()},
      {"minima", minima}, {"off_line_violations", violations},
  };
  return j.dump();
}

std::string criterion_report_to_json(const CriterionReport& r) {
  ordered_json items = ordered_json::array();
  for (const ExtremalItem& e : r.extremal_items) {
    items.push_back(ordered_json{{"n", e.n}, {"value", number(e.value)}});
  }
  ordered_json metrics = ordered_json::object();
  for (const auto& [k, v] : r.metrics) metrics[k] = number(v);
  const ordered_json j{
      {"criterion", r.criterion},
      {"range", ordered_json::array({r.range_lo, r.range_hi})},
      {"pass", r.pass},
      {"informational", r.informational},
      {"min_margin", number(r.min_margin)},
      {"extremal_items", items},
      {"wall_time_s", r.wall_time_s},
      {"metrics", metrics},
  };
  return j.dump();
}

}  // namespace critline::io
