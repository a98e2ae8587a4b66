#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "critline/criteria.hpp"
#include "critline/zero_finder.hpp"
#include "critline/zeta.hpp"

namespace critline::io {

/// %.17g, enough digits to round-trip any double.
std::string format_double(double v);

/// One flat JSON object with keys y, abs_zeta, char_residual,
/// reflect_residual, iterations, engine, N, K (in that order), no newline.
std::string record_to_json(const ZeroRecord& r);

/// Inverse of record_to_json; tol and pole_radius take their defaults.
/// Throws Error(kInvalidArgument) on malformed input.
ZeroRecord record_from_json(std::string_view line);

/// Missing file reads as an empty cache. Blank lines are skipped.
std::vector<ZeroRecord> read_cache(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory, then renames.
void write_cache(const std::filesystem::path& path, const std::vector<ZeroRecord>& records);

inline constexpr double kDuplicateTolerance = 1e-9;

struct MergeResult {
  std::vector<ZeroRecord> records;  // strictly increasing y
  int appended = 0;
};

/// Existing records win; a fresh record within 1e-9 of any kept y is dropped.
MergeResult merge_records(const std::vector<ZeroRecord>& existing,
                          const std::vector<ZeroRecord>& fresh);

inline constexpr std::string_view kCsvHeader = "x,y,abs_zeta,char_residual";

void write_scan_csv(std::ostream& out, const ScanReport& report);
void write_scan_csv(const std::filesystem::path& path, const ScanReport& report);

std::string eval_to_json(Complex z, const EvalResult& r);
std::string scan_report_to_json(const ScanReport& r);
std::string criterion_report_to_json(const CriterionReport& r);

}  // namespace critline::io
