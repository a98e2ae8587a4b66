#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "critline/cli.hpp"
#include "critline/io.hpp"
#include "json.hpp"

using namespace critline;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "critline");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "critline_io_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

ZeroRecord sample_record(double y) {
  ZeroRecord r;
  r.y = y;
  r.abs_zeta = 1.2345678901234567e-11;
  r.char_residual = 9.87654321e-12;
  r.reflect_residual = 3.3e-11;
  r.iterations = 39;
  r.engine = Engine::kEq1;
  r.params.N = 10000;
  r.params.K = 1;
  return r;
}

}  // namespace

TEST_CASE("cache records round-trip") {
  const ZeroRecord r = sample_record(14.134725141734693);
  const std::string line = io::record_to_json(r);
  CHECK(line.rfind("{\"y\":14.134725141734693,\"abs_zeta\":", 0) == 0);
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"y", "abs_zeta", "char_residual", "reflect_residual",
                                         "iterations", "engine", "N", "K"});
  CHECK(io::record_from_json(line) == r);
  ZeroRecord odd = sample_record(0.1 + 0.2);
  odd.engine = Engine::kLevelK;
  CHECK(io::record_from_json(io::record_to_json(odd)) == odd);
  CHECK_THROWS(io::record_from_json("{\"y\":1}"));
  CHECK_THROWS(io::record_from_json("not json"));
}

TEST_CASE("cache merge keeps order and skips duplicates") {
  const std::vector<ZeroRecord> existing{sample_record(14.0), sample_record(25.0)};
  const std::vector<ZeroRecord> fresh{sample_record(21.0), sample_record(14.0 + 5e-10),
                                      sample_record(30.0)};
  const io::MergeResult m = io::merge_records(existing, fresh);
  CHECK(m.appended == 2);
  REQUIRE(m.records.size() == 4);
  for (std::size_t i = 1; i < m.records.size(); ++i) CHECK(m.records[i - 1].y < m.records[i].y);
  const fs::path p = scratch("merge.jsonl");
  io::write_cache(p, m.records);
  CHECK(io::read_cache(p) == m.records);
  CHECK(io::read_cache(scratch("missing.jsonl")).empty());
}

TEST_CASE("CSV writer") {
  ScanReport rep;
  rep.samples.push_back({0.5, 14.1, 0.03, NAN});
  std::ostringstream out;
  io::write_scan_csv(out, rep);
  CHECK(out.str() == "x,y,abs_zeta,char_residual\n0.5,14.1,0.029999999999999999,\n");
}

TEST_CASE("eval command") {
  const Run basel = invoke({"eval", "--re", "2", "--im", "0"});
  CHECK(basel.code == 0);
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(basel.out);
  CHECK(std::abs(j["zeta_re"].get<double>() - 1.6449340668482264) < 1e-10);
  CHECK(j["engine"] == "DIRECT");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"re", "im", "zeta_re", "zeta_im", "err_bound", "engine", "N", "K"});

  const Run pole = invoke({"eval", "--re", "1", "--im", "0"});
  CHECK(pole.code == 3);
  CHECK(pole.err.find("POLE_PROXIMITY") != std::string::npos);

  const Run zero = invoke({"eval", "--re", "0.5", "--im", "14.134725", "--K", "1", "--N", "20000"});
  CHECK(zero.code == 0);
  const nlohmann::json z = nlohmann::json::parse(zero.out);
  CHECK(std::hypot(z["zeta_re"].get<double>(), z["zeta_im"].get<double>()) < 1e-4);

  CHECK(invoke({"eval", "--re", "abc", "--im", "0"}).code == 2);
  CHECK(invoke({"eval", "--im", "0"}).code == 2);
  CHECK(invoke({"eval", "--re", "inf", "--im", "0"}).code == 2);
  CHECK(invoke({"eval", "--re", "2", "--im", "0", "--engine", "bogus"}).code == 2);
  CHECK(invoke({"eval", "--re", "2", "--im", "0", "--N", "0"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
  const Run eta = invoke({"eval", "--re", "0.5", "--im", "0", "--engine", "eta"});
  CHECK(nlohmann::json::parse(eta.out)["engine"] == "ETA_ORACLE");
}

TEST_CASE("zeros command is idempotent") {
  const fs::path cache = scratch("zeros.jsonl");
  const std::vector<std::string> args{"zeros", "--ymin", "10", "--ymax", "30", "--out", cache.string(),
                                      "--N", "10000", "--K", "1"};
  const Run first = invoke(args);
  CHECK(first.code == 0);
  CHECK(first.out == "found=3 verified=3 range=[10,30] appended=3\n");
  const std::vector<ZeroRecord> recs = io::read_cache(cache);
  REQUIRE(recs.size() == 3);
  CHECK(std::abs(recs[0].y - 14.134725) < 1e-5);
  CHECK(std::abs(recs[1].y - 21.022040) < 1e-5);
  CHECK(std::abs(recs[2].y - 25.010858) < 1e-5);
  const std::string bytes = slurp(cache);
  const Run again = invoke(args);
  CHECK(again.code == 0);
  CHECK(again.out == "found=3 verified=3 range=[10,30] appended=0\n");
  CHECK(slurp(cache) == bytes);

  const fs::path none = scratch("none.jsonl");
  const Run empty = invoke({"zeros", "--ymin", "0", "--ymax", "10", "--out", none.string(), "--N", "10000", "--K", "1"});
  CHECK(empty.code == 0);
  CHECK(empty.out.rfind("found=0 ", 0) == 0);
  CHECK(invoke({"zeros", "--ymin", "10", "--ymax", "5", "--out", none.string()}).code == 2);

  const Run verify = invoke({"verify", "--zeros", cache.string(), "--N", "10000", "--K", "1"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("PASS items=3") != std::string::npos);

  // corrupt the second record
  std::vector<ZeroRecord> corrupt = recs;
  corrupt[1].y += 1e-3;
  const fs::path bad = scratch("corrupt.jsonl");
  io::write_cache(bad, corrupt);
  const Run failed = invoke({"verify", "--zeros", bad.string(), "--N", "10000", "--K", "1"});
  CHECK(failed.code == 4);
  CHECK(failed.out.find("FAIL(abs_zeta)") != std::string::npos);
  CHECK(failed.out.find(io::format_double(corrupt[1].y)) != std::string::npos);

  const Run report = invoke({"report", "--zeros", cache.string()});
  CHECK(report.code == 0);
  CHECK(nlohmann::json::parse(report.out)["count"] == 3);
  CHECK(invoke({"verify", "--zeros", scratch("absent.jsonl").string()}).code == 2);
}

TEST_CASE("zeros command output does not depend on the thread count") {
  const fs::path a = scratch("t1.jsonl");
  const fs::path b = scratch("t4.jsonl");
  CHECK(invoke({"--threads", "1", "zeros", "--ymin", "13", "--ymax", "22", "--out", a.string(), "--N", "5000", "--K", "1"}).code == 0);
  CHECK(invoke({"--threads", "4", "zeros", "--ymin", "13", "--ymax", "22", "--out", b.string(), "--N", "5000", "--K", "1"}).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(invoke({"--threads", "0", "report", "--zeros", a.string()}).code == 2);
}

TEST_CASE("scan command") {
  const fs::path csv = scratch("grid.csv");
  const Run r = invoke({"scan", "--xmin", "0.48", "--xmax", "0.52", "--ymin", "14.1", "--ymax", "14.14",
                     "--dx", "0.02", "--dy", "0.02", "--csv", csv.string(), "--N", "5000", "--K", "1"});
  CHECK(r.code == 0);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,abs_zeta,char_residual");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  REQUIRE(rows.size() == 9);
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i][2] < rows[best][2]) best = i;
    if (i > 0) CHECK((rows[i - 1][0] < rows[i][0] || (rows[i - 1][0] == rows[i][0] && rows[i - 1][1] < rows[i][1])));
  }
  CHECK(std::abs(rows[best][0] - 0.5) < 1e-12);
  const nlohmann::json rep = nlohmann::json::parse(r.out);
  CHECK(rep["off_line_violations"].empty());

  const fs::path flat = scratch("flat.csv");
  const Run e = invoke({"scan", "--xmin", "0.2", "--xmax", "0.8", "--ymin", "5", "--ymax", "5", "--csv", flat.string()});
  CHECK(e.code == 0);
  CHECK(slurp(flat) == "x,y,abs_zeta,char_residual\n");
  CHECK(invoke({"scan", "--dx", "-1"}).code == 2);
}

TEST_CASE("verify functional-equation grid") {
  const Run r = invoke({"verify", "--fe-grid", "--xmin", "-0.9", "--xmax", "0.9", "--nx", "5", "--ny", "3",
                     "--ymin", "2", "--ymax", "20", "--N", "20000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS items=15") != std::string::npos);
  CHECK(invoke({"verify"}).code == 2);
}

TEST_CASE("criteria commands") {
  const Run red = invoke({"criteria", "redheffer", "--n", "5"});
  CHECK(red.code == 0);
  const nlohmann::json rj = nlohmann::json::parse(red.out);
  CHECK(rj["pass"] == true);
  CHECK(rj["metrics"]["det_at_n_max"] == -2.0);
  const Run growth = invoke({"criteria", "redheffer", "--growth", "--max-n", "10000", "--eps", "0.25"});
  CHECK(growth.code == 0);
  CHECK(nlohmann::json::parse(growth.out)["informational"] == true);
  const Run lag = invoke({"criteria", "lagarias", "--max-n", "10000"});
  CHECK(lag.code == 0);
  CHECK(nlohmann::json::parse(lag.out)["metrics"]["equality_count"] == 1.0);
  const Run nb8 = invoke({"criteria", "nyman-beurling", "--alphas", "8"});
  const Run nb16 = invoke({"criteria", "nyman-beurling", "--alphas", "16"});
  CHECK(nb8.code == 0);
  CHECK(nb16.code == 0);
  CHECK(nlohmann::json::parse(nb16.out)["metrics"]["distance_16"].get<double>() <=
        nlohmann::json::parse(nb8.out)["metrics"]["distance_8"].get<double>());
  CHECK(invoke({"criteria", "nyman-beurling", "--alphas", "0.5,0.25"}).code == 0);
  CHECK(invoke({"criteria", "nyman-beurling", "--alphas", "0.5,1.5"}).code == 3);
  CHECK(invoke({"criteria", "nyman-beurling", "--alphas", "x"}).code == 2);
  const Run lf = invoke({"criteria", "lfunction", "--k", "6", "--N", "20000", "--K", "1"});
  CHECK(lf.code == 0);
  CHECK(invoke({"criteria"}).code == 2);
  CHECK(invoke({"criteria", "redheffer", "--n", "5000"}).code == 2);
}
