#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "h2plus/cli.h"
#include "h2plus/data_io.h"
#include "temp_dir.h"

using namespace h2plus;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

void copy_shipped(const std::filesystem::path& dir) {
  for (const char* f : {data::kCoefficientFile, data::kOrbitalFile, data::kCenterFile})
    std::filesystem::copy_file(data::default_data_dir() / f, dir / f);
}

}  // namespace

TEST_CASE("levels") {
  const auto r = run({"levels", "--v", "0", "--L", "1"});
  CHECK(r.code == 0);
  for (const char* s : {"474.1063", "481.9534", "-930.4332", "385.3985", "-910.7579"})
    CHECK(r.out.find(s) != std::string::npos);
  CHECK(count_lines(r.out) == 6);

  const auto r0 = run({"levels", "--v", "0", "--L", "0", "--format", "csv"});
  CHECK(r0.code == 0);
  CHECK(r0.out == "L,v,F,J,shift_MHz,C1,C3\n0,0,1/2,1/2,0.0000,1.000000,0.000000\n");

  const auto js = run({"levels", "--L", "3", "--format", "json"});
  CHECK(js.code == 0);
  CHECK(nlohmann::json::parse(js.out)["states"].size() == 6);
}

TEST_CASE("usage errors") {
  CHECK(run({"levels", "--L", "-1"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"levels", "--L", "1", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--lower", "0,2", "--upper", "1,2", "--pol", "pp"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--lower", "0", "--upper", "1,2"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--lower", "0,x", "--upper", "1,2"}).code == cli::kUsage);
  CHECK(run({"cavity", "--R", "0.99", "--loss", "0.02"}).code == cli::kUsage);
  CHECK(run({"rate", "--gamma-f", "0", "--q-sq", "0.02", "--intensity", "6.4e6"}).code == cli::kUsage);
  CHECK(run({"validate", "--table", "XX"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("spectrum") {
  const auto r = run({"spectrum", "--lower", "0,2", "--upper", "1,2", "--pol", "pipi,spsp,spsm", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 5);
  CHECK(r.out.find("2,0,1/2,5/2,1/2,3/2,-50.7600,3.891e-03") != std::string::npos);

  const auto zero = run({"spectrum", "--lower", "0,0", "--upper", "1,0", "--pol", "spsp", "--format", "csv"});
  CHECK(zero.code == 0);
  CHECK(zero.out ==
        "L,v,F_lower,J_lower,F_upper,J_upper,delta_f_MHz,intensity_pipi,intensity_spsp,intensity_spsm\n"
        "0,0,1/2,1/2,1/2,1/2,0.0000,,0.000e+00,\n");

  const auto missing = run({"spectrum", "--lower", "0,1", "--upper", "1,3"});
  CHECK(missing.code == cli::kData);
  CHECK(missing.err.find("orbital") != std::string::npos);

  const auto abs = run({"spectrum", "--lower", "0,0", "--upper", "1,0", "--absolute", "--format", "csv"});
  CHECK(abs.code == 0);
  CHECK(abs.out.find(",32844161.8440\n") != std::string::npos);

  const auto js = run({"spectrum", "--lower", "0,3", "--upper", "1,3", "--format", "json"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["lines"].size() == 36);
  CHECK(doc["center_frequency_MHz"].get<double>() == doctest::Approx(32569919.581));

  const auto table = run({"spectrum", "--lower", "0,1", "--upper", "1,1"});
  CHECK(table.code == 0);
  CHECK(table.out.find("-3.7019") != std::string::npos);
}

TEST_CASE("spectrum profile") {
  const auto r = run({"spectrum", "--lower", "0,2", "--upper", "1,2", "--gamma-f", "16336.28", "--grid-start", "-2",
                      "--grid-stop", "2", "--grid-step", "0.5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 10);
  CHECK(r.out.rfind("delta_f_MHz,value\n", 0) == 0);
  CHECK(run({"spectrum", "--lower", "0,2", "--upper", "1,2", "--gamma-f", "-1"}).code == cli::kUsage);
}

TEST_CASE("rate and cavity") {
  const auto r = run({"rate", "--intensity", "6.4e6", "--gamma-f", "16336.28", "--q-sq", "0.02", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["rate_per_s"].get<double>() == doctest::Approx(0.7).epsilon(0.1));

  const auto t = run({"rate", "--power", "10", "--waist", "1e-3", "--transverse-pi", "--gamma-f", "16336.28", "--q-sq",
                      "0.2", "--format", "json"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["rate_per_s"].get<double>() == doctest::Approx(1.7).epsilon(0.1));
  CHECK(run({"rate", "--gamma-f", "1", "--q-sq", "0.2"}).code == cli::kUsage);

  const auto c = run({"cavity", "--R", "0.98", "--loss", "0.001"});
  CHECK(c.code == 0);
  CHECK(c.out.find("0.9025") != std::string::npos);
  CHECK(c.out.find("40.36 dB") != std::string::npos);
}

TEST_CASE("validate") {
  const auto all = run({"validate"});
  CHECK(all.code == cli::kOk);
  CHECK(all.out.find("FAIL") == std::string::npos);
  for (const char* t : {"Table II ", "Table III", "Table IV", "Table V ", "Table VI ", "Table VII", "Table VIII",
                        "Table IX"})
    CHECK(all.out.find(t) != std::string::npos);

  const auto only = run({"validate", "--table", "VI"});
  CHECK(only.code == cli::kOk);
  CHECK(only.out.find("Table VI ") != std::string::npos);
  CHECK(only.out.find("Table VII") == std::string::npos);
  CHECK(only.out.find("Table III") == std::string::npos);
}

TEST_CASE("validate detects a corrupted coefficient file") {
  TempDir dir;
  copy_shipped(dir.path());
  auto doc = nlohmann::json::parse(data::read_file(dir.path() / data::kCoefficientFile));
  for (auto& rec : doc["records"])
    if (rec["v"] == 0 && rec["L"] == 1) rec["c_e"] = rec["c_e"].get<double>() + 0.5;
  data::write_file(dir.path() / data::kCoefficientFile, doc.dump(2));
  const auto r = run({"validate", "--data-dir", dir.path().string()});
  CHECK(r.code == cli::kValidation);
  CHECK(r.out.find("Table III   FAIL") != std::string::npos);
  CHECK(r.out.find("Table IV    PASS") != std::string::npos);
}

TEST_CASE("data directory: flag, environment, missing") {
  TempDir dir;
  copy_shipped(dir.path());
  ::setenv(data::kDataDirEnv, "/nonexistent/h2plus", 1);
  CHECK(run({"levels", "--L", "1"}).code == cli::kData);
  CHECK(run({"levels", "--L", "1", "--data-dir", dir.path().string()}).code == cli::kOk);
  ::setenv(data::kDataDirEnv, dir.path().string().c_str(), 1);
  CHECK(run({"levels", "--L", "1"}).code == cli::kOk);
  ::unsetenv(data::kDataDirEnv);
}

TEST_CASE("fit regenerates a valid data directory") {
  TempDir dir;
  const auto out = dir.path() / "fresh";
  const auto r = run({"fit", "--data-dir", out.string()});
  CHECK(r.code == cli::kOk);
  CHECK(run({"validate", "--data-dir", out.string()}).code == cli::kOk);
  for (const char* f : {data::kCoefficientFile, data::kOrbitalFile, data::kCenterFile})
    CHECK(data::read_file(out / f) == data::read_file(data::default_data_dir() / f));
}

TEST_CASE("identical invocations produce identical output") {
  const std::vector<std::string> args{"spectrum", "--lower", "0,3", "--upper", "1,3", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}
