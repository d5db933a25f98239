#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "h2plus/data_io.h"
#include "h2plus/errors.h"
#include "h2plus/reference_tables.h"
#include "temp_dir.h"

using namespace h2plus;
using namespace h2plus::data;
using nlohmann::json;

namespace {

const DataSet& shipped() {
  static const DataSet ds = load_dataset(default_data_dir());
  return ds;
}

}  // namespace

TEST_CASE("shipped data covers the tabulated levels") {
  const auto& ds = shipped();
  for (int v : {0, 1})
    for (int L = 0; L <= 3; ++L) {
      const auto& rec = ds.coefficients.at({v, L});
      CHECK(rec.fit_residual_mhz < hyperfine::kFitShiftThresholdMhz);
      CHECK_FALSE(rec.provenance.empty());
    }
  for (int L = 0; L <= 3; ++L) {
    CHECK_NOTHROW(ds.orbital.at({0, L}, {1, L}));
    REQUIRE(ds.centers.find(L) != nullptr);
  }
  CHECK(ds.centers.find(4) == nullptr);
  CHECK_THROWS_AS(ds.coefficients.at({2, 0}), DataError);
  CHECK_THROWS_AS(ds.orbital.at({0, 1}, {1, 3}), DataError);
}

TEST_CASE("shipped data matches freshly regenerated data") {
  const auto fresh = fit_reference_coefficients();
  const auto& ds = shipped();
  REQUIRE(fresh.records.size() == ds.coefficients.records.size());
  for (const auto& r : fresh.records) {
    const auto& s = ds.coefficients.at(r.level).coefficients;
    CHECK(s.b_F == doctest::Approx(r.coefficients.b_F).epsilon(1e-9));
    CHECK(s.c_e == doctest::Approx(r.coefficients.c_e).epsilon(1e-9));
    CHECK(s.d_1 == doctest::Approx(r.coefficients.d_1).epsilon(1e-9));
  }
  CHECK(to_json(reference_orbital_table()) == to_json(ds.orbital));
  CHECK(to_json(reference_center_table()) == to_json(ds.centers));
}

TEST_CASE("JSON round trips") {
  const auto& ds = shipped();
  CHECK(to_json(parse_coefficients(to_json(ds.coefficients))) == to_json(ds.coefficients));
  CHECK(to_json(parse_orbital_elements(to_json(ds.orbital))) == to_json(ds.orbital));
  CHECK(to_json(parse_center_frequencies(to_json(ds.centers))) == to_json(ds.centers));
}

TEST_CASE("malformed documents are data errors") {
  CHECK_THROWS_AS(parse_coefficients("not json"), DataError);
  CHECK_THROWS_AS(parse_coefficients(R"({"format":"something-else","version":1,"records":[]})"), DataError);
  CHECK_THROWS_AS(parse_coefficients(R"({"format":"h2plus-hyperfine-coefficients","version":99,"records":[]})"),
                  DataError);
  auto doc = json::parse(to_json(shipped().coefficients));
  doc["records"][0].erase("b_F");
  CHECK_THROWS_AS(parse_coefficients(doc.dump()), DataError);
  doc = json::parse(to_json(shipped().coefficients));
  doc["records"][0]["units"] = "GHz";
  CHECK_THROWS_AS(parse_coefficients(doc.dump()), DataError);
  doc = json::parse(to_json(shipped().coefficients));
  doc["records"][0]["L"] = -2;
  CHECK_THROWS_AS(parse_coefficients(doc.dump()), DataError);
  CHECK_THROWS_AS(read_file("/nonexistent/h2plus/file.json"), DataError);
  CHECK_THROWS_AS(load_dataset("/nonexistent/h2plus"), DataError);
}

TEST_CASE("data directory resolution order") {
  ::setenv(kDataDirEnv, "/from/env", 1);
  CHECK(resolve_data_dir(std::string("/from/flag")) == "/from/flag");
  CHECK(resolve_data_dir(std::nullopt) == "/from/env");
  ::unsetenv(kDataDirEnv);
  CHECK(resolve_data_dir(std::nullopt) == default_data_dir());
}

TEST_CASE("write and reload") {
  TempDir dir;
  write_file(dir.path() / kCoefficientFile, to_json(shipped().coefficients));
  write_file(dir.path() / kOrbitalFile, to_json(shipped().orbital));
  write_file(dir.path() / kCenterFile, to_json(shipped().centers));
  const auto again = load_dataset(dir.path());
  CHECK(to_json(again.coefficients) == to_json(shipped().coefficients));
}

TEST_CASE("number formatting") {
  CHECK(format_shift(0.0) == "0.0000");
  CHECK(format_shift(-0.00001) == "0.0000");
  CHECK(format_shift(-50.75995) == "-50.7600");
  CHECK(format_intensity(0.17546) == "1.755e-01");
  CHECK(format_intensity(0.0) == "0.000e+00");
  CHECK(format_half(HalfInt::from_twice(3)) == "3/2");
  CHECK(format_half(HalfInt(2)) == "2");
}

TEST_CASE("levels output") {
  const auto sol = hyperfine::diagonalize({0, 1}, shipped().coefficients.at({0, 1}).coefficients);
  std::ostringstream csv;
  write_levels_csv(csv, sol);
  std::string line;
  std::istringstream in(csv.str());
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);
  const auto doc = json::parse(levels_to_json(sol));
  REQUIRE(doc["states"].size() == 5);
  CHECK(doc["states"][0]["F"] == "3/2");
  CHECK(doc["states"][0]["shift_MHz"].get<double>() == doctest::Approx(474.1063).epsilon(1e-7));
  std::ostringstream table;
  write_levels_table(table, sol);
  CHECK(table.str().find("474.1063") != std::string::npos);
  CHECK(table.str().find("-910.7579") != std::string::npos);
}
