#pragma once

#include <optional>
#include <string>
#include <vector>

#include "h2plus/data_io.h"

/// Regression of the shipped data and the computation chain against the
/// published reference tables. Table identifiers: II, III, IV, V, VI, VII, VIII, IX.
namespace h2plus::validate {

struct Metric {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  int count = 0;

  bool passed() const { return max_deviation <= tolerance; }
};

struct TableCheck {
  std::string table;
  std::string description;
  std::vector<Metric> metrics;
  std::vector<std::string> failures;  // first few offending entries

  bool passed() const;
};

struct ValidationReport {
  std::vector<TableCheck> tables;

  bool passed() const;
};

// Tolerances.
inline constexpr double kShiftTolMhz = 1e-4;
inline constexpr double kMixingTol = 1e-5;
inline constexpr double kTensorTol = 1e-14;
inline constexpr double kDeltaFTolMhz = 1e-3;
inline constexpr double kStrongLineFloor = 1e-3;  // printed values at or above use the absolute tolerance
inline constexpr double kStrongIntensityTol = 5e-4;
inline constexpr double kWeakIntensityRelTol = 0.01;
inline constexpr double kZeroIntensityTol = 1e-10;
inline constexpr double kWavelengthTolUm = 5e-4;

const std::vector<std::string>& table_ids();

/// Runs every table, or only `only`. Throws InputError for an unknown identifier.
/// Data errors (missing records) are reported as failures of the affected table.
ValidationReport run(const data::DataSet& data, const std::optional<std::string>& only = std::nullopt);

/// Published-vs-computed intensity comparison used by the spectral tables.
/// Returns the deviation in the metric selected by the published magnitude.
enum class IntensityClass { Zero, Strong, Weak };
IntensityClass classify_intensity(double published);
double intensity_deviation(double published, double computed);

std::string render(const ValidationReport& r);

}  // namespace h2plus::validate
