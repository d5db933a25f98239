#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "h2plus/hyperfine.h"
#include "h2plus/spectrum.h"
#include "h2plus/twophoton.h"

/// Shipped data files and output formats. Schemas are documented in docs/data_formats.md.
namespace h2plus::data {

inline constexpr const char* kCoefficientFormat = "h2plus-hyperfine-coefficients";
inline constexpr const char* kOrbitalFormat = "h2plus-orbital-reduced-elements";
inline constexpr const char* kCenterFormat = "h2plus-center-frequencies";
inline constexpr int kSchemaVersion = 1;

inline constexpr const char* kCoefficientFile = "hyperfine_coefficients.json";
inline constexpr const char* kOrbitalFile = "orbital_elements.json";
inline constexpr const char* kCenterFile = "center_frequencies.json";

/// Environment variable consulted when no --data-dir flag is given.
inline constexpr const char* kDataDirEnv = "H2PLUS_DATA_DIR";

struct CoefficientRecord {
  hyperfine::RoVibLevel level;
  hyperfine::HyperfineCoefficients coefficients;
  std::string provenance;
  double fit_residual_mhz = 0.0;
};

struct CoefficientTable {
  std::vector<CoefficientRecord> records;

  /// Throws DataError when (v, L) is missing.
  const CoefficientRecord& at(hyperfine::RoVibLevel level) const;
};

struct OrbitalRecord {
  twophoton::OrbitalReducedElements elements;
  std::string source;
};

struct OrbitalTable {
  std::vector<OrbitalRecord> records;

  /// Throws DataError when the level pair is missing.
  const twophoton::OrbitalReducedElements& at(hyperfine::RoVibLevel lower, hyperfine::RoVibLevel upper) const;
};

/// Per-photon spin-independent frequency of (v = 0, L) -> (v' = 1, L).
struct CenterRecord {
  int L = 0;
  double nu_2ph_mhz = 0.0;
  double lambda_um = 0.0;
};

struct CenterTable {
  std::vector<CenterRecord> records;

  const CenterRecord* find(int L) const;
};

// Parsing throws DataError on malformed documents.
CoefficientTable parse_coefficients(const std::string& json_text);
OrbitalTable parse_orbital_elements(const std::string& json_text);
CenterTable parse_center_frequencies(const std::string& json_text);

std::string to_json(const CoefficientTable& t);
std::string to_json(const OrbitalTable& t);
std::string to_json(const CenterTable& t);

/// Whole file as a string; throws DataError when unreadable.
std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& contents);

struct DataSet {
  CoefficientTable coefficients;
  OrbitalTable orbital;
  CenterTable centers;
};

/// Loads the three data files from a directory. Throws DataError.
DataSet load_dataset(const std::filesystem::path& dir);

/// --data-dir flag, then $H2PLUS_DATA_DIR, then the built-in default directory.
std::filesystem::path resolve_data_dir(const std::optional<std::string>& flag);
std::filesystem::path default_data_dir();

/// Data files regenerated from the published reference tables: coefficients
/// fitted level by level, orbital elements and center frequencies as printed.
CoefficientTable fit_reference_coefficients();
OrbitalTable reference_orbital_table();
CenterTable reference_center_table();

// Output. All numbers are formatted locale-independently: shifts with 4
// decimals, intensities with 4 significant figures.
void write_levels_table(std::ostream& os, const hyperfine::HyperfineSolution& sol);
void write_levels_csv(std::ostream& os, const hyperfine::HyperfineSolution& sol);
std::string levels_to_json(const hyperfine::HyperfineSolution& sol);

/// Columns: L, v, F_lower, J_lower, F_upper, J_upper, delta_f_MHz, intensity_pipi,
/// intensity_spsp, intensity_spsm [, frequency_MHz when with_absolute].
/// Intensities not computed for the spectrum are left empty.
void write_spectrum_csv(std::ostream& os, const spectrum::SpectrumResult& s, bool with_absolute);
void write_spectrum_table(std::ostream& os, const spectrum::SpectrumResult& s, bool with_absolute);
std::string spectrum_to_json(const spectrum::SpectrumResult& s);

void write_profile_csv(std::ostream& os, const std::vector<spectrum::ProfileSample>& samples);

std::string format_shift(double mhz);
std::string format_intensity(double au);
/// "1/2", "3", ... as printed in tables.
std::string format_half(HalfInt h);

}  // namespace h2plus::data
