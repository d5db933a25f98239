#include "h2plus/data_io.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "h2plus/errors.h"
#include "h2plus/reference_tables.h"

#ifndef H2PLUS_DEFAULT_DATA_DIR
#define H2PLUS_DEFAULT_DATA_DIR "data"
#endif

namespace h2plus::data {
namespace {

using nlohmann::json;
using twophoton::PolarizationPair;

json parse_document(const std::string& text, const char* format) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string(format) + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != format)
    throw DataError(std::string("expected a document with \"format\": \"") + format + "\"");
  if (doc.value("version", 0) != kSchemaVersion)
    throw DataError(std::string(format) + ": unsupported schema version");
  if (!doc.contains("records") || !doc["records"].is_array()) throw DataError(std::string(format) + ": missing records");
  return doc;
}

template <typename T>
T field(const json& rec, const char* key) {
  if (!rec.contains(key)) throw DataError(std::string("record is missing field '") + key + "'");
  try {
    return rec.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DataError(std::string("field '") + key + "' has the wrong type: " + e.what());
  }
}

double finite_field(const json& rec, const char* key) {
  const auto x = field<double>(rec, key);
  if (!std::isfinite(x)) throw DataError(std::string("field '") + key + "' is not finite");
  return x;
}

void require_units(const json& rec, const char* expected) {
  if (field<std::string>(rec, "units") != expected)
    throw DataError(std::string("record units must be \"") + expected + "\"");
}

json document(const char* format) { return json{{"format", format}, {"version", kSchemaVersion}, {"records", json::array()}}; }

const std::vector<PolarizationPair>& csv_polarizations() {
  static const std::vector<PolarizationPair> pols{twophoton::kPiPi, twophoton::kSigmaPlusSigmaPlus,
                                                  twophoton::kSigmaPlusSigmaMinus};
  return pols;
}

std::string optional_intensity(const spectrum::TransitionLine& l, PolarizationPair p) {
  auto it = l.intensity.find(p);
  return it == l.intensity.end() ? std::string() : format_intensity(it->second);
}

std::string verdict_name(twophoton::Verdict v) {
  switch (v) {
    case twophoton::Verdict::Allowed: return "allowed";
    case twophoton::Verdict::AllowedWeak: return "allowed_weak";
    case twophoton::Verdict::Forbidden: return "forbidden";
  }
  return "unknown";
}

}  // namespace

const CoefficientRecord& CoefficientTable::at(hyperfine::RoVibLevel level) const {
  for (const auto& r : records)
    if (r.level == level) return r;
  throw DataError("no hyperfine coefficients for (v=" + std::to_string(level.v) + ", L=" + std::to_string(level.L) +
                  ")");
}

const twophoton::OrbitalReducedElements& OrbitalTable::at(hyperfine::RoVibLevel lower,
                                                          hyperfine::RoVibLevel upper) const {
  for (const auto& r : records)
    if (r.elements.lower == lower && r.elements.upper == upper) return r.elements;
  throw DataError("no orbital reduced elements for (v=" + std::to_string(lower.v) + ", L=" + std::to_string(lower.L) +
                  ") -> (v'=" + std::to_string(upper.v) + ", L'=" + std::to_string(upper.L) + ")");
}

const CenterRecord* CenterTable::find(int L) const {
  for (const auto& r : records)
    if (r.L == L) return &r;
  return nullptr;
}

CoefficientTable parse_coefficients(const std::string& json_text) {
  const json doc = parse_document(json_text, kCoefficientFormat);
  CoefficientTable t;
  for (const auto& rec : doc["records"]) {
    require_units(rec, "MHz");
    CoefficientRecord r;
    try {
      r.level = hyperfine::RoVibLevel::make(field<int>(rec, "v"), field<int>(rec, "L"));
    } catch (const InputError& e) {
      throw DataError(e.what());
    }
    r.coefficients = {finite_field(rec, "b_F"), finite_field(rec, "c_e"), finite_field(rec, "c_I"),
                      finite_field(rec, "d_1"), finite_field(rec, "d_2")};
    r.provenance = field<std::string>(rec, "provenance");
    r.fit_residual_mhz = finite_field(rec, "fit_residual_MHz");
    t.records.push_back(std::move(r));
  }
  return t;
}

OrbitalTable parse_orbital_elements(const std::string& json_text) {
  const json doc = parse_document(json_text, kOrbitalFormat);
  OrbitalTable t;
  for (const auto& rec : doc["records"]) {
    require_units(rec, "a.u.");
    OrbitalRecord r;
    try {
      r.elements.lower = hyperfine::RoVibLevel::make(field<int>(rec, "v"), field<int>(rec, "L"));
      r.elements.upper = hyperfine::RoVibLevel::make(field<int>(rec, "v'"), field<int>(rec, "L'"));
    } catch (const InputError& e) {
      throw DataError(e.what());
    }
    r.elements.Q0 = finite_field(rec, "Q0");
    r.elements.Q2 = finite_field(rec, "Q2");
    r.source = field<std::string>(rec, "source");
    t.records.push_back(std::move(r));
  }
  return t;
}

CenterTable parse_center_frequencies(const std::string& json_text) {
  const json doc = parse_document(json_text, kCenterFormat);
  CenterTable t;
  for (const auto& rec : doc["records"])
    t.records.push_back({field<int>(rec, "L"), finite_field(rec, "nu_2ph_MHz"), finite_field(rec, "lambda_um")});
  return t;
}

std::string to_json(const CoefficientTable& t) {
  json doc = document(kCoefficientFormat);
  for (const auto& r : t.records) {
    doc["records"].push_back(json{{"v", r.level.v},
                                  {"L", r.level.L},
                                  {"b_F", r.coefficients.b_F},
                                  {"c_e", r.coefficients.c_e},
                                  {"c_I", r.coefficients.c_I},
                                  {"d_1", r.coefficients.d_1},
                                  {"d_2", r.coefficients.d_2},
                                  {"units", "MHz"},
                                  {"provenance", r.provenance},
                                  {"fit_residual_MHz", r.fit_residual_mhz}});
  }
  return doc.dump(2) + "\n";
}

std::string to_json(const OrbitalTable& t) {
  json doc = document(kOrbitalFormat);
  for (const auto& r : t.records) {
    doc["records"].push_back(json{{"v", r.elements.lower.v},
                                  {"L", r.elements.lower.L},
                                  {"v'", r.elements.upper.v},
                                  {"L'", r.elements.upper.L},
                                  {"Q0", r.elements.Q0},
                                  {"Q2", r.elements.Q2},
                                  {"units", "a.u."},
                                  {"source", r.source}});
  }
  return doc.dump(2) + "\n";
}

std::string to_json(const CenterTable& t) {
  json doc = document(kCenterFormat);
  for (const auto& r : t.records)
    doc["records"].push_back(json{{"L", r.L}, {"nu_2ph_MHz", r.nu_2ph_mhz}, {"lambda_um", r.lambda_um}});
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw DataError("cannot read data file " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& contents) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + p.string());
  out << contents;
  if (!out) throw DataError("failed writing " + p.string());
}

DataSet load_dataset(const std::filesystem::path& dir) {
  auto with_name = [&](const char* name, auto parse) {
    try {
      return parse(read_file(dir / name));
    } catch (const DataError& e) {
      throw DataError(std::string(name) + ": " + e.what());
    }
  };
  DataSet d;
  d.coefficients = with_name(kCoefficientFile, parse_coefficients);
  d.orbital = with_name(kOrbitalFile, parse_orbital_elements);
  d.centers = with_name(kCenterFile, parse_center_frequencies);
  return d;
}

std::filesystem::path default_data_dir() { return H2PLUS_DEFAULT_DATA_DIR; }

std::filesystem::path resolve_data_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kDataDirEnv); env != nullptr && *env != '\0') return env;
  return default_data_dir();
}

CoefficientTable fit_reference_coefficients() {
  CoefficientTable t;
  for (int L = 0; L <= 3; ++L) {
    for (int v = 0; v <= 1; ++v) {
      const auto observed = reference::published_solution(v, L);
      const auto fit = hyperfine::fit_coefficients(L, observed);
      std::string provenance =
          L % 2 == 0 ? "c_e inverted from the published J=L+1/2 shift; other constants unused for even L"
                     : "least-squares fit to published hyperfine shifts and mixing coefficients";
      t.records.push_back({observed.level, fit.coefficients, std::move(provenance), fit.max_shift_residual_mhz});
    }
  }
  return t;
}

OrbitalTable reference_orbital_table() {
  OrbitalTable t;
  for (const auto& r : reference::orbital_elements()) {
    t.records.push_back({{hyperfine::RoVibLevel{0, r.L}, hyperfine::RoVibLevel{1, r.L}, r.Q0, r.Q2},
                         "published variational reduced elements, (v=0,L) -> (v'=1,L)"});
  }
  return t;
}

CenterTable reference_center_table() {
  CenterTable t;
  for (const auto& r : reference::center_frequencies()) t.records.push_back({r.L, r.nu_2ph_mhz, r.lambda_um});
  return t;
}

std::string format_shift(double mhz) {
  if (mhz == 0.0) mhz = 0.0;  // no "-0.0000"
  const std::string s = fmt::format("{:.4f}", mhz);
  return s == "-0.0000" ? "0.0000" : s;
}

std::string format_intensity(double au) { return fmt::format("{:.3e}", au == 0.0 ? 0.0 : au); }

std::string format_half(HalfInt h) { return h.str(); }

void write_levels_table(std::ostream& os, const hyperfine::HyperfineSolution& sol) {
  os << fmt::format("{:>3} {:>3} {:>5} {:>5} {:>12}  {}\n", "L", "v", "F", "J", "shift_MHz", "[C1, C3]");
  for (const auto& s : sol.states) {
    os << fmt::format("{:>3} {:>3} {:>5} {:>5} {:>12}  [{:.6f}, {:.6f}]\n", sol.level.L, sol.level.v,
                      format_half(s.F_tilde), format_half(s.J), format_shift(s.shift_mhz), s.coeffs.c1 + 0.0,
                      s.coeffs.c3 + 0.0);
  }
}

void write_levels_csv(std::ostream& os, const hyperfine::HyperfineSolution& sol) {
  os << "L,v,F,J,shift_MHz,C1,C3\n";
  for (const auto& s : sol.states) {
    os << fmt::format("{},{},{},{},{},{:.6f},{:.6f}\n", sol.level.L, sol.level.v, format_half(s.F_tilde),
                      format_half(s.J), format_shift(s.shift_mhz), s.coeffs.c1 + 0.0, s.coeffs.c3 + 0.0);
  }
}

std::string levels_to_json(const hyperfine::HyperfineSolution& sol) {
  json doc{{"v", sol.level.v}, {"L", sol.level.L}, {"units", "MHz"}, {"states", json::array()}};
  for (const auto& s : sol.states) {
    doc["states"].push_back(json{{"F", format_half(s.F_tilde)},
                                 {"J", format_half(s.J)},
                                 {"shift_MHz", s.shift_mhz},
                                 {"C1", s.coeffs.c1},
                                 {"C3", s.coeffs.c3}});
  }
  return doc.dump(2) + "\n";
}

void write_spectrum_csv(std::ostream& os, const spectrum::SpectrumResult& s, bool with_absolute) {
  os << "L,v,F_lower,J_lower,F_upper,J_upper,delta_f_MHz,intensity_pipi,intensity_spsp,intensity_spsm";
  if (with_absolute) os << ",frequency_MHz";
  os << "\n";
  for (const auto& l : s.lines) {
    os << fmt::format("{},{},{},{},{},{},{}", s.metadata.lower.L, s.metadata.lower.v, format_half(l.lower.F_tilde),
                      format_half(l.lower.J), format_half(l.upper.F_tilde), format_half(l.upper.J),
                      format_shift(l.delta_f_mhz));
    for (const auto& p : csv_polarizations()) os << ',' << optional_intensity(l, p);
    if (with_absolute) {
      os << ',';
      if (s.center_frequency_mhz) os << format_shift(*s.center_frequency_mhz + l.delta_f_mhz);
    }
    os << "\n";
  }
}

void write_spectrum_table(std::ostream& os, const spectrum::SpectrumResult& s, bool with_absolute) {
  os << fmt::format("# (v={}, L={}) -> (v'={}, L'={})", s.metadata.lower.v, s.metadata.lower.L, s.metadata.upper.v,
                    s.metadata.upper.L);
  if (s.center_frequency_mhz) os << fmt::format("  center {} MHz per photon", format_shift(*s.center_frequency_mhz));
  os << "\n";
  os << fmt::format("{:>12} {:>11} {:>11}", "delta_f_MHz", "(F,J)", "(F',J')");
  for (const auto& p : s.metadata.polarizations) os << fmt::format(" {:>10}", p.token());
  if (with_absolute) os << fmt::format(" {:>18}", "frequency_MHz");
  os << "\n";
  for (const auto& l : s.lines) {
    os << fmt::format("{:>12} {:>11} {:>11}", format_shift(l.delta_f_mhz),
                      hyperfine::label(l.lower.F_tilde, l.lower.J), hyperfine::label(l.upper.F_tilde, l.upper.J));
    for (const auto& p : s.metadata.polarizations) os << fmt::format(" {:>10}", format_intensity(l.at(p)));
    if (with_absolute && s.center_frequency_mhz)
      os << fmt::format(" {:>18}", format_shift(*s.center_frequency_mhz + l.delta_f_mhz));
    if (l.all_zero()) os << "  (zero)";
    os << "\n";
  }
}

std::string spectrum_to_json(const spectrum::SpectrumResult& s) {
  json doc;
  doc["lower"] = {{"v", s.metadata.lower.v}, {"L", s.metadata.lower.L}};
  doc["upper"] = {{"v", s.metadata.upper.v}, {"L", s.metadata.upper.L}};
  doc["center_frequency_MHz"] = s.center_frequency_mhz ? json(*s.center_frequency_mhz) : json(nullptr);
  doc["coefficient_provenance"] = s.metadata.coefficient_provenance;
  doc["polarizations"] = json::array();
  for (const auto& p : s.metadata.polarizations) doc["polarizations"].push_back(p.token());
  doc["units"] = {{"delta_f", "MHz"}, {"intensity", "a.u."}};
  doc["lines"] = json::array();
  for (const auto& l : s.lines) {
    json intensity = json::object();
    for (const auto& [p, value] : l.intensity) intensity[p.token()] = value;
    doc["lines"].push_back(json{{"F_lower", format_half(l.lower.F_tilde)},
                                {"J_lower", format_half(l.lower.J)},
                                {"F_upper", format_half(l.upper.F_tilde)},
                                {"J_upper", format_half(l.upper.J)},
                                {"delta_f_MHz", l.delta_f_mhz},
                                {"intensity", intensity},
                                {"all_zero", l.all_zero()},
                                {"selection", verdict_name(l.selection.verdict)},
                                {"forbidden_reason", twophoton::to_string(l.selection.reason)}});
  }
  return doc.dump(2) + "\n";
}

void write_profile_csv(std::ostream& os, const std::vector<spectrum::ProfileSample>& samples) {
  os << "delta_f_MHz,value\n";
  for (const auto& s : samples) os << fmt::format("{:.6f},{:.6e}\n", s.frequency_mhz, s.value);
}

}  // namespace h2plus::data
