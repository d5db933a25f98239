#include "h2plus/cli.h"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "h2plus/data_io.h"
#include "h2plus/errors.h"
#include "h2plus/experiment.h"
#include "h2plus/spectrum.h"
#include "h2plus/validate.h"

namespace h2plus::cli {
namespace {

using hyperfine::RoVibLevel;

enum class Format { Table, Csv, Json };

struct Common {
  std::optional<std::string> data_dir;
  std::string format_name = "table";
  Format format = Format::Table;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--data-dir", c.data_dir, "Directory holding the data files");
  cmd->add_option("--format", c.format_name, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
}

RoVibLevel parse_level(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("level '" + text + "' must be given as v,L");
  try {
    std::size_t used_v = 0, used_L = 0;
    const int v = std::stoi(text.substr(0, comma), &used_v);
    const int L = std::stoi(text.substr(comma + 1), &used_L);
    if (used_v != comma || used_L != text.size() - comma - 1) throw std::invalid_argument("trailing characters");
    return RoVibLevel::make(v, L);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("level '" + text + "' must be given as v,L");
  }
}

data::DataSet load(const Common& c) { return data::load_dataset(data::resolve_data_dir(c.data_dir)); }

int cmd_levels(const Common& c, int v, int L, std::ostream& out) {
  const auto level = RoVibLevel::make(v, L);
  const auto ds = load(c);
  const auto sol = hyperfine::diagonalize(level, ds.coefficients.at(level).coefficients);
  switch (c.format) {
    case Format::Table: data::write_levels_table(out, sol); break;
    case Format::Csv: data::write_levels_csv(out, sol); break;
    case Format::Json: out << data::levels_to_json(sol); break;
  }
  return kOk;
}

struct SpectrumOptions {
  std::string lower;
  std::string upper;
  std::vector<std::string> pols{"pipi", "spsp", "spsm"};
  bool absolute = false;
  std::optional<double> gamma_f;
  std::optional<std::string> profile_pol;
  std::optional<double> grid_start, grid_stop;
  double grid_step = 0.01;
};

int cmd_spectrum(const Common& c, const SpectrumOptions& o, std::ostream& out) {
  const auto lower = parse_level(o.lower);
  const auto upper = parse_level(o.upper);
  std::vector<twophoton::PolarizationPair> pols;
  for (const auto& t : o.pols) pols.push_back(twophoton::parse_polarization(t));
  if (pols.empty()) throw InputError("at least one polarization pair is required");

  const auto ds = load(c);
  const auto& lo = ds.coefficients.at(lower);
  const auto& up = ds.coefficients.at(upper);
  const auto& orb = ds.orbital.at(lower, upper);
  auto s = spectrum::two_photon_spectrum(hyperfine::diagonalize(lower, lo.coefficients),
                                         hyperfine::diagonalize(upper, up.coefficients), orb, pols);
  s.metadata.coefficient_provenance = lo.provenance == up.provenance ? lo.provenance : lo.provenance + "; " + up.provenance;
  if (lower.L == upper.L && lower.v == 0 && upper.v == 1)
    if (const auto* centre = ds.centers.find(lower.L)) s.center_frequency_mhz = centre->nu_2ph_mhz;
  if (o.absolute && !s.center_frequency_mhz)
    throw DataError(fmt::format("no center frequency shipped for L={}", lower.L));

  if (o.gamma_f) {
    const auto pol = o.profile_pol ? twophoton::parse_polarization(*o.profile_pol) : pols.front();
    if (std::find(pols.begin(), pols.end(), pol) == pols.end()) pols.push_back(pol);
    double lo_f = s.lines.front().delta_f_mhz, hi_f = s.lines.back().delta_f_mhz;
    const double pad = 10.0 * spectrum::fwhm_mhz(*o.gamma_f);
    const spectrum::FrequencyGrid grid{o.grid_start.value_or(lo_f - pad), o.grid_stop.value_or(hi_f + pad), o.grid_step};
    const auto samples = spectrum::convolve_profile(s.lines, pol, *o.gamma_f, grid);
    if (c.format == Format::Json) {
      nlohmann::json doc = nlohmann::json::array();
      for (const auto& p : samples) doc.push_back({{"delta_f_MHz", p.frequency_mhz}, {"value", p.value}});
      out << doc.dump(2) << '\n';
    } else {
      data::write_profile_csv(out, samples);
    }
    return kOk;
  }

  switch (c.format) {
    case Format::Table: data::write_spectrum_table(out, s, o.absolute); break;
    case Format::Csv: data::write_spectrum_csv(out, s, o.absolute); break;
    case Format::Json: out << data::spectrum_to_json(s); break;
  }
  return kOk;
}

struct RateOptions {
  std::optional<double> intensity;
  std::optional<double> power;
  std::optional<double> waist;
  double gamma_f = 0.0;
  double q_sq = 0.0;
  bool transverse_pi = false;
};

int cmd_rate(const Common& c, const RateOptions& o, std::ostream& out) {
  double intensity = 0.0;
  if (o.intensity) {
    intensity = *o.intensity;
  } else if (o.power && o.waist) {
    intensity = experiment::beam_axis_intensity(*o.power, *o.waist);
  } else {
    throw InputError("give --intensity, or --power with --waist");
  }
  if (o.transverse_pi) intensity = experiment::transverse_field_decomposition(intensity).pi;
  const double rate = experiment::rate_at_resonance(intensity, o.gamma_f, o.q_sq);
  switch (c.format) {
    case Format::Table:
      out << fmt::format("intensity    {:.6g} W/m^2\nrate         {:.6g} 1/s\n", intensity, rate);
      break;
    case Format::Csv: out << "intensity_W_m2,rate_per_s\n" << fmt::format("{:.6g},{:.6g}\n", intensity, rate); break;
    case Format::Json:
      out << nlohmann::json{{"intensity_W_m2", intensity}, {"rate_per_s", rate}}.dump(2) << '\n';
      break;
  }
  return kOk;
}

int cmd_cavity(const Common& c, double R, double loss, std::optional<double> transmitted, std::ostream& out) {
  const auto cav = experiment::CavityParams::make(R, loss);
  const double t = experiment::cavity_transmission(cav);
  const double iso = experiment::cavity_isolation_db(cav);
  std::optional<double> circ;
  if (transmitted) circ = experiment::circulating_power(*transmitted, cav.T);
  switch (c.format) {
    case Format::Table:
      out << fmt::format("transmission  {:.4f}\nisolation     {:.2f} dB\n", t, iso);
      if (circ) out << fmt::format("circulating   {:.6g} W\n", *circ);
      break;
    case Format::Csv:
      out << "transmission,isolation_dB" << (circ ? ",circulating_W" : "") << '\n';
      out << fmt::format("{:.6g},{:.6g}", t, iso);
      if (circ) out << fmt::format(",{:.6g}", *circ);
      out << '\n';
      break;
    case Format::Json: {
      nlohmann::json doc{{"transmission", t}, {"isolation_dB", iso}};
      if (circ) doc["circulating_W"] = *circ;
      out << doc.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_validate(const Common& c, const std::optional<std::string>& table, std::ostream& out) {
  if (table && std::find(validate::table_ids().begin(), validate::table_ids().end(), *table) == validate::table_ids().end())
    throw InputError("unknown table '" + *table + "'");
  const auto report = validate::run(load(c), table);
  out << validate::render(report);
  return report.passed() ? kOk : kValidation;
}

int cmd_fit(const Common& c, std::ostream& out) {
  const auto dir = data::resolve_data_dir(c.data_dir);
  std::filesystem::create_directories(dir);
  const auto coeffs = data::fit_reference_coefficients();
  data::write_file(dir / data::kCoefficientFile, data::to_json(coeffs));
  data::write_file(dir / data::kOrbitalFile, data::to_json(data::reference_orbital_table()));
  data::write_file(dir / data::kCenterFile, data::to_json(data::reference_center_table()));
  for (const auto& r : coeffs.records)
    out << fmt::format("(v={}, L={}) max shift residual {:.3e} MHz\n", r.level.v, r.level.L, r.fit_residual_mhz);
  out << "wrote " << dir.string() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"H2+ hyperfine structure and two-photon spectra", "h2plus"};
  app.require_subcommand(1, 1);

  Common common;

  int lv_v = 0, lv_L = 0;
  auto* levels = app.add_subcommand("levels", "Hyperfine shifts and mixing coefficients of one level");
  levels->add_option("--v", lv_v, "Vibrational quantum number")->check(CLI::NonNegativeNumber);
  levels->add_option("--L", lv_L, "Rotational quantum number")->required()->check(CLI::NonNegativeNumber);
  add_common(levels, common);

  SpectrumOptions so;
  auto* spec = app.add_subcommand("spectrum", "Hyperfine components of a two-photon transition");
  spec->add_option("--lower", so.lower, "Lower level as v,L")->required();
  spec->add_option("--upper", so.upper, "Upper level as v',L'")->required();
  spec->add_option("--pol", so.pols, "Polarization pairs, comma separated")->delimiter(',');
  spec->add_flag("--absolute", so.absolute, "Add the absolute per-photon frequency column");
  spec->add_option("--gamma-f", so.gamma_f, "Emit a Lorentzian profile with this width (rad/s)")
      ->check(CLI::PositiveNumber);
  spec->add_option("--profile-pol", so.profile_pol, "Polarization pair used for the profile");
  spec->add_option("--grid-start", so.grid_start, "Profile grid start, MHz from center");
  spec->add_option("--grid-stop", so.grid_stop, "Profile grid stop, MHz from center");
  spec->add_option("--grid-step", so.grid_step, "Profile grid step, MHz")->check(CLI::PositiveNumber);
  add_common(spec, common);

  RateOptions ro;
  auto* rate = app.add_subcommand("rate", "Resonant two-photon transition rate");
  rate->add_option("--intensity", ro.intensity, "On-axis intensity, W/m^2");
  rate->add_option("--power", ro.power, "Beam power, W");
  rate->add_option("--waist", ro.waist, "Beam waist, m");
  rate->add_option("--gamma-f", ro.gamma_f, "Instrumental width, rad/s")->required();
  rate->add_option("--q-sq", ro.q_sq, "Averaged squared matrix element, a.u.")->required();
  rate->add_flag("--transverse-pi", ro.transverse_pi, "Use the linear fraction of a circular beam in a transverse field");
  add_common(rate, common);

  double cav_R = 0.0, cav_loss = 0.0;
  std::optional<double> cav_transmitted;
  auto* cavity = app.add_subcommand("cavity", "Fabry-Perot transmission and isolation");
  cavity->add_option("--R", cav_R, "Mirror reflectivity")->required();
  cavity->add_option("--loss", cav_loss, "Mirror losses");
  cavity->add_option("--transmitted-power", cav_transmitted, "Transmitted power, W, to report the circulating power");
  add_common(cavity, common);

  std::optional<std::string> table;
  auto* val = app.add_subcommand("validate", "Check the data and computations against the reference tables");
  val->add_option("--table", table, "Only check one table (II, III, IV, V, VI, VII, VIII, IX)");
  add_common(val, common);

  auto* fit = app.add_subcommand("fit", "Regenerate the data files from the reference tables");
  add_common(fit, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kUsage;
  }

  common.format = common.format_name == "csv" ? Format::Csv : common.format_name == "json" ? Format::Json : Format::Table;

  try {
    if (levels->parsed()) return cmd_levels(common, lv_v, lv_L, out);
    if (spec->parsed()) return cmd_spectrum(common, so, out);
    if (rate->parsed()) return cmd_rate(common, ro, out);
    if (cavity->parsed()) return cmd_cavity(common, cav_R, cav_loss, cav_transmitted, out);
    if (val->parsed()) return cmd_validate(common, table, out);
    if (fit->parsed()) return cmd_fit(common, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace h2plus::cli
