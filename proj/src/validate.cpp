#include "h2plus/validate.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <fmt/format.h>

#include "h2plus/errors.h"
#include "h2plus/experiment.h"
#include "h2plus/hyperfine.h"
#include "h2plus/reference_tables.h"
#include "h2plus/spectrum.h"
#include "h2plus/twophoton.h"

namespace h2plus::validate {
namespace {

using hyperfine::RoVibLevel;
constexpr std::size_t kMaxFailures = 8;

class Recorder {
 public:
  Recorder(std::string table, std::string description) : check_{std::move(table), std::move(description), {}, {}} {}

  Metric& metric(const std::string& name, double tolerance) {
    for (auto& m : check_.metrics)
      if (m.name == name) return m;
    check_.metrics.push_back({name, 0.0, tolerance, 0});
    return check_.metrics.back();
  }

  void observe(const std::string& name, double tolerance, double deviation, const std::string& what) {
    Metric& m = metric(name, tolerance);
    ++m.count;
    if (!(deviation <= m.max_deviation)) m.max_deviation = std::isnan(deviation) ? INFINITY : deviation;
    if (!(deviation <= tolerance)) fail(fmt::format("{}: {} deviation {:.3e} > {:.1e}", what, name, deviation, tolerance));
  }

  void fail(std::string message) {
    if (check_.failures.size() < kMaxFailures) check_.failures.push_back(std::move(message));
    has_failure_ = true;
  }

  TableCheck finish() {
    if (has_failure_ && check_.metrics.empty()) check_.metrics.push_back({"errors", INFINITY, 0.0, 0});
    return std::move(check_);
  }

 private:
  TableCheck check_;
  bool has_failure_ = false;
};

TableCheck check_even_shifts(const data::DataSet& d) {
  Recorder rec("II", "even-L hyperfine shifts");
  for (const auto& p : reference::even_shifts()) {
    const auto what = fmt::format("(v={},L={}) J={}", p.v, p.L, p.J.str());
    try {
      const RoVibLevel level{p.v, p.L};
      const auto sol = hyperfine::diagonalize_even(level, d.coefficients.at(level).coefficients.c_e);
      const auto& s = sol.find(HalfInt::from_twice(1), p.J);
      rec.observe("shift_MHz", kShiftTolMhz, std::abs(s.shift_mhz - p.shift_mhz), what);
    } catch (const std::exception& e) {
      rec.fail(what + ": " + e.what());
    }
  }
  return rec.finish();
}

TableCheck check_odd_shifts(const data::DataSet& d) {
  Recorder rec("III", "odd-L hyperfine shifts and mixing coefficients");
  for (const auto& p : reference::odd_shifts()) {
    const auto what = fmt::format("(v={},L={}) {}", p.v, p.L, hyperfine::label(p.F_tilde, p.J));
    try {
      const RoVibLevel level{p.v, p.L};
      const auto sol = hyperfine::diagonalize_odd(level, d.coefficients.at(level).coefficients);
      const auto& s = sol.find(p.F_tilde, p.J);
      rec.observe("shift_MHz", kShiftTolMhz, std::abs(s.shift_mhz - p.shift_mhz), what);
      rec.observe("mixing", kMixingTol, std::max(std::abs(s.coeffs.c1 - p.c1), std::abs(s.coeffs.c3 - p.c3)), what);
    } catch (const std::exception& e) {
      rec.fail(what + ": " + e.what());
    }
  }
  return rec.finish();
}

TableCheck check_tensor() {
  Recorder rec("IV", "polarization tensor coefficients");
  for (const auto& p : reference::tensor_entries()) {
    const auto pair = twophoton::PolarizationPair::make(p.q1, p.q2);
    const auto t = twophoton::tensor_coefficients(pair);
    double dev = std::abs(t.a00 - p.a00);
    for (int q = -2; q <= 2; ++q) {
      const double expected = q == p.q1 + p.q2 ? p.a2 : 0.0;
      dev = std::max(dev, std::abs(t.rank2(q) - expected));
    }
    rec.observe("coefficient", kTensorTol, dev, pair.token());
  }
  return rec.finish();
}

TableCheck check_orbital(const data::DataSet& d) {
  Recorder rec("V", "orbital reduced elements in the data file");
  for (const auto& p : reference::orbital_elements()) {
    const auto what = fmt::format("L={}", p.L);
    try {
      const auto& orb = d.orbital.at(RoVibLevel{0, p.L}, RoVibLevel{1, p.L});
      rec.observe("Q_au", 1e-12, std::max(std::abs(orb.Q0 - p.Q0), std::abs(orb.Q2 - p.Q2)), what);
    } catch (const std::exception& e) {
      rec.fail(what + ": " + e.what());
    }
  }
  return rec.finish();
}

void check_spectrum_for_L(Recorder& rec, const data::DataSet& d, int L) {
  const RoVibLevel lower{0, L}, upper{1, L};
  const auto lower_sol = hyperfine::diagonalize(lower, d.coefficients.at(lower).coefficients);
  const auto upper_sol = hyperfine::diagonalize(upper, d.coefficients.at(upper).coefficients);
  const std::vector<twophoton::PolarizationPair> pols{twophoton::kPiPi, twophoton::kSigmaPlusSigmaPlus,
                                                      twophoton::kSigmaPlusSigmaMinus};
  const auto s = spectrum::two_photon_spectrum(lower_sol, upper_sol, d.orbital.at(lower, upper), pols);

  const auto published = reference::published_lines(L);
  rec.observe("line_count", 0.0,
              std::abs(static_cast<double>(s.lines.size()) - static_cast<double>(published.size())),
              fmt::format("L={} listed lines", L));
  rec.observe("allowed_line_count", 0.0,
              std::abs(s.allowed_line_count() - reference::published_line_count(L)),
              fmt::format("L={} allowed lines", L));

  for (const auto& p : published) {
    const auto what = fmt::format("L={} {}->{}", L, hyperfine::label(p.F, p.J), hyperfine::label(p.F_prime, p.J_prime));
    const auto& line = s.find({p.F, p.J}, {p.F_prime, p.J_prime});
    rec.observe("delta_f_MHz", kDeltaFTolMhz, std::abs(line.delta_f_mhz - p.delta_f_mhz), what);
    const std::pair<twophoton::PolarizationPair, double> values[] = {
        {twophoton::kPiPi, p.pipi}, {twophoton::kSigmaPlusSigmaPlus, p.spsp}, {twophoton::kSigmaPlusSigmaMinus, p.spsm}};
    for (const auto& [pol, expected] : values) {
      const double dev = intensity_deviation(expected, line.at(pol));
      switch (classify_intensity(expected)) {
        case IntensityClass::Zero: rec.observe("intensity_zero", kZeroIntensityTol, dev, what + " " + pol.token()); break;
        case IntensityClass::Strong:
          rec.observe("intensity_abs", kStrongIntensityTol, dev, what + " " + pol.token());
          break;
        case IntensityClass::Weak: rec.observe("intensity_rel", kWeakIntensityRelTol, dev, what + " " + pol.token()); break;
      }
    }
  }
}

TableCheck check_spectra(const std::string& id, const data::DataSet& d, std::initializer_list<int> Ls) {
  std::string desc = "two-photon spectrum, L =";
  for (int L : Ls) desc += " " + std::to_string(L);
  Recorder rec(id, desc);
  for (int L : Ls) {
    try {
      check_spectrum_for_L(rec, d, L);
    } catch (const std::exception& e) {
      rec.fail(fmt::format("L={}: {}", L, e.what()));
    }
  }
  return rec.finish();
}

TableCheck check_centers(const data::DataSet& d) {
  Recorder rec("IX", "spin-independent per-photon frequencies");
  for (const auto& p : reference::center_frequencies()) {
    const auto what = fmt::format("L={}", p.L);
    const auto* r = d.centers.find(p.L);
    if (r == nullptr) {
      rec.fail(what + ": missing from data file");
      continue;
    }
    rec.observe("nu_MHz", 1e-6, std::abs(r->nu_2ph_mhz - p.nu_2ph_mhz), what);
    const double lambda_um = experiment::kSpeedOfLight_m_s / (r->nu_2ph_mhz * 1e6) * 1e6;
    rec.observe("lambda_um", kWavelengthTolUm, std::abs(lambda_um - p.lambda_um), what);
    rec.observe("lambda_file_um", 1e-9, std::abs(r->lambda_um - p.lambda_um), what);
  }
  return rec.finish();
}

}  // namespace

bool TableCheck::passed() const {
  return failures.empty() && std::all_of(metrics.begin(), metrics.end(), [](const auto& m) { return m.passed(); });
}

bool ValidationReport::passed() const {
  return std::all_of(tables.begin(), tables.end(), [](const auto& t) { return t.passed(); });
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids{"II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  return ids;
}

IntensityClass classify_intensity(double published) {
  if (published == 0.0) return IntensityClass::Zero;
  return published >= kStrongLineFloor ? IntensityClass::Strong : IntensityClass::Weak;
}

double intensity_deviation(double published, double computed) {
  switch (classify_intensity(published)) {
    case IntensityClass::Zero: return std::abs(computed);
    case IntensityClass::Strong: return std::abs(computed - published);
    case IntensityClass::Weak: return std::abs(computed - published) / std::abs(published);
  }
  return INFINITY;
}

ValidationReport run(const data::DataSet& data, const std::optional<std::string>& only) {
  if (only && std::find(table_ids().begin(), table_ids().end(), *only) == table_ids().end())
    throw InputError("unknown table '" + *only + "'");
  const std::map<std::string, std::function<TableCheck()>> checks{
      {"II", [&] { return check_even_shifts(data); }},
      {"III", [&] { return check_odd_shifts(data); }},
      {"IV", [] { return check_tensor(); }},
      {"V", [&] { return check_orbital(data); }},
      {"VI", [&] { return check_spectra("VI", data, {0, 2}); }},
      {"VII", [&] { return check_spectra("VII", data, {1}); }},
      {"VIII", [&] { return check_spectra("VIII", data, {3}); }},
      {"IX", [&] { return check_centers(data); }},
  };
  ValidationReport report;
  for (const auto& id : table_ids())
    if (!only || *only == id) report.tables.push_back(checks.at(id)());
  return report;
}

std::string render(const ValidationReport& r) {
  std::string out;
  for (const auto& t : r.tables) {
    out += fmt::format("Table {:<5} {:<4}  {}\n", t.table, t.passed() ? "PASS" : "FAIL", t.description);
    for (const auto& m : t.metrics)
      out += fmt::format("    {:<20} max deviation {:.3e}  (tolerance {:.1e}, n={})\n", m.name, m.max_deviation,
                         m.tolerance, m.count);
    for (const auto& f : t.failures) out += "    ! " + f + "\n";
  }
  out += r.passed() ? "validation passed\n" : "validation FAILED\n";
  return out;
}

}  // namespace h2plus::validate
