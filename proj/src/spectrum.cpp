#include "h2plus/spectrum.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "h2plus/errors.h"

namespace h2plus::spectrum {

bool TransitionLine::all_zero() const {
  return std::all_of(intensity.begin(), intensity.end(), [](const auto& kv) { return kv.second == 0.0; });
}

double TransitionLine::at(PolarizationPair p) const {
  auto it = intensity.find(p);
  if (it == intensity.end()) throw InputError("polarization " + p.token() + " was not computed for this line");
  return it->second;
}

int SpectrumResult::allowed_line_count() const {
  return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const auto& l) { return l.selection.allowed(); }));
}

const TransitionLine& SpectrumResult::strongest(PolarizationPair p) const {
  if (lines.empty()) throw InputError("empty spectrum");
  return *std::max_element(lines.begin(), lines.end(),
                           [&](const auto& a, const auto& b) { return a.at(p) < b.at(p); });
}

const TransitionLine& SpectrumResult::find(StateLabel lower, StateLabel upper) const {
  for (const auto& l : lines)
    if (l.lower == lower && l.upper == upper) return l;
  throw InputError("no line " + hyperfine::label(lower.F_tilde, lower.J) + " -> " +
                   hyperfine::label(upper.F_tilde, upper.J));
}

double line_position_shift(const HyperfineEigenstate& lower, const HyperfineEigenstate& upper) {
  return 0.5 * (upper.shift_mhz - lower.shift_mhz);
}

SpectrumResult two_photon_spectrum(const HyperfineSolution& lower, const HyperfineSolution& upper,
                                   const OrbitalReducedElements& orb, const std::vector<PolarizationPair>& pols) {
  if (orb.lower != lower.level || orb.upper != upper.level)
    throw DataError("orbital reduced elements describe (v=" + std::to_string(orb.lower.v) + ",L=" +
                    std::to_string(orb.lower.L) + ") -> (v=" + std::to_string(orb.upper.v) + ",L=" +
                    std::to_string(orb.upper.L) + "), not the requested levels");

  SpectrumResult out;
  out.metadata.lower = lower.level;
  out.metadata.upper = upper.level;
  out.metadata.polarizations = pols;
  out.lines.reserve(lower.states.size() * upper.states.size());
  for (const auto& g : lower.states) {
    for (const auto& e : upper.states) {
      TransitionLine line;
      line.lower = {g.F_tilde, g.J};
      line.upper = {e.F_tilde, e.J};
      line.delta_f_mhz = line_position_shift(g, e);
      line.selection = twophoton::structural_selection(g, e);
      for (const auto& p : pols) line.intensity[p] = twophoton::averaged_sq_matrix_element(g, e, p, orb);
      out.lines.push_back(std::move(line));
    }
  }
  std::stable_sort(out.lines.begin(), out.lines.end(),
                   [](const auto& a, const auto& b) { return a.delta_f_mhz < b.delta_f_mhz; });
  return out;
}

std::vector<double> FrequencyGrid::points() const {
  if (!(step_mhz > 0.0) || !(stop_mhz >= start_mhz) || !std::isfinite(start_mhz) || !std::isfinite(stop_mhz))
    throw InputError("frequency grid needs step > 0 and stop >= start");
  const auto n = static_cast<long>(std::floor((stop_mhz - start_mhz) / step_mhz + 1e-9)) + 1;
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = start_mhz + static_cast<double>(i) * step_mhz;
  return out;
}

double fwhm_mhz(double gamma_f_rad_s) { return gamma_f_rad_s / (2.0 * std::numbers::pi) * 1e-6; }

std::vector<ProfileSample> convolve_profile(const std::vector<ProfileLine>& lines, double gamma_f_rad_s,
                                            const FrequencyGrid& grid) {
  if (!(gamma_f_rad_s > 0.0)) throw InputError("linewidth gamma_f must be > 0");
  for (const auto& l : lines)
    if (!(l.amplitude >= 0.0)) throw InputError("profile line amplitudes must be >= 0");
  const double hw = 0.5 * fwhm_mhz(gamma_f_rad_s);
  const double hw2 = hw * hw;
  std::vector<ProfileSample> out;
  for (double f : grid.points()) {
    double value = 0.0;
    for (const auto& l : lines) {
      const double d = f - l.center_mhz;
      value += l.amplitude * hw2 / (d * d + hw2);
    }
    out.push_back({f, value});
  }
  return out;
}

std::vector<ProfileSample> convolve_profile(const std::vector<TransitionLine>& lines, PolarizationPair p,
                                            double gamma_f_rad_s, const FrequencyGrid& grid) {
  std::vector<ProfileLine> profile;
  profile.reserve(lines.size());
  for (const auto& l : lines) profile.push_back({l.delta_f_mhz, l.at(p)});
  return convolve_profile(profile, gamma_f_rad_s, grid);
}

}  // namespace h2plus::spectrum
