#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "h2plus/hyperfine.h"
#include "h2plus/twophoton.h"

/// Hyperfine-resolved two-photon spectra of one ro-vibrational transition.
///
/// Frequencies are per photon: a two-photon line sits at half the energy
/// difference, so delta_f = (shift_upper - shift_lower) / 2 and the center
/// frequency is the per-photon spin-independent frequency.
namespace h2plus::spectrum {

using hyperfine::HyperfineEigenstate;
using hyperfine::HyperfineSolution;
using twophoton::OrbitalReducedElements;
using twophoton::PolarizationPair;

struct StateLabel {
  HalfInt F_tilde;
  HalfInt J;

  bool operator==(const StateLabel&) const = default;
};

struct TransitionLine {
  StateLabel lower;
  StateLabel upper;
  double delta_f_mhz = 0.0;
  std::map<PolarizationPair, double> intensity;  // averaged squared matrix element, a.u.
  twophoton::SelectionVerdict selection;          // structural rules only

  /// True when every requested polarization gives exactly zero.
  bool all_zero() const;
  double at(PolarizationPair p) const;
};

struct SpectrumMetadata {
  hyperfine::RoVibLevel lower;
  hyperfine::RoVibLevel upper;
  std::string coefficient_provenance;
  std::vector<PolarizationPair> polarizations;
};

struct SpectrumResult {
  std::optional<double> center_frequency_mhz;
  std::vector<TransitionLine> lines;  // ascending delta_f
  SpectrumMetadata metadata;

  /// Lines not excluded by the structural selection rules.
  int allowed_line_count() const;
  /// Line with the largest intensity for p.
  const TransitionLine& strongest(PolarizationPair p) const;
  /// Throws InputError when absent.
  const TransitionLine& find(StateLabel lower, StateLabel upper) const;
};

/// (upper.shift - lower.shift) / 2, MHz.
double line_position_shift(const HyperfineEigenstate& lower, const HyperfineEigenstate& upper);

/// Every (lower, upper) hyperfine pair, including lines that are zero for all
/// polarizations. Throws DataError when orb does not describe the two levels.
SpectrumResult two_photon_spectrum(const HyperfineSolution& lower, const HyperfineSolution& upper,
                                   const OrbitalReducedElements& orb, const std::vector<PolarizationPair>& pols);

struct FrequencyGrid {
  double start_mhz = 0.0;
  double stop_mhz = 0.0;
  double step_mhz = 0.0;

  /// Throws InputError when step <= 0 or stop < start.
  std::vector<double> points() const;
};

struct ProfileLine {
  double center_mhz;
  double amplitude;
};

struct ProfileSample {
  double frequency_mhz;
  double value;
};

/// Sum of Lorentzians with FWHM = gamma_f / (2 pi) converted to MHz; each
/// peaks at its line amplitude. gamma_f is an angular frequency in rad/s.
std::vector<ProfileSample> convolve_profile(const std::vector<ProfileLine>& lines, double gamma_f_rad_s,
                                            const FrequencyGrid& grid);

/// Uses the intensities of one polarization pair as amplitudes.
std::vector<ProfileSample> convolve_profile(const std::vector<TransitionLine>& lines, PolarizationPair p,
                                            double gamma_f_rad_s, const FrequencyGrid& grid);

/// FWHM in MHz of an angular linewidth in rad/s.
double fwhm_mhz(double gamma_f_rad_s);

}  // namespace h2plus::spectrum
