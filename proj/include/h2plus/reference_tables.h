#pragma once

#include <span>
#include <string>

#include "h2plus/half_int.h"
#include "h2plus/hyperfine.h"

/// Published reference values used for regression checks and for fitting the
/// shipped hyperfine coefficients. Values are transcribed with the printed
/// number of digits. Frequencies are in MHz, matrix elements in atomic units.
namespace h2plus::reference {

/// Even-L hyperfine shifts (F = 1/2).
struct EvenShift {
  int v;
  int L;
  HalfInt J;
  double shift_mhz;
};

/// Odd-L hyperfine shifts with mixing coefficients on (F = 1/2, F = 3/2).
struct OddShift {
  int v;
  int L;
  HalfInt F_tilde;
  HalfInt J;
  double shift_mhz;
  double c1;
  double c3;
};

struct OrbitalElement {
  int L;  // (v = 0, L) -> (v' = 1, L)
  double Q0;
  double Q2;
};

/// One hyperfine component of a (v = 0, L) -> (v' = 1, L) spectrum.
struct SpectralLine {
  int L;
  double delta_f_mhz;
  HalfInt F;
  HalfInt J;
  HalfInt F_prime;
  HalfInt J_prime;
  double pipi;
  double spsp;
  double spsm;
};

struct CenterFrequency {
  int L;
  double nu_2ph_mhz;
  double lambda_um;
};

/// Rank-2 and rank-0 coefficients of a polarization pair as exact closed forms.
struct TensorEntry {
  int q1;
  int q2;
  double a2;  // at q = q1 + q2
  double a00;
};

std::span<const EvenShift> even_shifts();
std::span<const OddShift> odd_shifts();
std::span<const OrbitalElement> orbital_elements();
std::span<const SpectralLine> spectral_lines();
std::span<const CenterFrequency> center_frequencies();
std::span<const TensorEntry> tensor_entries();

/// Published hyperfine structure of (v, L) as an observed solution, in the
/// canonical state order. Throws InputError when (v, L) is not tabulated.
hyperfine::HyperfineSolution published_solution(int v, int L);

/// Published lines of the (0, L) -> (1, L) spectrum, in printed order.
std::vector<SpectralLine> published_lines(int L);

/// Number of lines with some nonzero intensity, as quoted for each L.
int published_line_count(int L);

}  // namespace h2plus::reference
