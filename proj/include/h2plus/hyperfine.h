#pragma once

#include <compare>
#include <string>
#include <vector>

#include "h2plus/half_int.h"

/// Hyperfine effective spin Hamiltonian of H2+ for one ro-vibrational level.
///
/// Coupling scheme: F = S_e + I, J = L + F. The total nuclear spin is fixed by
/// the rotational parity (I = 0 for even L, I = 1 for odd L). For even L the
/// Hamiltonian reduces to c_e (L.S_e) and is diagonal; for odd L it is block
/// diagonal in J with 2x2 blocks coupling F = 1/2 and F = 3/2 at J = L +- 1/2.
/// All energies are frequencies in MHz.
namespace h2plus::hyperfine {

struct RoVibLevel {
  int v = 0;
  int L = 0;

  /// Throws InputError on negative quantum numbers.
  static RoVibLevel make(int v, int L);

  HalfInt nuclear_spin() const { return HalfInt(L % 2 == 0 ? 0 : 1); }
  bool is_even() const { return L % 2 == 0; }

  bool operator==(const RoVibLevel&) const = default;
  auto operator<=>(const RoVibLevel&) const = default;
};

/// Effective-Hamiltonian constants of one (v, L) level, MHz. Only c_e is used for even L.
struct HyperfineCoefficients {
  double b_F = 0.0;
  double c_e = 0.0;
  double c_I = 0.0;
  double d_1 = 0.0;
  double d_2 = 0.0;
};

struct SpinBasisState {
  HalfInt L;
  HalfInt S_e;
  HalfInt I;
  HalfInt F;
  HalfInt J;

  bool operator==(const SpinBasisState&) const = default;
};

/// Amplitudes on the F = 1/2 (c1) and F = 3/2 (c3) pure states of equal J.
struct MixingCoefficients {
  double c1 = 0.0;
  double c3 = 0.0;

  double of(HalfInt F) const;
};

struct HyperfineEigenstate {
  RoVibLevel level;
  HalfInt F_tilde;  // dominant F
  HalfInt J;
  double shift_mhz = 0.0;
  MixingCoefficients coeffs;

  HalfInt nuclear_spin() const { return level.nuclear_spin(); }
  bool is_pure() const { return coeffs.c1 == 0.0 || coeffs.c3 == 0.0; }
};

/// Eigenstates ordered by descending J, then descending F-tilde.
struct HyperfineSolution {
  RoVibLevel level;
  std::vector<HyperfineEigenstate> states;

  /// Throws InputError when no state carries the labels.
  const HyperfineEigenstate& find(HalfInt F_tilde, HalfInt J) const;
};

/// Below this magnitude a mixing coefficient is snapped to zero and the state is pure.
inline constexpr double kPureThreshold = 1e-12;

/// Pure (F, J) basis states allowed for a rotational quantum number L.
std::vector<SpinBasisState> allowed_spin_states(int L);

/// Number of hyperfine levels n for a rotational quantum number L (1, 2, 5 or 6).
int hyperfine_level_count(int L);

/// Nonzero entries of the odd-L Hamiltonian in the ordered pure basis
/// (3/2, L+3/2), (3/2, L+1/2), (1/2, L+1/2), (3/2, L-1/2), (1/2, L-1/2), (3/2, L-3/2).
struct HfsMatrixEntries {
  double A = 0, B = 0, C = 0, D = 0, E = 0, G = 0, H = 0, K = 0;
};

HfsMatrixEntries hfs_matrix_entries(int L, const HyperfineCoefficients& c);

/// Dense symmetric matrix over the ordered pure basis; 6x6, or 5x5 when L = 1.
class HfsMatrix {
 public:
  HfsMatrix(std::vector<SpinBasisState> basis, std::vector<double> values);

  int size() const { return static_cast<int>(basis_.size()); }
  double operator()(int row, int col) const { return values_[row * size() + col]; }
  const std::vector<SpinBasisState>& basis() const { return basis_; }
  /// Index of the pure basis state (F, J), or -1 when absent.
  int index_of(HalfInt F, HalfInt J) const;

 private:
  std::vector<SpinBasisState> basis_;
  std::vector<double> values_;
};

/// Throws ContractError for even L.
HfsMatrix build_hfs_matrix(int L, const HyperfineCoefficients& c);

/// Throws ContractError for odd L.
HyperfineSolution diagonalize_even(RoVibLevel level, double c_e);

/// Throws ContractError for even L.
HyperfineSolution diagonalize_odd(RoVibLevel level, const HyperfineCoefficients& c);

/// Dispatches on the parity of L.
HyperfineSolution diagonalize(RoVibLevel level, const HyperfineCoefficients& c);

/// Closed-form eigen-decomposition of the symmetric 2x2 block
/// [[f32, coupling], [coupling, f12]] written in the (F = 3/2, F = 1/2) basis.
struct MixedPair {
  double shift_f32;  // eigenvalue of the F-tilde = 3/2 state
  double shift_f12;
  MixingCoefficients f32;  // c3 >= 0
  MixingCoefficients f12;  // (-f32.c3, f32.c1)
};

MixedPair solve_mixed_block(double f32, double coupling, double f12);

struct FitResult {
  HyperfineCoefficients coefficients;
  double max_shift_residual_mhz = 0.0;
  double max_mixing_residual = 0.0;
  double residual_norm = 0.0;  // weighted, dimensionless
  int evaluations = 0;
};

/// Acceptance threshold on the worst shift residual of a fit.
inline constexpr double kFitShiftThresholdMhz = 1e-3;

/// Recovers the coefficients of one level from its observed hyperfine
/// structure. Even L inverts the J = L + 1/2 shift (c_e = 2 shift / L, c_e = 0
/// when L = 0). Odd L starts from a linear inversion of the block matrices
/// rebuilt from the observed eigenpairs, then refines all five constants by
/// Levenberg-Marquardt on the shifts and the minor mixing coefficients.
/// Throws FitError when the worst shift residual is >= kFitShiftThresholdMhz.
FitResult fit_coefficients(int L, const HyperfineSolution& observed);

std::string label(HalfInt F_tilde, HalfInt J);

}  // namespace h2plus::hyperfine
