#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "h2plus/half_int.h"
#include "h2plus/hyperfine.h"

/// Two-photon transition operator between hyperfine states.
///
/// The symmetrized operator is decomposed into irreducible rank-0 and rank-2
/// components (the rank-1 part cancels under symmetrization and is never
/// formed). Matrix elements between hyperfine states follow from the
/// Wigner-Eckart theorem, with the orbital reduced elements <vL||Q(k)||v'L'>
/// supplied as data in atomic units.
namespace h2plus::twophoton {

using hyperfine::HyperfineEigenstate;
using hyperfine::RoVibLevel;

/// Standard components of the two field polarizations: -1 (sigma-), 0 (pi), +1 (sigma+).
struct PolarizationPair {
  int q1 = 0;
  int q2 = 0;

  /// Throws InputError unless both components are in {-1, 0, 1}.
  static PolarizationPair make(int q1, int q2);

  int total() const { return q1 + q2; }
  /// Token such as "pipi", "spsm"; see parse_polarization.
  std::string token() const;

  bool operator==(const PolarizationPair&) const = default;
  auto operator<=>(const PolarizationPair&) const = default;
};

inline constexpr PolarizationPair kPiPi{0, 0};
inline constexpr PolarizationPair kSigmaPlusSigmaPlus{1, 1};
inline constexpr PolarizationPair kSigmaPlusSigmaMinus{1, -1};

/// Parses "pipi", "spsp", "smsm", "spsm", "smsp", "pisp", "sppi", "pism", "smpi".
/// Throws InputError on anything else.
PolarizationPair parse_polarization(const std::string& token);

/// All nine ordered pairs.
std::vector<PolarizationPair> all_polarization_pairs();

/// Coefficients a(k)_q = <1 q1 1 q2 | k q> of the rank-2 and rank-0 parts.
struct TensorCoeffs {
  std::array<double, 5> a2{};  // indexed by q + 2
  double a00 = 0.0;
  int q_total = 0;

  double rank2(int q) const { return (q < -2 || q > 2) ? 0.0 : a2[q + 2]; }
  /// a(k)_{q_total} for k in {0, 2}; 0 for any other k.
  double component(int k) const;
};

TensorCoeffs tensor_coefficients(PolarizationPair p);

/// <vL||Q(0)||v'L'> and <vL||Q(2)||v'L'>, atomic units.
struct OrbitalReducedElements {
  RoVibLevel lower;
  RoVibLevel upper;
  double Q0 = 0.0;
  double Q2 = 0.0;

  double of(int k) const;
};

/// Partial sums over intermediate states of angular momentum L-1, L and L+1, atomic units.
struct IntermediateSums {
  double a_minus = 0.0;
  double a_zero = 0.0;
  double a_plus = 0.0;
};

/// Throws SelectionRuleError unless |L - L'| is 0 or 2.
OrbitalReducedElements reduced_from_intermediate_sums(const IntermediateSums& s, RoVibLevel lower, RoVibLevel upper);

/// <g J||Q(k)||e J'> for (possibly mixed) hyperfine states; 0 when I != I'.
/// Throws InputError for k outside {0, 2} or when orb does not match the levels' L.
double hyperfine_reduced_Q(int k, const HyperfineEigenstate& g, const HyperfineEigenstate& e,
                           const OrbitalReducedElements& orb);

/// Squared matrix element averaged over lower M_J and summed over upper M_J'.
double averaged_sq_matrix_element(const HyperfineEigenstate& g, const HyperfineEigenstate& e, PolarizationPair p,
                                  const OrbitalReducedElements& orb);

/// <g J M_J| Q_{q1 q2} |e J' M_J'>, with the Clebsch-Gordan factor <J' k M_J' q | J M_J>,
/// so it vanishes unless M_J = M_J' + q1 + q2. Throws InputError for |M| > J or parity mismatch.
double polarized_matrix_element(const HyperfineEigenstate& g, HalfInt M_J, const HyperfineEigenstate& e,
                                HalfInt M_J_prime, PolarizationPair p, const OrbitalReducedElements& orb);

/// Explicit double sum over magnetic sublevels of |polarized_matrix_element|^2 / (2J + 1).
double sublevel_sum_sq_matrix_element(const HyperfineEigenstate& g, const HyperfineEigenstate& e, PolarizationPair p,
                                      const OrbitalReducedElements& orb);

enum class Verdict { Allowed, AllowedWeak, Forbidden };
enum class ForbiddenReason { None, DeltaL, NuclearSpin, DeltaJ, DeltaF, Polarization };

struct SelectionVerdict {
  Verdict verdict = Verdict::Allowed;
  ForbiddenReason reason = ForbiddenReason::None;
  /// M_J - M_J' required by the polarization pair in the bra-ket order of
  /// polarized_matrix_element; its magnitude is the |Delta M_J| of the absorption.
  int delta_mj = 0;
  std::string detail;

  bool allowed() const { return verdict != Verdict::Forbidden; }
};

/// Structural selection rules ignoring polarization (Delta L, I, Delta J, Delta F).
SelectionVerdict structural_selection(const HyperfineEigenstate& g, const HyperfineEigenstate& e);

SelectionVerdict selection_check(const HyperfineEigenstate& g, const HyperfineEigenstate& e, PolarizationPair p);

std::string to_string(ForbiddenReason r);

}  // namespace h2plus::twophoton
