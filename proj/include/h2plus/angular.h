#pragma once

#include <array>

#include "h2plus/half_int.h"

/// Exact angular-momentum algebra over half-integer quantum numbers.
///
/// All symbols are evaluated with the Racah sum formula in exact rational
/// arithmetic and rounded to double only once, at the end. Phases follow the
/// Condon-Shortley convention. Arguments that violate a triangle rule or the
/// projection sum return exactly 0; arguments whose j/m parities disagree, or
/// negative magnitudes, throw InputError.
namespace h2plus::angular {

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// <j1 m1 j2 m2 | J M> = (-1)^(j1 - j2 + M) sqrt(2J + 1) (j1 j2 J; m1 m2 -M).
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);

/// {j1 j2 j3; j4 j5 j6}.
double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

enum class SpinOperator { ElectronSpin, NuclearSpin };

/// Reduced matrix of S_e or I on the two-state spin subspace obtained by
/// coupling S_e = 1/2 with I = 1. Rows/columns are ordered (F = 3/2, F = 1/2).
struct SpinReducedMatrix {
  SpinOperator op;
  std::array<std::array<double, 2>, 2> entries;

  double at(HalfInt F, HalfInt F_prime) const;
};

SpinReducedMatrix spin_reduced_matrix(SpinOperator op);
double spin_reduced_matrix(SpinOperator op, HalfInt F, HalfInt F_prime);

}  // namespace h2plus::angular
