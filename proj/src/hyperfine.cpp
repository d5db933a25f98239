#include "h2plus/hyperfine.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "h2plus/errors.h"

namespace h2plus::hyperfine {
namespace {

constexpr HalfInt kHalf = HalfInt::from_twice(1);
constexpr HalfInt kThreeHalves = HalfInt::from_twice(3);

void require_nonnegative_L(int L) {
  if (L < 0) throw InputError("rotational quantum number L must be >= 0, got " + std::to_string(L));
}

void sort_states(std::vector<HyperfineEigenstate>& states) {
  std::stable_sort(states.begin(), states.end(), [](const auto& a, const auto& b) {
    if (a.J != b.J) return a.J > b.J;
    return a.F_tilde > b.F_tilde;
  });
}

double snap(double x) { return std::abs(x) < kPureThreshold ? 0.0 : x; }

}  // namespace

RoVibLevel RoVibLevel::make(int v, int L) {
  if (v < 0) throw InputError("vibrational quantum number v must be >= 0, got " + std::to_string(v));
  require_nonnegative_L(L);
  return {v, L};
}

double MixingCoefficients::of(HalfInt F) const {
  if (F == kHalf) return c1;
  if (F == kThreeHalves) return c3;
  return 0.0;
}

const HyperfineEigenstate& HyperfineSolution::find(HalfInt F_tilde, HalfInt J) const {
  for (const auto& s : states)
    if (s.F_tilde == F_tilde && s.J == J) return s;
  throw InputError("no hyperfine state " + label(F_tilde, J) + " in level (v=" + std::to_string(level.v) +
                   ", L=" + std::to_string(level.L) + ")");
}

std::string label(HalfInt F_tilde, HalfInt J) { return "(" + F_tilde.str() + "," + J.str() + ")"; }

std::vector<SpinBasisState> allowed_spin_states(int L) {
  require_nonnegative_L(L);
  const HalfInt l(L);
  std::vector<SpinBasisState> out;
  if (L % 2 == 0) {
    for (HalfInt J : {l - kHalf, l + kHalf})
      if (J.is_nonnegative()) out.push_back({l, kHalf, HalfInt(0), kHalf, J});
    return out;
  }
  for (HalfInt J : {l - kHalf, l + kHalf}) out.push_back({l, kHalf, HalfInt(1), kHalf, J});
  for (HalfInt J : {l - kThreeHalves, l - kHalf, l + kHalf, l + kThreeHalves})
    if (J.is_nonnegative()) out.push_back({l, kHalf, HalfInt(1), kThreeHalves, J});
  return out;
}

int hyperfine_level_count(int L) { return static_cast<int>(allowed_spin_states(L).size()); }

HfsMatrixEntries hfs_matrix_entries(int L, const HyperfineCoefficients& c) {
  const double l = L;
  const double bF = c.b_F, ce = c.c_e, cI = c.c_I;
  const double dsum = 2.0 * c.d_1 + c.d_2;
  const double ddiff = c.d_1 - c.d_2;
  const double up = 2.0 * l + 3.0;    // 2L + 3
  const double down = 2.0 * l - 1.0;  // 2L - 1

  HfsMatrixEntries m;
  m.A = bF / 2.0 + l / 2.0 * (ce + 2.0 * cI - dsum / (3.0 * up));
  m.B = bF / 2.0 + (l - 3.0) / 6.0 * (ce + 2.0 * cI) + (l + 3.0) / 6.0 * dsum / up;
  m.C = std::sqrt(l * up) / 3.0 * (ce - cI) - std::sqrt(l) / (6.0 * std::sqrt(up)) * ddiff;
  m.D = -bF - l / 6.0 * (ce - 4.0 * cI);
  m.E = bF / 2.0 - (l + 4.0) / 6.0 * (ce + 2.0 * cI) + (l - 2.0) / 6.0 * dsum / down;
  m.G = std::sqrt((l + 1.0) * down) / 3.0 * (ce - cI) + std::sqrt(l + 1.0) / (6.0 * std::sqrt(down)) * ddiff;
  m.H = -bF + (l + 1.0) / 6.0 * (ce - 4.0 * cI);
  m.K = bF / 2.0 - (l + 1.0) / 2.0 * (ce + 2.0 * cI + dsum / (3.0 * down));
  return m;
}

HfsMatrix::HfsMatrix(std::vector<SpinBasisState> basis, std::vector<double> values)
    : basis_(std::move(basis)), values_(std::move(values)) {
  if (values_.size() != basis_.size() * basis_.size()) throw InputError("HfsMatrix: value count does not match basis");
}

int HfsMatrix::index_of(HalfInt F, HalfInt J) const {
  for (int i = 0; i < size(); ++i)
    if (basis_[i].F == F && basis_[i].J == J) return i;
  return -1;
}

HfsMatrix build_hfs_matrix(int L, const HyperfineCoefficients& c) {
  require_nonnegative_L(L);
  if (L % 2 == 0) throw ContractError("build_hfs_matrix requires odd L; use diagonalize_even for L=" + std::to_string(L));

  const HalfInt l(L);
  const HalfInt I(1);
  std::vector<SpinBasisState> basis = {
      {l, kHalf, I, kThreeHalves, l + kThreeHalves}, {l, kHalf, I, kThreeHalves, l + kHalf},
      {l, kHalf, I, kHalf, l + kHalf},               {l, kHalf, I, kThreeHalves, l - kHalf},
      {l, kHalf, I, kHalf, l - kHalf},
  };
  const bool has_k = L >= 3;
  if (has_k) basis.push_back({l, kHalf, I, kThreeHalves, l - kThreeHalves});

  const int n = static_cast<int>(basis.size());
  std::vector<double> v(n * n, 0.0);
  auto set = [&](int i, int j, double x) {
    v[i * n + j] = x;
    v[j * n + i] = x;
  };
  const HfsMatrixEntries e = hfs_matrix_entries(L, c);
  set(0, 0, e.A);
  set(1, 1, e.B);
  set(1, 2, e.C);
  set(2, 2, e.D);
  set(3, 3, e.E);
  set(3, 4, e.G);
  set(4, 4, e.H);
  if (has_k) set(5, 5, e.K);
  return HfsMatrix(std::move(basis), std::move(v));
}

HyperfineSolution diagonalize_even(RoVibLevel level, double c_e) {
  const int L = level.L;
  require_nonnegative_L(L);
  if (L % 2 != 0) throw ContractError("diagonalize_even requires even L, got " + std::to_string(L));

  HyperfineSolution sol{level, {}};
  const HalfInt l(L);
  sol.states.push_back({level, kHalf, l + kHalf, 0.5 * L * c_e, {1.0, 0.0}});
  if (L > 0) sol.states.push_back({level, kHalf, l - kHalf, -0.5 * (L + 1) * c_e, {1.0, 0.0}});
  sort_states(sol.states);
  return sol;
}

MixedPair solve_mixed_block(double f32, double coupling, double f12) {
  // Rotation angle of the eigenvector belonging to the larger eigenvalue,
  // measured from the F = 3/2 axis.
  const double half_gap = 0.5 * (f32 - f12);
  const double mean = 0.5 * (f32 + f12);
  const double radius = std::hypot(half_gap, coupling);
  const double theta = 0.5 * std::atan2(coupling, half_gap);
  const double cs = std::cos(theta), sn = std::sin(theta);

  double upper = mean + radius;
  double lower = (f32 + f12) - upper;

  // upper eigenvector: (F3/2, F1/2) = (cs, sn); lower: (-sn, cs)
  MixingCoefficients v_upper{sn, cs};
  MixingCoefficients v_lower{cs, -sn};

  MixedPair out{};
  if (std::abs(v_upper.c3) >= std::abs(v_lower.c3)) {
    out.shift_f32 = upper;
    out.shift_f12 = lower;
    out.f32 = v_upper;
  } else {
    out.shift_f32 = lower;
    out.shift_f12 = upper;
    out.f32 = v_lower;
  }
  if (out.f32.c3 < 0.0) out.f32 = {-out.f32.c1, -out.f32.c3};
  out.f32 = {snap(out.f32.c1), snap(out.f32.c3)};
  if (out.f32.c1 == 0.0) out.f32.c3 = 1.0;
  out.f12 = {-out.f32.c3, out.f32.c1};
  return out;
}

HyperfineSolution diagonalize_odd(RoVibLevel level, const HyperfineCoefficients& c) {
  const int L = level.L;
  require_nonnegative_L(L);
  if (L % 2 == 0) throw ContractError("diagonalize_odd requires odd L, got " + std::to_string(L));

  const HfsMatrixEntries e = hfs_matrix_entries(L, c);
  const HalfInt l(L);
  HyperfineSolution sol{level, {}};
  sol.states.push_back({level, kThreeHalves, l + kThreeHalves, e.A, {0.0, 1.0}});

  const MixedPair upper = solve_mixed_block(e.B, e.C, e.D);
  sol.states.push_back({level, kThreeHalves, l + kHalf, upper.shift_f32, upper.f32});
  sol.states.push_back({level, kHalf, l + kHalf, upper.shift_f12, upper.f12});

  const MixedPair lower = solve_mixed_block(e.E, e.G, e.H);
  sol.states.push_back({level, kThreeHalves, l - kHalf, lower.shift_f32, lower.f32});
  sol.states.push_back({level, kHalf, l - kHalf, lower.shift_f12, lower.f12});

  if (L >= 3) sol.states.push_back({level, kThreeHalves, l - kThreeHalves, e.K, {0.0, 1.0}});
  sort_states(sol.states);
  return sol;
}

HyperfineSolution diagonalize(RoVibLevel level, const HyperfineCoefficients& c) {
  return level.is_even() ? diagonalize_even(level, c.c_e) : diagonalize_odd(level, c);
}

}  // namespace h2plus::hyperfine
