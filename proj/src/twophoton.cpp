#include "h2plus/twophoton.h"

#include <cmath>
#include <cstdlib>
#include <utility>

#include "h2plus/angular.h"
#include "h2plus/errors.h"

namespace h2plus::twophoton {
namespace {

constexpr HalfInt kHalf = HalfInt::from_twice(1);
constexpr HalfInt kThreeHalves = HalfInt::from_twice(3);

void require_rank(int k) {
  if (k != 0 && k != 2) throw InputError("tensor rank must be 0 or 2, got " + std::to_string(k));
}

void require_projection(HalfInt J, HalfInt M) {
  if (!same_parity(J, M) || abs(M) > J) throw InputError("invalid projection M=" + M.str() + " for J=" + J.str());
}

// F values carried by a state with a nonzero amplitude.
bool shares_spin_sector(const HyperfineEigenstate& g, const HyperfineEigenstate& e) {
  for (HalfInt F : {kHalf, kThreeHalves})
    if (g.coeffs.of(F) != 0.0 && e.coeffs.of(F) != 0.0) return true;
  return false;
}

SelectionVerdict forbidden(ForbiddenReason r, std::string detail) {
  return {Verdict::Forbidden, r, 0, std::move(detail)};
}

}  // namespace

PolarizationPair PolarizationPair::make(int q1, int q2) {
  if (q1 < -1 || q1 > 1 || q2 < -1 || q2 > 1)
    throw InputError("polarization components must be in {-1, 0, 1}, got (" + std::to_string(q1) + "," +
                     std::to_string(q2) + ")");
  return {q1, q2};
}

std::string PolarizationPair::token() const {
  auto one = [](int q) -> const char* { return q == 0 ? "pi" : (q > 0 ? "sp" : "sm"); };
  return std::string(one(q1)) + one(q2);
}

PolarizationPair parse_polarization(const std::string& token) {
  for (const auto& p : all_polarization_pairs())
    if (p.token() == token) return p;
  throw InputError("unknown polarization pair '" + token + "' (expected e.g. pipi, spsp, spsm)");
}

std::vector<PolarizationPair> all_polarization_pairs() {
  std::vector<PolarizationPair> out;
  for (int q1 = -1; q1 <= 1; ++q1)
    for (int q2 = -1; q2 <= 1; ++q2) out.push_back({q1, q2});
  return out;
}

double TensorCoeffs::component(int k) const {
  if (k == 0) return a00;
  if (k == 2) return rank2(q_total);
  return 0.0;
}

TensorCoeffs tensor_coefficients(PolarizationPair p) {
  p = PolarizationPair::make(p.q1, p.q2);
  TensorCoeffs t;
  t.q_total = p.total();
  const HalfInt one(1);
  t.a2[t.q_total + 2] = angular::clebsch_gordan(one, HalfInt(p.q1), one, HalfInt(p.q2), HalfInt(2), HalfInt(t.q_total));
  if (t.q_total == 0) t.a00 = angular::clebsch_gordan(one, HalfInt(p.q1), one, HalfInt(p.q2), HalfInt(0), HalfInt(0));
  return t;
}

double OrbitalReducedElements::of(int k) const {
  require_rank(k);
  return k == 0 ? Q0 : Q2;
}

OrbitalReducedElements reduced_from_intermediate_sums(const IntermediateSums& s, RoVibLevel lower, RoVibLevel upper) {
  const int L = lower.L;
  const int dL = upper.L - L;
  const double l = L;
  const double norm = std::sqrt(2.0 * l + 1.0);
  OrbitalReducedElements out{lower, upper, 0.0, 0.0};
  if (dL == 0) {
    out.Q0 = -norm * std::sqrt(3.0) / 3.0 * (s.a_minus + s.a_zero + s.a_plus);
    if (L > 0) {
      const double bracket = s.a_minus / (l * (2.0 * l - 1.0)) - s.a_zero / (l * (l + 1.0)) +
                             s.a_plus / ((2.0 * l + 3.0) * (l + 1.0));
      out.Q2 = -norm / std::sqrt(6.0) * std::sqrt((2.0 * l + 3.0) * (2.0 * l - 1.0) * l * (l + 1.0)) * bracket;
    }
  } else if (dL == -2) {
    out.Q2 = -norm * std::sqrt((2.0 * l - 3.0) / (2.0 * l - 1.0)) * s.a_minus;
  } else if (dL == 2) {
    out.Q2 = -norm * std::sqrt((2.0 * l + 5.0) / (2.0 * l + 3.0)) * s.a_plus;
  } else {
    throw SelectionRuleError("two-photon operator couples only Delta L = 0, +-2; got L=" + std::to_string(L) +
                             " -> L'=" + std::to_string(upper.L));
  }
  return out;
}

double hyperfine_reduced_Q(int k, const HyperfineEigenstate& g, const HyperfineEigenstate& e,
                           const OrbitalReducedElements& orb) {
  require_rank(k);
  if (orb.lower.L != g.level.L || orb.upper.L != e.level.L)
    throw InputError("orbital reduced elements do not belong to L=" + std::to_string(g.level.L) + " -> L'=" +
                     std::to_string(e.level.L));
  if (g.nuclear_spin() != e.nuclear_spin()) return 0.0;

  const HalfInt L(g.level.L), Lp(e.level.L), K(k);
  const double dims = std::sqrt(static_cast<double>(g.J.multiplicity()) * e.J.multiplicity());
  double sum = 0.0;
  for (HalfInt F : {kHalf, kThreeHalves}) {
    const double weight = g.coeffs.of(F) * e.coeffs.of(F);
    if (weight == 0.0) continue;
    const double six_j = angular::wigner6j(L, K, Lp, e.J, F, g.J);
    sum += weight * phase(e.J + L + F + K) * six_j;
  }
  return sum * dims * orb.of(k);
}

double averaged_sq_matrix_element(const HyperfineEigenstate& g, const HyperfineEigenstate& e, PolarizationPair p,
                                  const OrbitalReducedElements& orb) {
  const TensorCoeffs t = tensor_coefficients(p);
  double sum = 0.0;
  for (int k : {0, 2}) {
    const double a = t.component(k);
    if (a == 0.0) continue;
    const double amp = a * hyperfine_reduced_Q(k, g, e, orb);
    sum += amp * amp / (2.0 * k + 1.0);
  }
  return sum / g.J.multiplicity();
}

double polarized_matrix_element(const HyperfineEigenstate& g, HalfInt M_J, const HyperfineEigenstate& e,
                                HalfInt M_J_prime, PolarizationPair p, const OrbitalReducedElements& orb) {
  require_projection(g.J, M_J);
  require_projection(e.J, M_J_prime);
  const TensorCoeffs t = tensor_coefficients(p);
  const HalfInt q(t.q_total);
  if (M_J != M_J_prime + q) return 0.0;
  double sum = 0.0;
  for (int k : {0, 2}) {
    const double a = t.component(k);
    if (a == 0.0) continue;
    const double cg = angular::clebsch_gordan(e.J, M_J_prime, HalfInt(k), q, g.J, M_J);
    if (cg == 0.0) continue;
    sum += a * cg * hyperfine_reduced_Q(k, g, e, orb);
  }
  return sum / std::sqrt(static_cast<double>(g.J.multiplicity()));
}

double sublevel_sum_sq_matrix_element(const HyperfineEigenstate& g, const HyperfineEigenstate& e, PolarizationPair p,
                                      const OrbitalReducedElements& orb) {
  double sum = 0.0;
  for (HalfInt M = -g.J; M <= g.J; M += HalfInt(1)) {
    for (HalfInt Mp = -e.J; Mp <= e.J; Mp += HalfInt(1)) {
      const double x = polarized_matrix_element(g, M, e, Mp, p, orb);
      sum += x * x;
    }
  }
  return sum / g.J.multiplicity();
}

SelectionVerdict structural_selection(const HyperfineEigenstate& g, const HyperfineEigenstate& e) {
  const int dL = std::abs(e.level.L - g.level.L);
  if (dL != 0 && dL != 2) return forbidden(ForbiddenReason::DeltaL, "|Delta L| = " + std::to_string(dL));
  if (g.nuclear_spin() != e.nuclear_spin()) return forbidden(ForbiddenReason::NuclearSpin, "I != I'");
  const HalfInt dJ = abs(e.J - g.J);
  if (dJ > HalfInt(2)) return forbidden(ForbiddenReason::DeltaJ, "|Delta J| = " + dJ.str());
  if (!shares_spin_sector(g, e))
    return forbidden(ForbiddenReason::DeltaF, "no common F between " + hyperfine::label(g.F_tilde, g.J) + " and " +
                                                  hyperfine::label(e.F_tilde, e.J));
  if (g.F_tilde != e.F_tilde) return {Verdict::AllowedWeak, ForbiddenReason::None, 0, "Delta F-tilde != 0 via mixing"};
  return {};
}

SelectionVerdict selection_check(const HyperfineEigenstate& g, const HyperfineEigenstate& e, PolarizationPair p) {
  SelectionVerdict v = structural_selection(g, e);
  const TensorCoeffs t = tensor_coefficients(p);
  v.delta_mj = t.q_total;
  if (!v.allowed()) return v;

  const HalfInt L(g.level.L), Lp(e.level.L);
  const HalfInt q_abs = abs(HalfInt(t.q_total));
  bool any = false;
  for (int k : {0, 2}) {
    if (t.component(k) == 0.0) continue;
    if (!triangle(L, HalfInt(k), Lp) || !triangle(e.J, HalfInt(k), g.J)) continue;
    if (q_abs > g.J + e.J) continue;
    any = true;
  }
  if (!any) {
    v.verdict = Verdict::Forbidden;
    v.reason = ForbiddenReason::Polarization;
    v.detail = "no rank-0/2 component of " + p.token() + " connects J=" + g.J.str() + " and J'=" + e.J.str();
  }
  return v;
}

std::string to_string(ForbiddenReason r) {
  switch (r) {
    case ForbiddenReason::None: return "none";
    case ForbiddenReason::DeltaL: return "delta_L";
    case ForbiddenReason::NuclearSpin: return "nuclear_spin";
    case ForbiddenReason::DeltaJ: return "delta_J";
    case ForbiddenReason::DeltaF: return "delta_F";
    case ForbiddenReason::Polarization: return "polarization";
  }
  return "unknown";
}

}  // namespace h2plus::twophoton
