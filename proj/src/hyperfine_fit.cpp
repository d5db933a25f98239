#include <array>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "h2plus/errors.h"
#include "h2plus/hyperfine.h"

namespace h2plus::hyperfine {
namespace {

constexpr HalfInt kHalf = HalfInt::from_twice(1);
constexpr HalfInt kThreeHalves = HalfInt::from_twice(3);

// Residual scales: roughly one unit in the last printed digit of published shifts and mixings.
constexpr double kShiftScaleMhz = 1e-4;
constexpr double kMixingScale = 1e-6;

HyperfineCoefficients from_vector(const Eigen::VectorXd& x) { return {x[0], x[1], x[2], x[3], x[4]}; }

Eigen::VectorXd to_vector(const HyperfineCoefficients& c) {
  Eigen::VectorXd x(5);
  x << c.b_F, c.c_e, c.c_I, c.d_1, c.d_2;
  return x;
}

double minor_coefficient(const HyperfineEigenstate& s) { return s.F_tilde == kThreeHalves ? s.coeffs.c1 : s.coeffs.c3; }

struct Residuals {
  std::vector<double> weighted;
  double max_shift = 0.0;
  double max_mixing = 0.0;
};

Residuals residuals(const HyperfineSolution& predicted, const HyperfineSolution& observed) {
  Residuals r;
  for (const auto& obs : observed.states) {
    const auto& pred = predicted.find(obs.F_tilde, obs.J);
    const double ds = pred.shift_mhz - obs.shift_mhz;
    r.max_shift = std::max(r.max_shift, std::abs(ds));
    r.weighted.push_back(ds / kShiftScaleMhz);
    if (!obs.is_pure()) {
      const double dm = minor_coefficient(pred) - minor_coefficient(obs);
      r.max_mixing = std::max(r.max_mixing, std::abs(dm));
      r.weighted.push_back(dm / kMixingScale);
    }
  }
  return r;
}

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void check_observed(int L, const HyperfineSolution& observed) {
  if (observed.level.L != L) throw InputError("observed solution belongs to L=" + std::to_string(observed.level.L));
  const auto expected = allowed_spin_states(L);
  if (observed.states.size() != expected.size())
    throw InputError("fit needs all " + std::to_string(expected.size()) + " hyperfine levels of L=" + std::to_string(L) +
                     ", got " + std::to_string(observed.states.size()));
  for (const auto& b : expected) {
    if (L % 2 == 0) {
      (void)observed.find(kHalf, b.J);
    } else {
      (void)observed.find(b.F, b.J);
    }
  }
}

// Initial guess: rebuild each J block from the observed eigenpairs and solve
// the linear system entries = M * coefficients in the least-squares sense.
HyperfineCoefficients linear_inversion(int L, const HyperfineSolution& observed) {
  const HalfInt l(L);
  std::vector<double> targets;
  std::vector<std::array<double, 5>> rows;

  std::array<HfsMatrixEntries, 5> unit{};
  for (int k = 0; k < 5; ++k) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(5);
    e[k] = 1.0;
    unit[k] = hfs_matrix_entries(L, from_vector(e));
  }
  auto add = [&](double HfsMatrixEntries::*entry, double value) {
    std::array<double, 5> row{};
    for (int k = 0; k < 5; ++k) row[k] = unit[k].*entry;
    rows.push_back(row);
    targets.push_back(value);
  };

  add(&HfsMatrixEntries::A, observed.find(kThreeHalves, l + kThreeHalves).shift_mhz);
  if (L >= 3) add(&HfsMatrixEntries::K, observed.find(kThreeHalves, l - kThreeHalves).shift_mhz);

  auto add_block = [&](HalfInt J, double HfsMatrixEntries::*f32, double HfsMatrixEntries::*coupling,
                       double HfsMatrixEntries::*f12) {
    const auto& a = observed.find(kThreeHalves, J);
    const auto& b = observed.find(kHalf, J);
    // Eigenvectors written in the (F = 3/2, F = 1/2) basis.
    add(f32, a.shift_mhz * a.coeffs.c3 * a.coeffs.c3 + b.shift_mhz * b.coeffs.c3 * b.coeffs.c3);
    add(coupling, a.shift_mhz * a.coeffs.c3 * a.coeffs.c1 + b.shift_mhz * b.coeffs.c3 * b.coeffs.c1);
    add(f12, a.shift_mhz * a.coeffs.c1 * a.coeffs.c1 + b.shift_mhz * b.coeffs.c1 * b.coeffs.c1);
  };
  add_block(l + kHalf, &HfsMatrixEntries::B, &HfsMatrixEntries::C, &HfsMatrixEntries::D);
  add_block(l - kHalf, &HfsMatrixEntries::E, &HfsMatrixEntries::G, &HfsMatrixEntries::H);

  Eigen::MatrixXd M(static_cast<Eigen::Index>(rows.size()), 5);
  Eigen::VectorXd y(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int k = 0; k < 5; ++k) M(static_cast<Eigen::Index>(i), k) = rows[i][k];
    y[static_cast<Eigen::Index>(i)] = targets[i];
  }
  return from_vector(M.completeOrthogonalDecomposition().solve(y));
}

struct OddLevelFunctor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  const HyperfineSolution* observed;
  int n_values;

  int inputs() const { return 5; }
  int values() const { return n_values; }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const auto r = residuals(diagonalize_odd(observed->level, from_vector(x)), *observed);
    for (int i = 0; i < n_values; ++i) f[i] = r.weighted[i];
    return 0;
  }
};

FitResult finish(const HyperfineCoefficients& c, const HyperfineSolution& observed, int evaluations) {
  const auto r = residuals(diagonalize(observed.level, c), observed);
  FitResult out{c, r.max_shift, r.max_mixing, norm(r.weighted), evaluations};
  if (!(out.max_shift_residual_mhz < kFitShiftThresholdMhz)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "hyperfine fit for (v=" << observed.level.v << ", L=" << observed.level.L
        << ") failed: max shift residual " << out.max_shift_residual_mhz << " MHz >= " << kFitShiftThresholdMhz
        << " MHz; max mixing residual " << out.max_mixing_residual << "; coefficients b_F=" << c.b_F
        << " c_e=" << c.c_e << " c_I=" << c.c_I << " d_1=" << c.d_1 << " d_2=" << c.d_2;
    throw FitError(msg.str());
  }
  return out;
}

}  // namespace

FitResult fit_coefficients(int L, const HyperfineSolution& observed) {
  if (L < 0) throw InputError("L must be >= 0");
  check_observed(L, observed);

  if (L % 2 == 0) {
    HyperfineCoefficients c;
    if (L > 0) c.c_e = 2.0 * observed.find(kHalf, HalfInt(L) + kHalf).shift_mhz / L;
    return finish(c, observed, 1);
  }

  const HyperfineCoefficients guess = linear_inversion(L, observed);
  Eigen::VectorXd x = to_vector(guess);

  OddLevelFunctor functor{&observed, static_cast<int>(residuals(diagonalize_odd(observed.level, guess), observed)
                                                          .weighted.size())};
  Eigen::NumericalDiff<OddLevelFunctor, Eigen::Central> diff(functor);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<OddLevelFunctor, Eigen::Central>> lm(diff);
  lm.parameters.xtol = 1e-14;
  lm.parameters.ftol = 1e-14;
  lm.parameters.maxfev = 2000;
  const auto status = lm.minimize(x);
  if (status == Eigen::LevenbergMarquardtSpace::ImproperInputParameters)
    throw FitError("hyperfine fit: improper input parameters");

  // Keep whichever of the linear guess and the refined point fits better.
  const auto refined = from_vector(x);
  const double r_refined = norm(residuals(diagonalize_odd(observed.level, refined), observed).weighted);
  const double r_guess = norm(residuals(diagonalize_odd(observed.level, guess), observed).weighted);
  return finish(r_refined <= r_guess ? refined : guess, observed, static_cast<int>(lm.nfev));
}

}  // namespace h2plus::hyperfine
