#include <doctest.h>

#include <cmath>
#include <random>

#include "h2plus/angular.h"
#include "h2plus/errors.h"
#include "h2plus/hyperfine.h"
#include "h2plus/reference_tables.h"
#include "oracle/hfs_oracle.h"

using namespace h2plus;
using namespace h2plus::literals;
using namespace h2plus::hyperfine;

namespace {

HyperfineCoefficients random_coefficients(std::mt19937& rng) {
  std::uniform_real_distribution<double> big(500.0, 1200.0), mid(-80.0, 80.0), small(-200.0, 200.0);
  return {big(rng), mid(rng), mid(rng) / 100.0, small(rng), small(rng) / 50.0};
}

oracle::HfsInput to_oracle(const HyperfineCoefficients& c) { return {c.b_F, c.c_e, c.c_I, c.d_1, c.d_2}; }

oracle::Reduced printed_reduced(angular::SpinOperator op) {
  oracle::Reduced r{};
  const HalfInt F[2] = {3_half, 1_half};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r[a][b] = angular::spin_reduced_matrix(op, F[a], F[b]);
  return r;
}

// Largest |H c - E c| over the pure basis for one eigenstate.
double eigen_residual(const HfsMatrix& m, const HyperfineEigenstate& s) {
  std::vector<double> vec(m.size(), 0.0);
  for (HalfInt F : {3_half, 1_half}) {
    const int i = m.index_of(F, s.J);
    if (i >= 0) vec[i] = s.coeffs.of(F);
  }
  double worst = 0.0;
  for (int r = 0; r < m.size(); ++r) {
    double hv = 0.0;
    for (int c = 0; c < m.size(); ++c) hv += m(r, c) * vec[c];
    worst = std::max(worst, std::abs(hv - s.shift_mhz * vec[r]));
  }
  return worst;
}

}  // namespace

TEST_CASE("allowed spin states and level counts") {
  CHECK(hyperfine_level_count(0) == 1);
  CHECK(hyperfine_level_count(1) == 5);
  CHECK(hyperfine_level_count(2) == 2);
  CHECK(hyperfine_level_count(3) == 6);
  CHECK(hyperfine_level_count(8) == 2);
  CHECK(hyperfine_level_count(9) == 6);
  for (int L = 0; L <= 6; ++L) {
    const auto states = allowed_spin_states(L);
    CHECK(static_cast<int>(states.size()) == hyperfine_level_count(L));
    for (const auto& s : states) {
      CHECK(triangle(s.S_e, s.I, s.F));
      CHECK(triangle(s.L, s.F, s.J));
      CHECK(s.I == HalfInt(L % 2));
    }
  }
  CHECK_THROWS_AS(allowed_spin_states(-1), InputError);
  CHECK_THROWS_AS(RoVibLevel::make(0, -1), InputError);
  CHECK_THROWS_AS(RoVibLevel::make(-1, 0), InputError);
}

TEST_CASE("matrix entries agree with the operator construction in the standard convention") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_coefficients(rng);
    for (int L : {1, 3, 5, 7}) {
      const auto e = hfs_matrix_entries(L, c);
      const auto s_red = oracle::standard_reduced(false), i_red = oracle::standard_reduced(true);
      const oracle::HfsBlock top(L, 2 * L + 3, to_oracle(c), s_red, i_red);
      const oracle::HfsBlock plus(L, 2 * L + 1, to_oracle(c), s_red, i_red);
      const oracle::HfsBlock minus(L, 2 * L - 1, to_oracle(c), s_red, i_red);
      const double tol = 1e-9;
      CHECK(e.A == doctest::Approx(static_cast<double>(top(0, 0))).epsilon(tol));
      CHECK(e.B == doctest::Approx(static_cast<double>(plus(0, 0))).epsilon(tol));
      CHECK(e.C == doctest::Approx(static_cast<double>(plus(0, 1))).epsilon(tol));
      CHECK(e.D == doctest::Approx(static_cast<double>(plus(1, 1))).epsilon(tol));
      CHECK(e.E == doctest::Approx(static_cast<double>(minus(0, 0))).epsilon(tol));
      CHECK(e.G == doctest::Approx(static_cast<double>(minus(0, 1))).epsilon(tol));
      CHECK(e.H == doctest::Approx(static_cast<double>(minus(1, 1))).epsilon(tol));
      if (L >= 3) {
        const oracle::HfsBlock bottom(L, 2 * L - 3, to_oracle(c), s_red, i_red);
        CHECK(e.K == doctest::Approx(static_cast<double>(bottom(0, 0))).epsilon(tol));
      }
    }
  }
}

TEST_CASE("with the library reduced matrices the couplings change sign, the diagonal does not") {
  const HyperfineCoefficients c{922.992, 42.4163, -0.04167, 128.490, -0.2982};
  const auto s_red = printed_reduced(angular::SpinOperator::ElectronSpin);
  const auto i_red = printed_reduced(angular::SpinOperator::NuclearSpin);
  for (int L : {1, 3}) {
    const auto e = hfs_matrix_entries(L, c);
    const oracle::HfsBlock plus(L, 2 * L + 1, to_oracle(c), s_red, i_red);
    const oracle::HfsBlock minus(L, 2 * L - 1, to_oracle(c), s_red, i_red);
    CHECK(e.B == doctest::Approx(static_cast<double>(plus(0, 0))));
    CHECK(e.D == doctest::Approx(static_cast<double>(plus(1, 1))));
    CHECK(e.E == doctest::Approx(static_cast<double>(minus(0, 0))));
    CHECK(e.H == doctest::Approx(static_cast<double>(minus(1, 1))));
    CHECK(e.C == doctest::Approx(-static_cast<double>(plus(0, 1))));
    CHECK(e.G == doctest::Approx(-static_cast<double>(minus(0, 1))));
  }
}

TEST_CASE("dense matrix layout") {
  const HyperfineCoefficients c{900, 40, -0.04, 120, -0.3};
  const auto m1 = build_hfs_matrix(1, c);
  const auto m3 = build_hfs_matrix(3, c);
  CHECK(m1.size() == 5);
  CHECK(m3.size() == 6);
  const auto e = hfs_matrix_entries(3, c);
  CHECK(m3(0, 0) == e.A);
  CHECK(m3(1, 2) == e.C);
  CHECK(m3(2, 1) == e.C);
  CHECK(m3(3, 4) == e.G);
  CHECK(m3(5, 5) == e.K);
  for (int r = 0; r < 6; ++r)
    for (int col = 0; col < 6; ++col) CHECK(m3(r, col) == m3(col, r));
  CHECK(m3.index_of(3_half, 7_half) == 1);
  CHECK(m3.index_of(1_half, 9_half) == -1);
  CHECK_THROWS_AS(build_hfs_matrix(2, c), ContractError);
}

TEST_CASE("closed-form 2x2 solution") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> d(-1000.0, 1000.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double p = d(rng), r = d(rng) / 10, q = d(rng);
    const auto s = solve_mixed_block(p, r, q);
    const double mean = 0.5 * (p + q), half = std::hypot(0.5 * (p - q), r);
    CHECK(std::max(s.shift_f32, s.shift_f12) == doctest::Approx(mean + half));
    CHECK(std::min(s.shift_f32, s.shift_f12) == doctest::Approx(mean - half));
    CHECK(std::abs(s.f32.c3) >= std::abs(s.f32.c1) - 1e-12);
    CHECK(s.f32.c3 >= 0.0);
    CHECK(s.f12.c1 == -s.f32.c3);
    CHECK(s.f12.c3 == s.f32.c1);
    CHECK(std::abs(p * s.f32.c3 + r * s.f32.c1 - s.shift_f32 * s.f32.c3) < 1e-9);
    CHECK(std::abs(r * s.f32.c3 + q * s.f32.c1 - s.shift_f32 * s.f32.c1) < 1e-9);
  }
  const auto pure = solve_mixed_block(5.0, 0.0, -3.0);
  CHECK(pure.f32.c1 == 0.0);
  CHECK(pure.f32.c3 == 1.0);
  CHECK(pure.shift_f32 == 5.0);
}

TEST_CASE("even-L levels") {
  const auto s0 = diagonalize_even({0, 0}, 0.0);
  REQUIRE(s0.states.size() == 1);
  CHECK(s0.states[0].shift_mhz == 0.0);
  CHECK(s0.states[0].J == 1_half);
  const auto s2 = diagonalize_even({0, 2}, 42.0);
  REQUIRE(s2.states.size() == 2);
  CHECK(s2.find(1_half, 5_half).shift_mhz == doctest::Approx(42.0));
  CHECK(s2.find(1_half, 3_half).shift_mhz == doctest::Approx(-63.0));
  CHECK(s2.states[0].J == 5_half);
  CHECK(s2.states[0].is_pure());
  CHECK_THROWS_AS(diagonalize_even({0, 1}, 42.0), ContractError);
  CHECK_THROWS_AS(diagonalize_odd({0, 2}, {}), ContractError);
  CHECK_THROWS_AS(s2.find(3_half, 5_half), InputError);
}

TEST_CASE("odd-L eigenstates: residuals, orthonormality, ordering") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_coefficients(rng);
    for (int L : {1, 3, 5}) {
      const auto sol = diagonalize_odd({0, L}, c);
      const auto m = build_hfs_matrix(L, c);
      REQUIRE(static_cast<int>(sol.states.size()) == hyperfine_level_count(L));
      double trace = 0.0, eigen_sum = 0.0;
      for (int i = 0; i < m.size(); ++i) trace += m(i, i);
      for (std::size_t i = 0; i < sol.states.size(); ++i) {
        const auto& s = sol.states[i];
        eigen_sum += s.shift_mhz;
        CHECK(eigen_residual(m, s) < 1e-9);
        CHECK(std::abs(std::hypot(s.coeffs.c1, s.coeffs.c3) - 1.0) < 1e-12);
        CHECK(std::abs(s.coeffs.of(s.F_tilde)) >= std::abs(s.coeffs.of(s.F_tilde == 3_half ? 1_half : 3_half)));
        if (i > 0) {
          const auto& prev = sol.states[i - 1];
          CHECK((prev.J > s.J || (prev.J == s.J && prev.F_tilde > s.F_tilde)));
        }
        for (std::size_t j = i + 1; j < sol.states.size(); ++j)
          if (sol.states[j].J == s.J)
            CHECK(std::abs(s.coeffs.c1 * sol.states[j].coeffs.c1 + s.coeffs.c3 * sol.states[j].coeffs.c3) < 1e-12);
      }
      CHECK(eigen_sum == doctest::Approx(trace).epsilon(1e-12));
    }
  }
}

TEST_CASE("published even-L shifts are reproduced from the fitted c_e") {
  for (const auto& p : reference::even_shifts()) {
    const auto observed = reference::published_solution(p.v, p.L);
    const auto fit = fit_coefficients(p.L, observed);
    const auto sol = diagonalize_even({p.v, p.L}, fit.coefficients.c_e);
    CHECK(std::abs(sol.find(1_half, p.J).shift_mhz - p.shift_mhz) <= 1e-4);
  }
}

TEST_CASE("published odd-L structure is reproduced from the fitted coefficients") {
  for (int v : {0, 1})
    for (int L : {1, 3}) {
      const auto observed = reference::published_solution(v, L);
      const auto fit = fit_coefficients(L, observed);
      CHECK(fit.max_shift_residual_mhz < kFitShiftThresholdMhz);
      const auto sol = diagonalize_odd({v, L}, fit.coefficients);
      for (const auto& o : observed.states) {
        const auto& s = sol.find(o.F_tilde, o.J);
        CHECK(std::abs(s.shift_mhz - o.shift_mhz) <= 1e-4);
        CHECK(std::abs(s.coeffs.c1 - o.coeffs.c1) <= 1e-5);
        CHECK(std::abs(s.coeffs.c3 - o.coeffs.c3) <= 1e-5);
      }
    }
}

TEST_CASE("published spot values") {
  const auto sol = reference::published_solution(0, 1);
  CHECK(sol.states.size() == 5);
  CHECK(sol.find(3_half, 5_half).shift_mhz == doctest::Approx(474.1063));
  CHECK(sol.find(1_half, 1_half).shift_mhz == doctest::Approx(-910.7579));
  CHECK_THROWS_AS(reference::published_solution(2, 1), InputError);
}

TEST_CASE("fit recovers synthetic coefficients") {
  for (int L : {1, 3}) {
    const HyperfineCoefficients truth{900.0, 40.0, -40.0, 9.0, 6.0};
    const auto observed = diagonalize_odd({0, L}, truth);
    const auto fit = fit_coefficients(L, observed);
    CHECK(fit.coefficients.b_F == doctest::Approx(truth.b_F).epsilon(1e-6));
    CHECK(fit.coefficients.c_e == doctest::Approx(truth.c_e).epsilon(1e-6));
    CHECK(fit.coefficients.c_I == doctest::Approx(truth.c_I).epsilon(1e-6));
    CHECK(fit.coefficients.d_1 == doctest::Approx(truth.d_1).epsilon(1e-6));
    CHECK(fit.coefficients.d_2 == doctest::Approx(truth.d_2).epsilon(1e-6));
    CHECK(fit.max_shift_residual_mhz < 1e-6);
  }
  const auto even = fit_coefficients(2, diagonalize_even({1, 2}, 39.5));
  CHECK(even.coefficients.c_e == doctest::Approx(39.5));
}

TEST_CASE("fit rejects inconsistent or incomplete observations") {
  auto even = diagonalize_even({0, 2}, 40.0);
  even.states[1].shift_mhz += 1.0;
  CHECK_THROWS_AS(fit_coefficients(2, even), FitError);

  auto odd = diagonalize_odd({0, 1}, {900.0, 40.0, -0.04, 120.0, -0.3});
  odd.states.pop_back();
  CHECK_THROWS_AS(fit_coefficients(1, odd), InputError);
}

TEST_CASE("labels") {
  CHECK(label(3_half, 5_half) == "(3/2,5/2)");
  CHECK(label(1_half, 1_half) == "(1/2,1/2)");
}
