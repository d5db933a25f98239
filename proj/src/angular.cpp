#include "h2plus/angular.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace h2plus::angular {
namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Float = boost::multiprecision::cpp_bin_float_50;

constexpr int kFactorialTableSize = 256;

const std::vector<cpp_int>& factorial_table() {
  static const std::vector<cpp_int> table = [] {
    std::vector<cpp_int> t(kFactorialTableSize);
    t[0] = 1;
    for (int n = 1; n < kFactorialTableSize; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

cpp_int factorial(int n) {
  if (n < 0) throw InputError("negative factorial argument");
  const auto& t = factorial_table();
  if (n < kFactorialTableSize) return t[n];
  cpp_int f = t.back();
  for (int k = kFactorialTableSize; k <= n; ++k) f *= k;
  return f;
}

// Converts a doubled sum that must be even into the integer it represents.
int half_of(int twice_sum) { return twice_sum / 2; }

void check_magnitude(HalfInt j) {
  if (!j.is_nonnegative()) throw InputError("negative angular momentum " + j.str());
}

void check_pair(HalfInt j, HalfInt m) {
  check_magnitude(j);
  if (!same_parity(j, m)) throw InputError("parity mismatch between j=" + j.str() + " and m=" + m.str());
}

// Triangle coefficient Delta(abc) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!; assumes triangle(a,b,c).
cpp_rational triangle_coefficient(HalfInt a, HalfInt b, HalfInt c) {
  const int ta = a.twice(), tb = b.twice(), tc = c.twice();
  cpp_int num = factorial(half_of(ta + tb - tc)) * factorial(half_of(ta - tb + tc)) * factorial(half_of(-ta + tb + tc));
  cpp_int den = factorial(half_of(ta + tb + tc) + 1);
  return cpp_rational(num, den);
}

// sign * sqrt(square) rounded once to double.
double signed_sqrt(int sign, const cpp_rational& square) {
  if (sign == 0 || square == 0) return 0.0;
  Float num(boost::multiprecision::numerator(square));
  Float den(boost::multiprecision::denominator(square));
  Float root = boost::multiprecision::sqrt(num / den);
  return sign * static_cast<double>(root);
}

int sign_of(const cpp_rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

double wigner3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  check_pair(j1, m1);
  check_pair(j2, m2);
  check_pair(j3, m3);

  if ((m1 + m2 + m3).twice() != 0) return 0.0;
  if (abs(m1) > j1 || abs(m2) > j2 || abs(m3) > j3) return 0.0;
  if (!triangle(j1, j2, j3)) return 0.0;

  const int a = j1.twice(), b = j2.twice(), c = j3.twice();
  const int ma = m1.twice(), mb = m2.twice(), mc = m3.twice();

  // Arguments of the six summation factorials are k + offset or bound - k.
  const int o1 = half_of(c - b + ma);
  const int o2 = half_of(c - a - mb);
  const int u1 = half_of(a + b - c);
  const int u2 = half_of(a - ma);
  const int u3 = half_of(b + mb);
  const int k_min = std::max({0, -o1, -o2});
  const int k_max = std::min({u1, u2, u3});

  cpp_rational sum = 0;
  for (int k = k_min; k <= k_max; ++k) {
    cpp_int den = factorial(k) * factorial(o1 + k) * factorial(o2 + k) * factorial(u1 - k) * factorial(u2 - k) *
                  factorial(u3 - k);
    sum += cpp_rational((k % 2 == 0) ? 1 : -1, 1) / den;
  }

  const cpp_rational prefactor = triangle_coefficient(j1, j2, j3) *
                                 cpp_rational(factorial(half_of(a + ma)) * factorial(half_of(a - ma)) *
                                              factorial(half_of(b + mb)) * factorial(half_of(b - mb)) *
                                              factorial(half_of(c + mc)) * factorial(half_of(c - mc)));
  const int phase_sign = phase(j1 - j2 - m3);
  return signed_sqrt(phase_sign * sign_of(sum), prefactor * sum * sum);
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  check_pair(j1, m1);
  check_pair(j2, m2);
  check_pair(J, M);
  if (m1 + m2 != M) return 0.0;
  const double three_j = wigner3j(j1, j2, J, m1, m2, -M);
  if (three_j == 0.0) return 0.0;
  return phase(j1 - j2 + M) * std::sqrt(static_cast<double>(J.multiplicity())) * three_j;
}

double wigner6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
  for (HalfInt j : {j1, j2, j3, j4, j5, j6}) check_magnitude(j);
  if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) || !triangle(j4, j5, j3)) return 0.0;

  const int a = j1.twice(), b = j2.twice(), c = j3.twice();
  const int d = j4.twice(), e = j5.twice(), f = j6.twice();
  const int s1 = half_of(a + b + c), s2 = half_of(a + e + f), s3 = half_of(d + b + f), s4 = half_of(d + e + c);
  const int p1 = half_of(a + b + d + e), p2 = half_of(b + c + e + f), p3 = half_of(c + a + f + d);
  const int t_min = std::max({s1, s2, s3, s4});
  const int t_max = std::min({p1, p2, p3});

  cpp_rational sum = 0;
  for (int t = t_min; t <= t_max; ++t) {
    cpp_int den = factorial(t - s1) * factorial(t - s2) * factorial(t - s3) * factorial(t - s4) * factorial(p1 - t) *
                  factorial(p2 - t) * factorial(p3 - t);
    cpp_int num = factorial(t + 1);
    if (t % 2 != 0) num = -num;
    sum += cpp_rational(num, den);
  }

  const cpp_rational prefactor = triangle_coefficient(j1, j2, j3) * triangle_coefficient(j1, j5, j6) *
                                 triangle_coefficient(j4, j2, j6) * triangle_coefficient(j4, j5, j3);
  return signed_sqrt(sign_of(sum), prefactor * sum * sum);
}

double SpinReducedMatrix::at(HalfInt F, HalfInt F_prime) const {
  auto index = [](HalfInt x) {
    if (x == HalfInt::from_twice(3)) return 0;
    if (x == HalfInt::from_twice(1)) return 1;
    throw InputError("spin reduced matrix defined only for F in {1/2, 3/2}, got " + x.str());
  };
  return entries[index(F)][index(F_prime)];
}

SpinReducedMatrix spin_reduced_matrix(SpinOperator op) {
  const double s15 = std::sqrt(15.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  if (op == SpinOperator::ElectronSpin) {
    return {op, {{{s15 / 3.0, -2.0 / s3}, {2.0 / s3, -s6 / 6.0}}}};
  }
  return {op, {{{2.0 * s15 / 3.0, 2.0 / s3}, {-2.0 / s3, 2.0 * s6 / 3.0}}}};
}

double spin_reduced_matrix(SpinOperator op, HalfInt F, HalfInt F_prime) { return spin_reduced_matrix(op).at(F, F_prime); }

}  // namespace h2plus::angular
