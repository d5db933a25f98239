#include "h2plus/reference_tables.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "h2plus/errors.h"

namespace h2plus::reference {
namespace {

using namespace h2plus::literals;

// clang-format off
constexpr std::array kEvenShifts{
    EvenShift{0, 0, 1_half, 0.0},
    EvenShift{1, 0, 1_half, 0.0},
    EvenShift{0, 2, 3_half, -63.2438}, EvenShift{0, 2, 5_half, 42.1625},
    EvenShift{1, 2, 3_half, -59.3574}, EvenShift{1, 2, 5_half, 39.5716},
};

constexpr std::array kOddShifts{
    OddShift{0, 1, 3_half, 5_half,  474.1063,  0.0,      1.0},
    OddShift{0, 1, 3_half, 3_half,  481.9534,  0.015612, 0.999878},
    OddShift{0, 1, 1_half, 3_half, -930.4332, -0.999878, 0.015612},
    OddShift{0, 1, 3_half, 1_half,  385.3985,  0.038891, 0.999243},
    OddShift{0, 1, 1_half, 1_half, -910.7579, -0.999243, 0.038891},

    OddShift{1, 1, 3_half, 5_half,  461.2574,  0.0,      1.0},
    OddShift{1, 1, 3_half, 3_half,  468.5247,  0.015074, 0.999886},
    OddShift{1, 1, 1_half, 3_half, -905.7836, -0.999886, 0.015074},
    OddShift{1, 1, 3_half, 1_half,  377.9948,  0.037345, 0.999302},
    OddShift{1, 1, 1_half, 1_half, -887.2491, -0.999302, 0.037345},

    OddShift{0, 3, 3_half, 9_half,  507.2568,  0.0,      1.0},
    OddShift{0, 3, 3_half, 7_half,  489.5257,  0.042115, 0.999113},
    OddShift{0, 3, 1_half, 7_half, -941.1034, -0.999113, 0.042115},
    OddShift{0, 3, 3_half, 5_half,  423.6342,  0.061812, 0.998088},
    OddShift{0, 3, 1_half, 5_half, -894.6614, -0.998088, 0.061812},
    OddShift{0, 3, 3_half, 3_half,  341.5540,  0.0,      1.0},

    OddShift{1, 3, 3_half, 9_half,  492.3817,  0.0,      1.0},
    OddShift{1, 3, 3_half, 7_half,  475.5771,  0.040656, 0.999173},
    OddShift{1, 3, 1_half, 7_half, -915.7408, -0.999173, 0.040656},
    OddShift{1, 3, 3_half, 5_half,  413.6810,  0.059441, 0.998232},
    OddShift{1, 3, 1_half, 5_half, -872.0486, -0.998232, 0.059441},
    OddShift{1, 3, 3_half, 3_half,  336.9246,  0.0,      1.0},
};

constexpr std::array kOrbital{
    OrbitalElement{0, 0.7255, 0.0},
    OrbitalElement{1, 1.261, 0.7753},
    OrbitalElement{2, 1.640, 0.8541},
    OrbitalElement{3, 1.962, 0.9903},
};

constexpr std::array kLines{
    SpectralLine{0,    0.0000, 1_half, 1_half, 1_half, 1_half, 0.1754, 0.0000, 0.1754},

    SpectralLine{2,  -50.7600, 1_half, 5_half, 1_half, 3_half, 0.0039, 0.0058, 0.0010},
    SpectralLine{2,   -1.2955, 1_half, 5_half, 1_half, 5_half, 0.1949, 0.0233, 0.1832},
    SpectralLine{2,    1.9432, 1_half, 3_half, 1_half, 3_half, 0.1929, 0.0204, 0.1827},
    SpectralLine{2,   51.4077, 1_half, 3_half, 1_half, 5_half, 0.0058, 0.0088, 0.0015},

    SpectralLine{1, -693.869, 3_half, 3_half, 1_half, 3_half, 1.028e-05, 1.534e-05, 2.607e-06},
    SpectralLine{1, -689.945, 3_half, 5_half, 1_half, 3_half, 2.550e-06, 3.824e-06, 6.374e-07},
    SpectralLine{1, -684.601, 3_half, 3_half, 1_half, 1_half, 1.003e-05, 1.505e-05, 2.509e-06},
    SpectralLine{1, -680.678, 3_half, 5_half, 1_half, 1_half, 1.118e-05, 1.677e-05, 2.794e-06},
    SpectralLine{1, -645.591, 3_half, 1_half, 1_half, 3_half, 5.090e-05, 7.635e-05, 1.273e-05},
    SpectralLine{1, -636.324, 3_half, 1_half, 1_half, 1_half, 4.229e-07, 0.0,       4.229e-07},
    SpectralLine{1,  -51.979, 3_half, 3_half, 3_half, 1_half, 1.329e-03, 1.993e-03, 3.322e-04},
    SpectralLine{1,  -48.056, 3_half, 5_half, 3_half, 1_half, 8.003e-03, 1.201e-02, 2.001e-03},
    SpectralLine{1,  -10.348, 3_half, 3_half, 3_half, 5_half, 1.683e-02, 2.524e-02, 4.207e-03},
    SpectralLine{1,   -6.714, 3_half, 3_half, 3_half, 3_half, 1.853e-01, 1.281e-02, 1.789e-01},
    SpectralLine{1,   -6.424, 3_half, 5_half, 3_half, 5_half, 1.842e-01, 1.122e-02, 1.786e-01},
    SpectralLine{1,   -3.702, 3_half, 1_half, 3_half, 1_half, 1.767e-01, 0.0,       1.767e-01},
    SpectralLine{1,   -2.791, 3_half, 5_half, 3_half, 3_half, 1.122e-02, 1.683e-02, 2.804e-03},
    SpectralLine{1,    2.487, 1_half, 1_half, 1_half, 3_half, 2.666e-02, 3.999e-02, 6.665e-03},
    SpectralLine{1,   11.754, 1_half, 1_half, 1_half, 1_half, 1.767e-01, 0.0,       1.767e-01},
    SpectralLine{1,   12.325, 1_half, 3_half, 1_half, 3_half, 1.901e-01, 2.002e-02, 1.801e-01},
    SpectralLine{1,   21.592, 1_half, 3_half, 1_half, 1_half, 1.333e-02, 2.000e-02, 3.333e-03},
    SpectralLine{1,   37.929, 3_half, 1_half, 3_half, 5_half, 2.401e-02, 3.601e-02, 6.002e-03},
    SpectralLine{1,   41.563, 3_half, 1_half, 3_half, 3_half, 2.657e-03, 3.986e-03, 6.643e-04},
    SpectralLine{1,  644.376, 1_half, 1_half, 3_half, 1_half, 4.229e-07, 0.0,       4.229e-07},
    SpectralLine{1,  654.214, 1_half, 3_half, 3_half, 1_half, 2.387e-05, 3.581e-05, 5.968e-06},
    SpectralLine{1,  686.008, 1_half, 1_half, 3_half, 5_half, 3.637e-05, 5.455e-05, 9.092e-06},
    SpectralLine{1,  689.641, 1_half, 1_half, 3_half, 3_half, 2.000e-05, 3.000e-05, 4.999e-06},
    SpectralLine{1,  695.845, 1_half, 3_half, 3_half, 5_half, 4.102e-06, 6.153e-06, 1.026e-06},
    SpectralLine{1,  699.479, 1_half, 3_half, 3_half, 3_half, 1.020e-05, 1.522e-05, 2.588e-06},

    SpectralLine{3, -711.499, 3_half, 9_half, 1_half, 7_half, 6.739e-06, 1.011e-05, 1.685e-06},
    SpectralLine{3, -702.633, 3_half, 7_half, 1_half, 7_half, 4.143e-06, 5.629e-06, 1.329e-06},
    SpectralLine{3, -689.653, 3_half, 9_half, 1_half, 5_half, 1.179e-06, 1.768e-06, 2.947e-07},
    SpectralLine{3, -680.787, 3_half, 7_half, 1_half, 5_half, 6.647e-06, 9.971e-06, 1.662e-06},
    SpectralLine{3, -669.687, 3_half, 5_half, 1_half, 7_half, 1.073e-07, 1.610e-07, 2.684e-08},
    SpectralLine{3, -647.841, 3_half, 5_half, 1_half, 5_half, 1.457e-05, 2.030e-05, 4.417e-06},
    SpectralLine{3, -628.647, 3_half, 3_half, 1_half, 7_half, 1.764e-06, 2.647e-06, 4.411e-07},
    SpectralLine{3, -606.801, 3_half, 3_half, 1_half, 5_half, 3.055e-05, 4.582e-05, 7.637e-06},
    SpectralLine{3,  -85.166, 3_half, 9_half, 3_half, 3_half, 0.0,       0.0,       0.0},
    SpectralLine{3,  -76.301, 3_half, 7_half, 3_half, 3_half, 5.328e-04, 7.992e-04, 1.332e-04},
    SpectralLine{3,  -46.788, 3_half, 9_half, 3_half, 5_half, 3.324e-04, 4.986e-04, 8.310e-05},
    SpectralLine{3,  -43.355, 3_half, 5_half, 3_half, 3_half, 5.742e-03, 8.613e-03, 1.436e-03},
    SpectralLine{3,  -37.922, 3_half, 7_half, 3_half, 5_half, 5.624e-03, 8.437e-03, 1.406e-03},
    SpectralLine{3,  -15.840, 3_half, 9_half, 3_half, 7_half, 4.070e-03, 6.106e-03, 1.018e-03},
    SpectralLine{3,  -10.540, 1_half, 5_half, 1_half, 7_half, 2.677e-03, 4.015e-03, 6.691e-04},
    SpectralLine{3,   -7.438, 3_half, 9_half, 3_half, 9_half, 1.975e-01, 2.140e-02, 1.868e-01},
    SpectralLine{3,   -6.974, 3_half, 7_half, 3_half, 7_half, 1.906e-01, 1.114e-02, 1.851e-01},
    SpectralLine{3,   -4.977, 3_half, 5_half, 3_half, 5_half, 1.881e-01, 7.309e-03, 1.844e-01},
    SpectralLine{3,   -2.315, 3_half, 3_half, 3_half, 3_half, 1.922e-01, 1.345e-02, 1.855e-01},
    SpectralLine{3,    1.428, 3_half, 7_half, 3_half, 9_half, 5.087e-03, 7.631e-03, 1.272e-03},
    SpectralLine{3,   11.306, 1_half, 5_half, 1_half, 5_half, 1.992e-01, 2.394e-02, 1.872e-01},
    SpectralLine{3,   12.681, 1_half, 7_half, 1_half, 7_half, 1.999e-01, 2.499e-02, 1.874e-01},
    SpectralLine{3,   25.971, 3_half, 5_half, 3_half, 7_half, 7.498e-03, 1.125e-02, 1.875e-03},
    SpectralLine{3,   34.374, 3_half, 5_half, 3_half, 9_half, 5.538e-04, 8.308e-04, 1.385e-04},
    SpectralLine{3,   34.527, 1_half, 7_half, 1_half, 5_half, 2.008e-03, 3.012e-03, 5.019e-04},
    SpectralLine{3,   36.063, 3_half, 3_half, 3_half, 5_half, 8.616e-03, 1.292e-02, 2.154e-03},
    SpectralLine{3,   67.012, 3_half, 3_half, 3_half, 7_half, 1.066e-03, 1.599e-03, 2.664e-04},
    SpectralLine{3,   75.414, 3_half, 3_half, 3_half, 9_half, 0.0,       0.0,       0.0},
    SpectralLine{3,  615.793, 1_half, 5_half, 3_half, 3_half, 2.202e-05, 3.304e-05, 5.506e-06},
    SpectralLine{3,  639.014, 1_half, 7_half, 3_half, 3_half, 9.467e-07, 1.420e-06, 2.367e-07},
    SpectralLine{3,  654.171, 1_half, 5_half, 3_half, 5_half, 1.136e-05, 1.548e-05, 3.614e-06},
    SpectralLine{3,  677.392, 1_half, 7_half, 3_half, 5_half, 2.496e-07, 3.745e-07, 6.241e-08},
    SpectralLine{3,  685.119, 1_half, 5_half, 3_half, 7_half, 1.062e-05, 1.593e-05, 2.654e-06},
    SpectralLine{3,  693.522, 1_half, 5_half, 3_half, 9_half, 2.124e-06, 3.186e-06, 5.310e-07},
    SpectralLine{3,  708.340, 1_half, 7_half, 3_half, 7_half, 3.025e-06, 3.951e-06, 1.049e-06},
    SpectralLine{3,  716.743, 1_half, 7_half, 3_half, 9_half, 9.039e-06, 1.356e-05, 2.260e-06},
};

constexpr std::array kCenters{
    CenterFrequency{0, 32844161.844, 9.128},
    CenterFrequency{1, 32798213.622, 9.141},
    CenterFrequency{2, 32706607.796, 9.166},
    CenterFrequency{3, 32569919.581, 9.205},
};
// clang-format on

const std::array<TensorEntry, 9>& tensor_table() {
  static const std::array<TensorEntry, 9> table = [] {
    const double r2 = std::sqrt(2.0) / 2.0, r6 = std::sqrt(6.0) / 6.0, r3 = std::sqrt(3.0) / 3.0;
    const double r23 = std::sqrt(2.0 / 3.0);
    return std::array<TensorEntry, 9>{{
        {-1, -1, 1.0, 0.0},
        {0, -1, r2, 0.0},
        {1, -1, r6, r3},
        {-1, 0, r2, 0.0},
        {0, 0, r23, -r3},
        {1, 0, r2, 0.0},
        {-1, 1, r6, r3},
        {0, 1, r2, 0.0},
        {1, 1, 1.0, 0.0},
    }};
  }();
  return table;
}

}  // namespace

std::span<const EvenShift> even_shifts() { return kEvenShifts; }
std::span<const OddShift> odd_shifts() { return kOddShifts; }
std::span<const OrbitalElement> orbital_elements() { return kOrbital; }
std::span<const SpectralLine> spectral_lines() { return kLines; }
std::span<const CenterFrequency> center_frequencies() { return kCenters; }
std::span<const TensorEntry> tensor_entries() { return tensor_table(); }

hyperfine::HyperfineSolution published_solution(int v, int L) {
  const auto level = hyperfine::RoVibLevel::make(v, L);
  hyperfine::HyperfineSolution sol{level, {}};
  if (L % 2 == 0) {
    for (const auto& s : kEvenShifts)
      if (s.v == v && s.L == L) sol.states.push_back({level, 1_half, s.J, s.shift_mhz, {1.0, 0.0}});
    std::stable_sort(sol.states.begin(), sol.states.end(), [](const auto& a, const auto& b) { return a.J > b.J; });
  } else {
    for (const auto& s : kOddShifts)
      if (s.v == v && s.L == L) sol.states.push_back({level, s.F_tilde, s.J, s.shift_mhz, {s.c1, s.c3}});
  }
  if (sol.states.empty())
    throw InputError("no published hyperfine structure for (v=" + std::to_string(v) + ", L=" + std::to_string(L) + ")");
  return sol;
}

std::vector<SpectralLine> published_lines(int L) {
  std::vector<SpectralLine> out;
  for (const auto& l : kLines)
    if (l.L == L) out.push_back(l);
  return out;
}

int published_line_count(int L) {
  switch (L) {
    case 0: return 1;
    case 1: return 25;
    case 2: return 4;
    case 3: return 34;
    default: throw InputError("no published line count for L=" + std::to_string(L));
  }
}

}  // namespace h2plus::reference
