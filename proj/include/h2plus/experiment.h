#pragma once

/// Order-of-magnitude experimental figures for resonant two-photon excitation
/// in a Fabry-Perot build-up cavity. SI units throughout, except the squared
/// two-photon matrix element, which stays in atomic units.
namespace h2plus::experiment {

/// CODATA 2018.
inline constexpr double kBohrRadius_m = 5.29177210903e-11;
inline constexpr double kHbar_Js = 1.054571817e-34;
inline constexpr double kSpeedOfLight_m_s = 299792458.0;

/// (4 pi a0^3 / (hbar c))^2 in m^4 J^-2, about 3.4693e-9.
double rate_prefactor();

struct LaserParams {
  double power_incident_W;
  double waist_m;
  double gamma_f_rad_s;
};

/// Two identical mirrors with reflectivity R, transmission T and losses P_loss, R + T + P_loss = 1.
struct CavityParams {
  double R;
  double P_loss;
  double T;

  /// T = 1 - R - P_loss. Throws InputError unless R, P_loss in [0, 1] and T > 0.
  static CavityParams make(double R, double P_loss);
};

/// On-axis intensity 2 P / (pi w0^2), W/m^2.
double beam_axis_intensity(const LaserParams& p);
double beam_axis_intensity(double power_W, double waist_m);

/// Resonant rate (1/s) for intensity I (W/m^2), instrumental width gamma_f (rad/s)
/// and averaged squared matrix element q_sq (atomic units):
///   rate = rate_prefactor() * 4 / gamma_f * I^2 * q_sq.
/// Throws InputError for gamma_f <= 0 or negative I, q_sq.
double rate_at_resonance(double intensity_W_m2, double gamma_f_rad_s, double q_sq);

/// Split of a circularly polarized beam seen in a transverse quantization field.
struct PolarizationIntensities {
  double pi;
  double sigma_minus;
  double sigma_plus;
};

PolarizationIntensities transverse_field_decomposition(double intensity_W_m2);

/// Resonant transmission 1 / [1 + P / (1 - R - P)]^2.
double cavity_transmission(const CavityParams& c);

/// Off-resonance isolation -10 log10[(1 - R - P)^2 / (1 + R)^2], dB.
double cavity_isolation_db(const CavityParams& c);

/// Intracavity power inferred from the power leaking through one mirror.
double circulating_power(double transmitted_power_W, double mirror_transmission);

}  // namespace h2plus::experiment
