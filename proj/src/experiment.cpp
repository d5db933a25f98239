#include "h2plus/experiment.h"

#include <cmath>
#include <numbers>

#include "h2plus/errors.h"

namespace h2plus::experiment {

double rate_prefactor() {
  const double a0_cubed = kBohrRadius_m * kBohrRadius_m * kBohrRadius_m;
  const double x = 4.0 * std::numbers::pi * a0_cubed / (kHbar_Js * kSpeedOfLight_m_s);
  return x * x;
}

CavityParams CavityParams::make(double R, double P_loss) {
  if (!(R >= 0.0 && R <= 1.0)) throw InputError("mirror reflectivity must lie in [0, 1]");
  if (!(P_loss >= 0.0 && P_loss <= 1.0)) throw InputError("mirror losses must lie in [0, 1]");
  const double T = 1.0 - R - P_loss;
  if (!(T > 0.0)) throw InputError("mirror transmission 1 - R - P_loss must be > 0");
  return {R, P_loss, T};
}

double beam_axis_intensity(double power_W, double waist_m) {
  if (!(power_W >= 0.0)) throw InputError("beam power must be >= 0");
  if (!(waist_m > 0.0)) throw InputError("beam waist must be > 0");
  return 2.0 * power_W / (std::numbers::pi * waist_m * waist_m);
}

double beam_axis_intensity(const LaserParams& p) { return beam_axis_intensity(p.power_incident_W, p.waist_m); }

double rate_at_resonance(double intensity_W_m2, double gamma_f_rad_s, double q_sq) {
  if (!(gamma_f_rad_s > 0.0)) throw InputError("instrumental width gamma_f must be > 0");
  if (!(intensity_W_m2 >= 0.0)) throw InputError("intensity must be >= 0");
  if (!(q_sq >= 0.0)) throw InputError("squared matrix element must be >= 0");
  return rate_prefactor() * 4.0 / gamma_f_rad_s * intensity_W_m2 * intensity_W_m2 * q_sq;
}

PolarizationIntensities transverse_field_decomposition(double intensity_W_m2) {
  if (!(intensity_W_m2 >= 0.0)) throw InputError("intensity must be >= 0");
  return {0.5 * intensity_W_m2, 0.25 * intensity_W_m2, 0.25 * intensity_W_m2};
}

namespace {

CavityParams checked(const CavityParams& c) {
  const CavityParams v = CavityParams::make(c.R, c.P_loss);
  if (std::abs(c.R + c.T + c.P_loss - 1.0) > 1e-12) throw InputError("cavity parameters violate R + T + P_loss = 1");
  return v;
}

}  // namespace

double cavity_transmission(const CavityParams& c) {
  const CavityParams v = checked(c);
  const double x = 1.0 + v.P_loss / v.T;
  return 1.0 / (x * x);
}

double cavity_isolation_db(const CavityParams& c) {
  const CavityParams v = checked(c);
  const double ratio = (v.T * v.T) / ((1.0 + v.R) * (1.0 + v.R));
  return -10.0 * std::log10(ratio);
}

double circulating_power(double transmitted_power_W, double mirror_transmission) {
  if (!(mirror_transmission > 0.0 && mirror_transmission <= 1.0))
    throw InputError("mirror transmission must lie in (0, 1]");
  if (!(transmitted_power_W >= 0.0)) throw InputError("transmitted power must be >= 0");
  return transmitted_power_W / mirror_transmission;
}

}  // namespace h2plus::experiment
