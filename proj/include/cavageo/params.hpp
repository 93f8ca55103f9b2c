#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cavageo {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Signature { Euclidean, Lorentzian };

inline const char* to_string(Signature s) {
  return s == Signature::Euclidean ? "euclidean" : "lorentzian";
}

struct AdmissibilityError : std::domain_error {
  double violating_v;
  AdmissibilityError(const std::string& what, double v)
      : std::domain_error(what), violating_v(v) {}
};

struct InvalidSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parameters of the screw-symmetric helical tube family.
///
/// a: radius of the central helix, b: radius of the circular profile,
/// c: vertical rise per radian of azimuth, psi: tilt-back angle of the
/// profile plane (Euclidean only; the Lorentzian tilt is forced to the
/// rapidity artanh(a/c)).
struct SurfaceParams {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
  double psi = 0.0;
  Signature signature = Signature::Euclidean;

  // ---- derived helix quantities ----

  /// a^2 + c^2 (Euclidean) or c^2 - a^2 (Lorentzian): the squared speed of
  /// the central curve with respect to the azimuth.
  double helix_speed2() const {
    return signature == Signature::Euclidean ? a * a + c * c : c * c - a * a;
  }
  double helix_speed() const { return std::sqrt(helix_speed2()); }

  /// Inclination angle of the central helix from the horizontal.
  double inclination() const { return std::atan2(c, a); }

  bool lorentzian() const { return signature == Signature::Lorentzian; }

  /// Orbital speed a/c of the Lorentzian helix (fraction of light speed).
  double speed() const { return a / c; }
  double rapidity() const { return std::atanh(speed()); }
  double gamma() const { return c / std::sqrt(c * c - a * a); }
  /// Angular velocity dphi/dt with respect to inertial time.
  double omega() const { return 1.0 / c; }
  /// Angular velocity dphi/dtau with respect to proper time.
  double proper_omega() const { return 1.0 / std::sqrt(c * c - a * a); }
  double inertial_period() const { return kTwoPi * c; }
  double proper_period() const { return kTwoPi * std::sqrt(c * c - a * a); }

  /// Tilt in effect: psi for Euclidean params, the rapidity otherwise.
  double tilt() const { return lorentzian() ? rapidity() : psi; }

  bool is_orthogonal(double tol = 1e-12) const {
    if (lorentzian()) return true;
    return std::abs(psi - inclination()) <= tol;
  }
};

/// Smallest value of (c^2 - a^2 - a b cos v)^2 - b^2 c^2 over a period,
/// located by a scan plus local refinement. Positive iff the threading
/// congruence is timelike everywhere (M^2 > 0).
inline double lorentz_margin(double a, double b, double c, double* argmin_v = nullptr) {
  auto f = [&](double v) {
    const double d = c * c - a * a - a * b * std::cos(v);
    return d * d - b * b * c * c;
  };
  const int n = 720;
  double best = f(0.0), best_v = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double v = kTwoPi * i / n;
    const double fv = f(v);
    if (fv < best) { best = fv; best_v = v; }
  }
  // golden-section refinement around the grid minimum
  double lo = best_v - kTwoPi / n, hi = best_v + kTwoPi / n;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) { hi = x2; x2 = x1; f2 = f1; x1 = hi - gr * (hi - lo); f1 = f(x1); }
    else         { lo = x1; x1 = x2; f1 = f2; x2 = lo + gr * (hi - lo); f2 = f(x2); }
  }
  const double vm = 0.5 * (lo + hi);
  if (argmin_v) *argmin_v = vm;
  return std::min(best, f(vm));
}

inline void validate(const SurfaceParams& p) {
  if (!(p.a > 0.0) || !(p.b > 0.0))
    throw InvalidSpecError("surface params require a > 0 and b > 0");
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) ||
      !std::isfinite(p.psi))
    throw InvalidSpecError("surface params must be finite");
  if (p.signature == Signature::Euclidean) {
    if (!(p.a * p.a + p.c * p.c > p.a * p.b))
      throw AdmissibilityError("degenerate area element: a^2 + c^2 <= a*b", kPi);
  } else {
    if (!(p.c > p.a))
      throw AdmissibilityError("Lorentzian helix requires c > a (timelike)", 0.0);
    double vbad = 0.0;
    if (lorentz_margin(p.a, p.b, p.c, &vbad) <= 0.0)
      throw AdmissibilityError(
          "threading congruence not timelike: (c^2-a^2-ab cos v)^2 - b^2c^2 <= 0 at v = " +
              std::to_string(vbad),
          vbad);
  }
}

inline SurfaceParams euclidean(double a, double b, double c, double psi) {
  SurfaceParams p{a, b, c, psi, Signature::Euclidean};
  validate(p);
  return p;
}

/// Euclidean params with the profile plane perpendicular to the central
/// helix (tilt-back angle equal to the inclination).
inline SurfaceParams euclidean_orthogonal(double a, double b, double c) {
  SurfaceParams p{a, b, c, std::atan2(c, a), Signature::Euclidean};
  validate(p);
  return p;
}

inline SurfaceParams lorentzian(double a, double b, double c) {
  SurfaceParams p{a, b, c, 0.0, Signature::Lorentzian};
  p.psi = p.rapidity();
  validate(p);
  return p;
}

/// Re-tilt Euclidean params to the orthogonal (tube-surface) value.
inline SurfaceParams orthogonal_tilt(const SurfaceParams& p) {
  if (p.lorentzian())
    throw InvalidSpecError("orthogonal_tilt: Lorentzian tilt is fixed to the rapidity");
  return euclidean_orthogonal(p.a, p.b, p.c);
}

// ---- canonical presets ----

inline SurfaceParams preset_euclid_canonical() {
  return euclidean_orthogonal(1.5, 1.0, 0.8);
}

inline SurfaceParams preset_lorentz_canonical() {
  return lorentzian(2.0, 1.0, 4.0);
}

/// Legendre's cavatappi parameter choice: vertical profile plane, pitch 5/(2 pi).
inline SurfaceParams preset_legendre() {
  return euclidean(1.5, 1.0, 5.0 / kTwoPi, 0.0);
}

inline SurfaceParams preset_torus() {
  return euclidean(1.5, 1.0, 0.0, 0.0);
}

}  // namespace cavageo
