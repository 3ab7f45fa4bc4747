#include "kinetic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tlgks {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

inline std::array<double, 3> add(const std::array<double, 3>& a,
                                 const std::array<double, 3>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
}  // namespace

MomentTable make_moment_table(double h, double U, double V, double G) {
  if (!(h > 0.0) || !std::isfinite(h) || !std::isfinite(U) || !std::isfinite(V)) {
    throw std::runtime_error("kinetic: nonpositive or non-finite depth/velocity (h=" +
                             std::to_string(h) + ")");
  }
  MomentTable T;
  T.h = h;
  T.U = U;
  T.V = V;
  T.lam = 1.0 / (G * h);
  const double half = 0.5 / T.lam;  // 1/(2 lam)
  const double sq = std::sqrt(T.lam);

  T.Mfull[0] = 1.0;
  T.Mfull[1] = U;
  for (int n = 1; n + 1 < 7; ++n) {
    T.Mfull[n + 1] = U * T.Mfull[n] + n * half * T.Mfull[n - 1];
  }
  T.Mplus[0] = 0.5 * std::erfc(-sq * U);
  T.Mplus[1] = U * T.Mplus[0] + 0.5 * std::exp(-T.lam * U * U) / std::sqrt(kPi * T.lam);
  for (int n = 1; n + 1 < 7; ++n) {
    T.Mplus[n + 1] = U * T.Mplus[n] + n * half * T.Mplus[n - 1];
  }
  for (int n = 0; n < 7; ++n) T.Mminus[n] = T.Mfull[n] - T.Mplus[n];

  T.N[0] = 1.0;
  T.N[1] = V;
  for (int n = 1; n + 1 < 7; ++n) {
    T.N[n + 1] = V * T.N[n] + n * half * T.N[n - 1];
  }
  return T;
}

std::array<double, 3> moment_vec(const MomentTable& T, Sector s,
                                 const std::array<double, 3>& c, int eu, int ev) {
  const std::array<double, 7>& M =
      (s == Sector::Full) ? T.Mfull : (s == Sector::Plus) ? T.Mplus : T.Mminus;
  auto X = [&](int a, int b) { return T.h * M[a] * T.N[b]; };
  std::array<double, 3> out;
  for (int m = 0; m < 3; ++m) {
    const int pu = eu + (m == 1 ? 1 : 0);
    const int pv = ev + (m == 2 ? 1 : 0);
    out[m] = c[0] * X(pu, pv) + c[1] * X(pu + 1, pv) + c[2] * X(pu, pv + 1);
  }
  return out;
}

std::array<double, 3> slope_coeffs(const MomentTable& T,
                                   const std::array<double, 3>& r) {
  const double a1 = 2.0 * T.lam * (r[1] - T.U * r[0]) / T.h;
  const double a2 = 2.0 * T.lam * (r[2] - T.V * r[0]) / T.h;
  const double a0 = r[0] / T.h - T.U * a1 - T.V * a2;
  return {a0, a1, a2};
}

EvoCoeffs evo_coeffs(double t, double tau) {
  const double s = t / tau;
  const double E = std::exp(-s);
  const double om = -std::expm1(-s);  // 1 - E without cancellation
  EvoCoeffs c;
  c.C1 = om;
  c.C4 = E;
  c.C5 = -t * E;
  if (s < 1e-3) {
    const double s2 = s * s;
    c.C2 = tau * s2 * (-0.5 + s * (1.0 / 3.0 + s * (-0.125 + s * (1.0 / 30.0 - s / 144.0))));
    c.C3 = tau * s2 * (0.5 + s * (-1.0 / 6.0 + s * (1.0 / 24.0 + s * (-1.0 / 120.0 + s / 720.0))));
  } else {
    c.C2 = -tau * om + t * E;
    c.C3 = -tau * om + t;
  }
  return c;
}

EvoTimeInts evo_time_integrals(double t, double tau) {
  const double s = t / tau;
  const double E = std::exp(-s);
  const double om = -std::expm1(-s);
  EvoTimeInts v;
  v.I4 = tau * om;
  if (s < 1e-3) {
    const double s2 = s * s, s3 = s2 * s;
    v.I1 = tau * s2 * (0.5 + s * (-1.0 / 6.0 + s * (1.0 / 24.0 + s * (-1.0 / 120.0 + s / 720.0))));
    v.I2 = tau * tau * s3 * (-1.0 / 6.0 + s * (1.0 / 12.0 + s * (-1.0 / 40.0 + s / 180.0)));
    v.I3 = tau * tau * s3 * (1.0 / 6.0 + s * (-1.0 / 24.0 + s * (1.0 / 120.0 - s / 720.0)));
    v.I5 = tau * tau * s2 * (-0.5 + s * (1.0 / 3.0 + s * (-0.125 + s * (1.0 / 30.0 - s / 144.0))));
  } else {
    v.I1 = t - tau * om;
    v.I2 = -tau * t + 2.0 * tau * tau * om - tau * t * E;
    v.I3 = -tau * t + tau * tau * om + 0.5 * t * t;
    v.I5 = -tau * tau * om + tau * t * E;
  }
  return v;
}

EvoRates evo_rates(double t, double tau) {
  const double s = t / tau;
  const double E = std::exp(-s);
  EvoRates r;
  r.R1 = E / tau;
  r.R2 = -t * E / tau;
  r.R3 = -std::expm1(-s);
  r.R4 = -E / tau;
  r.R5 = E * (s - 1.0);
  return r;
}

double collision_time(double hl, double hr, double dt, double eps, double cnum) {
  const double num = std::abs(hl * hl - hr * hr);
  const double den = hl * hl + hr * hr;
  if (den <= 0.0) return eps * dt;
  return eps * dt + cnum * (num / den) * dt;
}

std::array<double, 3> InterfaceSolution::W(double t) const {
  const EvoCoeffs c = evo_coeffs(t, tau);
  std::array<double, 3> w;
  for (int m = 0; m < 3; ++m) {
    w[m] = c.C1 * E0[m] + c.C2 * (U0[m] + P0[m]) + c.C3 * EA0[m] +
           c.C4 * G0[m] + c.C5 * (T0[m] + R0[m]);
  }
  return w;
}

std::array<double, 3> InterfaceSolution::F(double t) const {
  const EvoCoeffs c = evo_coeffs(t, tau);
  std::array<double, 3> f;
  for (int m = 0; m < 3; ++m) {
    f[m] = c.C1 * E1[m] + c.C2 * (U1[m] + P1[m]) + c.C3 * EA1[m] +
           c.C4 * G1[m] + c.C5 * (T1[m] + R1[m]);
  }
  return f;
}

std::array<double, 3> InterfaceSolution::Iflux(double t) const {
  const EvoTimeInts ic = evo_time_integrals(t, tau);
  std::array<double, 3> f;
  for (int m = 0; m < 3; ++m) {
    f[m] = ic.I1 * E1[m] + ic.I2 * (U1[m] + P1[m]) + ic.I3 * EA1[m] +
           ic.I4 * G1[m] + ic.I5 * (T1[m] + R1[m]);
  }
  return f;
}

std::array<double, 3> InterfaceSolution::Wdot(double t) const {
  const EvoRates r = evo_rates(t, tau);
  std::array<double, 3> w;
  for (int m = 0; m < 3; ++m) {
    w[m] = r.R1 * E0[m] + r.R2 * (U0[m] + P0[m]) + r.R3 * EA0[m] +
           r.R4 * G0[m] + r.R5 * (T0[m] + R0[m]);
  }
  return w;
}

InterfaceSolution solve_interface(const InterfaceState& L,
                                  const InterfaceState& R, double tau,
                                  double G) {
  InterfaceSolution sol;
  sol.tau = tau;

  const MomentTable TL = make_moment_table(L.h, L.Un, L.Ut, G);
  const MomentTable TR = make_moment_table(R.h, R.Un, R.Ut, G);

  // Colliding upwind halves define the interface equilibrium state.
  const std::array<double, 3> one{1.0, 0.0, 0.0};
  const std::array<double, 3> WL = moment_vec(TL, Sector::Plus, one, 0, 0);
  const std::array<double, 3> WR = moment_vec(TR, Sector::Minus, one, 0, 0);
  sol.G0 = add(WL, WR);
  sol.E0 = sol.G0;
  sol.hbar = sol.G0[0];
  if (sol.hbar > 1e-12 * (L.h + R.h)) {
    sol.Ubar = sol.G0[1] / sol.G0[0];
    sol.Vbar = sol.G0[2] / sol.G0[0];
  } else {
    // Both sides stream away from the interface: the colliding mass
    // underflows and its mean velocity is ill-conditioned. Keep a vanishing
    // equilibrium at rest so only the free-streaming terms contribute.
    sol.hbar = 1e-12 * (L.h + R.h);
    sol.Ubar = 0.0;
    sol.Vbar = 0.0;
  }
  const MomentTable TB = make_moment_table(sol.hbar, sol.Ubar, sol.Vbar, G);

  sol.G1 = add(moment_vec(TL, Sector::Plus, one, 1, 0),
               moment_vec(TR, Sector::Minus, one, 1, 0));
  sol.E1 = moment_vec(TB, Sector::Full, one, 1, 0);

  // Equilibrium spatial slopes: side gradients projected onto the merged
  // Maxwellian's moment system.
  const std::array<double, 3> anl = slope_coeffs(TB, L.sn);
  const std::array<double, 3> atl = slope_coeffs(TB, L.st);
  const std::array<double, 3> anr = slope_coeffs(TB, R.sn);
  const std::array<double, 3> atr = slope_coeffs(TB, R.st);

  sol.U0 = add(add(moment_vec(TB, Sector::Plus, anl, 1, 0),
                   moment_vec(TB, Sector::Plus, atl, 0, 1)),
               add(moment_vec(TB, Sector::Minus, anr, 1, 0),
                   moment_vec(TB, Sector::Minus, atr, 0, 1)));
  sol.U1 = add(add(moment_vec(TB, Sector::Plus, anl, 2, 0),
                   moment_vec(TB, Sector::Plus, atl, 1, 1)),
               add(moment_vec(TB, Sector::Minus, anr, 2, 0),
                   moment_vec(TB, Sector::Minus, atr, 1, 1)));

  // Acceleration acting on the equilibrium part, upwinded by side.
  auto accel_coeffs = [](double lam, double U, double V, double phiN,
                         double phiT) -> std::array<double, 3> {
    return {2.0 * lam * (phiN * U + phiT * V), -2.0 * lam * phiN, -2.0 * lam * phiT};
  };
  const std::array<double, 3> ceqL =
      accel_coeffs(TB.lam, TB.U, TB.V, L.phiN, L.phiT);
  const std::array<double, 3> ceqR =
      accel_coeffs(TB.lam, TB.U, TB.V, R.phiN, R.phiT);
  {
    const std::array<double, 3> p0 = add(moment_vec(TB, Sector::Plus, ceqL, 0, 0),
                                         moment_vec(TB, Sector::Minus, ceqR, 0, 0));
    const std::array<double, 3> p1 = add(moment_vec(TB, Sector::Plus, ceqL, 1, 0),
                                         moment_vec(TB, Sector::Minus, ceqR, 1, 0));
    for (int m = 0; m < 3; ++m) {
      sol.P0[m] = kAlphaEquilibrium[m] * p0[m];
      sol.P1[m] = kAlphaEquilibrium[m] * p1[m];
    }
  }

  // Equilibrium time slope from the compatibility condition: the combined
  // slope, acceleration, and time terms carry zero net conserved moments.
  const std::array<double, 3> rhs{-(sol.U0[0] + sol.P0[0]),
                                  -(sol.U0[1] + sol.P0[1]),
                                  -(sol.U0[2] + sol.P0[2])};
  sol.Abar = slope_coeffs(TB, rhs);
  sol.EA0 = moment_vec(TB, Sector::Full, sol.Abar, 0, 0);
  sol.EA1 = moment_vec(TB, Sector::Full, sol.Abar, 1, 0);

  // Transport part: each side's own slope expansion and acceleration.
  const std::array<double, 3> bnl = slope_coeffs(TL, L.sn);
  const std::array<double, 3> btl = slope_coeffs(TL, L.st);
  const std::array<double, 3> bnr = slope_coeffs(TR, R.sn);
  const std::array<double, 3> btr = slope_coeffs(TR, R.st);

  sol.T0 = add(add(moment_vec(TL, Sector::Plus, bnl, 1, 0),
                   moment_vec(TL, Sector::Plus, btl, 0, 1)),
               add(moment_vec(TR, Sector::Minus, bnr, 1, 0),
                   moment_vec(TR, Sector::Minus, btr, 0, 1)));
  sol.T1 = add(add(moment_vec(TL, Sector::Plus, bnl, 2, 0),
                   moment_vec(TL, Sector::Plus, btl, 1, 1)),
               add(moment_vec(TR, Sector::Minus, bnr, 2, 0),
                   moment_vec(TR, Sector::Minus, btr, 1, 1)));

  const std::array<double, 3> ctrL =
      accel_coeffs(TL.lam, TL.U, TL.V, L.phiN, L.phiT);
  const std::array<double, 3> ctrR =
      accel_coeffs(TR.lam, TR.U, TR.V, R.phiN, R.phiT);
  {
    const std::array<double, 3> r0 = add(moment_vec(TL, Sector::Plus, ctrL, 0, 0),
                                         moment_vec(TR, Sector::Minus, ctrR, 0, 0));
    const std::array<double, 3> r1 = add(moment_vec(TL, Sector::Plus, ctrL, 1, 0),
                                         moment_vec(TR, Sector::Minus, ctrR, 1, 0));
    for (int m = 0; m < 3; ++m) {
      sol.R0[m] = kAlphaTransport[m] * r0[m];
      sol.R1[m] = kAlphaTransport[m] * r1[m];
    }
  }

  return sol;
}

}  // namespace tlgks
