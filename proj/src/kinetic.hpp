#pragma once

#include <array>

namespace tlgks {

// Component-wise weights on the acceleration correction terms: index is the
// conserved slot (mass, normal momentum, tangential momentum).
constexpr std::array<double, 3> kAlphaEquilibrium = {1.0, 0.75, 0.25};
constexpr std::array<double, 3> kAlphaTransport = {1.0, 1.0, 1.0};

// Velocity moments of a shallow-water Maxwellian with depth h, mean velocity
// (U,V), lam = 1/(G h). Mfull/Mplus/Mminus are u-moments over the full line
// and the half lines u>0 / u<0; N are full v-moments.
struct MomentTable {
  double h = 0.0, U = 0.0, V = 0.0, lam = 0.0;
  std::array<double, 7> Mfull{}, Mplus{}, Mminus{}, N{};
};

MomentTable make_moment_table(double h, double U, double V, double G);

enum class Sector { Full, Plus, Minus };

// <(c0 + c1 u + c2 v) u^eu v^ev psi> over the given u-sector, psi = (1,u,v).
std::array<double, 3> moment_vec(const MomentTable& T, Sector s,
                                 const std::array<double, 3>& c, int eu, int ev);

// Expansion coefficients (a0 + a1 u + a2 v) from prescribed moments r of the
// product with psi: closed-form solve of the 3x3 Maxwellian moment system.
std::array<double, 3> slope_coeffs(const MomentTable& T,
                                   const std::array<double, 3>& r);

// Time-dependent weights of the BGK evolution solution, their exact time
// integrals over [0,t], and their time derivatives. Series branches keep
// full relative accuracy for t << tau.
struct EvoCoeffs { double C1, C2, C3, C4, C5; };
struct EvoTimeInts { double I1, I2, I3, I4, I5; };
struct EvoRates { double R1, R2, R3, R4, R5; };

EvoCoeffs evo_coeffs(double t, double tau);
EvoTimeInts evo_time_integrals(double t, double tau);
EvoRates evo_rates(double t, double tau);

// Interface relaxation time: eps*dt plus a depth-jump penalty
// cnum*|hl^2-hr^2|/(hl^2+hr^2)*dt; the penalty is dropped when both sides
// are fully dry.
double collision_time(double hl, double hr, double dt, double eps = 0.05,
                      double cnum = 5.0);

// One side's trace at an edge quadrature point, in the edge frame (n,t).
// Slopes are of the conserved triple; the mass slot may carry a hydrostatic
// shift supplied by the caller. (phiN, phiT) is an explicit acceleration.
struct InterfaceState {
  double h = 0.0, Un = 0.0, Ut = 0.0;
  std::array<double, 3> sn{};  // d/dn (mass_eff, q_n, q_t)
  std::array<double, 3> st{};  // d/dt ...
  double phiN = 0.0, phiT = 0.0;
};

// Assembled evolution solution at one interface point. The static moment
// groups are kept so callers (and tests) can evaluate W, flux F, and the
// flux time integral at any t in [0, dt].
struct InterfaceSolution {
  double tau = 0.0;
  double hbar = 0.0, Ubar = 0.0, Vbar = 0.0;
  std::array<double, 3> E0{}, E1{};    // equilibrium value / flux moments
  std::array<double, 3> U0{}, U1{};    // equilibrium slope transport
  std::array<double, 3> P0{}, P1{};    // equilibrium acceleration
  std::array<double, 3> EA0{}, EA1{};  // equilibrium time-slope
  std::array<double, 3> G0{}, G1{};    // upwind initial state
  std::array<double, 3> T0{}, T1{};    // initial slope transport
  std::array<double, 3> R0{}, R1{};    // initial acceleration
  std::array<double, 3> Abar{};        // equilibrium time-slope coefficients

  std::array<double, 3> W(double t) const;
  std::array<double, 3> F(double t) const;
  std::array<double, 3> Iflux(double t) const;
  std::array<double, 3> Wdot(double t) const;
  std::array<double, 3> W0() const { return G0; }
  // Exact t->0+ limit: the equilibrium and upwind values coincide, leaving
  // only the initial slope and acceleration transport.
  std::array<double, 3> Wdot0() const {
    return {-(T0[0] + R0[0]), -(T0[1] + R0[1]), -(T0[2] + R0[2])};
  }
};

InterfaceSolution solve_interface(const InterfaceState& L,
                                  const InterfaceState& R, double tau,
                                  double G);

}  // namespace tlgks
