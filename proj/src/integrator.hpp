#pragma once

namespace tlgks {

// Two-stage fourth-order update built from an operator L and its time
// derivative dL. The half state applies the full operator over dt/2 with a
// second-order derivative correction; the final state reuses the first
// stage's operator and combines the two derivatives with weights 1/6, 1/3.
// For L = z*y this reproduces the degree-4 Taylor polynomial of exp(z*dt).

inline double s2o4_half(double w, double dt, double L, double dL) {
  return w + 0.5 * dt * L + 0.125 * dt * dt * dL;
}

inline double s2o4_final(double w, double dt, double LA, double dLA, double dLB) {
  return w + dt * LA + dt * dt / 6.0 * dLA + dt * dt / 3.0 * dLB;
}

}  // namespace tlgks
