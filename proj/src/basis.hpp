#pragma once

#include <array>

#include "geom.hpp"
#include "mesh.hpp"

namespace tlgks {

// Cubic reconstruction basis on cell j: nine zero-averaged monomials
//   phi_k(x) = m_k(d) - <m_k>_j,  d = (x - x_j)/h0,  h0 = sqrt(|O_j|),
// with m_k factorial-scaled: xi, eta, xi^2/2, xi*eta, eta^2/2, xi^3/6,
// xi^2*eta/2, xi*eta^2/2, eta^3/6. Zero cell average keeps the mean exact.
constexpr int kNumBasis = 9;

struct CellBasis {
  Vec2 xc;
  double h0 = 1.0;
  std::array<double, kNumBasis> avgSelf{};  // <m_k> over the home cell
};

double mono(int k, double xi, double eta);
// Frame derivative d^(r+s) m_k / dxi^r deta^s.
double mono_deriv(int k, int r, int s, double xi, double eta);

CellBasis make_cell_basis(const Mesh& m, int j);

// Averages of the raw monomials of basis bj over cell l (exact, degree-4 rule).
std::array<double, kNumBasis> mono_avgs_over(const Mesh& m, int l, const CellBasis& bj);

// Averages of the frame gradients of m_k over cell l.
void mono_grad_avgs_over(const Mesh& m, int l, const CellBasis& bj,
                         std::array<double, kNumBasis>& gx,
                         std::array<double, kNumBasis>& gy);

// Smoothness bilinear form: beta(a) = a^T S a with
// S_ij = sum_{1<=|alpha|<=3} |O|^{|alpha|-1} int (D^a phi_i)(D^a phi_j),
// reduced to frame units (dimensionless, O(1) entries).
std::array<double, kNumBasis * kNumBasis> smoothness_matrix(const Mesh& m, int j,
                                                            const CellBasis& bj);

// Polynomial evaluation helpers. coeff has kNumBasis entries; value adds the
// cell average separately at the call site.
double basis_eval(const CellBasis& b, const double* coeff, const Vec2& x);
Vec2 basis_grad(const CellBasis& b, const double* coeff, const Vec2& x);

}  // namespace tlgks
