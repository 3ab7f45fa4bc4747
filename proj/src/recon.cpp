#include "recon.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace tlgks {

namespace {
constexpr double kWenoEps = 1e-12;
constexpr double kGammaSide = 0.05;
}  // namespace

Reconstruction::Reconstruction(const Mesh& m) : mesh_(m) {
  const int nc = m.num_cells();
  basis_.resize(nc);
  op_.resize(nc);
  order_.assign(nc, 1);

  for (int j = 0; j < nc; ++j) {
    basis_[j] = make_cell_basis(m, j);
    CellOp& op = op_[j];

    // Average-difference rows over the compact stencil, then gradient rows
    // for the cell and its face neighbors. Gradient rows are scaled by h0 so
    // every row is O(1) in frame units.
    for (size_t s = 1; s < m.stencil[j].size(); ++s) {
      op.rows.push_back({Row::kAvgDiff, m.stencil[j][s]});
    }
    op.rows.push_back({Row::kGradX, j});
    op.rows.push_back({Row::kGradY, j});
    for (int s = 0; s < 3; ++s) {
      const int nb = m.neighbor[j][s];
      if (nb < 0) continue;
      op.rows.push_back({Row::kGradX, nb});
      op.rows.push_back({Row::kGradY, nb});
    }

    const int nr = static_cast<int>(op.rows.size());
    Eigen::MatrixXd A(nr, kNumBasis);
    for (int r = 0; r < nr; ++r) {
      const Row& row = op.rows[r];
      if (row.kind == Row::kAvgDiff) {
        const auto avgs = mono_avgs_over(m, row.cell, basis_[j]);
        for (int k = 0; k < kNumBasis; ++k) A(r, k) = avgs[k] - basis_[j].avgSelf[k];
      } else {
        std::array<double, kNumBasis> gx, gy;
        mono_grad_avgs_over(m, row.cell, basis_[j], gx, gy);
        const auto& g = (row.kind == Row::kGradX) ? gx : gy;
        for (int k = 0; k < kNumBasis; ++k) A(r, k) = g[k];
      }
    }

    // Pick the largest polynomial space the rows support.
    int ncoef = 0;
    if (nr >= 13) {
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
      qr.setThreshold(1e-9);
      if (qr.rank() == kNumBasis) ncoef = 9;
    }
    if (ncoef == 0 && nr >= 7) {
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A.leftCols(5));
      qr.setThreshold(1e-9);
      if (qr.rank() == 5) ncoef = 5;
    }
    if (ncoef == 0) ncoef = 2;

    Eigen::MatrixXd P = A.leftCols(ncoef)
                            .completeOrthogonalDecomposition()
                            .pseudoInverse();
    op.ncoef = ncoef;
    op.P.assign(static_cast<size_t>(ncoef) * nr, 0.0);
    for (int k = 0; k < ncoef; ++k) {
      for (int r = 0; r < nr; ++r) op.P[static_cast<size_t>(k) * nr + r] = P(k, r);
    }
    order_[j] = (ncoef == 9) ? 3 : (ncoef == 5) ? 2 : 1;

    op.S = smoothness_matrix(m, j, basis_[j]);

    // One linear candidate per face neighbor, built from the neighbor's data
    // only (average difference plus the neighbor's gradient). The cell's own
    // gradient forms a separate central candidate at blend time, so a jump
    // seen by this cell's gradient cannot contaminate the side stencils.
    for (int s = 0; s < 3; ++s) {
      const int nb = m.neighbor[j][s];
      if (nb < 0) continue;
      Eigen::MatrixXd Ac(3, 2);
      const auto avgs = mono_avgs_over(m, nb, basis_[j]);
      Ac(0, 0) = avgs[0] - basis_[j].avgSelf[0];
      Ac(0, 1) = avgs[1] - basis_[j].avgSelf[1];
      // d(xi)/dxi = 1 and cross terms vanish for the linear monomials.
      Ac(1, 0) = 1.0; Ac(1, 1) = 0.0;
      Ac(2, 0) = 0.0; Ac(2, 1) = 1.0;
      Eigen::MatrixXd Pc = Ac.completeOrthogonalDecomposition().pseudoInverse();
      CellOp::Candidate cand;
      cand.nbr = nb;
      for (int k = 0; k < 2; ++k) {
        for (int r = 0; r < 3; ++r) cand.P[static_cast<size_t>(k) * 3 + r] = Pc(k, r);
      }
      op.cand.push_back(cand);
    }
  }
}

void Reconstruction::fill_rhs(const CellOp& op, int j, const std::vector<double>& avg,
                              const std::vector<Vec2>& grad, double* rhs) const {
  const double h0 = basis_[j].h0;
  for (size_t r = 0; r < op.rows.size(); ++r) {
    const Row& row = op.rows[r];
    switch (row.kind) {
      case Row::kAvgDiff: rhs[r] = avg[row.cell] - avg[j]; break;
      case Row::kGradX: rhs[r] = h0 * grad[row.cell].x; break;
      case Row::kGradY: rhs[r] = h0 * grad[row.cell].y; break;
    }
  }
}

void Reconstruction::reconstruct_cell(int j, const std::vector<double>& avg,
                                      const std::vector<Vec2>& grad,
                                      std::array<double, kNumBasis>& coeff,
                                      bool limited) const {
  const CellOp& op = op_[j];
  const int nr = static_cast<int>(op.rows.size());
  double rhs[40];
  fill_rhs(op, j, avg, grad, rhs);

  std::array<double, kNumBasis> a{};
  for (int k = 0; k < op.ncoef; ++k) {
    double acc = 0.0;
    const double* Pk = &op.P[static_cast<size_t>(k) * nr];
    for (int r = 0; r < nr; ++r) acc += Pk[r] * rhs[r];
    a[k] = acc;
  }

  if (!limited || op.cand.empty() || op.ncoef < 5) {
    coeff = a;
    return;
  }

  // Limiting: smoothness-weighted blend of the full polynomial with linear
  // candidates: one per face neighbor plus one from the cell's own gradient.
  // The full polynomial is re-expanded so smooth weights return it exactly.
  const int p = static_cast<int>(op.cand.size()) + 1;
  const double gamma0 = 1.0 - kGammaSide * p;

  double beta0 = 0.0;
  for (int i = 0; i < kNumBasis; ++i) {
    if (a[i] == 0.0) continue;
    for (int k = 0; k < kNumBasis; ++k) beta0 += a[i] * op.S[i * kNumBasis + k] * a[k];
  }

  std::array<std::array<double, 2>, 4> b{};
  std::array<double, 4> beta{};
  const double h0 = basis_[j].h0;
  for (int c = 0; c + 1 < p; ++c) {
    const int nb = op.cand[c].nbr;
    const double r3[3] = {avg[nb] - avg[j], h0 * grad[nb].x, h0 * grad[nb].y};
    for (int k = 0; k < 2; ++k) {
      double acc = 0.0;
      for (int r = 0; r < 3; ++r) acc += op.cand[c].P[static_cast<size_t>(k) * 3 + r] * r3[r];
      b[c][k] = acc;
    }
    beta[c] = b[c][0] * b[c][0] + b[c][1] * b[c][1];
  }
  b[p - 1] = {h0 * grad[j].x, h0 * grad[j].y};
  beta[p - 1] = b[p - 1][0] * b[p - 1][0] + b[p - 1][1] * b[p - 1][1];

  double T = 0.0;
  for (int c = 0; c < p; ++c) T += std::abs(beta0 - beta[c]);
  T /= p;

  // Mesh-scaled regularization. At smooth extrema every slope-based beta
  // decays like h0^4 while beta0 keeps curvature energy, and a near-flat
  // candidate would absorb unbounded weight through 1/beta at any
  // resolution. An epsilon of h0^2 dominates those vanishing betas, so the
  // weights revert to the optimal split on smooth data, yet for order-one
  // depth and momentum fields it stays well below the squared data jump a
  // discontinuity feeds into the betas at the resolutions the scheme is
  // meant to run at.
  const double eps = h0 * h0 + kWenoEps;
  double wt0 = gamma0 * (1.0 + T / (beta0 + eps));
  double wsum = wt0;
  std::array<double, 4> wt{};
  for (int c = 0; c < p; ++c) {
    wt[c] = kGammaSide * (1.0 + T / (beta[c] + eps));
    wsum += wt[c];
  }
  wt0 /= wsum;
  for (int c = 0; c < p; ++c) wt[c] /= wsum;

  std::array<double, kNumBasis> tilde = a;
  for (int c = 0; c < p; ++c) {
    tilde[0] -= kGammaSide * b[c][0];
    tilde[1] -= kGammaSide * b[c][1];
  }
  for (int k = 0; k < kNumBasis; ++k) tilde[k] /= gamma0;

  coeff.fill(0.0);
  for (int k = 0; k < kNumBasis; ++k) coeff[k] = wt0 * tilde[k];
  for (int c = 0; c < p; ++c) {
    coeff[0] += wt[c] * b[c][0];
    coeff[1] += wt[c] * b[c][1];
  }
}

void Reconstruction::reconstruct(const std::vector<double>& avg,
                                 const std::vector<Vec2>& grad,
                                 std::vector<std::array<double, kNumBasis>>& coeff,
                                 bool limited) const {
  const int nc = mesh_.num_cells();
  coeff.resize(nc);
  if (avg.size() != static_cast<size_t>(nc) || grad.size() != static_cast<size_t>(nc)) {
    throw std::runtime_error("recon: field size mismatch");
  }
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    reconstruct_cell(j, avg, grad, coeff[j], limited);
  }
}

}  // namespace tlgks
