#pragma once

#include <array>
#include <vector>

#include "basis.hpp"
#include "mesh.hpp"

namespace tlgks {

// Compact cubic reconstruction from cell averages and cell-average gradients.
// Per cell the operator is a cached pseudo-inverse of a least-squares system:
// average-difference rows over the compact stencil plus gradient rows for the
// cell and its face neighbors. Cells whose stencil cannot support a cubic
// fall back to quadratic, then linear. Limiting blends the cubic with linear
// candidates through smoothness indicators; the central candidate is
// re-expanded so the blend reproduces the cubic exactly in smooth fields.
class Reconstruction {
 public:
  explicit Reconstruction(const Mesh& m);

  // avg/grad are per-cell; coeff receives kNumBasis coefficients per cell.
  void reconstruct(const std::vector<double>& avg, const std::vector<Vec2>& grad,
                   std::vector<std::array<double, kNumBasis>>& coeff,
                   bool limited = true) const;

  // Single-cell variant used by the parallel driver.
  void reconstruct_cell(int j, const std::vector<double>& avg,
                        const std::vector<Vec2>& grad,
                        std::array<double, kNumBasis>& coeff,
                        bool limited = true) const;

  const CellBasis& basis(int j) const { return basis_[j]; }
  int order(int j) const { return order_[j]; }

  // Value / physical gradient of the reconstructed field at a point of cell j.
  double value(int j, double avgJ, const std::array<double, kNumBasis>& coeff,
               const Vec2& x) const {
    return avgJ + basis_eval(basis_[j], coeff.data(), x);
  }
  Vec2 gradient(int j, const std::array<double, kNumBasis>& coeff,
                const Vec2& x) const {
    return basis_grad(basis_[j], coeff.data(), x);
  }

 private:
  struct Row {
    enum Kind : int { kAvgDiff, kGradX, kGradY } kind;
    int cell;
  };
  struct CellOp {
    std::vector<Row> rows;
    std::vector<double> P;  // ncoef x nrows, row-major
    int ncoef = 0;
    // Linear candidates: one per available face neighbor, 2 x 5 operators.
    struct Candidate {
      int nbr;
      std::array<double, 6> P;  // 2 x 3
    };
    std::vector<Candidate> cand;
    std::array<double, kNumBasis * kNumBasis> S{};  // smoothness bilinear form
  };

  void fill_rhs(const CellOp& op, int j, const std::vector<double>& avg,
                const std::vector<Vec2>& grad, double* rhs) const;

  const Mesh& mesh_;
  std::vector<CellBasis> basis_;
  std::vector<CellOp> op_;
  std::vector<int> order_;
};

}  // namespace tlgks
