#include "basis.hpp"

#include <cmath>

#include "quadrature.hpp"

namespace tlgks {

namespace {

struct Mono {
  int p, q;
  double coef;  // 1/(p! q!)
};

constexpr Mono kMono[kNumBasis] = {
    {1, 0, 1.0},       {0, 1, 1.0},       {2, 0, 0.5},
    {1, 1, 1.0},       {0, 2, 0.5},       {3, 0, 1.0 / 6.0},
    {2, 1, 0.5},       {1, 2, 0.5},       {0, 3, 1.0 / 6.0},
};

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

double falling(int p, int r) {
  double f = 1.0;
  for (int i = 0; i < r; ++i) f *= (p - i);
  return f;
}

}  // namespace

double mono(int k, double xi, double eta) {
  const Mono& mk = kMono[k];
  return mk.coef * ipow(xi, mk.p) * ipow(eta, mk.q);
}

double mono_deriv(int k, int r, int s, double xi, double eta) {
  const Mono& mk = kMono[k];
  if (mk.p < r || mk.q < s) return 0.0;
  return mk.coef * falling(mk.p, r) * falling(mk.q, s) *
         ipow(xi, mk.p - r) * ipow(eta, mk.q - s);
}

CellBasis make_cell_basis(const Mesh& m, int j) {
  CellBasis b;
  b.xc = m.centroid[j];
  b.h0 = std::sqrt(m.area[j]);
  const auto& c = m.cell[j];
  for (int k = 0; k < kNumBasis; ++k) {
    double acc = 0.0;
    for (const auto& q : tri_rule_deg4()) {
      const Vec2 x = bary_point(m.node[c[0]], m.node[c[1]], m.node[c[2]], q);
      acc += q.w * mono(k, (x.x - b.xc.x) / b.h0, (x.y - b.xc.y) / b.h0);
    }
    b.avgSelf[k] = acc;
  }
  return b;
}

std::array<double, kNumBasis> mono_avgs_over(const Mesh& m, int l, const CellBasis& bj) {
  std::array<double, kNumBasis> out{};
  const auto& c = m.cell[l];
  for (const auto& q : tri_rule_deg4()) {
    const Vec2 x = bary_point(m.node[c[0]], m.node[c[1]], m.node[c[2]], q);
    const double xi = (x.x - bj.xc.x) / bj.h0;
    const double eta = (x.y - bj.xc.y) / bj.h0;
    for (int k = 0; k < kNumBasis; ++k) out[k] += q.w * mono(k, xi, eta);
  }
  return out;
}

void mono_grad_avgs_over(const Mesh& m, int l, const CellBasis& bj,
                         std::array<double, kNumBasis>& gx,
                         std::array<double, kNumBasis>& gy) {
  gx.fill(0.0);
  gy.fill(0.0);
  const auto& c = m.cell[l];
  for (const auto& q : tri_rule_deg4()) {
    const Vec2 x = bary_point(m.node[c[0]], m.node[c[1]], m.node[c[2]], q);
    const double xi = (x.x - bj.xc.x) / bj.h0;
    const double eta = (x.y - bj.xc.y) / bj.h0;
    for (int k = 0; k < kNumBasis; ++k) {
      gx[k] += q.w * mono_deriv(k, 1, 0, xi, eta);
      gy[k] += q.w * mono_deriv(k, 0, 1, xi, eta);
    }
  }
}

std::array<double, kNumBasis * kNumBasis> smoothness_matrix(const Mesh& m, int j,
                                                            const CellBasis& bj) {
  std::array<double, kNumBasis * kNumBasis> S{};
  static constexpr int kAlpha[9][2] = {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                                       {3, 0}, {2, 1}, {1, 2}, {0, 3}};
  const auto& c = m.cell[j];
  double d[kNumBasis];
  for (const auto& q : tri_rule_deg4()) {
    const Vec2 x = bary_point(m.node[c[0]], m.node[c[1]], m.node[c[2]], q);
    const double xi = (x.x - bj.xc.x) / bj.h0;
    const double eta = (x.y - bj.xc.y) / bj.h0;
    for (const auto& a : kAlpha) {
      for (int k = 0; k < kNumBasis; ++k) d[k] = mono_deriv(k, a[0], a[1], xi, eta);
      for (int i = 0; i < kNumBasis; ++i) {
        for (int k = i; k < kNumBasis; ++k) S[i * kNumBasis + k] += q.w * d[i] * d[k];
      }
    }
  }
  for (int i = 0; i < kNumBasis; ++i) {
    for (int k = 0; k < i; ++k) S[i * kNumBasis + k] = S[k * kNumBasis + i];
  }
  return S;
}

double basis_eval(const CellBasis& b, const double* coeff, const Vec2& x) {
  const double xi = (x.x - b.xc.x) / b.h0;
  const double eta = (x.y - b.xc.y) / b.h0;
  double v = 0.0;
  for (int k = 0; k < kNumBasis; ++k) v += coeff[k] * (mono(k, xi, eta) - b.avgSelf[k]);
  return v;
}

Vec2 basis_grad(const CellBasis& b, const double* coeff, const Vec2& x) {
  const double xi = (x.x - b.xc.x) / b.h0;
  const double eta = (x.y - b.xc.y) / b.h0;
  Vec2 g;
  for (int k = 0; k < kNumBasis; ++k) {
    g.x += coeff[k] * mono_deriv(k, 1, 0, xi, eta);
    g.y += coeff[k] * mono_deriv(k, 0, 1, xi, eta);
  }
  return g * (1.0 / b.h0);
}

}  // namespace tlgks
