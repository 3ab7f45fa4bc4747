#pragma once

#include <array>

#include "geom.hpp"

namespace tlgks {

// Symmetric triangle rules in barycentric form. Weights sum to 1 and are
// applied against the physical cell area.
struct TriRulePoint {
  double b0, b1, b2;  // barycentric coordinates
  double w;           // weight, normalized so the rule integrates 1 to 1
};

// Degree-4 exact, 6 points. Used for basis-moment and smoothness integrals.
const std::array<TriRulePoint, 6>& tri_rule_deg4();

// Degree-5 exact, 7 points. Used (on 4 congruent sub-triangles) for cell
// averages of analytic fields and for L1 error integrals.
const std::array<TriRulePoint, 7>& tri_rule_deg5();

inline Vec2 bary_point(const Vec2& p0, const Vec2& p1, const Vec2& p2,
                       const TriRulePoint& q) {
  return {q.b0 * p0.x + q.b1 * p1.x + q.b2 * p2.x,
          q.b0 * p0.y + q.b1 * p1.y + q.b2 * p2.y};
}

// Two-point Gauss rule on the segment a->b: midpoint +- edge/(2*sqrt(3)),
// weights 1/2 each against the segment length. Exact through cubics.
struct EdgeGauss {
  std::array<Vec2, 2> point;
  double length;
};

EdgeGauss edge_gauss(const Vec2& a, const Vec2& b);

// Average of f over triangle (p0,p1,p2) by the degree-5 rule applied on the
// 4 congruent sub-triangles (midpoint refinement).
template <class F>
double tri_average_refined(const Vec2& p0, const Vec2& p1, const Vec2& p2,
                           F&& f) {
  const Vec2 m01{0.5 * (p0.x + p1.x), 0.5 * (p0.y + p1.y)};
  const Vec2 m12{0.5 * (p1.x + p2.x), 0.5 * (p1.y + p2.y)};
  const Vec2 m20{0.5 * (p2.x + p0.x), 0.5 * (p2.y + p0.y)};
  const Vec2* subs[4][3] = {{&p0, &m01, &m20},
                            {&m01, &p1, &m12},
                            {&m20, &m12, &p2},
                            {&m01, &m12, &m20}};
  double acc = 0.0;
  for (auto& sub : subs) {
    for (const auto& q : tri_rule_deg5()) {
      const Vec2 x = bary_point(*sub[0], *sub[1], *sub[2], q);
      acc += 0.25 * q.w * f(x);
    }
  }
  return acc;
}

}  // namespace tlgks
