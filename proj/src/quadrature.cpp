#include "quadrature.hpp"

namespace tlgks {

const std::array<TriRulePoint, 6>& tri_rule_deg4() {
  // Dunavant degree-4 rule, two symmetric orbits.
  static const std::array<TriRulePoint, 6> rule = [] {
    std::array<TriRulePoint, 6> r{};
    const double a1 = 0.445948490915965, w1 = 0.223381589678011;
    const double a2 = 0.091576213509771, w2 = 0.109951743655322;
    r[0] = {1.0 - 2.0 * a1, a1, a1, w1};
    r[1] = {a1, 1.0 - 2.0 * a1, a1, w1};
    r[2] = {a1, a1, 1.0 - 2.0 * a1, w1};
    r[3] = {1.0 - 2.0 * a2, a2, a2, w2};
    r[4] = {a2, 1.0 - 2.0 * a2, a2, w2};
    r[5] = {a2, a2, 1.0 - 2.0 * a2, w2};
    return r;
  }();
  return rule;
}

const std::array<TriRulePoint, 7>& tri_rule_deg5() {
  // Radon degree-5 rule: centroid plus two symmetric orbits.
  static const std::array<TriRulePoint, 7> rule = [] {
    std::array<TriRulePoint, 7> r{};
    const double a1 = 0.470142064105115, w1 = 0.132394152788506;
    const double a2 = 0.101286507323456, w2 = 0.125939180544827;
    r[0] = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.225};
    r[1] = {1.0 - 2.0 * a1, a1, a1, w1};
    r[2] = {a1, 1.0 - 2.0 * a1, a1, w1};
    r[3] = {a1, a1, 1.0 - 2.0 * a1, w1};
    r[4] = {1.0 - 2.0 * a2, a2, a2, w2};
    r[5] = {a2, 1.0 - 2.0 * a2, a2, w2};
    r[6] = {a2, a2, 1.0 - 2.0 * a2, w2};
    return r;
  }();
  return rule;
}

EdgeGauss edge_gauss(const Vec2& a, const Vec2& b) {
  EdgeGauss g;
  const Vec2 mid{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  const Vec2 half{(b.x - a.x) * (0.5 / 1.7320508075688772),
                  (b.y - a.y) * (0.5 / 1.7320508075688772)};
  g.point[0] = {mid.x - half.x, mid.y - half.y};
  g.point[1] = {mid.x + half.x, mid.y + half.y};
  g.length = (b - a).norm();
  return g;
}

}  // namespace tlgks
