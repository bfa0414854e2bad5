#include "conesing/toric_an.hpp"

#include "conesing/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace conesing {

namespace {

bool primitive(const LatticePoint& v) { return std::gcd(v.x, v.y) == 1; }

std::string ray_str(const LatticePoint& v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

std::int64_t det(const LatticePoint& u, const LatticePoint& v) { return u.x * v.y - u.y * v.x; }

LatticeCone2D::LatticeCone2D(LatticePoint u1, LatticePoint u2) : u1_(u1), u2_(u2) {
  if (!primitive(u1_) || !primitive(u2_)) throw InvalidInput("cone generators must be primitive");
  if (det(u1_, u2_) == 0) throw InvalidInput("cone generators must be linearly independent");
}

std::int64_t LatticeCone2D::index() const { return std::abs(det(u1_, u2_)); }

bool LatticeCone2D::contains_in_interior(const LatticePoint& v) const {
  const int orientation = sign(det(u1_, u2_));
  return sign(det(u1_, v)) == orientation && sign(det(v, u2_)) == orientation;
}

LatticeCone2D an_cone(std::int64_t n) {
  if (n < 1) throw InvalidInput("A_n needs n >= 1");
  return LatticeCone2D({0, 1}, {n + 1, -n});
}

PltBlowupRecord plt_blowup_record(const LatticeCone2D& cone, const LatticePoint& ray) {
  if (!primitive(ray) || !cone.contains_in_interior(ray)) {
    throw InvalidInput("ray " + ray_str(ray) + " is not a primitive interior ray");
  }
  const std::int64_t a = std::abs(det(cone.u1(), ray));
  const std::int64_t b = std::abs(det(ray, cone.u2()));
  return {ray,
          a,
          b,
          {Rational(a - 1, a), Rational(b - 1, b)},
          min(Rational(1, a), Rational(1, b))};
}

std::vector<PltBlowupRecord> enumerate_plt_blowups(std::int64_t n, std::int64_t height_bound) {
  if (height_bound < 1) throw InvalidInput("height bound must be >= 1");
  const LatticeCone2D cone = an_cone(n);
  std::vector<PltBlowupRecord> out;
  for (std::int64_t x = -height_bound; x <= height_bound; ++x) {
    for (std::int64_t y = -height_bound; y <= height_bound; ++y) {
      const LatticePoint v{x, y};
      if (primitive(v) && cone.contains_in_interior(v)) out.push_back(plt_blowup_record(cone, v));
    }
  }
  return out;
}

AnBoundsReport verify_example_bounds(std::int64_t n, std::int64_t height_bound) {
  if (height_bound < n) throw InvalidInput("height bound must be >= n");
  AnBoundsReport report;
  report.n = n;
  report.height_bound = height_bound;

  const auto records = enumerate_plt_blowups(n, height_bound);
  report.rays = records.size();
  std::int64_t minimal_rays = 0;
  bool have_max = false;
  for (const auto& r : records) {
    const std::int64_t sum = r.a + r.b;
    const bool on_minimal_resolution = r.ray.x + r.ray.y == 1 && r.ray.x >= 1 && r.ray.x <= n;
    if (sum < n + 1) {
      report.sum_bound_holds = false;
      report.violations.push_back("a+b=" + std::to_string(sum) + " < n+1 at " + ray_str(r.ray));
    }
    if ((sum == n + 1) != on_minimal_resolution) {
      report.equality_on_minimal_resolution = false;
      report.violations.push_back("equality case mismatch at " + ray_str(r.ray));
    }
    if (on_minimal_resolution) ++minimal_rays;
    if (!have_max || r.delta_threshold > report.max_threshold) {
      have_max = true;
      report.max_threshold = r.delta_threshold;
      report.argmax_ray = r.ray;
    }
  }
  if (minimal_rays != n) {
    report.equality_on_minimal_resolution = false;
    report.violations.push_back("found " + std::to_string(minimal_rays) + " of " +
                                std::to_string(n) + " minimal resolution rays");
  }
  report.below_two_over_n =
      n >= 2 ? report.max_threshold < Rational(2, n) : report.max_threshold <= Rational(1);
  if (!report.below_two_over_n) {
    report.violations.push_back("max threshold " + report.max_threshold.str() +
                                " is not below 2/n");
  }
  report.max_strictly_inside =
      std::max(std::abs(report.argmax_ray.x), std::abs(report.argmax_ray.y)) < height_bound;
  return report;
}

}  // namespace conesing
