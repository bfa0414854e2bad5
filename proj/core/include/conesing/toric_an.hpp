#pragma once

#include "conesing/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace conesing {

struct LatticePoint {
  std::int64_t x;
  std::int64_t y;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::int64_t det(const LatticePoint& u, const LatticePoint& v);

/// Two-dimensional strictly convex lattice cone spanned by primitive generators.
class LatticeCone2D {
 public:
  LatticeCone2D(LatticePoint u1, LatticePoint u2);

  const LatticePoint& u1() const { return u1_; }
  const LatticePoint& u2() const { return u2_; }
  /// |det(u1, u2)|
  std::int64_t index() const;
  bool contains_in_interior(const LatticePoint& v) const;

 private:
  LatticePoint u1_;
  LatticePoint u2_;
};

struct PltBlowupRecord {
  LatticePoint ray;
  std::int64_t a;  ///< |det(u1, ray)|
  std::int64_t b;  ///< |det(ray, u2)|
  std::pair<Rational, Rational> diff;  ///< (1 - 1/a, 1 - 1/b)
  Rational delta_threshold;            ///< min(1/a, 1/b)
};

/// The A_n singularity as the cone <(0,1), (n+1, -n)>.
LatticeCone2D an_cone(std::int64_t n);

/// The toric blow-up of `cone` along a primitive interior ray.
PltBlowupRecord plt_blowup_record(const LatticeCone2D& cone, const LatticePoint& ray);

/// Every primitive interior ray with max(|x|, |y|) <= height_bound, sorted by ray.
std::vector<PltBlowupRecord> enumerate_plt_blowups(std::int64_t n, std::int64_t height_bound);

struct AnBoundsReport {
  std::int64_t n;
  std::int64_t height_bound;
  std::size_t rays = 0;
  /// a + b >= n + 1 on every ray.
  bool sum_bound_holds = true;
  /// a + b = n + 1 exactly on the rays (k, 1 - k), 1 <= k <= n, and all of them occur.
  bool equality_on_minimal_resolution = true;
  Rational max_threshold;
  LatticePoint argmax_ray{0, 0};
  /// max_threshold < 2/n (n >= 2) or <= 1 (n = 1).
  bool below_two_over_n = true;
  /// The maximizing ray lies strictly inside the height bound.
  bool max_strictly_inside = true;
  std::vector<std::string> violations;

  bool passed() const {
    return sum_bound_holds && equality_on_minimal_resolution && below_two_over_n;
  }
};

/// Requires height_bound >= n.
AnBoundsReport verify_example_bounds(std::int64_t n, std::int64_t height_bound);

}  // namespace conesing
