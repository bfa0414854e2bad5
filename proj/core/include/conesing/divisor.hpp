#pragma once

#include "conesing/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conesing {

/// A point of the projective line: a rational coordinate or infinity.
class PointP1 {
 public:
  static PointP1 at(const Rational& coordinate) { return PointP1(coordinate); }
  static PointP1 infinity() { return PointP1(); }

  /// "inf" or a rational literal.
  static PointP1 parse(std::string_view text);

  bool is_infinity() const { return !coordinate_.has_value(); }
  const std::optional<Rational>& coordinate() const { return coordinate_; }
  std::string str() const;

  friend bool operator==(const PointP1&, const PointP1&) = default;
  /// Finite points by coordinate, infinity last.
  friend std::strong_ordering operator<=>(const PointP1& lhs, const PointP1& rhs);

 private:
  PointP1() = default;
  explicit PointP1(const Rational& coordinate) : coordinate_(coordinate) {}

  std::optional<Rational> coordinate_;
};

/// Finitely supported Q-divisor on the projective line. Zero coefficients are never stored.
class QDivisorP1 {
 public:
  using Terms = std::map<PointP1, Rational>;

  QDivisorP1() = default;
  QDivisorP1(std::initializer_list<std::pair<const PointP1, Rational>> terms);

  /// A single point with the given coefficient.
  static QDivisorP1 point(const PointP1& p, const Rational& coefficient);

  /// Comma-separated point:coeff terms, e.g. "0:1/2,1:1/3,inf:-4/5". Repeated points add.
  static QDivisorP1 parse(std::string_view text);

  /// Inverse of parse; the empty divisor prints as "".
  std::string str() const;

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const PointP1& p) const;
  void add(const PointP1& p, const Rational& coefficient);

  QDivisorP1& operator+=(const QDivisorP1& rhs);
  friend QDivisorP1 operator+(QDivisorP1 lhs, const QDivisorP1& rhs) { return lhs += rhs; }
  friend QDivisorP1 operator*(const Rational& scalar, const QDivisorP1& d);

  friend bool operator==(const QDivisorP1&, const QDivisorP1&) = default;

 private:
  Terms terms_;
};

struct FractionalPoint {
  PointP1 point;
  std::int64_t p;  ///< 0 < p < q
  std::int64_t q;  ///< reduced denominator

  friend bool operator==(const FractionalPoint&, const FractionalPoint&) = default;
};

Rational degree(const QDivisorP1& d);
bool is_integral(const QDivisorP1& d);

/// Points with non-integral coefficient and the reduced fractional part p/q there.
std::vector<FractionalPoint> fractional_profile(const QDivisorP1& d);

/// Sum of (1 - 1/q) P over the fractional profile.
QDivisorP1 boundary_delta(const QDivisorP1& d);

/// lcm of the denominators; 1 for integral divisors.
std::int64_t cartier_index(const QDivisorP1& d);

/// Smallest w with w*D integral at p.
std::int64_t weil_index(const QDivisorP1& d, const PointP1& p);

struct SeifertBranch {
  std::int64_t alpha;
  std::int64_t beta;

  friend auto operator<=>(const SeifertBranch&, const SeifertBranch&) = default;
};

/// Star-shaped normal form (b; (alpha_i, beta_i)) with 0 < beta_i < alpha_i coprime.
///
/// Branches are kept sorted, so equality is equality of the branch multisets.
class SeifertData {
 public:
  SeifertData(std::int64_t b, std::vector<SeifertBranch> branches);

  std::int64_t b() const { return b_; }
  const std::vector<SeifertBranch>& branches() const { return branches_; }

  /// b - sum beta_i / alpha_i; equals the degree of the polarization.
  Rational euler_number() const;

  std::string str() const;

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
  friend auto operator<=>(const SeifertData&, const SeifertData&) = default;

 private:
  std::int64_t b_;
  std::vector<SeifertBranch> branches_;
};

/// b = sum of ceilings, one branch (q, q - p) per fractional point.
/// Throws InvalidInput when degree(d) <= 0.
SeifertData normalize_seifert(const QDivisorP1& d);

/// Representative of the linear-equivalence and relabeling class: fractional parts in
/// descending order at 0, 1, inf, with the integer remainder added at inf.
/// Throws InvalidInput for more than three fractional points.
QDivisorP1 canonical_form(const QDivisorP1& d);

}  // namespace conesing
