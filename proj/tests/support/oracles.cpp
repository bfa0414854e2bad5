#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void check_range(i128 v) {
  constexpr i128 kLimit = static_cast<i128>(1) << 100;
  if (v > kLimit || v < -kLimit) throw std::overflow_error("oracle fraction overflow");
}

}  // namespace

Frac::Frac(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("oracle: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  n = g == 0 ? 0 : num / g;
  d = g == 0 ? 1 : den / g;
  check_range(n);
  check_range(d);
}

Frac Frac::operator+(const Frac& o) const { return {n * o.d + o.n * d, d * o.d}; }
Frac Frac::operator-(const Frac& o) const { return {n * o.d - o.n * d, d * o.d}; }
Frac Frac::operator*(const Frac& o) const { return {n * o.n, d * o.d}; }
Frac Frac::operator/(const Frac& o) const { return {n * o.d, d * o.n}; }

std::string Frac::str() const {
  std::string s = std::to_string(static_cast<long long>(n));
  if (d != 1) s += "/" + std::to_string(static_cast<long long>(d));
  return s;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

Frac cf_value(const std::vector<std::int64_t>& c) {
  Frac value(c.back());
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) value = Frac(*it) - Frac(1) / value;
  return value;
}

std::vector<std::int64_t> cf_expand(std::int64_t alpha, std::int64_t beta) {
  std::vector<std::int64_t> out;
  i128 a = alpha;
  i128 b = beta;
  while (b != 0) {
    const i128 c = ceil_div(a, b);
    out.push_back(static_cast<std::int64_t>(c));
    const i128 r = c * b - a;
    a = b;
    b = r;
  }
  return out;
}

std::vector<Frac> gauss_solve(std::vector<std::vector<Frac>> m, std::vector<Frac> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].n == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].n == 0) continue;
      const Frac f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
      rhs[r] = rhs[r] - f * rhs[col];
    }
  }
  std::vector<Frac> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

bool negative_definite(const std::vector<std::vector<Frac>>& m) {
  // -M positive definite iff every leading minor of -M is positive; minors via determinants.
  const std::size_t n = m.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Frac>> a(k, std::vector<Frac>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = -m[i][j];
    }
    Frac det(1);
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = col;
      while (pivot < k && a[pivot][col].n == 0) ++pivot;
      if (pivot == k) return false;
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        det = -det;
      }
      det = det * a[col][col];
      for (std::size_t r = col + 1; r < k; ++r) {
        const Frac f = a[r][col] / a[col][col];
        for (std::size_t c = col; c < k; ++c) a[r][c] = a[r][c] - f * a[col][c];
      }
    }
    if (det.n <= 0) return false;
  }
  return true;
}

std::vector<std::vector<Frac>> star_matrix(
    std::int64_t b, const std::vector<std::pair<std::int64_t, std::int64_t>>& branches) {
  std::vector<std::int64_t> diag{-b};
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [alpha, beta] : branches) {
    std::size_t prev = 0;
    for (std::int64_t c : cf_expand(alpha, beta)) {
      diag.push_back(-c);
      edges.emplace_back(prev, diag.size() - 1);
      prev = diag.size() - 1;
    }
  }
  std::vector<std::vector<Frac>> m(diag.size(), std::vector<Frac>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m[i][i] = Frac(diag[i]);
  for (const auto& [i, j] : edges) m[i][j] = m[j][i] = Frac(1);
  return m;
}

std::vector<Frac> log_discrepancies(const std::vector<std::vector<Frac>>& m) {
  std::vector<Frac> rhs(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rhs[i] = Frac(-2) - m[i][i];
  std::vector<Frac> x = gauss_solve(m, rhs);
  for (auto& v : x) v = v + Frac(1);
  return x;
}

ConeFacts cone_facts(const std::vector<Frac>& coefficients) {
  ConeFacts f;
  for (const auto& c : coefficients) {
    f.degree = f.degree + c;
    const i128 up = ceil_div(c.n, c.d);
    f.b += static_cast<std::int64_t>(up);
    const Frac frac = c - Frac(floor_div(c.n, c.d));
    if (frac.n != 0) {
      f.branches.emplace_back(frac.den(), frac.den() - frac.num());
      f.max_isotropy = f.max_isotropy / static_cast<std::int64_t>(gcd128(f.max_isotropy, frac.den())) * frac.den();
    }
  }
  std::sort(f.branches.begin(), f.branches.end());
  const auto m = star_matrix(f.b, f.branches);
  f.solvable = f.degree.n > 0 && negative_definite(m);
  if (f.solvable) {
    f.all = log_discrepancies(m);
    f.central = f.all[0];
    f.mld = *std::min_element(f.all.begin(), f.all.end());
  }
  return f;
}

std::string cone_key(const std::vector<Frac>& coefficients) {
  std::vector<Frac> fracs;
  Frac deg;
  for (const auto& c : coefficients) {
    deg = deg + c;
    const Frac frac = c - Frac(floor_div(c.n, c.d));
    if (frac.n != 0) fracs.push_back(frac);
  }
  std::sort(fracs.begin(), fracs.end(), [](const Frac& a, const Frac& b) { return b < a; });
  std::string key = "deg=" + deg.str() + ";";
  for (const auto& f : fracs) key += f.str() + ",";
  return key;
}

std::set<std::string> brute_force_catalog(Frac epsilon0, std::int64_t n) {
  std::vector<Frac> fractions{Frac(0)};
  for (std::int64_t q = 2; q <= n; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (gcd128(p, q) == 1) fractions.emplace_back(p, q);
    }
  }
  std::set<std::string> keys;
  const Frac top = Frac(2) / epsilon0 + Frac(3);
  for (const Frac& a : fractions) {
    for (const Frac& b : fractions) {
      for (const Frac& c : fractions) {
        const Frac fractional = a + b + c;
        for (i128 k = -floor_div(fractional.n, fractional.d) - 3; Frac(k) + fractional <= top; ++k) {
          const std::vector<Frac> coeffs{a, b, c + Frac(k)};
          const Frac deg = coeffs[0] + coeffs[1] + coeffs[2];
          if (deg.n <= 0) continue;
          const ConeFacts facts = cone_facts(coeffs);
          if (!facts.solvable || facts.max_isotropy > n) continue;
          if (facts.mld < epsilon0) continue;
          keys.insert(cone_key(coeffs));
        }
      }
    }
  }
  return keys;
}

std::int64_t kouchnirenko(const std::vector<std::pair<int, int>>& support) {
  // Lower-left convex hull from the point on the y axis to the point on the x axis.
  std::vector<std::pair<int, int>> pts(support.begin(), support.end());
  std::sort(pts.begin(), pts.end());
  int a = -1;
  int b = -1;
  for (const auto& [x, y] : pts) {
    if (y == 0 && (a < 0 || x < a)) a = x;
    if (x == 0 && (b < 0 || y < b)) b = y;
  }
  if (a < 0 || b < 0) throw std::domain_error("kouchnirenko needs a convenient polynomial");
  std::vector<std::pair<long, long>> hull;
  for (const auto& [x, y] : pts) {
    if (x > a) continue;
    auto cross = [](std::pair<long, long> o, std::pair<long, long> p, std::pair<long, long> q) {
      return (p.first - o.first) * (q.second - o.second) - (p.second - o.second) * (q.first - o.first);
    };
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), {x, y}) <= 0) {
      hull.pop_back();
    }
    hull.emplace_back(x, y);
  }
  // Only the part of the hull between (0, b) and (a, 0) bounds the region.
  std::vector<std::pair<long, long>> lower;
  bool started = false;
  for (const auto& p : hull) {
    if (p == std::pair<long, long>{0, b}) started = true;
    if (started) lower.push_back(p);
    if (p == std::pair<long, long>{a, 0}) break;
  }
  long twice_area = 0;  // shoelace over (0,0), (0,b), ..., (a,0)
  std::vector<std::pair<long, long>> poly{{0, 0}};
  poly.insert(poly.end(), lower.begin(), lower.end());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    twice_area += p.first * q.second - q.first * p.second;
  }
  twice_area = twice_area < 0 ? -twice_area : twice_area;
  return twice_area - a - b + 1;
}

std::int64_t brieskorn_milnor(const std::vector<int>& exponents) {
  std::int64_t mu = 1;
  for (int e : exponents) mu *= e - 1;
  return mu;
}

}  // namespace oracle
