#include "conesing/divisor.hpp"

#include "conesing/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace conesing {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

PointP1 PointP1::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "infinity") return infinity();
  return at(Rational::parse(s));
}

std::string PointP1::str() const { return is_infinity() ? "inf" : coordinate_->str(); }

std::strong_ordering operator<=>(const PointP1& lhs, const PointP1& rhs) {
  if (lhs.is_infinity() || rhs.is_infinity()) {
    return lhs.is_infinity() <=> rhs.is_infinity();
  }
  return *lhs.coordinate_ <=> *rhs.coordinate_;
}

QDivisorP1::QDivisorP1(std::initializer_list<std::pair<const PointP1, Rational>> terms) {
  for (const auto& [p, c] : terms) add(p, c);
}

QDivisorP1 QDivisorP1::point(const PointP1& p, const Rational& coefficient) {
  QDivisorP1 d;
  d.add(p, coefficient);
  return d;
}

QDivisorP1 QDivisorP1::parse(std::string_view text) {
  QDivisorP1 d;
  std::string_view rest = trim(text);
  if (rest.empty()) return d;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view term = trim(rest.substr(0, comma));
    const auto colon = term.find(':');
    if (colon == std::string_view::npos) {
      throw InvalidInput("divisor term '" + std::string(term) + "' is not point:coeff");
    }
    d.add(PointP1::parse(term.substr(0, colon)), Rational::parse(trim(term.substr(colon + 1))));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return d;
}

std::string QDivisorP1::str() const {
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += ',';
    out += p.str() + ":" + c.str();
  }
  return out;
}

Rational QDivisorP1::coefficient(const PointP1& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QDivisorP1::add(const PointP1& p, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QDivisorP1& QDivisorP1::operator+=(const QDivisorP1& rhs) {
  for (const auto& [p, c] : rhs.terms_) add(p, c);
  return *this;
}

QDivisorP1 operator*(const Rational& scalar, const QDivisorP1& d) {
  QDivisorP1 out;
  for (const auto& [p, c] : d.terms()) out.add(p, scalar * c);
  return out;
}

Rational degree(const QDivisorP1& d) {
  Rational sum;
  for (const auto& [p, c] : d.terms()) sum += c;
  return sum;
}

bool is_integral(const QDivisorP1& d) {
  return std::all_of(d.terms().begin(), d.terms().end(),
                     [](const auto& term) { return term.second.is_integer(); });
}

std::vector<FractionalPoint> fractional_profile(const QDivisorP1& d) {
  std::vector<FractionalPoint> out;
  for (const auto& [p, c] : d.terms()) {
    if (c.is_integer()) continue;
    const Rational f = c.fractional_part();
    out.push_back({p, to_int64(f.numerator()), to_int64(f.denominator())});
  }
  return out;
}

QDivisorP1 boundary_delta(const QDivisorP1& d) {
  QDivisorP1 out;
  for (const auto& fp : fractional_profile(d)) out.add(fp.point, Rational(fp.q - 1, fp.q));
  return out;
}

std::int64_t cartier_index(const QDivisorP1& d) {
  std::int64_t index = 1;
  for (const auto& fp : fractional_profile(d)) index = lcm64(index, fp.q);
  return index;
}

std::int64_t weil_index(const QDivisorP1& d, const PointP1& p) {
  return to_int64(d.coefficient(p).denominator());
}

SeifertData::SeifertData(std::int64_t b, std::vector<SeifertBranch> branches)
    : b_(b), branches_(std::move(branches)) {
  for (const auto& br : branches_) {
    if (br.beta <= 0 || br.beta >= br.alpha || std::gcd(br.alpha, br.beta) != 1) {
      throw InvalidInput("Seifert branch (" + std::to_string(br.alpha) + ", " +
                         std::to_string(br.beta) + ") needs 0 < beta < alpha coprime");
    }
  }
  std::sort(branches_.begin(), branches_.end());
}

Rational SeifertData::euler_number() const {
  Rational e(b_);
  for (const auto& br : branches_) e -= Rational(br.beta, br.alpha);
  return e;
}

std::string SeifertData::str() const {
  std::string out = "(b=" + std::to_string(b_) + "; [";
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + std::to_string(branches_[i].alpha) + "," + std::to_string(branches_[i].beta) + ")";
  }
  return out + "])";
}

SeifertData normalize_seifert(const QDivisorP1& d) {
  const Rational deg = degree(d);
  if (deg.sign() <= 0) {
    throw InvalidInput("polarization " + d.str() + " has degree " + deg.str() +
                       " <= 0; its section ring is not a normal affine cone");
  }
  BigInt b = 0;
  for (const auto& [p, c] : d.terms()) b += c.ceil();
  std::vector<SeifertBranch> branches;
  for (const auto& fp : fractional_profile(d)) branches.push_back({fp.q, fp.q - fp.p});
  SeifertData s(to_int64(b), std::move(branches));
  if (s.euler_number() != deg) {
    throw std::logic_error("normalize_seifert: b - sum beta/alpha != degree");
  }
  return s;
}

QDivisorP1 canonical_form(const QDivisorP1& d) {
  const auto profile = fractional_profile(d);
  if (profile.size() > 3) {
    throw InvalidInput("canonical form is only defined for at most three fractional points; " +
                       d.str() + " has " + std::to_string(profile.size()));
  }
  std::vector<Rational> parts;
  for (const auto& fp : profile) parts.emplace_back(fp.p, fp.q);
  std::sort(parts.begin(), parts.end(), std::greater<>());

  static const PointP1 anchors[] = {PointP1::at(0), PointP1::at(1), PointP1::infinity()};
  QDivisorP1 out;
  Rational remainder = degree(d);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.add(anchors[i], parts[i]);
    remainder -= parts[i];
  }
  out.add(PointP1::infinity(), remainder);
  return out;
}

}  // namespace conesing
