#pragma once

#include "conesing/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace conesing {

using Exponents = std::vector<int>;

/// Sparse polynomial over Q in a fixed, ordered list of variables.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit Poly(std::vector<std::string> variables);
  Poly(std::vector<std::string> variables, Terms terms);

  /// The polynomial x_i.
  static Poly variable(const std::vector<std::string>& variables, std::size_t index);
  static Poly constant(const std::vector<std::string>& variables, const Rational& c);
  static Poly monomial(const std::vector<std::string>& variables, Exponents exponents,
                       const Rational& c = Rational(1));

  /// Grammar: terms joined by '+'/'-', factors joined by '*', each factor a rational
  /// literal or a variable with optional '^k'. Variables in order of first appearance.
  static Poly parse(std::string_view text);
  /// Same grammar over a given variable list; unknown names are rejected.
  static Poly parse(std::string_view text, const std::vector<std::string>& variables);

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t variable_count() const { return variables_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  Poly derivative(std::size_t index) const;
  std::string str() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Rational& c, const Poly& p);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_compatible(const Poly& rhs) const;

  std::vector<std::string> variables_;
  Terms terms_;
};

}  // namespace conesing
