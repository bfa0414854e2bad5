#include "conesing/polynomial.hpp"

#include "conesing/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

namespace conesing {

namespace {

struct ParsedTerm {
  Rational coefficient{1};
  std::vector<std::pair<std::string, int>> powers;
};

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_space();
    bool negative = false;
    if (consume('-')) {
      negative = true;
    } else {
      consume('+');
    }
    while (true) {
      ParsedTerm term = parse_term();
      if (negative) term.coefficient = -term.coefficient;
      terms.push_back(std::move(term));
      skip_space();
      if (at_end()) break;
      if (consume('+')) {
        negative = false;
      } else if (consume('-')) {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return terms;
  }

 private:
  ParsedTerm parse_term() {
    ParsedTerm term;
    do {
      skip_space();
      if (at_end()) fail("expected a factor");
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string literal = digits();
        if (consume('/')) literal += "/" + digits();
        term.coefficient *= Rational::parse(literal);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                             text_[pos_] == '_')) {
          name += text_[pos_++];
        }
        int power = 1;
        skip_space();
        if (consume('^')) {
          skip_space();
          const std::string e = digits();
          power = std::stoi(e);
          if (power < 1) fail("exponents must be positive");
        }
        term.powers.emplace_back(std::move(name), power);
      } else {
        fail("unexpected character");
      }
      skip_space();
    } while (consume('*'));
    return term;
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  bool consume(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                       " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Poly build(const std::vector<ParsedTerm>& terms, const std::vector<std::string>& variables) {
  Poly out(variables);
  for (const auto& t : terms) {
    Exponents e(variables.size(), 0);
    for (const auto& [name, power] : t.powers) {
      const auto it = std::find(variables.begin(), variables.end(), name);
      if (it == variables.end()) throw InvalidInput("unknown variable '" + name + "'");
      e[static_cast<std::size_t>(it - variables.begin())] += power;
    }
    out += Poly::monomial(variables, std::move(e), t.coefficient);
  }
  return out;
}

}  // namespace

Poly::Poly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Poly::Poly(std::vector<std::string> variables, Terms terms) : variables_(std::move(variables)) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Poly Poly::variable(const std::vector<std::string>& variables, std::size_t index) {
  Exponents e(variables.size(), 0);
  e.at(index) = 1;
  return monomial(variables, std::move(e));
}

Poly Poly::constant(const std::vector<std::string>& variables, const Rational& c) {
  return monomial(variables, Exponents(variables.size(), 0), c);
}

Poly Poly::monomial(const std::vector<std::string>& variables, Exponents exponents,
                    const Rational& c) {
  Poly p(variables);
  p.add_term(exponents, c);
  return p;
}

Poly Poly::parse(std::string_view text) {
  const auto terms = PolyParser(text).parse();
  std::vector<std::string> variables;
  for (const auto& t : terms) {
    for (const auto& [name, power] : t.powers) {
      if (std::find(variables.begin(), variables.end(), name) == variables.end()) {
        variables.push_back(name);
      }
    }
  }
  return build(terms, variables);
}

Poly Poly::parse(std::string_view text, const std::vector<std::string>& variables) {
  return build(PolyParser(text).parse(), variables);
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variables_.size()) throw InvalidInput("exponent vector has the wrong length");
  if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) {
    throw InvalidInput("negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& rhs) const {
  if (variables_ != rhs.variables_) throw InvalidInput("polynomials over different variables");
}

int Poly::total_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

Poly Poly::derivative(std::size_t index) const {
  if (index >= variables_.size()) throw InvalidInput("derivative variable out of range");
  Poly out(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    out.add_term(d, c * Rational(e[index]));
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest exponent vectors first for a readable, deterministic rendering.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    Rational magnitude = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += variables_[i];
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (constant) {
      out += magnitude.str();
    } else if (magnitude == Rational(1)) {
      out += factors;
    } else {
      out += magnitude.str() + "*" + factors;
    }
  }
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  lhs.check_compatible(rhs);
  Poly out(lhs.variables_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out(p.variables_);
  for (const auto& [e, v] : p.terms_) out.add_term(e, c * v);
  return out;
}

}  // namespace conesing
