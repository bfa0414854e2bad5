#include "conesing/groebner.hpp"

#include "conesing/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace conesing {

bool monomial_greater(MonomialOrder order, const Exponents& a, const Exponents& b) {
  if (order == MonomialOrder::DegRevLex) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Exponents leading_monomial(const Poly& p, MonomialOrder order) {
  if (p.is_zero()) throw InvalidInput("leading monomial of the zero polynomial");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (best == nullptr || monomial_greater(order, e, *best)) best = &e;
  }
  return *best;
}

namespace {

using Term = std::pair<Exponents, Rational>;

// Terms in strictly descending monomial order.
struct Sorted {
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  const Exponents& lm() const { return terms.front().first; }
  const Rational& lc() const { return terms.front().second; }
};

Sorted to_sorted(const Poly& p, MonomialOrder order) {
  Sorted s;
  s.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(s.terms.begin(), s.terms.end(), [order](const Term& a, const Term& b) {
    return monomial_greater(order, a.first, b.first);
  });
  return s;
}

Poly to_poly(const Sorted& s, const std::vector<std::string>& variables) {
  Poly::Terms terms(s.terms.begin(), s.terms.end());
  return Poly(variables, std::move(terms));
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

void make_monic(Sorted& s) {
  if (s.empty() || s.lc() == Rational(1)) return;
  const Rational inv = s.lc().reciprocal();
  for (auto& [e, c] : s.terms) c *= inv;
}

// f - c * x^shift * g, merging the two descending term lists.
Sorted sub_scaled(const Sorted& f, const Rational& c, const Exponents& shift, const Sorted& g,
                  MonomialOrder order) {
  Sorted out;
  out.terms.reserve(f.terms.size() + g.terms.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Exponents shifted(shift.size());
  auto shifted_at = [&](std::size_t k) -> const Exponents& {
    const Exponents& e = g.terms[k].first;
    for (std::size_t v = 0; v < e.size(); ++v) shifted[v] = e[v] + shift[v];
    return shifted;
  };
  while (i < f.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      out.terms.push_back(f.terms[i++]);
      continue;
    }
    const Exponents& gj = shifted_at(j);
    if (i == f.terms.size() || monomial_greater(order, gj, f.terms[i].first)) {
      out.terms.emplace_back(gj, -(c * g.terms[j].second));
      ++j;
    } else if (gj == f.terms[i].first) {
      Rational v = f.terms[i].second - c * g.terms[j].second;
      if (!v.is_zero()) out.terms.emplace_back(gj, std::move(v));
      ++i;
      ++j;
    } else {
      out.terms.push_back(f.terms[i++]);
    }
  }
  return out;
}

// Full reduction modulo monic `basis`.
Sorted reduce(Sorted p, const std::vector<Sorted>& basis, MonomialOrder order) {
  Sorted remainder;
  while (!p.empty()) {
    const Exponents lead = p.lm();
    const Sorted* divisor = nullptr;
    for (const auto& g : basis) {
      if (divides(g.lm(), lead)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.terms.push_back(p.terms.front());
      p.terms.erase(p.terms.begin());
      continue;
    }
    p = sub_scaled(p, p.lc() / divisor->lc(), quotient(lead, divisor->lm()), *divisor, order);
  }
  return remainder;
}

Sorted s_polynomial(const Sorted& f, const Sorted& g, MonomialOrder order) {
  const Exponents l = lcm(f.lm(), g.lm());
  // f, g monic: x^(l - lm f) f - x^(l - lm g) g.
  Sorted shifted_f;
  const Exponents sf = quotient(l, f.lm());
  for (const auto& [e, c] : f.terms) {
    Exponents m(e.size());
    for (std::size_t v = 0; v < e.size(); ++v) m[v] = e[v] + sf[v];
    shifted_f.terms.emplace_back(std::move(m), c / f.lc());
  }
  return sub_scaled(shifted_f, g.lc().reciprocal(), quotient(l, g.lm()), g, order);
}

std::vector<std::string> common_variables(std::span<const Poly> generators) {
  if (generators.empty()) throw InvalidInput("Groebner basis of an empty generator list");
  const auto& vars = generators.front().variables();
  for (const auto& g : generators) {
    if (g.variables() != vars) throw InvalidInput("generators over different variables");
  }
  return vars;
}

std::vector<Sorted> sorted_basis(const GroebnerBasis& basis) {
  std::vector<Sorted> out;
  out.reserve(basis.generators.size());
  for (const auto& g : basis.generators) out.push_back(to_sorted(g, basis.order));
  return out;
}

}  // namespace

std::vector<Exponents> GroebnerBasis::leading_monomials() const {
  std::vector<Exponents> out;
  for (const auto& g : generators) out.push_back(leading_monomial(g, order));
  return out;
}

GroebnerBasis buchberger(std::span<const Poly> generators, MonomialOrder order) {
  const auto variables = common_variables(generators);

  std::vector<Sorted> basis;
  for (const auto& g : generators) {
    Sorted s = to_sorted(g, order);
    if (s.empty()) continue;
    make_monic(s);
    basis.push_back(std::move(s));
  }

  struct Pair {
    std::size_t i;
    std::size_t j;
    Exponents lcm;
  };
  std::vector<Pair> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(basis[i].lm(), basis[j].lm())});
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first, ties by insertion order.
    auto pick = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (monomial_greater(order, pick->lcm, it->lcm)) pick = it;
    }
    const Pair pair = *pick;
    pairs.erase(pick);
    if (coprime(basis[pair.i].lm(), basis[pair.j].lm())) continue;

    Sorted r = reduce(s_polynomial(basis[pair.i], basis[pair.j], order), basis, order);
    if (r.empty()) continue;
    make_monic(r);
    basis.push_back(std::move(r));
    const std::size_t k = basis.size() - 1;
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(basis[i].lm(), basis[k].lm())});
  }

  // Minimalize: drop generators whose leading monomial is divisible by another's.
  std::sort(basis.begin(), basis.end(), [order](const Sorted& a, const Sorted& b) {
    return monomial_greater(order, b.lm(), a.lm());
  });
  std::vector<Sorted> minimal;
  for (auto& g : basis) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const Sorted& h) { return divides(h.lm(), g.lm()); });
    if (!redundant) minimal.push_back(std::move(g));
  }

  // Interreduce the tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Sorted> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Sorted tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    Sorted reduced = reduce(std::move(tail), others, order);
    Sorted next;
    next.terms.push_back(minimal[i].terms.front());
    next.terms.insert(next.terms.end(), reduced.terms.begin(), reduced.terms.end());
    make_monic(next);
    minimal[i] = std::move(next);
  }

  std::sort(minimal.begin(), minimal.end(), [order](const Sorted& a, const Sorted& b) {
    return monomial_greater(order, a.lm(), b.lm());
  });

  GroebnerBasis out{variables, order, {}};
  for (const auto& g : minimal) out.generators.push_back(to_poly(g, variables));

  for (const auto& g : generators) {
    if (!normal_form(g, out).is_zero()) {
      throw std::logic_error("buchberger: an input generator does not reduce to zero");
    }
  }
  return out;
}

Poly normal_form(const Poly& p, const GroebnerBasis& basis) {
  if (p.variables() != basis.variables) throw InvalidInput("normal form over different variables");
  return to_poly(reduce(to_sorted(p, basis.order), sorted_basis(basis), basis.order),
                 basis.variables);
}

bool is_groebner_basis(const GroebnerBasis& basis) {
  const auto sorted = sorted_basis(basis);
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!reduce(s_polynomial(sorted[i], sorted[j], basis.order), sorted, basis.order).empty()) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& basis) {
  const std::size_t nvars = basis.variables.size();
  const auto leads = basis.leading_monomials();
  for (const auto& l : leads) {
    if (std::all_of(l.begin(), l.end(), [](int v) { return v == 0; })) return 0;
  }
  // Smallest pure power of each variable among the leading monomials bounds a box
  // containing every standard monomial.
  std::vector<int> box(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& l : leads) {
      bool pure = l[v] > 0;
      for (std::size_t w = 0; w < nvars && pure; ++w) pure = w == v || l[w] == 0;
      if (pure && (box[v] == 0 || l[v] < box[v])) box[v] = l[v];
    }
    if (box[v] == 0) return std::nullopt;
  }

  std::uint64_t count = 0;
  Exponents e(nvars, 0);
  while (true) {
    const bool standard = std::none_of(leads.begin(), leads.end(),
                                       [&](const Exponents& l) { return divides(l, e); });
    if (standard) ++count;
    std::size_t v = 0;
    while (v < nvars && ++e[v] == box[v]) e[v++] = 0;
    if (v == nvars) break;
  }
  return count;
}

std::uint64_t tjurina(const Poly& f, MonomialOrder order) {
  if (f.is_zero()) throw NotIsolated("the zero polynomial is singular everywhere");
  std::vector<Poly> generators{f};
  for (std::size_t i = 0; i < f.variable_count(); ++i) {
    Poly d = f.derivative(i);
    if (!d.is_zero()) generators.push_back(std::move(d));
  }
  const GroebnerBasis basis = buchberger(generators, order);
  const auto dim = quotient_dimension(basis);
  if (!dim) {
    throw NotIsolated("singular locus of " + f.str() + " is positive-dimensional");
  }
  if (*dim == 0) return 0;
  // Nilpotency index is at most the quotient dimension.
  for (std::size_t i = 0; i < f.variable_count(); ++i) {
    Exponents e(f.variable_count(), 0);
    e[i] = static_cast<int>(*dim);
    if (!normal_form(Poly::monomial(f.variables(), e), basis).is_zero()) {
      throw NotIsolated("variable " + f.variables()[i] + " is not nilpotent modulo <f, Jac f>; " +
                        "the singular locus is not concentrated at the origin");
    }
  }
  return *dim;
}

Poly tjurina_family_poly(std::int64_t n, const Rational& t) {
  if (n < 1) throw InvalidInput("family exponent must be positive");
  const std::vector<std::string> vars{"x", "y", "z", "w"};
  Poly f = Poly::parse("x^2 + y^2 + z^3 + z^2*w", vars);
  f += Poly::monomial(vars, {0, 0, 0, static_cast<int>(n)}, t);
  return f;
}

std::uint64_t tjurina_family(std::int64_t n, const Rational& t, MonomialOrder order) {
  if (n < 4) throw InvalidInput("the family is defined for n >= 4");
  return tjurina(tjurina_family_poly(n, t), order);
}

}  // namespace conesing
