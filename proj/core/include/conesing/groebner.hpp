#pragma once

#include "conesing/polynomial.hpp"
#include "conesing/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace conesing {

enum class MonomialOrder { DegRevLex, Lex };

/// true when a > b in the given order.
bool monomial_greater(MonomialOrder order, const Exponents& a, const Exponents& b);

Exponents leading_monomial(const Poly& p, MonomialOrder order);

/// Reduced Groebner basis: monic generators sorted by descending leading monomial.
struct GroebnerBasis {
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::DegRevLex;
  std::vector<Poly> generators;

  std::vector<Exponents> leading_monomials() const;
};

/// Buchberger with the normal selection strategy and the coprime-leading-monomial
/// criterion, then interreduction. Inputs must share a variable list.
GroebnerBasis buchberger(std::span<const Poly> generators,
                         MonomialOrder order = MonomialOrder::DegRevLex);

/// Full reduction of p modulo the basis.
Poly normal_form(const Poly& p, const GroebnerBasis& basis);

/// All S-polynomials reduce to zero.
bool is_groebner_basis(const GroebnerBasis& basis);

/// Number of standard monomials, or nullopt when infinite.
std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& basis);

/// dim Q[x]/<f, df/dx_i>. Throws NotIsolated when infinite or when some variable is
/// not nilpotent modulo the ideal.
std::uint64_t tjurina(const Poly& f, MonomialOrder order = MonomialOrder::DegRevLex);

/// x^2 + y^2 + z^3 + z^2 w + t w^n over (x, y, z, w).
Poly tjurina_family_poly(std::int64_t n, const Rational& t);

/// tjurina of tjurina_family_poly(n, t); requires n >= 4.
std::uint64_t tjurina_family(std::int64_t n, const Rational& t,
                             MonomialOrder order = MonomialOrder::DegRevLex);

}  // namespace conesing
