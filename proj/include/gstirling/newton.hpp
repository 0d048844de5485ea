#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gstirling/errors.hpp"
#include "gstirling/rational.hpp"

namespace gstirling {

/// Polynomial sum_k coeffs[k] * (x - a_1)...(x - a_k) in the Newton basis
/// determined by `basis_roots` = (a_1..a_n).
struct NewtonPoly {
  std::vector<Rational> basis_roots;
  std::vector<Rational> coeffs;

  std::size_t degree_bound() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Expands prod_i (x - roots[i]) in the Newton basis of `basis_roots`.
///
/// The product is built one linear factor at a time using
/// x * N_k = N_{k+1} + a_{k+1} * N_k, where N_k = (x - a_1)...(x - a_k).
inline NewtonPoly newton_expand(std::span<const Rational> roots, std::span<const Rational> basis_roots) {
  if (roots.size() > basis_roots.size()) {
    throw PreconditionError("newton_expand: " + std::to_string(roots.size()) + " roots but only " +
                            std::to_string(basis_roots.size()) + " basis roots");
  }
  std::vector<Rational> c{Rational(1)};
  for (const Rational& root : roots) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] += (basis_roots[k] - root) * c[k];
    }
    c = std::move(next);
  }
  return NewtonPoly{{basis_roots.begin(), basis_roots.end()}, std::move(c)};
}

/// Exact value of the polynomial at x (Horner's scheme in the Newton basis).
inline Rational poly_eval(const NewtonPoly& p, const Rational& x) {
  if (p.coeffs.empty()) return Rational();
  if (p.coeffs.size() > p.basis_roots.size() + 1) throw PreconditionError("more coefficients than basis polynomials");
  Rational value = p.coeffs.back();
  for (std::size_t k = p.coeffs.size() - 1; k-- > 0;) {
    value = value * (x - p.basis_roots[k]) + p.coeffs[k];
  }
  return value;
}

/// Monomial coefficients (constant term first) of a Newton-basis polynomial.
inline std::vector<Rational> to_monomial(const NewtonPoly& p) {
  if (p.coeffs.empty()) return {};
  std::vector<Rational> out{p.coeffs.back()};
  for (std::size_t k = p.coeffs.size() - 1; k-- > 0;) {
    // out <- out * (x - a_{k+1}) + c_k
    std::vector<Rational> next(out.size() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] += out[i];
      next[i] -= p.basis_roots[k] * out[i];
    }
    next[0] += p.coeffs[k];
    out = std::move(next);
  }
  return out;
}

/// Monomial coefficients of prod_i (x - roots[i]), constant term first.
inline std::vector<Rational> monomial_product(std::span<const Rational> roots) {
  std::vector<Rational> out{Rational(1)};
  for (const Rational& root : roots) {
    std::vector<Rational> next(out.size() + 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
      next[i + 1] += out[i];
      next[i] -= root * out[i];
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace gstirling
