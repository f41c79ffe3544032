#pragma once

#include <utility>
#include <vector>

#include "lpsign/rational.hpp"

namespace lpsign {

/// Dense univariate polynomial with exact rational coefficients, normalized
/// so the leading coefficient is nonzero. The zero polynomial has degree -1.
class ExactPolynomial {
  public:
    ExactPolynomial() = default;

    static ExactPolynomial from_coefficients(std::vector<Rational> coeffs);
    static ExactPolynomial constant(const Rational& c);
    /// c * x^k
    static ExactPolynomial monomial(const Rational& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    ExactPolynomial derivative() const;

    friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
    friend ExactPolynomial operator*(const Rational& c, const ExactPolynomial& a);
    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.c_ == b.c_; }

    std::string to_string() const;

  private:
    std::vector<Rational> c_;  // no trailing zeros; empty = zero polynomial
};

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& a, const ExactPolynomial& b);

/// Monic gcd (constant 1 for coprime inputs, zero only if both zero).
ExactPolynomial gcd(const ExactPolynomial& a, const ExactPolynomial& b);

/// p / gcd(p, p'): same distinct roots, all simple.
ExactPolynomial squarefree_part(const ExactPolynomial& p);

/// Yun decomposition: list of (squarefree factor, multiplicity), multiplicity
/// ascending, product of factor^multiplicity = p up to a constant.
std::vector<std::pair<ExactPolynomial, unsigned>> squarefree_decomposition(const ExactPolynomial& p);

/// Strict bound B = 1 + max|c_i|/|c_d|: every complex root has |z| < B.
Rational cauchy_root_bound(const ExactPolynomial& p);

}  // namespace lpsign
