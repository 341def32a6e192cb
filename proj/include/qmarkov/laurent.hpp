#pragma once

/**
 * Exact Laurent polynomials in one variable q with arbitrary-precision
 * integer coefficients.
 *
 * Storage is a sparse exponent -> coefficient map kept in canonical form:
 * no zero coefficient is ever stored, so the zero polynomial is the empty
 * map and equality is structural.  Values are immutable once built; every
 * arithmetic operation returns a fresh canonical value.
 */

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qmarkov {

using BigInt = mpz_class;

class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor): 1, -1, 0 read naturally
  explicit LaurentPoly(Terms terms);

  /// c * q^exp
  static LaurentPoly monomial(const BigInt& c, int exp);
  /// q^k
  static LaurentPoly q(int k = 1) { return monomial(1, k); }
  /// Coefficients listed from q^min_exp upward; zeros allowed and dropped.
  static LaurentPoly from_dense(int min_exp, const std::vector<BigInt>& coeffs);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Both throw Error(EmptySupport) on the zero polynomial.
  int degree() const;
  int min_degree() const;
  const BigInt& leading_coeff() const;
  const BigInt& trailing_coeff() const;

  BigInt coeff(int exp) const;

  /// Coefficients from min_degree() to degree(), interior zeros included.
  /// Empty for the zero polynomial.
  std::vector<BigInt> dense() const;

  /// Substitution q -> q^{-1}.
  LaurentPoly reflected() const;
  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Human-readable, highest exponent first, e.g. "q^2 + 2q + 1 + 2q^-1 + q^-2".
  std::string to_string() const;

 private:
  void add_scaled(const LaurentPoly& r, int sign);

  Terms terms_;
};

/// [n]_q = (q^n - 1)/(q - 1), for any integer n.
LaurentPoly q_int(int n);

/// q^{-1}[3]_q = q + 1 + q^{-1}, the coefficient of abc in the q-Markov equation.
const LaurentPoly& markov_coefficient();

/// Exact quotient u with u * d == p.  Throws Error(NonDivisible) when no
/// Laurent-polynomial quotient exists, Error(InvalidArgument) when d == 0.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

BigInt eval_at_one(const LaurentPoly& p);

bool is_palindromic(const LaurentPoly& p);
bool is_unimodal(const LaurentPoly& p);
bool is_monic_palindromic_positive(const LaurentPoly& p);

}  // namespace qmarkov
