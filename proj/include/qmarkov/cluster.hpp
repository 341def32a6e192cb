#pragma once

/**
 * Three-parameter deformation of the Cohn matrices.
 *
 *   A^ = [[y3,1],[0,1]] [[y2,0],[y2,1]]
 *   B^ = [[y3,1],[0,1]] [[y1,1],[0,1]] [[y2,0],[y2,1]] [[y3,0],[y2,1]]
 *
 * Substituting A -> A^, B -> B^ into the recoded Christoffel word of t gives
 * C^_t; its top-right entry is conjecturally the F-polynomial F_t.
 */

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmarkov/cohn.hpp"
#include "qmarkov/farey.hpp"
#include "qmarkov/laurent.hpp"

namespace qmarkov {

class TriPoly {
 public:
  using Exponent = std::array<int, 3>;
  using Terms = std::map<Exponent, BigInt>;

  TriPoly() = default;
  TriPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit TriPoly(Terms terms);

  static TriPoly monomial(const BigInt& c, Exponent e);
  /// y_i for i in {1, 2, 3}.
  static TriPoly y(int i, int power = 1);

  /// Accepts "y2*y3^2 + 2*y2 + 1" as well as "y_2y_3^2 + 2y_2 + 1"; exponents
  /// may be negative ("y_2^{-1}").  Throws Error(MalformedInput).
  static TriPoly parse(std::string_view text);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  BigInt coeff(const Exponent& e) const;

  TriPoly operator-() const;
  TriPoly& operator+=(const TriPoly& r);
  TriPoly& operator-=(const TriPoly& r);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend bool operator==(const TriPoly&, const TriPoly&) = default;

  /// Single term with coefficient +-1.
  bool is_unit() const;
  bool has_positive_coefficients() const;

  BigInt eval_at_one() const;
  /// y1 = y2 = y3 = q.
  LaurentPoly specialize_q() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

class TriMatrix2 {
 public:
  TriMatrix2() = default;
  TriMatrix2(TriPoly e11, TriPoly e12, TriPoly e21, TriPoly e22)
      : e_{std::move(e11), std::move(e12), std::move(e21), std::move(e22)} {}

  static TriMatrix2 identity() { return {1, 0, 0, 1}; }

  const TriPoly& e11() const noexcept { return e_[0]; }
  const TriPoly& e12() const noexcept { return e_[1]; }
  const TriPoly& e21() const noexcept { return e_[2]; }
  const TriPoly& e22() const noexcept { return e_[3]; }
  const std::array<TriPoly, 4>& entries() const noexcept { return e_; }

  TriPoly det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

  friend TriMatrix2 operator*(const TriMatrix2& a, const TriMatrix2& b);
  friend bool operator==(const TriMatrix2&, const TriMatrix2&) = default;

  std::array<BigInt, 4> at_one() const;
  QMatrix2 specialize_q() const;
  std::string to_string() const;

 private:
  std::array<TriPoly, 4> e_{};
};

TriMatrix2 hat_a();
TriMatrix2 hat_b();

/// Word substitution into recode_ab(christoffel_word(t)); 0/1 -> hat_a().
TriMatrix2 hat_cohn(const FareyRational& t);

/// Top-right entry of hat_cohn(t) equals expected_f exactly.
bool conjecture_check(const FareyRational& t, const TriPoly& expected_f);

/// The F-polynomials tabulated in the literature for small t
/// (1/1, 1/2, 1/3, 1/4, 2/3, 3/4), or nullopt.
std::optional<TriPoly> known_f_polynomial(const FareyRational& t);
std::vector<FareyRational> known_f_labels();

}  // namespace qmarkov
