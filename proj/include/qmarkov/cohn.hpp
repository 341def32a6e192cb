#pragma once

/**
 * q-deformed Cohn matrices.
 *
 * A(n)_q is the determinant-one representative of L^{3-n} S L^n under the
 * q-deformed generators; B(n)_q = A(n)_q A(n+1)_q.  Substituting X -> A(n)_q,
 * Y -> A(n+1)_q into the Christoffel word of t gives C_t(n), whose trace is
 * (q + 1 + q^-1) m_q^t for every n.
 */

#include <array>
#include <string>
#include <vector>

#include "qmarkov/farey.hpp"
#include "qmarkov/laurent.hpp"

namespace qmarkov {

class QMatrix2 {
 public:
  QMatrix2() = default;
  QMatrix2(LaurentPoly e11, LaurentPoly e12, LaurentPoly e21, LaurentPoly e22)
      : e_{std::move(e11), std::move(e12), std::move(e21), std::move(e22)} {}

  static QMatrix2 identity() { return {1, 0, 0, 1}; }

  const LaurentPoly& e11() const noexcept { return e_[0]; }
  const LaurentPoly& e12() const noexcept { return e_[1]; }
  const LaurentPoly& e21() const noexcept { return e_[2]; }
  const LaurentPoly& e22() const noexcept { return e_[3]; }
  /// Row-major.
  const std::array<LaurentPoly, 4>& entries() const noexcept { return e_; }

  LaurentPoly trace() const { return e_[0] + e_[3]; }
  LaurentPoly det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

  /// Adjugate; the inverse whenever det() == 1.
  QMatrix2 adjugate() const { return {e_[3], -e_[1], -e_[2], e_[0]}; }
  /// Throws Error(InvalidArgument) unless det() is a unit +-q^k.
  QMatrix2 inverse() const;

  QMatrix2 scaled(const LaurentPoly& s) const { return {s * e_[0], s * e_[1], s * e_[2], s * e_[3]}; }
  /// Entrywise q = 1.
  std::array<BigInt, 4> at_one() const;

  friend QMatrix2 operator*(const QMatrix2& a, const QMatrix2& b);
  friend QMatrix2 operator-(const QMatrix2& a, const QMatrix2& b);
  friend bool operator==(const QMatrix2&, const QMatrix2&) = default;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::array<LaurentPoly, 4> e_{};
};

/// True iff a == c * b for a single unit c = +-q^k.
bool projectively_equal(const QMatrix2& a, const QMatrix2& b);

struct Generators {
  QMatrix2 t;  // [[q,1],[0,1]]
  QMatrix2 s;  // [[0,-1],[q,0]]
  QMatrix2 l;  // [[q,0],[q,1]]
};

Generators generators_q();

/// [[1,0],[-q,q]], the adjugate of L_q; with T_q it satisfies the braid relation.
QMatrix2 braid_partner();

QMatrix2 cohn_a(int n);
QMatrix2 cohn_b(int n);

/// Product of the word of t with X -> A(n)_q, Y -> A(n+1)_q, left to right.
QMatrix2 cohn_matrix(const FareyRational& t, int n);
/// Same matrix via the recoded word with A -> A(n)_q, B -> B(n)_q.
QMatrix2 cohn_matrix_ab(const FareyRational& t, int n);

/// trace(C_t(n)) / (q + 1 + q^-1).  Propagates Error(NonDivisible).
LaurentPoly q_markov_via_trace(const FareyRational& t, int n);

/// Trace-to-entry relations of q-Cohn matrices:
///   Tr(C)/(q+1+q^-1) = (q^-1 - q^-2) c11 + q^-1 c12 = q^2 c12 + q(1-q) c22.
bool entry_relations_check(const QMatrix2& c);

/// A(n)_q B(n)_q^{-1} == A(n-2)_q.
bool extended_tree_identity(int n);

/// Top-right entry of C_t(1), the matrix grown from A(1)_q, B(1)_q.
LaurentPoly tilde_q_markov(const FareyRational& t);

/// Classical A(n), B(n) as integer 2x2 matrices (row-major).
std::array<BigInt, 4> classical_cohn_a(long n);
std::array<BigInt, 4> classical_cohn_b(long n);

}  // namespace qmarkov
