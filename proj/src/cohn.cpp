#include "qmarkov/cohn.hpp"

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

using Q = LaurentPoly;

// Unit +-q^k if p is one, otherwise the zero polynomial.
LaurentPoly unit_inverse(const LaurentPoly& p) {
  if (p.term_count() != 1) return {};
  const auto& [e, c] = *p.terms().begin();
  if (c != 1 && c != -1) return {};
  return LaurentPoly::monomial(c, -e);
}

template <typename Letters, typename Pick>
QMatrix2 word_product(const Letters& letters, Pick pick) {
  QMatrix2 m = QMatrix2::identity();
  for (auto letter : letters) m = m * pick(letter);
  return m;
}

}  // namespace

QMatrix2 QMatrix2::inverse() const {
  const LaurentPoly inv = unit_inverse(det());
  if (inv.is_zero()) throw Error(ErrorCode::InvalidArgument, "determinant is not a unit: " + det().to_string());
  return adjugate().scaled(inv);
}

std::array<BigInt, 4> QMatrix2::at_one() const {
  return {eval_at_one(e_[0]), eval_at_one(e_[1]), eval_at_one(e_[2]), eval_at_one(e_[3])};
}

QMatrix2 operator*(const QMatrix2& a, const QMatrix2& b) {
  return {a.e11() * b.e11() + a.e12() * b.e21(), a.e11() * b.e12() + a.e12() * b.e22(),
          a.e21() * b.e11() + a.e22() * b.e21(), a.e21() * b.e12() + a.e22() * b.e22()};
}

QMatrix2 operator-(const QMatrix2& a, const QMatrix2& b) {
  return {a.e11() - b.e11(), a.e12() - b.e12(), a.e21() - b.e21(), a.e22() - b.e22()};
}

bool QMatrix2::is_zero() const {
  for (const auto& e : e_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string QMatrix2::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
         e_[3].to_string() + "]]";
}

bool projectively_equal(const QMatrix2& a, const QMatrix2& b) {
  // The ratio is fixed by the first entry where b is nonzero.
  for (std::size_t i = 0; i < 4; ++i) {
    const LaurentPoly& ai = a.entries()[i];
    const LaurentPoly& bi = b.entries()[i];
    if (bi.is_zero()) continue;
    if (ai.is_zero()) return false;
    LaurentPoly ratio;
    try {
      ratio = exact_div(ai, bi);
    } catch (const Error&) {
      return false;
    }
    if (unit_inverse(ratio).is_zero()) return false;
    return a == b.scaled(ratio);
  }
  return a.is_zero();
}

Generators generators_q() {
  const Q q = Q::q(1);
  return {{q, 1, 0, 1}, {0, -1, q, 0}, {q, 0, q, 1}};
}

QMatrix2 braid_partner() { return {1, 0, -Q::q(1), Q::q(1)}; }

QMatrix2 cohn_a(int n) {
  return {q_int(n).shifted(2 - n), Q::q(1 - n), q_int(n) * q_int(3 - n) - Q::q(n - 1), q_int(3 - n).shifted(-1)};
}

QMatrix2 cohn_b(int n) { return cohn_a(n) * cohn_a(n + 1); }

QMatrix2 cohn_matrix(const FareyRational& t, int n) {
  const QMatrix2 x = cohn_a(n);
  const QMatrix2 y = cohn_a(n + 1);
  return word_product(christoffel_word(t).letters, [&](Letter l) -> const QMatrix2& { return l == Letter::X ? x : y; });
}

QMatrix2 cohn_matrix_ab(const FareyRational& t, int n) {
  const QMatrix2 a = cohn_a(n);
  if (t.is_zero()) return a;
  const QMatrix2 b = cohn_b(n);
  return word_product(recode_ab(christoffel_word(t)),
                      [&](CohnLetter l) -> const QMatrix2& { return l == CohnLetter::A ? a : b; });
}

LaurentPoly q_markov_via_trace(const FareyRational& t, int n) {
  return exact_div(cohn_matrix(t, n).trace(), markov_coefficient());
}

bool entry_relations_check(const QMatrix2& c) {
  LaurentPoly m;
  try {
    m = exact_div(c.trace(), markov_coefficient());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NonDivisible) return false;
    throw;
  }
  const Q q = Q::q(1);
  const LaurentPoly first = (Q::q(-1) - Q::q(-2)) * c.e11() + Q::q(-1) * c.e12();
  const LaurentPoly second = Q::q(2) * c.e12() + q * (1 - q) * c.e22();
  return m == first && m == second;
}

bool extended_tree_identity(int n) { return cohn_a(n) * cohn_b(n).inverse() == cohn_a(n - 2); }

LaurentPoly tilde_q_markov(const FareyRational& t) { return cohn_matrix(t, 1).e12(); }

std::array<BigInt, 4> classical_cohn_a(long n) {
  const BigInt m = n;
  return {m, 1, 3 * m - m * m - 1, 3 - m};
}

std::array<BigInt, 4> classical_cohn_b(long n) {
  const BigInt m = n;
  return {2 * m + 1, 2, -2 * m * m + 4 * m + 2, 5 - 2 * m};
}

}  // namespace qmarkov
