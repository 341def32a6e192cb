#include "qmarkov/markov.hpp"

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

// Regions around the edge being climbed: left and right parents, the region
// across the lower vertex, and the region just created above it.
template <typename Value, typename Mutation>
struct Descent {
  Value lo, hi, below, cur;

  static Descent run(const FareyRational& t, Value one, Value two, Mutation mut) {
    // Root edge: 0/1 on the left, 1/1 on the right, 1/0 below.
    Descent d{one, two, one, mut(one, two, one)};
    for (Branch b : stern_brocot_path(t)) {
      if (b == Branch::Right) {
        Value next = mut(d.cur, d.hi, d.lo);
        d.below = std::move(d.lo);
        d.lo = std::move(d.cur);
        d.cur = std::move(next);
      } else {
        Value next = mut(d.lo, d.cur, d.hi);
        d.below = std::move(d.hi);
        d.hi = std::move(d.cur);
        d.cur = std::move(next);
      }
    }
    return d;
  }
};

LaurentPoly q_mutation(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c) {
  return markov_coefficient() * a * b - c;
}

BigInt int_mutation(const BigInt& a, const BigInt& b, const BigInt& c) { return 3 * a * b - c; }

const LaurentPoly& two_q() {
  static const LaurentPoly v = LaurentPoly::q(1) + LaurentPoly::q(-1);
  return v;
}

}  // namespace

QMarkovTriple mutate(const QMarkovTriple& t) { return {t.a, t.b, q_mutation(t.a, t.b, t.c)}; }

LaurentPoly equation_residual(const QMarkovTriple& t) {
  static const LaurentPoly constant = (LaurentPoly::q(1) - 1) * (LaurentPoly::q(-1) - 1);
  return t.a * t.a + t.b * t.b + t.c * t.c - markov_coefficient() * t.a * t.b * t.c - constant;
}

bool verify_equation(const QMarkovTriple& t) { return equation_residual(t).is_zero(); }

QMarkovTriple vertex_triple(const FareyRational& t) {
  if (t.is_zero()) throw Error(ErrorCode::UnsupportedLabel, "0/1 has no vertex beneath it");
  if (t.is_one()) return {1, 1, two_q()};
  using D = Descent<LaurentPoly, decltype(&q_mutation)>;
  D d = D::run(t, LaurentPoly(1), two_q(), &q_mutation);
  return {std::move(d.lo), std::move(d.hi), std::move(d.cur)};
}

LaurentPoly q_markov_number(const FareyRational& t) {
  if (t.is_zero()) return 1;
  if (t.is_one()) return two_q();
  return vertex_triple(t).c;
}

BigInt classical_markov_number(const FareyRational& t) {
  if (t.is_zero()) return 1;
  if (t.is_one()) return 2;
  using D = Descent<BigInt, decltype(&int_mutation)>;
  return D::run(t, BigInt(1), BigInt(2), &int_mutation).cur;
}

FareyRational recover_label(const LaurentPoly& m) {
  if (m.is_zero() || m.leading_coeff() != 1 || !is_palindromic(m)) {
    throw Error(ErrorCode::MalformedInput, "not monic palindromic: " + m.to_string());
  }
  const int d = m.degree();
  const BigInt alpha = d == 0 ? BigInt(0) : m.coeff(d - 1);
  const BigInt num = d - alpha;
  const BigInt den = alpha + 1;
  if (den <= 0 || num < 0 || num > den || !num.fits_slong_p() || !den.fits_slong_p()) {
    throw Error(ErrorCode::MalformedInput, "label formula leaves [0,1] for " + m.to_string());
  }
  return {num.get_si(), den.get_si()};
}

}  // namespace qmarkov
