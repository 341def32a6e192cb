#include <doctest.h>

#include "golden.hpp"
#include "oracles.hpp"
#include "qmarkov/error.hpp"
#include "qmarkov/laurent.hpp"

using namespace qmarkov;
using oracle::parse_q;

namespace {

const LaurentPoly q = LaurentPoly::q(1);

bool canonical(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (c == 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("addition") {
    CHECK(q + LaurentPoly::q(-1) + 0 == q + LaurentPoly::q(-1));
    const LaurentPoly sum = (q + 1) + (-q + 1);
    CHECK(sum == 2);
    CHECK(sum.term_count() == 1);
    CHECK(parse_q("q+q^-1") + parse_q("q^2+q+1+q^-1+q^-2") == parse_q("q^2 + 2q + 1 + 2q^-1 + q^-2"));
    CHECK((q - q).is_zero());
    CHECK((q - q).terms().empty());
  }

  TEST_CASE("multiplication") {
    const LaurentPoly two = q + LaurentPoly::q(-1);
    CHECK(two * 1 == two);
    CHECK(two * two == parse_q("q^2 + 2 + q^-2"));
    CHECK((two * 0).is_zero());
    const LaurentPoly five = parse_q("q^2+q+1+q^-1+q^-2");
    const LaurentPoly thirteen = parse_q("q^3 + 2q^2 + 2q + 3 + 2q^-1 + 2q^-2 + q^-3");
    const LaurentPoly twenty_nine = parse_q("q^4 + 2q^3 + 4q^2 + 5q + 5 + 5q^-1 + 4q^-2 + 2q^-3 + q^-4");
    CHECK(markov_coefficient() * two * five - 1 == twenty_nine);
    CHECK(markov_coefficient() * 1 * five - two == thirteen);
    CHECK(markov_coefficient() * two * five - thirteen != twenty_nine);
  }

  TEST_CASE("ring axioms on random inputs") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 300; ++i) {
      const LaurentPoly a = oracle::random_poly(rng);
      const LaurentPoly b = oracle::random_poly(rng);
      const LaurentPoly c = oracle::random_poly(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).terms() == oracle::naive_mul(a, b));
      CHECK(canonical(a * b));
      CHECK(canonical(a + b));
      CHECK(canonical(a - b));
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("exact division round-trips") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
      const LaurentPoly a = oracle::random_poly(rng);
      const LaurentPoly b = oracle::random_poly(rng);
      if (b.is_zero()) continue;
      CHECK(exact_div(a * b, b) == a);
    }
  }

  TEST_CASE("exact division") {
    const LaurentPoly two = q + LaurentPoly::q(-1);
    CHECK(exact_div(markov_coefficient() * two, markov_coefficient()) == two);
    CHECK(exact_div(0, q + 1).is_zero());
    CHECK_THROWS_WITH_AS(exact_div(q + 1, q - 1), doctest::Contains("NON_DIVISIBLE"), Error);
    CHECK_THROWS_AS(exact_div(q, 0), Error);
    CHECK(exact_div(LaurentPoly::q(5) - LaurentPoly::q(-3), q - 1) == oracle::q_int_sum(8).shifted(-3));
  }

  TEST_CASE("q-integers") {
    CHECK(q_int(3) == parse_q("q^2+q+1"));
    CHECK(q_int(1) == 1);
    CHECK(q_int(0).is_zero());
    CHECK(q_int(-2) == parse_q("-q^-1-q^-2"));
    for (int n = -12; n <= 12; ++n) {
      CHECK(q_int(n) == oracle::q_int_sum(n));
      CHECK(q_int(n) * (q - 1) + 1 == LaurentPoly::q(n));
    }
  }

  TEST_CASE("degree queries") {
    const LaurentPoly p = parse_q("3q^4 - q^-2");
    CHECK(p.degree() == 4);
    CHECK(p.min_degree() == -2);
    CHECK(p.leading_coeff() == 3);
    CHECK(p.trailing_coeff() == -1);
    CHECK(p.coeff(0) == 0);
    CHECK(p.dense().size() == 7);
    const LaurentPoly zero;
    CHECK_THROWS_WITH_AS(zero.degree(), doctest::Contains("EMPTY_SUPPORT"), Error);
    CHECK_THROWS_AS(zero.min_degree(), Error);
    CHECK_THROWS_AS(zero.leading_coeff(), Error);
  }

  TEST_CASE("palindromic") {
    CHECK(is_palindromic(parse_q(golden::first_q_markov()[3].m_q)));
    CHECK_FALSE(is_palindromic(q + 1));
    CHECK(is_palindromic(LaurentPoly()));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const LaurentPoly a = oracle::random_poly(rng);
      CHECK(is_palindromic(a) == is_palindromic(a.reflected()));
      CHECK(is_palindromic(a + a.reflected()));
    }
  }

  TEST_CASE("unimodal") {
    CHECK(is_unimodal(parse_q(golden::first_q_markov()[6].m_q)));
    CHECK_FALSE(is_unimodal(q + LaurentPoly::q(-1)));
    CHECK(is_unimodal(5));
    CHECK_FALSE(is_unimodal(parse_q("q^2 + 3q + 1 + 2q^-1")));
  }

  TEST_CASE("monic palindromic positive") {
    CHECK(is_monic_palindromic_positive(parse_q(golden::first_q_markov()[8].m_q)));
    CHECK_FALSE(is_monic_palindromic_positive(q + 2));
    CHECK_FALSE(is_monic_palindromic_positive(2 * q + 2 * LaurentPoly::q(-1)));
    CHECK_FALSE(is_monic_palindromic_positive(LaurentPoly()));
    CHECK_FALSE(is_monic_palindromic_positive(q - 1 + LaurentPoly::q(-1)));
  }

  TEST_CASE("evaluation at one") {
    CHECK(eval_at_one(parse_q(golden::first_q_markov()[4].m_q)) == 29);
    CHECK(eval_at_one(LaurentPoly()) == 0);
    CHECK(eval_at_one(parse_q(oracle::kMarkov433)) == 433);
  }

  TEST_CASE("printing") {
    CHECK(parse_q("q^2 + 2q + 1 + 2q^-1 + q^-2").to_string() == "q^2 + 2q + 1 + 2q^-1 + q^-2");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK((-q + 1).to_string() == "-q + 1");
  }

  TEST_CASE("big coefficients stay exact") {
    LaurentPoly p = q + 1;
    LaurentPoly acc = 1;
    for (int i = 0; i < 200; ++i) acc *= p;
    CHECK(acc.coeff(100) == BigInt("90548514656103281165404177077484163874504589675413336841320"));
    CHECK(eval_at_one(acc) == BigInt(1) << 200);
  }
}
