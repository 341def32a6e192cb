// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <numeric>
#include <string>
#include <vector>

#include "golden.hpp"
#include "oracles.hpp"
#include "qmarkov/cluster.hpp"
#include "qmarkov/cohn.hpp"
#include "qmarkov/error.hpp"
#include "qmarkov/markov.hpp"
#include "qmarkov/snake.hpp"

using namespace qmarkov;
using oracle::parse_q;

namespace {

constexpr std::int64_t kSweepDenominator = 17;
constexpr std::size_t kSweepLabels = 97;
constexpr unsigned long kBruteForceLimit = 1'000'000;
constexpr double kGoldenSeconds = 1.0;
constexpr double kSweepSeconds = 30.0;
constexpr double kScaleSeconds = 5.0;
constexpr std::size_t kScaleWordLength = 200;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = seconds_since(start);
  std::printf("%s %2d %-38s %8.3f s%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

const std::vector<FareyRational>& sweep() {
  static const std::vector<FareyRational> labels = farey_labels(kSweepDenominator);
  return labels;
}

struct LabelCheck {
  bool agree = true;
  bool brute_forced = false;
  std::string first_problem;
};

LabelCheck four_way(const FareyRational& t) {
  LabelCheck c;
  auto note = [&](bool ok, const char* what) {
    if (!ok && c.agree) c.first_problem = t.to_string() + " " + what;
    c.agree = c.agree && ok;
  };
  const LaurentPoly m = q_markov_number(t);
  for (int n = 0; n <= 2; ++n) note(q_markov_via_trace(t, n) == m, "trace");
  if (t.is_zero()) return c;
  note(weighted_match_count_transfer(t) == m, "transfer");
  if (classical_markov_number(t) <= kBruteForceLimit) {
    const SnakeGraph g = build_snake(t);
    note(weighted_match_count_bruteforce(g, kBruteForceLimit) == m, "bruteforce");
    c.brute_forced = true;
  }
  return c;
}

FareyRational scale_label() {
  // Largest numerator coprime to the denominator with p + r = word length.
  for (std::int64_t p = kScaleWordLength / 2 - 1; p > 0; --p) {
    const std::int64_t r = static_cast<std::int64_t>(kScaleWordLength) - p;
    if (std::gcd(p, r) == 1) return {p, r};
  }
  return {1, 1};
}

}  // namespace

int main() {
  report(1, "golden table", [] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& g : golden::first_q_markov()) {
      o.require(q_markov_number(g.t) == parse_q(g.m_q), g.t.to_string());
    }
    o.require(golden::first_q_markov().size() == 9, "table size");
    o.require(seconds_since(start) < kGoldenSeconds, "too slow");
    return o;
  });

  report(2, "four-way agreement", [] {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto& labels = sweep();
    o.require(labels.size() == kSweepLabels, "label count " + std::to_string(labels.size()));
    std::vector<std::future<LabelCheck>> jobs;
    for (const auto& t : labels) jobs.push_back(std::async(std::launch::async, four_way, t));
    std::size_t brute = 0;
    for (auto& j : jobs) {
      const LabelCheck c = j.get();
      o.require(c.agree, c.first_problem);
      brute += c.brute_forced;
    }
    o.detail = o.pass ? std::to_string(labels.size()) + " labels, " + std::to_string(brute) + " brute-forced"
                      : o.detail;
    o.require(seconds_since(start) < kSweepSeconds, "too slow");
    return o;
  });

  report(3, "q-Markov equation residual", [] {
    Outcome o;
    for (const auto& t : sweep()) {
      if (t.is_zero()) continue;
      o.require(equation_residual(vertex_triple(t)).is_zero(), t.to_string());
    }
    return o;
  });

  report(4, "monic palindromic positive unimodal", [] {
    Outcome o;
    for (const auto& t : sweep()) {
      const LaurentPoly m = q_markov_number(t);
      o.require(is_monic_palindromic_positive(m), t.to_string() + " shape");
      o.require(is_unimodal(m) == !t.is_one(), t.to_string() + " unimodality");
    }
    std::size_t checked = 0;
    for (const auto& t : sweep()) {
      if (t.is_zero() || classical_markov_number(t) > kBruteForceLimit) continue;
      const ExtremalMatchings ex = extremal_matchings(build_snake(t), kBruteForceLimit);
      o.require(ex.max_count == 1 && ex.min_count == 1, t.to_string() + " extremal matchings");
      ++checked;
    }
    if (o.pass) o.detail = std::to_string(checked) + " graphs enumerated";
    return o;
  });

  report(5, "label round-trip", [] {
    Outcome o;
    for (const auto& t : sweep()) o.require(recover_label(q_markov_number(t)) == t, t.to_string());
    return o;
  });

  report(6, "Cohn trace constants", [] {
    Outcome o;
    const LaurentPoly two = LaurentPoly::q(1) + LaurentPoly::q(-1);
    for (int n = -5; n <= 8; ++n) {
      const auto tag = "n=" + std::to_string(n);
      o.require(cohn_a(n).trace() == markov_coefficient(), tag + " Tr A");
      o.require(cohn_b(n).trace() == markov_coefficient() * two, tag + " Tr B");
      o.require(cohn_a(n).det() == 1 && cohn_b(n).det() == 1, tag + " det");
    }
    const Generators g = generators_q();
    const QMatrix2 p = braid_partner();
    o.require((g.t * p * g.t - p * g.t * p).is_zero(), "braid relation");
    for (int n = -3; n <= 6; ++n) o.require(extended_tree_identity(n), "A(n)B(n)^-1 at n=" + std::to_string(n));
    return o;
  });

  report(7, "3/5 snake graph", [] {
    Outcome o;
    const SnakeGraph g = build_snake({3, 5});
    o.require(g.boxes().size() == 13, "box count");
    const auto mu = mu_labels(g);
    o.require(mu.size() == golden::kFig35Labels.size(), "label count");
    for (std::size_t i = 0; i < mu.size() && i < golden::kFig35Labels.size(); ++i) {
      o.require(eval_at_one(mu[i]) == golden::kFig35Labels[i], "mu_" + std::to_string(i + 1));
    }
    std::size_t nonunit = 0;
    for (const Edge& e : g.edges()) nonunit += e.weight_exp != 0;
    o.require(nonunit == golden::kFig35Weights.size(), "nonunit edge count");
    for (const auto& e : golden::kFig35Weights) {
      o.require(g.weight_exp({e.x0, e.y0}, {e.x1, e.y1}) == e.weight_exp, "edge weight");
    }
    o.require(mu.back() == q_markov_number({3, 5}), "mu_n");
    o.require(mu.back() == parse_q(oracle::kMarkov433), "433_q");
    return o;
  });

  report(8, "tilde deformation of 2/3", [] {
    Outcome o;
    const LaurentPoly expected = parse_q(golden::kTilde23);
    o.require(expected.term_count() == 8, "term count");
    o.require(tilde_q_markov({2, 3}) == expected, "matrix entry");
    o.require(weighted_match_count_bruteforce(build_tilde_snake({2, 3})) == expected, "tilde graph");
    return o;
  });

  report(9, "F-polynomial instances", [] {
    Outcome o;
    o.require(known_f_labels().size() == 6, "vector count");
    for (const auto& t : known_f_labels()) {
      const TriPoly f = *known_f_polynomial(t);
      o.require(conjecture_check(t, f), t.to_string() + " top-right entry");
      o.require(f.eval_at_one() == classical_markov_number(t), t.to_string() + " at (1,1,1)");
      o.require(f.has_positive_coefficients(), t.to_string() + " positivity");
    }
    o.require(projectively_equal(hat_a().specialize_q(), cohn_a(2)), "A^ at y=q");
    o.require(projectively_equal(hat_b().specialize_q(), cohn_b(2)), "B^ at y=q");
    return o;
  });

  report(10, "scale probe, word length 200", [] {
    Outcome o;
    const FareyRational t = scale_label();
    o.require(christoffel_word(t).letters.size() == kScaleWordLength, "word length");
    const auto start = std::chrono::steady_clock::now();
    const LaurentPoly m = weighted_match_count_transfer(t);
    const double s = seconds_since(start);
    o.require(s < kScaleSeconds, "transfer too slow");
    o.require(m == q_markov_via_trace(t, 1), "trace disagrees");
    if (o.pass) {
      o.detail = t.to_string() + ", degree " + std::to_string(m.degree()) + ", " +
                 std::to_string(eval_at_one(m).get_str().size()) + " digits, transfer " + std::to_string(s) + " s";
    }
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
