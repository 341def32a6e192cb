#include "qmarkov/verify.hpp"

#include <future>
#include <optional>

#include "qmarkov/cohn.hpp"
#include "qmarkov/error.hpp"
#include "qmarkov/markov.hpp"

namespace qmarkov {

namespace {

enum Inv : std::size_t {
  kEquation,
  kMonic,
  kPalindromic,
  kPositive,
  kUnimodal,
  kRoundTrip,
  kNIndependence,
  kEntryRelations,
  kTransfer,
  kMuLabels,
  kBruteForce,
  kExtremal,
  kBoundaryWord,
  kBoundaryWeights,
  kTilde,
  kCount
};

// One slot per invariant: nullopt when it does not apply to the label.
using LabelResult = std::array<std::optional<bool>, kCount>;

LabelResult check_label(const FareyRational& t, std::uint64_t bound) {
  LabelResult r;
  const LaurentPoly m = q_markov_number(t);

  if (!t.is_zero()) r[kEquation] = verify_equation(vertex_triple(t));
  r[kMonic] = m.leading_coeff() == 1 && m.trailing_coeff() == 1;
  r[kPalindromic] = is_palindromic(m);
  r[kPositive] = is_monic_palindromic_positive(m);
  r[kUnimodal] = is_unimodal(m) != t.is_one();
  try {
    r[kRoundTrip] = recover_label(m) == t;
  } catch (const Error&) {
    r[kRoundTrip] = false;
  }

  bool same = true;
  bool relations = true;
  for (int n = 0; n <= 2; ++n) {
    try {
      same = same && q_markov_via_trace(t, n) == m;
    } catch (const Error&) {
      same = false;
    }
    relations = relations && entry_relations_check(cohn_matrix(t, n));
  }
  r[kNIndependence] = same;
  r[kEntryRelations] = relations;

  if (t.is_zero()) return r;

  r[kTransfer] = weighted_match_count_transfer(t) == m;
  const SnakeGraph g = build_snake(t);
  r[kMuLabels] = mu_labels(g).back() == m;
  r[kBoundaryWord] = lower_boundary_word(g) == christoffel_word(t).letters;
  r[kBoundaryWeights] = boundary_weights_alternate(g);
  const SnakeGraph tilde = build_tilde_snake(t);
  r[kTilde] = mu_labels(tilde).back() == tilde_q_markov(t);

  if (classical_markov_number(t) <= BigInt(static_cast<unsigned long>(bound))) {
    r[kBruteForce] = weighted_match_count_bruteforce(g, bound) == m;
    const ExtremalMatchings ex = extremal_matchings(g, bound);
    r[kExtremal] = ex.max_count == 1 && ex.min_count == 1;
  }
  return r;
}

}  // namespace

const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names{
      "markov_equation", "monic",        "palindromic",   "positive",         "unimodal_except_2q",
      "label_roundtrip", "n_independence", "entry_relations", "transfer_agrees", "mu_labels_agree",
      "bruteforce_agrees", "unique_extremal_matchings", "boundary_word", "boundary_weights", "tilde_count"};
  return names;
}

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& inv : invariants) n += inv.checked - inv.passed;
  return n;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  if (opts.max_denominator < 1) throw Error(ErrorCode::InvalidArgument, "max denominator must be positive");
  if (opts.oracle_bound < 1) throw Error(ErrorCode::InvalidArgument, "oracle bound must be positive");
  const std::vector<FareyRational> labels = farey_labels(opts.max_denominator);

  std::vector<LabelResult> results(labels.size());
  if (opts.parallel) {
    std::vector<std::future<LabelResult>> futures;
    futures.reserve(labels.size());
    for (const auto& t : labels) futures.push_back(std::async(std::launch::async, check_label, t, opts.oracle_bound));
    for (std::size_t i = 0; i < labels.size(); ++i) results[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < labels.size(); ++i) results[i] = check_label(labels[i], opts.oracle_bound);
  }

  VerifyReport report;
  report.max_denominator = opts.max_denominator;
  report.labels = labels.size();
  for (const auto& name : invariant_names()) report.invariants.push_back({name, 0, 0, {}});
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t k = 0; k < kCount; ++k) {
      if (!results[i][k]) continue;
      auto& tally = report.invariants[k];
      ++tally.checked;
      if (*results[i][k]) {
        ++tally.passed;
      } else {
        tally.failures.push_back(labels[i].to_string());
      }
    }
  }
  return report;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json invariants = nlohmann::json::array();
  for (const auto& inv : r.invariants) {
    invariants.push_back(
        {{"name", inv.name}, {"checked", inv.checked}, {"passed", inv.passed}, {"failures", inv.failures}});
  }
  return {{"max_denominator", r.max_denominator},
          {"labels", r.labels},
          {"invariants", invariants},
          {"ok", r.ok()}};
}

}  // namespace qmarkov
