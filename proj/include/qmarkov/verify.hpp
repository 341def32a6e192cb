#pragma once

// Invariant sweep over all Farey labels up to a denominator bound.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmarkov/snake.hpp"

namespace qmarkov {

struct VerifyOptions {
  std::int64_t max_denominator = 8;
  /// Brute-force matching checks run only where the classical number is at most this.
  std::uint64_t oracle_bound = kDefaultOracleBound;
  bool parallel = true;
};

struct InvariantTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;  // labels, in sweep order
};

struct VerifyReport {
  std::int64_t max_denominator = 0;
  std::size_t labels = 0;
  std::vector<InvariantTally> invariants;

  bool ok() const;
  std::size_t failures() const;
};

/// Names in report order.
const std::vector<std::string>& invariant_names();

VerifyReport run_verify(const VerifyOptions& opts);

nlohmann::json to_json(const VerifyReport& r);

}  // namespace qmarkov
