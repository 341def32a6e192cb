#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>

#include "qmarkov/cluster.hpp"
#include "qmarkov/cohn.hpp"
#include "qmarkov/error.hpp"
#include "qmarkov/markov.hpp"
#include "qmarkov/serialize.hpp"
#include "qmarkov/snake.hpp"
#include "qmarkov/verify.hpp"

namespace qmarkov::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string label;
  std::string method = "mutation";
  bool json = false;
  bool csv = false;
  bool tilde = false;
  bool mu = false;
  bool check_relations = false;
  bool serial = false;
  int n = 1;
  std::string n_range = "-2:4";
  std::string dot_file;
  std::int64_t max_den = 8;
  std::uint64_t bound = kDefaultOracleBound;
};

std::uint64_t parse_bound(const std::string& s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v == 0) {
    throw Error(ErrorCode::MalformedInput, "oracle bound must be a positive integer: '" + s + "'");
  }
  return v;
}

std::pair<int, int> parse_range(const std::string& s) {
  static const std::regex re(R"((-?\d+):(-?\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Error(ErrorCode::MalformedInput, "expected LO:HI, got '" + s + "'");
  const int lo = std::stoi(m[1]);
  const int hi = std::stoi(m[2]);
  if (lo > hi) throw Error(ErrorCode::MalformedInput, "empty n-range " + s);
  return {lo, hi};
}

bool looks_like_label(const std::string& s) {
  static const std::regex re(R"(-?\d+/-?\d+)");
  return std::regex_match(s, re);
}

// --- compute ---------------------------------------------------------------

int cmd_compute(const Config& c, std::ostream& out) {
  const FareyRational t = FareyRational::parse(c.label);
  const std::vector<std::string> all{"mutation", "cohn", "snake", "bruteforce"};
  const std::vector<std::string> methods = c.method == "all" ? all : std::vector<std::string>{c.method};

  std::vector<std::pair<std::string, LaurentPoly>> results;
  std::vector<std::pair<std::string, std::string>> skipped;
  for (const auto& m : methods) {
    const bool snake_based = m == "snake" || m == "bruteforce";
    if (c.method == "all" && snake_based && t.is_zero()) {
      skipped.emplace_back(m, "no snake graph for 0/1");
      continue;
    }
    if (m == "mutation") {
      results.emplace_back(m, q_markov_number(t));
    } else if (m == "cohn") {
      results.emplace_back(m, q_markov_via_trace(t, c.n));
    } else if (m == "snake") {
      results.emplace_back(m, weighted_match_count_transfer(t));
    } else {
      if (c.method == "all" && classical_markov_number(t) > BigInt(static_cast<unsigned long>(c.bound))) {
        skipped.emplace_back(m, "classical number exceeds oracle bound " + std::to_string(c.bound));
        continue;
      }
      results.emplace_back(m, weighted_match_count_bruteforce(build_snake(t), c.bound));
    }
  }
  const bool agree = std::all_of(results.begin(), results.end(),
                                 [&](const auto& r) { return r.second == results.front().second; });

  if (c.json) {
    json j{{"label", t.to_string()}, {"results", json::object()}, {"skipped", json::object()}, {"agree", agree}};
    for (const auto& [m, p] : results) j["results"][m] = to_json(p);
    for (const auto& [m, why] : skipped) j["skipped"][m] = why;
    out << j.dump(2) << "\n";
  } else if (results.size() == 1 && skipped.empty()) {
    out << results.front().second.to_string() << "\n";
  } else {
    for (const auto& [m, p] : results) out << std::left << std::setw(12) << m << p.to_string() << "\n";
    for (const auto& [m, why] : skipped) out << std::left << std::setw(12) << m << "skipped: " << why << "\n";
    out << "verdict: " << (agree ? "OK" : "DISAGREE") << "\n";
  }
  return agree ? kOk : kDisagreement;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const Config& c, std::ostream& out) {
  const VerifyReport r = run_verify({c.max_den, c.bound, !c.serial});
  if (c.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << "labels " << r.labels << " (max denominator " << r.max_denominator << ")\n";
    for (const auto& inv : r.invariants) {
      out << std::left << std::setw(28) << inv.name << inv.passed << "/" << inv.checked;
      if (!inv.failures.empty()) {
        out << "  FAIL:";
        for (const auto& l : inv.failures) out << " " << l;
      }
      out << "\n";
    }
    out << "failures " << r.failures() << "\n";
  }
  return r.ok() ? kOk : kDisagreement;
}

// --- tree ------------------------------------------------------------------

int cmd_tree(const Config& c, std::ostream& out) {
  if (c.max_den < 1) throw Error(ErrorCode::MalformedInput, "max denominator must be positive");
  if (c.csv) out << "label,classical,min_exp,coeffs\n";
  for (const auto& t : farey_labels(c.max_den)) {
    const LaurentPoly m = q_markov_number(t);
    if (c.csv) {
      std::string coeffs;
      for (const auto& x : m.dense()) coeffs += (coeffs.empty() ? "" : " ") + x.get_str();
      out << t.to_string() << "," << eval_at_one(m).get_str() << "," << m.min_degree() << "," << coeffs << "\n";
    } else {
      out << json{{"label", t.to_string()}, {"classical", eval_at_one(m).get_str()}, {"m_q", to_json(m)}}.dump()
          << "\n";
    }
  }
  return kOk;
}

// --- snake -----------------------------------------------------------------

int cmd_snake(const Config& c, std::ostream& out) {
  const FareyRational t = FareyRational::parse(c.label);
  const SnakeGraph g = c.tilde ? build_tilde_snake(t) : build_snake(t);
  const std::vector<LaurentPoly> mu = mu_labels(g);

  if (!c.dot_file.empty()) {
    if (c.dot_file == "-") {
      out << export_dot(g);
      return kOk;
    }
    std::ofstream f(c.dot_file);
    if (!f) throw Error(ErrorCode::MalformedInput, "cannot write " + c.dot_file);
    f << export_dot(g);
  }

  if (c.json) {
    json j = to_json(g);
    j["tilde"] = c.tilde;
    j["count"] = to_json(mu.back());
    if (c.mu) {
      j["mu_labels"] = json::array();
      for (const auto& p : mu) j["mu_labels"].push_back(to_json(p));
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "label  " << t.to_string() << (c.tilde ? " (tilde)" : "") << "\n";
  out << "boxes  " << g.boxes().size() << "\n";
  out << "edges  " << g.edges().size() << "\n";
  out << "count  " << mu.back().to_string() << "\n";
  if (c.mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
      out << "mu_" << i + 1 << "  " << eval_at_one(mu[i]).get_str() << "  " << mu[i].to_string() << "\n";
    }
  }
  return kOk;
}

// --- cohn ------------------------------------------------------------------

int cmd_cohn(const Config& c, std::ostream& out) {
  const FareyRational t = FareyRational::parse(c.label);
  const auto [lo, hi] = parse_range(c.n_range);
  const QMatrix2 m = cohn_matrix(t, c.n);
  const LaurentPoly markov = q_markov_number(t);

  bool relations = true;
  bool independent = true;
  if (c.check_relations) {
    relations = entry_relations_check(m);
    for (int k = lo; k <= hi && independent; ++k) {
      try {
        independent = q_markov_via_trace(t, k) == markov;
      } catch (const Error&) {
        independent = false;
      }
    }
  }
  const bool ok = relations && independent;

  if (c.json) {
    json j{{"label", t.to_string()}, {"n", c.n}, {"matrix", to_json(m)}, {"trace", to_json(m.trace())}};
    if (c.check_relations) {
      j["entry_relations"] = relations;
      j["n_independence"] = {{"range", {lo, hi}}, {"ok", independent}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "C(" << c.n << ") for " << t.to_string() << "\n";
    out << "  [" << m.e11().to_string() << ", " << m.e12().to_string() << "]\n";
    out << "  [" << m.e21().to_string() << ", " << m.e22().to_string() << "]\n";
    out << "trace  " << m.trace().to_string() << "\n";
    if (c.check_relations) {
      out << "entry relations  " << (relations ? "ok" : "FAIL") << "\n";
      out << "n-independence " << lo << ".." << hi << "  " << (independent ? "ok" : "FAIL") << "\n";
    }
  }
  return ok ? kOk : kDisagreement;
}

// --- conjecture ------------------------------------------------------------

int cmd_conjecture(const Config& c, std::ostream& out) {
  const FareyRational t = FareyRational::parse(c.label);
  const TriMatrix2 h = hat_cohn(t);
  const TriPoly& top = h.e12();
  const std::optional<TriPoly> known = known_f_polynomial(t);
  const BigInt classical = classical_markov_number(t);
  const bool at_one = top.eval_at_one() == classical;
  const std::string status = !known ? "no reference" : (*known == top ? "pass" : "fail");

  if (c.json) {
    json j{{"label", t.to_string()},
           {"top_right", to_json(top)},
           {"top_right_text", top.to_string()},
           {"at_one", top.eval_at_one().get_str()},
           {"classical", classical.get_str()},
           {"status", status}};
    out << j.dump(2) << "\n";
  } else {
    out << "label      " << t.to_string() << "\n";
    out << "top right  " << top.to_string() << "\n";
    out << "at (1,1,1) " << top.eval_at_one().get_str() << " (classical " << classical.get_str() << ")\n";
    out << "reference  " << status << "\n";
  }
  return status == "fail" || !at_one ? kDisagreement : kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::optional<std::string> env_bound) {
  if (!args.empty() && looks_like_label(args.front())) args.insert(args.begin(), "compute");

  Config c;
  std::uint64_t bound_flag = 0;
  CLI::App app{"q-deformed Markov numbers: mutation, Cohn traces and snake-graph matchings", "qmarkov"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--oracle-bound", bound_flag, "Largest matching count the brute-force enumerator will visit")
      ->check(CLI::PositiveNumber);

  auto* compute = app.add_subcommand("compute", "m_q^t by one or all methods");
  compute->add_option("label", c.label, "p/r")->required();
  compute->add_option("--method", c.method, "mutation, cohn, snake, bruteforce or all")
      ->check(CLI::IsMember({"mutation", "cohn", "snake", "bruteforce", "all"}));
  compute->add_option("--n", c.n, "Cohn family parameter for the trace method");
  compute->add_flag("--json", c.json);

  auto* verify = app.add_subcommand("verify", "Invariant sweep over all labels");
  verify->add_option("--max-denominator", c.max_den)->check(CLI::PositiveNumber);
  verify->add_flag("--json", c.json);
  verify->add_flag("--serial", c.serial, "Check labels on one thread");

  auto* tree = app.add_subcommand("tree", "All (t, m_q^t) pairs, one per line");
  tree->add_option("--max-denominator", c.max_den)->check(CLI::PositiveNumber);
  tree->add_flag("--csv", c.csv);

  auto* snake = app.add_subcommand("snake", "Weighted snake graph of t");
  snake->add_option("label", c.label, "p/r")->required();
  snake->add_option("--dot", c.dot_file, "Write Graphviz to FILE ('-' for stdout)");
  snake->add_flag("--json", c.json);
  snake->add_flag("--tilde", c.tilde, "Drop the weight of the first south edge");
  snake->add_flag("--mu-labels", c.mu, "Per-box partial counts");

  auto* cohn = app.add_subcommand("cohn", "q-Cohn matrix C_t(n)");
  cohn->add_option("label", c.label, "p/r")->required();
  cohn->add_option("--n", c.n);
  cohn->add_option("--n-range", c.n_range, "LO:HI for the n-independence check");
  cohn->add_flag("--json", c.json);
  cohn->add_flag("--check-relations", c.check_relations);

  auto* conj = app.add_subcommand("conjecture", "Top-right entry of the three-parameter Cohn matrix");
  conj->add_option("label", c.label, "p/r")->required();
  conj->add_flag("--json", c.json);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (bound_flag > 0) {
      c.bound = bound_flag;
    } else if (env_bound) {
      c.bound = parse_bound(*env_bound);
    }
    if (compute->parsed()) return cmd_compute(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (tree->parsed()) return cmd_tree(c, out);
    if (snake->parsed()) return cmd_snake(c, out);
    if (cohn->parsed()) return cmd_cohn(c, out);
    return cmd_conjecture(c, out);
  } catch (const Error& e) {
    err << "qmarkov: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace qmarkov::cli
