#pragma once

// Reference computations used only by the tests.  Each one takes a different
// route from the library code it checks.

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qmarkov/cohn.hpp"
#include "qmarkov/farey.hpp"
#include "qmarkov/laurent.hpp"
#include "qmarkov/snake.hpp"

namespace oracle {

using qmarkov::BigInt;
using qmarkov::LaurentPoly;
using qmarkov::QMatrix2;

/// Reads "q^6 + 4q^5 + 29q + 30 + 4q^{-5} + q^{-6}" as printed.
inline LaurentPoly parse_q(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') s.push_back(c);
  }
  std::map<int, BigInt> terms;
  std::size_t i = 0;
  auto digits = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    std::string c = digits();
    BigInt coeff = c.empty() ? BigInt(1) : BigInt(c);
    int e = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (s[i] == '-') {
          esign = -1;
          ++i;
        }
        e = esign * std::stoi(digits());
      }
    } else if (c.empty()) {
      throw std::invalid_argument("bad polynomial text");
    }
    terms[e] += sign * coeff;
  }
  return LaurentPoly(LaurentPoly::Terms(terms.begin(), terms.end()));
}

/// Schoolbook product over a plain map.
inline std::map<int, BigInt> naive_mul(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, BigInt> out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// [n]_q as an explicit geometric sum.
inline LaurentPoly q_int_sum(int n) {
  LaurentPoly r;
  if (n >= 0) {
    for (int i = 0; i < n; ++i) r += LaurentPoly::q(i);
  } else {
    for (int i = n; i < 0; ++i) r -= LaurentPoly::q(i);
  }
  return r;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int span = 6, int max_terms = 6) {
  std::uniform_int_distribution<int> exp(-span, span);
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> count(0, max_terms);
  LaurentPoly p;
  for (int k = count(rng); k > 0; --k) p += LaurentPoly::monomial(coeff(rng), exp(rng));
  return p;
}

inline QMatrix2 mat_pow(const QMatrix2& m, const QMatrix2& m_inv, int k) {
  QMatrix2 r = QMatrix2::identity();
  for (int i = 0; i < k; ++i) r = r * m;
  for (int i = 0; i > k; --i) r = r * m_inv;
  return r;
}

/// q^-2 L^{3-n} S L^n with L = [[q,0],[q,1]], S = [[0,1],[-q,0]] and
/// L^-1 = [[q^-1,0],[-1,1]].
inline QMatrix2 cohn_a_generators(int n) {
  const LaurentPoly q = LaurentPoly::q(1);
  const QMatrix2 l{q, 0, q, 1};
  const QMatrix2 l_inv{LaurentPoly::q(-1), 0, -1, 1};
  const QMatrix2 s{0, 1, -q, 0};
  return (mat_pow(l, l_inv, 3 - n) * s * mat_pow(l, l_inv, n)).scaled(LaurentPoly::q(-2));
}

/// The closed form of B(n)_q entry by entry.
inline QMatrix2 cohn_b_explicit(int n) {
  using qmarkov::q_int;
  const LaurentPoly q = LaurentPoly::q(1);
  const LaurentPoly two = q_int(2);
  return {LaurentPoly::q(1 - n) * q_int(n + 1) * two - q, LaurentPoly::q(-n) * two,
          LaurentPoly::q(-1) * q_int(n + 1) * q_int(3 - n) * two - q_int(n + 1) - LaurentPoly::q(n - 1) * q_int(3 - n),
          LaurentPoly::q(-2) * q_int(3 - n) * two - LaurentPoly::q(-1)};
}

using IntMat = std::array<BigInt, 4>;

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// Classical Markov number as the top-right entry of the recoded word in
/// A = [[2,1],[1,1]], B = [[5,2],[2,1]].
inline BigInt classical_via_cohn(const qmarkov::FareyRational& t) {
  if (t.is_zero()) return 1;
  const IntMat a{2, 1, 1, 1};
  const IntMat b{5, 2, 2, 1};
  IntMat m{1, 0, 0, 1};
  for (auto l : qmarkov::recode_ab(qmarkov::christoffel_word(t))) m = int_mul(m, l == qmarkov::CohnLetter::A ? a : b);
  return m[1];
}

/// Every classical Markov number up to `limit`, by Vieta jumping from (1,1,1).
inline std::set<BigInt> markov_numbers_upto(const BigInt& limit) {
  std::set<BigInt> seen;
  std::set<std::array<BigInt, 3>> done;
  std::vector<std::array<BigInt, 3>> stack{{1, 1, 1}};
  while (!stack.empty()) {
    auto t = stack.back();
    stack.pop_back();
    std::sort(t.begin(), t.end());
    if (t[2] > limit || !done.insert(t).second) continue;
    for (const auto& x : t) seen.insert(x);
    for (int i = 0; i < 3; ++i) {
      auto n = t;
      n[i] = 3 * t[(i + 1) % 3] * t[(i + 2) % 3] - t[i];
      if (n[i] > 0) stack.push_back(n);
    }
  }
  return seen;
}

/// Weighted matching count by include/exclude over edges in index order,
/// pruning once a vertex has no remaining edge.
inline LaurentPoly matchings_by_edges(const qmarkov::SnakeGraph& g) {
  const auto verts = g.vertices();
  auto vid = [&](qmarkov::GridPoint p) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
  };
  const auto& edges = g.edges();
  std::vector<std::size_t> last(verts.size(), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    last[vid(edges[e].from)] = e;
    last[vid(edges[e].to)] = e;
  }
  std::map<int, BigInt> hist;
  std::vector<bool> used(verts.size(), false);
  auto rec = [&](auto&& self, std::size_t e, int w) -> void {
    if (e == edges.size()) {
      if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) hist[w] += 1;
      return;
    }
    const std::size_t u = vid(edges[e].from);
    const std::size_t v = vid(edges[e].to);
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      self(self, e + 1, w + edges[e].weight_exp);
      used[u] = used[v] = false;
    }
    if ((!used[u] && last[u] == e) || (!used[v] && last[v] == e)) return;
    self(self, e + 1, w);
  };
  rec(rec, 0, 0);
  return LaurentPoly(LaurentPoly::Terms(hist.begin(), hist.end()));
}

// Frozen from an independent symbolic computation.
inline const char* const kMarkov433 =
    "q^7 + 4q^6 + 11q^5 + 22q^4 + 36q^3 + 50q^2 + 60q + 65 + 60q^-1 + 50q^-2 + 36q^-3 + 22q^-4 + 11q^-5 + 4q^-6 "
    "+ q^-7";

}  // namespace oracle
