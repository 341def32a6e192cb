#include "qmarkov/snake.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

using Q = LaurentPoly;

enum class Side { S, N, W, E };

std::pair<GridPoint, GridPoint> side_of(const Box& b, Side s) {
  const auto [x, y] = b.corner;
  switch (s) {
    case Side::S: return {{x, y}, {x + 1, y}};
    case Side::N: return {{x, y + 1}, {x + 1, y + 1}};
    case Side::W: return {{x, y}, {x, y + 1}};
    case Side::E: return {{x + 1, y}, {x + 1, y + 1}};
  }
  return {};
}

std::pair<GridPoint, GridPoint> ordered(GridPoint a, GridPoint b) {
  if (b < a) std::swap(a, b);
  return {a, b};
}

class Builder {
 public:
  void add(Step step, std::vector<std::pair<Side, int>> weights) {
    GridPoint c{};
    if (!boxes_.empty()) {
      c = boxes_.back().corner;
      (step == Step::Right ? c.x : c.y) += 1;
    }
    boxes_.push_back({c, step});
    for (Side s : {Side::S, Side::N, Side::W, Side::E}) {
      auto [a, b] = side_of(boxes_.back(), s);
      edges_.emplace(std::pair{a, b}, 0);
    }
    for (auto [s, w] : weights) edges_[side_of(boxes_.back(), s)] = w;
  }

  SnakeGraph finish(const FareyRational& t, std::vector<PieceKind> pieces) && {
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& [ab, w] : edges_) edges.push_back({ab.first, ab.second, w});
    return SnakeGraph(t, std::move(boxes_), std::move(pieces), std::move(edges));
  }

 private:
  std::vector<Box> boxes_;
  std::map<std::pair<GridPoint, GridPoint>, int> edges_;
};

struct Search {
  const SnakeGraph& g;
  const MatchingVisitor& visit;
  std::uint64_t bound;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;  // (neighbour, edge)
  std::vector<bool> matched;
  std::vector<std::uint32_t> chosen;
  std::uint64_t count = 0;

  void run(std::size_t from, int w) {
    while (from < matched.size() && matched[from]) ++from;
    if (from == matched.size()) {
      if (++count > bound) {
        throw Error(ErrorCode::OracleBoundExceeded,
                    g.label().to_string() + " has more than " + std::to_string(bound) + " matchings");
      }
      std::vector<std::uint32_t> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted, w);
      return;
    }
    matched[from] = true;
    for (auto [v, e] : adj[from]) {
      if (matched[v]) continue;
      matched[v] = true;
      chosen.push_back(e);
      run(from + 1, w + g.edges()[e].weight_exp);
      chosen.pop_back();
      matched[v] = false;
    }
    matched[from] = false;
  }
};

LaurentPoly apply_row(const LaurentPoly& c1, const LaurentPoly& c2, const LaurentPoly& a1, const LaurentPoly& a2) {
  return c1 * a1 + c2 * a2;
}

// Labels of the two boxes reached after attaching the given piece, plus any
// intermediate ones.
void attach(PieceKind kind, std::vector<LaurentPoly>& mu) {
  const Q q = Q::q(1);
  const Q a1 = mu[mu.size() - 2];
  const Q a2 = mu.back();
  switch (kind) {
    case PieceKind::A: {
      Q b1 = a2 + q * a1;
      Q b2 = b1 + Q::q(-1) * a2;
      mu.push_back(std::move(b1));
      mu.push_back(std::move(b2));
      break;
    }
    case PieceKind::B: {
      Q g1 = a2 + q * a1;
      Q g2 = g1 + Q::q(2) * a1;
      Q b1 = g2 + Q::q(-1) * g1;
      Q b2 = b1 + Q::q(-2) * g1;
      mu.push_back(std::move(g1));
      mu.push_back(std::move(g2));
      mu.push_back(std::move(b1));
      mu.push_back(std::move(b2));
      break;
    }
    case PieceKind::FinalB: mu.push_back(q * a1 + a2); break;
    default: throw Error(ErrorCode::Malformed, "unexpected piece after the first");
  }
}

}  // namespace

SnakeGraph::SnakeGraph(FareyRational label, std::vector<Box> boxes, std::vector<PieceKind> pieces,
                       std::vector<Edge> edges)
    : label_(label), boxes_(std::move(boxes)), pieces_(std::move(pieces)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
}

std::vector<GridPoint> SnakeGraph::vertices() const {
  std::vector<GridPoint> v;
  for (const Edge& e : edges_) {
    v.push_back(e.from);
    v.push_back(e.to);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t SnakeGraph::edge_index(GridPoint a, GridPoint b) const {
  const auto key = ordered(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& e, const auto& k) {
    return std::tie(e.from, e.to) < std::tie(k.first, k.second);
  });
  if (it == edges_.end() || it->from != key.first || it->to != key.second) {
    throw Error(ErrorCode::InvalidArgument, "no edge between (" + std::to_string(a.x) + "," + std::to_string(a.y) +
                                                ") and (" + std::to_string(b.x) + "," + std::to_string(b.y) + ")");
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

SnakeGraph SnakeGraph::with_weight(GridPoint a, GridPoint b, int weight_exp) const {
  SnakeGraph g = *this;
  g.edges_[edge_index(a, b)].weight_exp = weight_exp;
  return g;
}

SnakeGraph build_snake(const FareyRational& t) {
  if (t.is_zero()) throw Error(ErrorCode::UnsupportedLabel, "0/1 has no snake graph");
  Builder b;
  if (t.is_one()) {
    b.add(Step::Start, {{Side::W, -1}, {Side::S, 1}});
    return std::move(b).finish(t, {PieceKind::SingleBox});
  }
  const std::vector<CohnLetter> word = recode_ab(christoffel_word(t));
  std::vector<PieceKind> pieces{PieceKind::InitialA};
  b.add(Step::Start, {{Side::W, -1}, {Side::S, 1}});
  b.add(Step::Right, {{Side::S, -1}});
  for (std::size_t i = 1; i + 1 < word.size(); ++i) {
    if (word[i] == CohnLetter::A) {
      pieces.push_back(PieceKind::A);
      b.add(Step::Right, {{Side::S, 1}});
      b.add(Step::Right, {{Side::S, -1}});
    } else {
      pieces.push_back(PieceKind::B);
      b.add(Step::Right, {{Side::S, 1}});
      b.add(Step::Up, {{Side::W, 1}});
      b.add(Step::Up, {{Side::W, -1}});
      b.add(Step::Right, {{Side::S, -1}});
    }
  }
  pieces.push_back(PieceKind::FinalB);
  b.add(Step::Right, {{Side::S, 1}});
  return std::move(b).finish(t, std::move(pieces));
}

SnakeGraph build_tilde_snake(const FareyRational& t) {
  const SnakeGraph g = build_snake(t);
  const auto [a, b] = side_of(g.boxes().front(), Side::S);
  return g.with_weight(a, b, 0);
}

int weight_exp(const SnakeGraph& g, const Matching& m) {
  int w = 0;
  for (auto e : m.edges) w += g.edges().at(e).weight_exp;
  return w;
}

bool is_perfect(const SnakeGraph& g, const Matching& m) {
  std::map<GridPoint, int> degree;
  for (const GridPoint& v : g.vertices()) degree[v] = 0;
  for (auto e : m.edges) {
    if (e >= g.edges().size()) return false;
    ++degree[g.edges()[e].from];
    ++degree[g.edges()[e].to];
  }
  return std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 1; });
}

std::uint64_t for_each_matching(const SnakeGraph& g, const MatchingVisitor& visit, std::uint64_t bound) {
  std::map<GridPoint, std::uint32_t> index;
  for (const Box& b : g.boxes()) {
    const auto [x, y] = b.corner;
    for (GridPoint p : {GridPoint{x, y}, GridPoint{x + 1, y}, GridPoint{x, y + 1}, GridPoint{x + 1, y + 1}}) {
      index.emplace(p, static_cast<std::uint32_t>(index.size()));
    }
  }
  Search s{g, visit, bound, {}, {}, {}, 0};
  s.adj.resize(index.size());
  s.matched.assign(index.size(), false);
  for (std::uint32_t e = 0; e < g.edges().size(); ++e) {
    const std::uint32_t u = index.at(g.edges()[e].from);
    const std::uint32_t v = index.at(g.edges()[e].to);
    s.adj[u].emplace_back(v, e);
    s.adj[v].emplace_back(u, e);
  }
  s.run(0, 0);
  return s.count;
}

std::vector<Matching> enumerate_matchings(const SnakeGraph& g, std::uint64_t bound) {
  std::vector<Matching> out;
  for_each_matching(
      g, [&](std::span<const std::uint32_t> edges, int) { out.push_back({{edges.begin(), edges.end()}}); }, bound);
  return out;
}

LaurentPoly weighted_match_count_bruteforce(const SnakeGraph& g, std::uint64_t bound) {
  std::map<int, std::uint64_t> hist;
  for_each_matching(g, [&](std::span<const std::uint32_t>, int w) { ++hist[w]; }, bound);
  LaurentPoly::Terms terms;
  for (auto [e, c] : hist) terms.emplace(e, BigInt(static_cast<unsigned long>(c)));
  return LaurentPoly(std::move(terms));
}

ExtremalMatchings extremal_matchings(const SnakeGraph& g, std::uint64_t bound) {
  ExtremalMatchings r;
  bool first = true;
  for_each_matching(
      g,
      [&](std::span<const std::uint32_t> edges, int w) {
        if (first || w > r.max_exp) {
          r.max_exp = w;
          r.max_count = 0;
          r.max_matching = {{edges.begin(), edges.end()}};
        }
        if (first || w < r.min_exp) {
          r.min_exp = w;
          r.min_count = 0;
          r.min_matching = {{edges.begin(), edges.end()}};
        }
        first = false;
        if (w == r.max_exp) ++r.max_count;
        if (w == r.min_exp) ++r.min_count;
      },
      bound);
  return r;
}

TransferStep a_piece_transfer() {
  const Q q = Q::q(1);
  return {q, 1, q, 1 + Q::q(-1)};
}

TransferStep b_piece_transfer() {
  const Q q = Q::q(1);
  const Q top = Q::q(2) + q + 1;
  return {top, 1 + Q::q(-1), top + Q::q(-1), 1 + Q::q(-1) + Q::q(-2)};
}

LaurentPoly weighted_match_count_transfer(const FareyRational& t) {
  if (t.is_zero()) throw Error(ErrorCode::UnsupportedLabel, "0/1 has no snake graph");
  const Q q = Q::q(1);
  if (t.is_one()) return q + Q::q(-1);
  const std::vector<CohnLetter> word = recode_ab(christoffel_word(t));
  const TransferStep a = a_piece_transfer();
  const TransferStep b = b_piece_transfer();
  Q v1 = q + Q::q(-1);
  Q v2 = q + Q::q(-1) + Q::q(-2);
  for (std::size_t i = 1; i + 1 < word.size(); ++i) {
    const TransferStep& m = word[i] == CohnLetter::A ? a : b;
    Q n1 = apply_row(m.m11, m.m12, v1, v2);
    Q n2 = apply_row(m.m21, m.m22, v1, v2);
    v1 = std::move(n1);
    v2 = std::move(n2);
  }
  return q * v1 + v2;
}

std::vector<LaurentPoly> mu_labels(const SnakeGraph& g) {
  const auto& boxes = g.boxes();
  auto w = [&](std::size_t i, Side s) {
    const auto [a, b] = side_of(boxes[i], s);
    return Q::q(g.weight_exp(a, b));
  };
  std::vector<LaurentPoly> mu;
  mu.push_back(w(0, Side::S) * w(0, Side::N) + w(0, Side::W) * w(0, Side::E));
  if (g.pieces().front() == PieceKind::SingleBox) return mu;
  mu.push_back(w(0, Side::W) * w(0, Side::E) * w(1, Side::E) + w(0, Side::W) * w(1, Side::S) * w(1, Side::N) +
               w(0, Side::S) * w(0, Side::N) * w(1, Side::E));
  for (std::size_t i = 1; i < g.pieces().size(); ++i) attach(g.pieces()[i], mu);
  return mu;
}

std::vector<Letter> lower_boundary_word(const SnakeGraph& g) {
  const auto& boxes = g.boxes();
  std::vector<bool> units{true};  // true = horizontal
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (i == 0 || boxes[i].step == Step::Right) units.push_back(true);
    if (i + 1 == boxes.size() || boxes[i + 1].step == Step::Up) units.push_back(false);
  }
  units.push_back(false);
  if (units.size() % 2 != 0) throw Error(ErrorCode::Malformed, "odd boundary length");
  std::vector<Letter> word;
  for (std::size_t i = 0; i < units.size(); i += 2) {
    if (units[i] != units[i + 1]) throw Error(ErrorCode::Malformed, "boundary turns mid-letter");
    word.push_back(units[i] ? Letter::X : Letter::Y);
  }
  return word;
}

bool boundary_weights_alternate(const SnakeGraph& g) {
  std::vector<std::size_t> west, south;
  for (std::size_t i = 0; i < g.boxes().size(); ++i) {
    const Box& b = g.boxes()[i];
    if (i == 0 || b.step == Step::Up) west.push_back(g.edge_index(side_of(b, Side::W).first, side_of(b, Side::W).second));
    if (i == 0 || b.step == Step::Right) {
      south.push_back(g.edge_index(side_of(b, Side::S).first, side_of(b, Side::S).second));
    }
  }
  std::vector<int> expected(g.edges().size(), 0);
  for (std::size_t k = 0; k < west.size(); ++k) expected[west[k]] = k % 2 == 0 ? -1 : 1;
  for (std::size_t k = 0; k < south.size(); ++k) expected[south[k]] = k % 2 == 0 ? 1 : -1;
  for (std::size_t e = 0; e < expected.size(); ++e) {
    if (g.edges()[e].weight_exp != expected[e]) return false;
  }
  return true;
}

std::string export_dot(const SnakeGraph& g) {
  auto name = [](GridPoint p) { return "v" + std::to_string(p.x) + "_" + std::to_string(p.y); };
  std::ostringstream out;
  out << "graph snake_" << g.label().numerator() << "_" << g.label().denominator() << " {\n";
  out << "  node [shape=point];\n";
  for (const GridPoint& v : g.vertices()) out << "  " << name(v) << " [pos=\"" << v.x << "," << v.y << "!\"];\n";
  for (const Edge& e : g.edges()) {
    out << "  " << name(e.from) << " -- " << name(e.to);
    if (e.weight_exp != 0) out << " [label=\"" << (e.weight_exp > 0 ? "q" : "1/q") << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qmarkov
