#pragma once

/**
 * Weighted snake graphs G_t(q) and their perfect-matching generating
 * polynomials.
 *
 * The graph is assembled from the recoded Christoffel word A w_1 ... w_s B,
 * one piece per letter:
 *
 *   Initial A  2 boxes  R R       W(box1)=q^-1, S = q, q^-1
 *   A          2 boxes  R R       S = q, q^-1
 *   B          4 boxes  R U U R   S(box1)=q, W(box2)=q, W(box3)=q^-1, S(box4)=q^-1
 *   Final B    1 box    R         S = q
 *
 * Each piece is glued to the right-hand vertical edge of the previous one.
 * For t = 1/1 the graph is one box with W = q^-1 and S = q.  Every edge not
 * listed above has weight 1.
 *
 * Two independent counts are provided: exhaustive enumeration of perfect
 * matchings on the explicit graph (the oracle) and the 2x2 transfer-matrix
 * recursion over pieces (the fast path).
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qmarkov/farey.hpp"
#include "qmarkov/laurent.hpp"

namespace qmarkov {

inline constexpr std::uint64_t kDefaultOracleBound = 1'000'000;

struct GridPoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class Step : std::uint8_t { Start, Right, Up };

struct Box {
  GridPoint corner;  // lower-left
  Step step = Step::Start;
};

enum class PieceKind : std::uint8_t { SingleBox, InitialA, A, B, FinalB };

/// Unit edge between two grid points, from < to.  The pair is its identifier.
struct Edge {
  GridPoint from;
  GridPoint to;
  int weight_exp = 0;  // -1, 0, +1 for q^-1, 1, q

  bool horizontal() const { return from.y == to.y; }
};

class SnakeGraph {
 public:
  SnakeGraph(FareyRational label, std::vector<Box> boxes, std::vector<PieceKind> pieces, std::vector<Edge> edges);

  const FareyRational& label() const noexcept { return label_; }
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  const std::vector<PieceKind>& pieces() const noexcept { return pieces_; }
  /// Sorted by (from, to).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted.
  std::vector<GridPoint> vertices() const;

  /// Index into edges() of the edge joining a and b (either order); throws
  /// Error(InvalidArgument) when absent.
  std::size_t edge_index(GridPoint a, GridPoint b) const;
  int weight_exp(GridPoint a, GridPoint b) const { return edges_[edge_index(a, b)].weight_exp; }

  /// The graph with one edge reweighted.
  SnakeGraph with_weight(GridPoint a, GridPoint b, int weight_exp) const;

 private:
  FareyRational label_;
  std::vector<Box> boxes_;
  std::vector<PieceKind> pieces_;
  std::vector<Edge> edges_;
};

/// Throws Error(UnsupportedLabel) for t = 0/1.
SnakeGraph build_snake(const FareyRational& t);
/// build_snake(t) with the first south edge set to weight 1.
SnakeGraph build_tilde_snake(const FareyRational& t);

/// Edge indices into SnakeGraph::edges(), ascending.
struct Matching {
  std::vector<std::uint32_t> edges;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Total weight exponent of a set of edges.
int weight_exp(const SnakeGraph& g, const Matching& m);
/// True iff every vertex of g meets exactly one edge of m.
bool is_perfect(const SnakeGraph& g, const Matching& m);

using MatchingVisitor = std::function<void(std::span<const std::uint32_t> edges, int weight_exp)>;

/// Visits every perfect matching once, by backtracking on the first
/// unmatched vertex in box order.  Throws Error(OracleBoundExceeded) as soon
/// as more than `bound` matchings have been produced.
std::uint64_t for_each_matching(const SnakeGraph& g, const MatchingVisitor& visit,
                                std::uint64_t bound = kDefaultOracleBound);

std::vector<Matching> enumerate_matchings(const SnakeGraph& g, std::uint64_t bound = kDefaultOracleBound);

LaurentPoly weighted_match_count_bruteforce(const SnakeGraph& g, std::uint64_t bound = kDefaultOracleBound);

struct ExtremalMatchings {
  int max_exp = 0;
  int min_exp = 0;
  std::uint64_t max_count = 0;
  std::uint64_t min_count = 0;
  Matching max_matching;  // first one found at max_exp
  Matching min_matching;
};

ExtremalMatchings extremal_matchings(const SnakeGraph& g, std::uint64_t bound = kDefaultOracleBound);

/// Piece attachment as 2x2 maps on (alpha_1, alpha_2), the labels of the last
/// two boxes.  Row-major.
struct TransferStep {
  LaurentPoly m11, m12, m21, m22;
};
TransferStep a_piece_transfer();
TransferStep b_piece_transfer();

/// mu_n = (q 1) M_s ... M_1 (mu_1, mu_2)^T over the interior letters of the
/// recoded word.  t = 1/1 short-circuits to q + q^-1.  Throws
/// Error(UnsupportedLabel) for t = 0/1.
LaurentPoly weighted_match_count_transfer(const FareyRational& t);

/// mu_1 ... mu_n, the weighted counts of the first i boxes, by the piece
/// attachment recurrences.  mu_1 and mu_2 are read off the graph's own edge
/// weights, so the sequence is also valid for the tilde graph.
std::vector<LaurentPoly> mu_labels(const SnakeGraph& g);

/// Reads the lower boundary (half-length first and last steps extended) with
/// X per horizontal and Y per vertical unit of the Christoffel lattice.
std::vector<Letter> lower_boundary_word(const SnakeGraph& g);

/// Western boundary edges alternate q^-1, q, ... from bottom to top, southern
/// boundary edges alternate q, q^-1, ... from left to right, all other edges
/// have weight 1.
bool boundary_weights_alternate(const SnakeGraph& g);

/// Graphviz text with pinned grid positions; deterministic.
std::string export_dot(const SnakeGraph& g);

}  // namespace qmarkov
