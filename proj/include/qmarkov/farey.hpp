#pragma once

// Farey labels in [0,1], their Stern-Brocot descent, and Christoffel words.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmarkov {

class FareyRational {
 public:
  /// Reduces silently; throws Error(InvalidArgument) unless 0 <= p/r <= 1 with r > 0.
  FareyRational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p/r".  Throws Error(MalformedInput) on bad syntax.
  static FareyRational parse(std::string_view text);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == den_; }

  std::string to_string() const;

  friend bool operator==(const FareyRational&, const FareyRational&) = default;
  friend bool operator<(const FareyRational& a, const FareyRational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Farey sum of two neighbours; throws Error(NotNeighbors) otherwise.
FareyRational mediant(const FareyRational& a, const FareyRational& b);

enum class Branch : std::uint8_t { Left, Right };

/// Descent from the top vertex (whose new region is 1/2) to the region of t.
/// 0/1 and 1/1 are root-adjacent and return an empty path, as does 1/2.
std::vector<Branch> stern_brocot_path(const FareyRational& t);

/// Replays a descent path by mediants; inverse of stern_brocot_path on (0,1).
FareyRational follow_path(const std::vector<Branch>& path);

/// All reduced labels in [0,1] with denominator <= max_den, ordered by
/// denominator then numerator.
std::vector<FareyRational> farey_labels(std::int64_t max_den);

enum class Letter : char { X = 'X', Y = 'Y' };
enum class CohnLetter : char { A = 'A', B = 'B' };

struct ChristoffelWord {
  std::vector<Letter> letters;
  FareyRational label{0, 1};

  std::string to_string() const;
};

/// Built by the tree concatenation rule: region t carries uv where u, v are
/// the words of its left and right parent regions; w(0/1) = X, w(1/1) = XY.
ChristoffelWord christoffel_word(const FareyRational& t);

/// Recoding through A = X, B = XY.  Throws Error(Malformed) if the word is
/// not in the image of that substitution.
std::vector<CohnLetter> recode_ab(const ChristoffelWord& w);

/// The substitution A -> X, B -> XY.
std::vector<Letter> expand_ab(const std::vector<CohnLetter>& w);

std::string to_string(const std::vector<CohnLetter>& w);
std::string to_string(const std::vector<Letter>& w);

}  // namespace qmarkov
