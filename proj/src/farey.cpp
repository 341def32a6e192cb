#include "qmarkov/farey.hpp"

#include <charconv>
#include <numeric>

#include "qmarkov/error.hpp"

namespace qmarkov {

FareyRational::FareyRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0 || numerator > denominator) {
    throw Error(ErrorCode::InvalidArgument,
                "label must satisfy 0 <= p/r <= 1 with r > 0, got " + std::to_string(numerator) + "/" +
                    std::to_string(denominator));
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

FareyRational FareyRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::MalformedInput, "expected p/r, got '" + std::string(text) + "'");
  }
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (part.empty() || ec != std::errc() || ptr != end) {
      throw Error(ErrorCode::MalformedInput, "expected p/r, got '" + std::string(text) + "'");
    }
    return v;
  };
  const std::int64_t p = read(text.substr(0, slash));
  const std::int64_t r = read(text.substr(slash + 1));
  try {
    return FareyRational(p, r);
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

std::string FareyRational::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

FareyRational mediant(const FareyRational& a, const FareyRational& b) {
  const std::int64_t det = a.numerator() * b.denominator() - b.numerator() * a.denominator();
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotNeighbors, a.to_string() + " and " + b.to_string());
  }
  return {a.numerator() + b.numerator(), a.denominator() + b.denominator()};
}

std::vector<Branch> stern_brocot_path(const FareyRational& t) {
  std::vector<Branch> path;
  if (t.is_zero() || t.is_one()) return path;
  FareyRational lo(0, 1), hi(1, 1);
  FareyRational cur = mediant(lo, hi);
  while (!(cur == t)) {
    if (t < cur) {
      path.push_back(Branch::Left);
      hi = cur;
    } else {
      path.push_back(Branch::Right);
      lo = cur;
    }
    cur = mediant(lo, hi);
  }
  return path;
}

FareyRational follow_path(const std::vector<Branch>& path) {
  FareyRational lo(0, 1), hi(1, 1);
  FareyRational cur = mediant(lo, hi);
  for (Branch b : path) {
    (b == Branch::Left ? hi : lo) = cur;
    cur = mediant(lo, hi);
  }
  return cur;
}

std::vector<FareyRational> farey_labels(std::int64_t max_den) {
  std::vector<FareyRational> out;
  if (max_den < 1) return out;
  out.emplace_back(0, 1);
  for (std::int64_t r = 1; r <= max_den; ++r) {
    for (std::int64_t p = 1; p <= r; ++p) {
      if (std::gcd(p, r) == 1) out.emplace_back(p, r);
    }
  }
  return out;
}

std::string ChristoffelWord::to_string() const { return qmarkov::to_string(letters); }

ChristoffelWord christoffel_word(const FareyRational& t) {
  using enum Letter;
  if (t.is_zero()) return {{X}, t};
  if (t.is_one()) return {{X, Y}, t};

  std::vector<Letter> lo_word{X};
  std::vector<Letter> hi_word{X, Y};
  auto concat = [](const std::vector<Letter>& u, const std::vector<Letter>& v) {
    std::vector<Letter> uv;
    uv.reserve(u.size() + v.size());
    uv.insert(uv.end(), u.begin(), u.end());
    uv.insert(uv.end(), v.begin(), v.end());
    return uv;
  };

  std::vector<Letter> cur = concat(lo_word, hi_word);
  for (Branch b : stern_brocot_path(t)) {
    (b == Branch::Left ? hi_word : lo_word) = std::move(cur);
    cur = concat(lo_word, hi_word);
  }
  return {std::move(cur), t};
}

std::vector<CohnLetter> recode_ab(const ChristoffelWord& w) {
  std::vector<CohnLetter> out;
  const auto& ls = w.letters;
  for (std::size_t i = 0; i < ls.size();) {
    if (ls[i] != Letter::X) {
      throw Error(ErrorCode::Malformed, "word " + w.to_string() + " has a Y not preceded by X");
    }
    if (i + 1 < ls.size() && ls[i + 1] == Letter::Y) {
      out.push_back(CohnLetter::B);
      i += 2;
    } else {
      out.push_back(CohnLetter::A);
      i += 1;
    }
  }
  return out;
}

std::vector<Letter> expand_ab(const std::vector<CohnLetter>& w) {
  std::vector<Letter> out;
  for (CohnLetter c : w) {
    out.push_back(Letter::X);
    if (c == CohnLetter::B) out.push_back(Letter::Y);
  }
  return out;
}

std::string to_string(const std::vector<CohnLetter>& w) {
  std::string s;
  for (CohnLetter c : w) s.push_back(static_cast<char>(c));
  return s;
}

std::string to_string(const std::vector<Letter>& w) {
  std::string s;
  for (Letter c : w) s.push_back(static_cast<char>(c));
  return s;
}

}  // namespace qmarkov
