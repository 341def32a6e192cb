#include "qmarkov/cluster.hpp"

#include <cctype>

#include "qmarkov/error.hpp"

namespace qmarkov {

namespace {

void add_term(TriPoly::Terms& terms, const TriPoly::Exponent& e, const BigInt& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) it->second += c;
  if (it->second == 0) terms.erase(it);
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '_' || c == '&') continue;
      if (c == '\\') {  // LaTeX spacing: "\;", "\\", "\,"
        if (i + 1 < text.size()) ++i;
        continue;
      }
      s_.push_back(c);
    }
  }

  TriPoly run() {
    TriPoly::Terms terms;
    if (s_.empty()) fail("empty");
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (pos_ != 0) {
        fail("expected + or -");
      }
      auto [c, e] = term();
      add_term(terms, e, sign * c);
    }
    return TriPoly(std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::MalformedInput, "polynomial at offset " + std::to_string(pos_) + ": " + why);
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(s_.substr(start, pos_ - start));
  }

  int exponent() {
    const bool braced = peek() == '{';
    if (braced) ++pos_;
    const bool negative = peek() == '-';
    if (negative) ++pos_;
    const BigInt v = digits();
    if (braced) {
      if (peek() != '}') fail("expected }");
      ++pos_;
    }
    if (!v.fits_sint_p()) fail("exponent too large");
    return negative ? -static_cast<int>(v.get_si()) : static_cast<int>(v.get_si());
  }

  std::pair<BigInt, TriPoly::Exponent> term() {
    BigInt c = 1;
    TriPoly::Exponent e{0, 0, 0};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = digits();
      any = true;
    }
    while (true) {
      if (peek() == '*') {
        if (!any) fail("dangling *");
        ++pos_;
        if (peek() != 'y') fail("expected y after *");
      }
      if (peek() != 'y') break;
      ++pos_;
      const char idx = peek();
      if (idx < '1' || idx > '3') fail("expected y1, y2 or y3");
      ++pos_;
      int p = 1;
      if (peek() == '^') {
        ++pos_;
        p = exponent();
      }
      e[static_cast<std::size_t>(idx - '1')] += p;
      any = true;
    }
    if (!any) fail("expected a term");
    return {c, e};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

struct KnownF {
  FareyRational t;
  const char* text;
};

// Transcribed as printed.
const std::vector<KnownF>& known_table() {
  static const std::vector<KnownF> table{
      {{1, 1}, "y_3+1"},
      {{1, 2}, "y_2y_3^2 + 2y_2y_3 + y_2 + 1"},
      {{1, 3}, "y_2^2y_3^3 + 3y_2^2y_3^2 + 3y_2^2y_3 + y_2^2 + 2y_2y_3 + 2y_2 + 1"},
      {{1, 4},
       "y_2^3y_3^4 + 4y_2^3y_3^3 + 6y_2^3y_3^2 + 4y_2^3y_3 + 3y_2^2y_3^2 + y_2^3 + 6y_2^2y_3 + 3y_2^2 + 2y_2y_3 + "
       "3y_2 + 1"},
      {{2, 3},
       "y_1y_2^2y_3^4 + 2y_1y_2^2y_3^3 + y_2^2y_3^4 + y_1y_2^2y_3^2 + 4y_2^2y_3^3 + 6y_2^2y_3^2 + 4y_2^2y_3 + "
       "2y_2y_3^2 + y_2^2 + 4y_2y_3 + 2y_2 + 1"},
      {{3, 4},
       "y_1^2y_2^3y_3^6 + 2y_1^2y_2^3y_3^5 + 2y_1y_2^3y_3^6 + y_1^2y_2^3y_3^4 + 8y_1y_2^3y_3^5 + y_2^3y_3^6 + "
       "12y_1y_2^3y_3^4 + 6y_2^3y_3^5 + 8y_1y_2^3y_3^3 + 2y_1y_2^2y_3^4 + 15y_2^3y_3^4 + 2y_1y_2^3y_3^2 + "
       "4y_1y_2^2y_3^3 + 20y_2^3y_3^3 + 3y_2^2y_3^4 + 2y_1y_2^2y_3^2 + 15y_2^3y_3^2 + 12y_2^2y_3^3 + 6y_2^3y_3 + "
       "18y_2^2y_3^2 + y_2^3 + 12y_2^2y_3 + 3y_2y_3^2 + 3y_2^2 + 6y_2y_3 + 3y_2 + 1"},
  };
  return table;
}

}  // namespace

TriPoly::TriPoly(long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0, 0}, constant);
}

TriPoly::TriPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

TriPoly TriPoly::monomial(const BigInt& c, Exponent e) { return TriPoly(Terms{{e, c}}); }

TriPoly TriPoly::y(int i, int power) {
  if (i < 1 || i > 3) throw Error(ErrorCode::InvalidArgument, "variable index " + std::to_string(i));
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(i - 1)] = power;
  return monomial(1, e);
}

TriPoly TriPoly::parse(std::string_view text) { return Parser(text).run(); }

BigInt TriPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

TriPoly TriPoly::operator-() const {
  TriPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(terms_, e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& r) {
  for (const auto& [e, c] : r.terms_) add_term(terms_, e, -c);
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly::Terms out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      add_term(out, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return TriPoly(std::move(out));
}

bool TriPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

bool TriPoly::has_positive_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (c <= 0) return false;
  }
  return true;
}

BigInt TriPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

LaurentPoly TriPoly::specialize_q() const {
  LaurentPoly::Terms out;
  for (const auto& [e, c] : terms_) out[e[0] + e[1] + e[2]] += c;
  return LaurentPoly(std::move(out));
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first.
  std::vector<std::pair<Exponent, BigInt>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first[0] + a.first[1] + a.first[2];
    const int db = b.first[0] + b.first[1] + b.first[2];
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : sorted) {
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool constant = e == Exponent{0, 0, 0};
    std::string factors;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "y" + std::to_string(i + 1);
      if (e[i] != 1) factors += "^" + std::to_string(e[i]);
    }
    if (constant) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

TriMatrix2 operator*(const TriMatrix2& a, const TriMatrix2& b) {
  return {a.e11() * b.e11() + a.e12() * b.e21(), a.e11() * b.e12() + a.e12() * b.e22(),
          a.e21() * b.e11() + a.e22() * b.e21(), a.e21() * b.e12() + a.e22() * b.e22()};
}

std::array<BigInt, 4> TriMatrix2::at_one() const {
  return {e_[0].eval_at_one(), e_[1].eval_at_one(), e_[2].eval_at_one(), e_[3].eval_at_one()};
}

QMatrix2 TriMatrix2::specialize_q() const {
  return {e_[0].specialize_q(), e_[1].specialize_q(), e_[2].specialize_q(), e_[3].specialize_q()};
}

std::string TriMatrix2::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
         e_[3].to_string() + "]]";
}

TriMatrix2 hat_a() {
  const TriPoly y2 = TriPoly::y(2);
  const TriPoly y3 = TriPoly::y(3);
  return TriMatrix2{y3, 1, 0, 1} * TriMatrix2{y2, 0, y2, 1};
}

TriMatrix2 hat_b() {
  const TriPoly y1 = TriPoly::y(1);
  const TriPoly y2 = TriPoly::y(2);
  const TriPoly y3 = TriPoly::y(3);
  return TriMatrix2{y3, 1, 0, 1} * TriMatrix2{y1, 1, 0, 1} * TriMatrix2{y2, 0, y2, 1} * TriMatrix2{y3, 0, y2, 1};
}

TriMatrix2 hat_cohn(const FareyRational& t) {
  const TriMatrix2 a = hat_a();
  if (t.is_zero()) return a;
  const TriMatrix2 b = hat_b();
  TriMatrix2 m = TriMatrix2::identity();
  for (CohnLetter l : recode_ab(christoffel_word(t))) m = m * (l == CohnLetter::A ? a : b);
  return m;
}

bool conjecture_check(const FareyRational& t, const TriPoly& expected_f) { return hat_cohn(t).e12() == expected_f; }

std::optional<TriPoly> known_f_polynomial(const FareyRational& t) {
  for (const KnownF& k : known_table()) {
    if (k.t == t) return TriPoly::parse(k.text);
  }
  return std::nullopt;
}

std::vector<FareyRational> known_f_labels() {
  std::vector<FareyRational> out;
  for (const KnownF& k : known_table()) out.push_back(k.t);
  return out;
}

}  // namespace qmarkov
