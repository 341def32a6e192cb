#include "qmarkov/laurent.hpp"

#include <sstream>

#include "qmarkov/error.hpp"

namespace qmarkov {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exp) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(exp, c);
  return p;
}

LaurentPoly LaurentPoly::from_dense(int min_exp, const std::vector<BigInt>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) p.terms_.emplace_hint(p.terms_.end(), min_exp + static_cast<int>(i), coeffs[i]);
  }
  return p;
}

int LaurentPoly::degree() const {
  if (is_zero()) throw Error(ErrorCode::EmptySupport, "degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
  if (is_zero()) throw Error(ErrorCode::EmptySupport, "min_degree of the zero polynomial");
  return terms_.begin()->first;
}

const BigInt& LaurentPoly::leading_coeff() const {
  if (is_zero()) throw Error(ErrorCode::EmptySupport, "leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

const BigInt& LaurentPoly::trailing_coeff() const {
  if (is_zero()) throw Error(ErrorCode::EmptySupport, "trailing coefficient of the zero polynomial");
  return terms_.begin()->second;
}

BigInt LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> LaurentPoly::dense() const {
  if (is_zero()) return {};
  const int lo = min_degree();
  std::vector<BigInt> out(static_cast<std::size_t>(degree() - lo + 1));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - lo)] = c;
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& r, int sign) {
  for (const auto& [e, c] : r.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, 0);
    if (sign > 0) {
      it->second += c;
    } else {
      it->second -= c;
    }
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  add_scaled(r, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) {
  add_scaled(r, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) {
  *this = *this * r;
  return *this;
}

// Dense accumulation buffer; the supports we multiply are contiguous in practice.
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.min_degree() + b.min_degree();
  const int hi = a.degree() + b.degree();
  std::vector<BigInt> buf(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto& slot = buf[static_cast<std::size_t>(ea + eb - lo)];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  return LaurentPoly::from_dense(lo, buf);
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    BigInt c = it->second;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str();
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly q_int(int n) {
  if (n == 0) return {};
  if (n > 0) {
    LaurentPoly::Terms t;
    for (int k = 0; k < n; ++k) t.emplace(k, 1);
    return LaurentPoly(std::move(t));
  }
  // (q^n - 1)/(q - 1) = -q^n (q^{-n} - 1)/(q - 1)
  return -q_int(-n).shifted(n);
}

const LaurentPoly& markov_coefficient() {
  static const LaurentPoly k = LaurentPoly::from_dense(-1, {1, 1, 1});
  return k;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (p.is_zero()) return {};

  // Units of Z[q, q^-1] are +-q^k, so strip the low powers and divide as
  // ordinary polynomials with nonzero constant terms.
  const int p_shift = p.min_degree();
  const int d_shift = d.min_degree();
  LaurentPoly rem = p.shifted(-p_shift);
  const LaurentPoly den = d.shifted(-d_shift);
  const int den_deg = den.degree();
  const BigInt& den_lead = den.leading_coeff();

  LaurentPoly::Terms quot;
  BigInt qc;
  while (!rem.is_zero()) {
    const int shift = rem.degree() - den_deg;
    if (shift < 0 || rem.min_degree() < 0) {
      throw Error(ErrorCode::NonDivisible, p.to_string() + " by " + d.to_string());
    }
    if (!mpz_divisible_p(rem.leading_coeff().get_mpz_t(), den_lead.get_mpz_t())) {
      throw Error(ErrorCode::NonDivisible, p.to_string() + " by " + d.to_string());
    }
    mpz_divexact(qc.get_mpz_t(), rem.leading_coeff().get_mpz_t(), den_lead.get_mpz_t());
    quot.emplace(shift, qc);
    rem -= LaurentPoly::monomial(qc, shift) * den;
  }
  return LaurentPoly(std::move(quot)).shifted(p_shift - d_shift);
}

BigInt eval_at_one(const LaurentPoly& p) {
  BigInt s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

bool is_palindromic(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (p.coeff(-e) != c) return false;
  }
  return true;
}

bool is_unimodal(const LaurentPoly& p) {
  const auto a = p.dense();
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  return i + 1 >= a.size();
}

bool is_monic_palindromic_positive(const LaurentPoly& p) {
  if (p.is_zero() || p.leading_coeff() != 1) return false;
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) return false;
  }
  return is_palindromic(p);
}

}  // namespace qmarkov
