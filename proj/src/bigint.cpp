#include "lindel/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lindel {

namespace {
constexpr uint64_t kBase = 1ull << 32;

int clz32(uint32_t x) {
  int n = 0;
  while (!(x & 0x80000000u)) { x <<= 1; ++n; }
  return n;
}
}  // namespace

Integer::Integer(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long m = v > 0 ? (unsigned long long)v : 0ull - (unsigned long long)v;
  while (m) { mag_.push_back((uint32_t)(m & 0xffffffffu)); m >>= 32; }
}

void Integer::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

int Integer::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> Integer::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const std::vector<uint32_t>& x = a.size() >= b.size() ? a : b;
  const std::vector<uint32_t>& y = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(x.size() + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
    r[i] = (uint32_t)s;
    carry = s >> 32;
  }
  r[x.size()] = (uint32_t)carry;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// requires a >= b
std::vector<uint32_t> Integer::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t d = (int64_t)a[i] - borrow - (i < b.size() ? (int64_t)b[i] : 0);
    if (d < 0) { d += (int64_t)kBase; borrow = 1; } else { borrow = 0; }
    r[i] = (uint32_t)d;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> Integer::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t t = (uint64_t)a[i] * b[j] + r[i + j] + carry;
      r[i + j] = (uint32_t)t;
      carry = t >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t t = r[k] + carry;
      r[k] = (uint32_t)t;
      carry = t >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D.
void Integer::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw std::domain_error("Integer: division by zero");
  if (cmp_mag(a, b) < 0) { q.clear(); r = a; return; }
  if (b.size() == 1) {
    uint64_t d = b[0], rem = 0;
    q.assign(a.size(), 0);
    for (size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = (uint32_t)(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem) r.push_back((uint32_t)rem);
    return;
  }
  const int s = clz32(b.back());
  const size_t n = b.size(), m = a.size() - n;
  // normalized copies: u has an extra high limb
  std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
  for (size_t i = n; i-- > 0;)
    v[i] = (uint32_t)((((uint64_t)b[i]) << s | (i > 0 ? (uint64_t)b[i - 1] >> (32 - s) : 0)) & 0xffffffffu);
  if (s == 0) {
    for (size_t i = 0; i < a.size(); ++i) u[i] = a[i];
  } else {
    u[a.size()] = (uint32_t)((uint64_t)a.back() >> (32 - s));
    for (size_t i = a.size(); i-- > 0;)
      u[i] = (uint32_t)((((uint64_t)a[i]) << s | (i > 0 ? (uint64_t)a[i - 1] >> (32 - s) : 0)) & 0xffffffffu);
  }
  q.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t num = ((uint64_t)u[j + n] << 32) | u[j + n - 1];
    uint64_t qhat = num / v[n - 1];
    uint64_t rhat = num % v[n - 1];
    while (qhat >= kBase || qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // multiply-subtract qhat*v from u[j..j+n]
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = (int64_t)u[i + j] - (int64_t)(p & 0xffffffffu) - borrow;
      if (t < 0) { t += (int64_t)kBase; borrow = 1; } else { borrow = 0; }
      u[i + j] = (uint32_t)t;
    }
    int64_t t = (int64_t)u[j + n] - (int64_t)carry - borrow;
    if (t < 0) {
      // add back
      t += (int64_t)kBase;
      u[j + n] = (uint32_t)t;
      --qhat;
      uint64_t c2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t sum = (uint64_t)u[i + j] + v[i] + c2;
        u[i + j] = (uint32_t)sum;
        c2 = sum >> 32;
      }
      u[j + n] = (uint32_t)(u[j + n] + c2);
    } else {
      u[j + n] = (uint32_t)t;
    }
    q[j] = (uint32_t)qhat;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  r.assign(n, 0);
  if (s == 0) {
    for (size_t i = 0; i < n; ++i) r[i] = u[i];
  } else {
    for (size_t i = 0; i < n; ++i)
      r[i] = (uint32_t)((((uint64_t)u[i]) >> s | ((uint64_t)u[i + 1] << (32 - s))) & 0xffffffffu);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

Integer Integer::operator-() const {
  Integer r = *this;
  r.sign_ = -r.sign_;
  return r;
}

Integer Integer::abs() const {
  Integer r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

Integer operator+(const Integer& a, const Integer& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  Integer r;
  if (a.sign_ == b.sign_) {
    r.mag_ = Integer::add_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_;
  } else {
    int c = Integer::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return Integer();
    if (c > 0) { r.mag_ = Integer::sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
    else { r.mag_ = Integer::sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
  }
  return r;
}

Integer operator-(const Integer& a, const Integer& b) { return a + (-b); }

Integer operator*(const Integer& a, const Integer& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return Integer();
  Integer r;
  r.mag_ = Integer::mul_mag(a.mag_, b.mag_);
  r.sign_ = a.sign_ * b.sign_;
  return r;
}

void Integer::divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

Integer operator/(const Integer& a, const Integer& b) {
  Integer q, r;
  Integer::divmod(a, b, q, r);
  return q;
}

Integer operator%(const Integer& a, const Integer& b) {
  Integer q, r;
  Integer::divmod(a, b, q, r);
  return r;
}

int Integer::cmp(const Integer& a, const Integer& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
  int c = cmp_mag(a.mag_, b.mag_);
  return a.sign_ >= 0 ? c : -c;
}

Integer Integer::gcd(Integer a, Integer b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool Integer::fits_ll() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  uint64_t v = ((uint64_t)mag_[1] << 32) | mag_[0];
  return sign_ > 0 ? v <= 0x7fffffffffffffffull : v <= 0x8000000000000000ull;
}

long long Integer::to_ll() const {
  uint64_t v = 0;
  if (mag_.size() > 0) v |= mag_[0];
  if (mag_.size() > 1) v |= (uint64_t)mag_[1] << 32;
  return sign_ >= 0 ? (long long)v : -(long long)v;
}

uint32_t Integer::mod_u32(uint32_t p) const {
  uint64_t rem = 0;
  for (size_t i = mag_.size(); i-- > 0;) rem = ((rem << 32) | mag_[i]) % p;
  if (sign_ < 0 && rem != 0) rem = p - rem;
  return (uint32_t)rem;
}

Integer Integer::from_string(const std::string& s) {
  Integer r;
  size_t i = 0;
  int sg = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) { sg = s[i] == '-' ? -1 : 1; ++i; }
  if (i >= s.size()) throw std::invalid_argument("Integer: empty literal");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Integer: bad digit");
    r = r * Integer(10) + Integer(s[i] - '0');
  }
  if (sg < 0) r = -r;
  return r;
}

std::string Integer::str() const {
  if (sign_ == 0) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    uint64_t rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | m[i];
      m[i] = (uint32_t)(cur / 1000000000ull);
      rem = cur % 1000000000ull;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back((char)('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (sign_ < 0) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

size_t Integer::hash() const {
  size_t h = 1469598103934665603ull ^ (size_t)sign_;
  for (uint32_t w : mag_) h = (h ^ w) * 1099511628211ull;
  return h;
}

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (num_.is_zero()) { den_ = Integer(1); return; }
  if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
  Integer g = Integer::gcd(num_, den_);
  if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}
Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}
Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}
int Rational::cmp(const Rational& a, const Rational& b) {
  return Integer::cmp(a.num_ * b.den_, b.num_ * a.den_);
}

std::string Rational::str() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + "/" + den_.str();
}

size_t Rational::hash() const { return num_.hash() * 31 + den_.hash(); }

}  // namespace lindel
