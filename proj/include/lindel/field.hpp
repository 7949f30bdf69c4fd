#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "lindel/bigint.hpp"

namespace lindel {

struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& m) : std::runtime_error(m) {}
};
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& m) : std::runtime_error(m) {}
};
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};

constexpr uint32_t kDefaultPrime = 32003;

struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  uint32_t p = 0;  // modulus when kind == prime

  static Field Q() { return Field{Kind::rationals, 0}; }
  static Field Fp(uint32_t p) { return Field{Kind::prime, p}; }
  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  std::string str() const { return kind == Kind::rationals ? "Q" : "F" + std::to_string(p); }
};

// Exact field element: a rational, or a residue in [0,p).
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const Field& f) { return of_ll(f, 0); }
  static Scalar one(const Field& f) { return of_ll(f, 1); }
  static Scalar of_ll(const Field& f, long long v) {
    Scalar s;
    s.p_ = f.kind == Field::Kind::prime ? f.p : 0;
    if (s.p_) {
      long long m = v % (long long)s.p_;
      if (m < 0) m += s.p_;
      s.r_ = (uint32_t)m;
    } else {
      s.q_ = Rational(v);
    }
    return s;
  }
  static Scalar of_rational(const Field& f, const Rational& q) {
    Scalar s;
    s.p_ = f.kind == Field::Kind::prime ? f.p : 0;
    if (s.p_) {
      uint32_t den = q.den().mod_u32(s.p_);
      if (den == 0) throw StructuralError("scalar: denominator not invertible mod p");
      s.r_ = mulmod(q.num().mod_u32(s.p_), invmod(den, s.p_), s.p_);
    } else {
      s.q_ = q;
    }
    return s;
  }

  bool is_zero() const { return p_ ? r_ == 0 : q_.is_zero(); }
  bool is_one() const { return p_ ? r_ == 1 : q_.is_one(); }
  bool in_prime_field() const { return p_ != 0; }
  const Rational& rat() const { return q_; }
  uint32_t residue() const { return r_; }

  Scalar operator+(const Scalar& o) const {
    Scalar s = *this;
    if (p_) s.r_ = addmod(r_, o.r_, p_);
    else s.q_ = q_ + o.q_;
    return s;
  }
  Scalar operator-(const Scalar& o) const {
    Scalar s = *this;
    if (p_) s.r_ = addmod(r_, o.r_ == 0 ? 0 : p_ - o.r_, p_);
    else s.q_ = q_ - o.q_;
    return s;
  }
  Scalar operator*(const Scalar& o) const {
    Scalar s = *this;
    if (p_) s.r_ = mulmod(r_, o.r_, p_);
    else s.q_ = q_ * o.q_;
    return s;
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
  Scalar operator-() const {
    Scalar s = *this;
    if (p_) s.r_ = r_ == 0 ? 0 : p_ - r_;
    else s.q_ = -s.q_;
    return s;
  }
  Scalar inv() const {
    if (is_zero()) throw std::domain_error("scalar: inverse of zero");
    Scalar s = *this;
    if (p_) s.r_ = invmod(r_, p_);
    else s.q_ = q_.inv();
    return s;
  }
  bool operator==(const Scalar& o) const {
    return p_ == o.p_ && (p_ ? r_ == o.r_ : q_ == o.q_);
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const { return p_ ? std::to_string(r_) : q_.str(); }
  size_t hash() const { return p_ ? (size_t)r_ * 2654435761u + p_ : q_.hash(); }

 private:
  uint32_t p_ = 0;  // 0 means rational
  uint32_t r_ = 0;
  Rational q_;

  static uint32_t addmod(uint32_t a, uint32_t b, uint32_t p) {
    uint64_t s = (uint64_t)a + b;
    return (uint32_t)(s >= p ? s - p : s);
  }
  static uint32_t mulmod(uint32_t a, uint32_t b, uint32_t p) {
    return (uint32_t)((uint64_t)a * b % p);
  }
  static uint32_t invmod(uint32_t a, uint32_t p) {
    // extended euclid
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      int64_t q = r / newr;
      int64_t tmp = t - q * newt; t = newt; newt = tmp;
      tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("scalar: not invertible mod p");
    if (t < 0) t += p;
    return (uint32_t)t;
  }
};

}  // namespace lindel
