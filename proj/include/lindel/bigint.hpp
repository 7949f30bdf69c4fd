#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lindel {

// Arbitrary-precision signed integer, little-endian base 2^32 magnitude.
class Integer {
 public:
  Integer() = default;
  Integer(long long v);
  static Integer from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  int sign() const { return sign_; }

  Integer operator-() const;
  Integer abs() const;

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  // Truncated division: q = trunc(a/b), r = a - q*b (sign of r follows a).
  static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r);
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  static int cmp(const Integer& a, const Integer& b);
  bool operator==(const Integer& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const Integer& o) const { return cmp(*this, o) != 0; }
  bool operator<(const Integer& o) const { return cmp(*this, o) < 0; }

  static Integer gcd(Integer a, Integer b);  // non-negative

  bool fits_ll() const;
  long long to_ll() const;  // requires fits_ll()
  uint32_t mod_u32(uint32_t p) const;  // |this| mod p, adjusted for sign

  std::string str() const;
  size_t hash() const;

 private:
  int sign_ = 0;                // -1, 0, 1
  std::vector<uint32_t> mag_;   // trimmed, empty iff sign_ == 0

  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : num_(v), den_(1) { if (num_.is_zero()) den_ = Integer(1); }
  Rational(Integer n, Integer d);  // reduces, requires d != 0

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational inv() const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  static int cmp(const Rational& a, const Rational& b);

  std::string str() const;
  size_t hash() const;

 private:
  Integer num_ = Integer(0);
  Integer den_ = Integer(1);
};

}  // namespace lindel
