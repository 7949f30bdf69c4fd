#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace lindel {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint16_t> e) : e_(std::move(e)) {}
  static Monomial var(size_t nvars, size_t i, uint16_t k = 1) {
    Monomial m(nvars);
    m.e_[i] = k;
    return m;
  }

  size_t nvars() const { return e_.size(); }
  uint16_t operator[](size_t i) const { return e_[i]; }
  uint16_t& operator[](size_t i) { return e_[i]; }
  uint32_t degree() const {
    uint32_t d = 0;
    for (uint16_t x : e_) d += x;
    return d;
  }
  bool is_one() const {
    for (uint16_t x : e_) if (x) return false;
    return true;
  }
  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = (uint16_t)(r.e_[i] + o.e_[i]);
    return r;
  }
  // requires o.divides(*this)
  Monomial operator/(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = (uint16_t)(r.e_[i] - o.e_[i]);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e_.size(); ++i)
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : e_) h = (h ^ x) * 1099511628211ull;
    return h;
  }
  const std::vector<uint16_t>& exps() const { return e_; }

 private:
  std::vector<uint16_t> e_;
};

// Monomial orders: degrevlex (global), negdegrevlex (local), and a two-block
// elimination order (degrevlex on the leading block, then on the rest).
struct OrderSpec {
  enum class Kind { degrevlex, negdegrevlex, block_elim };
  Kind kind = Kind::degrevlex;
  size_t block = 0;  // size of the leading block (block_elim only)

  bool global() const { return kind != Kind::negdegrevlex; }
  bool operator==(const OrderSpec& o) const { return kind == o.kind && block == o.block; }
};

// revlex tiebreak on vars [lo,hi): last nonzero entry of a-b negative => a > b
inline int revlex_tail(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

inline int cmp_range_drl(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  uint32_t da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
  if (da != db) return da < db ? -1 : 1;
  return revlex_tail(a, b, lo, hi);
}

// returns -1 / 0 / 1 for a < b / a == b / a > b
inline int mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& o) {
  const size_t n = a.nvars();
  switch (o.kind) {
    case OrderSpec::Kind::degrevlex:
      return cmp_range_drl(a, b, 0, n);
    case OrderSpec::Kind::negdegrevlex: {
      uint32_t da = a.degree(), db = b.degree();
      if (da != db) return da < db ? 1 : -1;
      return revlex_tail(a, b, 0, n);
    }
    case OrderSpec::Kind::block_elim: {
      int c = cmp_range_drl(a, b, 0, o.block);
      if (c) return c;
      return cmp_range_drl(a, b, o.block, n);
    }
  }
  return 0;
}

}  // namespace lindel
