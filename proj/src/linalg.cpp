#include "lindel/linalg.hpp"

namespace lindel {

void normalize_row(const Field& F, Row& r) {
  if (F.kind == Field::Kind::prime) return;
  Integer num(0), den(1);
  for (auto& x : r) {
    if (x.is_zero()) continue;
    const Rational& q = x.rat();
    num = Integer::gcd(num, q.num());
    den = den * q.den() / Integer::gcd(den, q.den());
  }
  if (num.is_zero()) return;
  Scalar f = Scalar::of_rational(F, Rational(den, num));
  for (auto& x : r) x = x * f;
}

bool Echelon::add(Row v) {
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < width_ && v[p].is_zero()) ++p;
  if (p == width_) return false;
  normalize_row(field_, v);
  // keep pivot columns strictly increasing
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, p);
  return true;
}

Row Echelon::reduce(Row v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    Scalar f = v[p] / rows_[i][p];
    for (size_t j = p; j < width_; ++j)
      if (!rows_[i][j].is_zero()) v[j] = v[j] - f * rows_[i][j];
  }
  return v;
}

bool Echelon::contains(Row v) const {
  v = reduce(std::move(v));
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

size_t rank_of(const Field& F, Mat A) {
  if (A.empty()) return 0;
  Echelon e(F, A[0].size());
  size_t r = 0;
  for (auto& row : A)
    if (e.add(std::move(row))) ++r;
  return r;
}

Mat kernel_basis(const Field& F, const Mat& A) {
  if (A.empty()) return {};
  const size_t n = A[0].size();
  // row-reduce A, tracking pivot columns
  Mat R;
  std::vector<size_t> piv;
  {
    Echelon e(F, n);
    for (auto row : A) e.add(std::move(row));
    R = e.rows();
    piv = e.pivots();
  }
  // back-substitute to reduced echelon (pivots normalized to 1, cleared above)
  for (size_t i = R.size(); i-- > 0;) {
    Scalar inv = R[i][piv[i]].inv();
    for (size_t j = 0; j < n; ++j)
      if (!R[i][j].is_zero()) R[i][j] = R[i][j] * inv;
    for (size_t k = 0; k < i; ++k) {
      Scalar f = R[k][piv[i]];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!R[i][j].is_zero()) R[k][j] = R[k][j] - f * R[i][j];
    }
  }
  std::vector<bool> is_piv(n, false);
  for (size_t p : piv) is_piv[p] = true;
  Mat K;
  for (size_t j = 0; j < n; ++j) {
    if (is_piv[j]) continue;
    Row v(n, Scalar::zero(F));
    v[j] = Scalar::one(F);
    for (size_t i = 0; i < R.size(); ++i) v[piv[i]] = -R[i][j];
    normalize_row(F, v);
    K.push_back(std::move(v));
  }
  return K;
}

bool solve_linear(const Field& F, const Mat& A, const Row& b, Row& x) {
  const size_t m = A.size();
  const size_t n = m ? A[0].size() : 0;
  if (m == 0) {
    bool ok = true;
    for (auto& v : b) ok &= v.is_zero();
    x.assign(n, Scalar::zero(F));
    return ok;
  }
  // augmented system
  Mat Aug(m, Row(n + 1, Scalar::zero(F)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) Aug[i][j] = A[i][j];
    Aug[i][n] = b[i];
  }
  Echelon e(F, n + 1);
  for (auto& row : Aug) e.add(row);
  Mat R = e.rows();
  std::vector<size_t> piv = e.pivots();
  for (size_t i = 0; i < R.size(); ++i)
    if (piv[i] == n) return false;  // inconsistent
  // reduced echelon
  for (size_t i = R.size(); i-- > 0;) {
    Scalar inv = R[i][piv[i]].inv();
    for (size_t j = 0; j <= n; ++j)
      if (!R[i][j].is_zero()) R[i][j] = R[i][j] * inv;
    for (size_t k = 0; k < i; ++k) {
      Scalar f = R[k][piv[i]];
      if (f.is_zero()) continue;
      for (size_t j = 0; j <= n; ++j)
        if (!R[i][j].is_zero()) R[k][j] = R[k][j] - f * R[i][j];
    }
  }
  x.assign(n, Scalar::zero(F));
  for (size_t i = 0; i < R.size(); ++i) x[piv[i]] = R[i][n];
  return true;
}

Mat subspace_intersect(const Field& F, const Mat& U, const Mat& V) {
  if (U.empty() || V.empty()) return {};
  const size_t n = U[0].size();
  const size_t k = U.size(), l = V.size();
  // columns: coefficients a (on U) then b (on V); rows: coordinates
  Mat A(n, Row(k + l, Scalar::zero(F)));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) A[j][i] = U[i][j];
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < n; ++j) A[j][k + i] = -V[i][j];
  Mat K = kernel_basis(F, A);
  Echelon e(F, n);
  for (auto& v : K) {
    Row w(n, Scalar::zero(F));
    for (size_t i = 0; i < k; ++i)
      if (!v[i].is_zero())
        for (size_t j = 0; j < n; ++j) w[j] = w[j] + v[i] * U[i][j];
    e.add(std::move(w));
  }
  return e.rows();
}

}  // namespace lindel
