// Dense exact matrices over a field context, plus the handful of kernels the
// group-theoretic modules need: inverse, rank, determinant, characteristic
// polynomial (division-free), Krylov regularity test.
#pragma once

#include "wildbraid/numeric.hpp"

#include <cassert>
#include <vector>

namespace wildbraid {

template <class E>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<E> a;

  Mat() = default;
  Mat(int r, int c, E fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  E& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const E& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

template <class K>
Mat<typename K::Elem> mat_identity(const K& f, int n) {
  Mat<typename K::Elem> m(n, n, f.zero());
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

template <class K>
bool mat_eq(const K& f, const Mat<typename K::Elem>& x, const Mat<typename K::Elem>& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!f.eq(x.a[i], y.a[i])) return false;
  return true;
}

template <class K>
Mat<typename K::Elem> mat_mul(const K& f, const Mat<typename K::Elem>& x,
                              const Mat<typename K::Elem>& y) {
  assert(x.cols == y.rows);
  Mat<typename K::Elem> r(x.rows, y.cols, f.zero());
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (f.is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

template <class K>
Mat<typename K::Elem> mat_scale(const K& f, const Mat<typename K::Elem>& x,
                                const typename K::Elem& c) {
  Mat<typename K::Elem> r = x;
  for (auto& v : r.a) v = f.mul(v, c);
  return r;
}

// Gauss-Jordan inverse; throws on singular input.
template <class K>
Mat<typename K::Elem> mat_inverse(const K& f, Mat<typename K::Elem> m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Mat<typename K::Elem> inv = mat_identity(f, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("matrix not invertible");
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    typename K::Elem s = f.inv(m.at(col, col));
    for (int j = 0; j < n; ++j) {
      m.at(col, j) = f.mul(m.at(col, j), s);
      inv.at(col, j) = f.mul(inv.at(col, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || f.is_zero(m.at(r, col))) continue;
      typename K::Elem c = m.at(r, col);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(col, j)));
        inv.at(r, j) = f.sub(inv.at(r, j), f.mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

template <class K>
int mat_rank(const K& f, Mat<typename K::Elem> m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    typename K::Elem s = f.inv(m.at(rank, col));
    for (int j = 0; j < m.cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), s);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || f.is_zero(m.at(r, col))) continue;
      typename K::Elem c = m.at(r, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

// Division-free determinant by cofactor expansion; sizes here are <= 5.
template <class K>
typename K::Elem mat_det(const K& f, const Mat<typename K::Elem>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return f.one();
  if (n == 1) return m.at(0, 0);
  typename K::Elem det = f.zero();
  for (int j = 0; j < n; ++j) {
    if (f.is_zero(m.at(0, j))) continue;
    Mat<typename K::Elem> sub(n - 1, n - 1, f.zero());
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    typename K::Elem term = f.mul(m.at(0, j), mat_det(f, sub));
    det = (j % 2 == 0) ? f.add(det, term) : f.sub(det, term);
  }
  return det;
}

// Characteristic polynomial via principal-minor sums (no division):
//   charpoly(x) = sum_k (-1)^k e_k x^(n-k),  e_k = sum of principal k-minors.
// Returned low-degree-first with length n+1; leading coefficient is 1.
template <class K>
std::vector<typename K::Elem> mat_charpoly(const K& f, const Mat<typename K::Elem>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  std::vector<typename K::Elem> coeffs(n + 1, f.zero());
  coeffs[n] = f.one();
  std::vector<int> idx;
  for (int k = 1; k <= n; ++k) {
    typename K::Elem ek = f.zero();
    idx.assign(k, 0);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mat<typename K::Elem> sub(k, k, f.zero());
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub.at(r, c) = m.at(idx[r], idx[c]);
      ek = f.add(ek, mat_det(f, sub));
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    coeffs[n - k] = (k % 2 == 1) ? f.neg(ek) : ek;
  }
  return coeffs;
}

// Regularity in GL_n/SL_n: minimal polynomial equals characteristic polynomial,
// i.e. I, A, ..., A^(n-1) are linearly independent.
template <class K>
bool mat_is_regular(const K& f, const Mat<typename K::Elem>& m) {
  int n = m.rows;
  Mat<typename K::Elem> krylov(n, n * n, f.zero());
  Mat<typename K::Elem> pw = mat_identity(f, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) krylov.at(k, i * n + j) = pw.at(i, j);
    pw = mat_mul(f, pw, m);
  }
  return mat_rank(f, krylov) == n;
}

template <class K>
bool mat_is_upper_triangular(const K& f, const Mat<typename K::Elem>& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < i && j < m.cols; ++j)
      if (!f.is_zero(m.at(i, j))) return false;
  return true;
}

template <class K>
bool mat_is_unipotent_upper(const K& f, const Mat<typename K::Elem>& m) {
  if (!mat_is_upper_triangular(f, m)) return false;
  for (int i = 0; i < m.rows; ++i)
    if (!f.eq(m.at(i, i), f.one())) return false;
  return true;
}

template <class K>
bool mat_is_unipotent_lower(const K& f, const Mat<typename K::Elem>& m) {
  for (int i = 0; i < m.rows; ++i) {
    for (int j = i + 1; j < m.cols; ++j)
      if (!f.is_zero(m.at(i, j))) return false;
    if (!f.eq(m.at(i, i), f.one())) return false;
  }
  return true;
}

}  // namespace wildbraid
