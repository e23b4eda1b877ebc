#ifndef CATKIT_SNF_HPP
#define CATKIT_SNF_HPP

#include <cstdlib>
#include <vector>

#include "catkit/core.hpp"

// Dense integer matrices and Smith normal form over Z.  Arithmetic is exact
// 64-bit with overflow checks; the matrices here are boundary operators of
// desk-scale complexes, so checked arithmetic is enough.
namespace catkit::topo {

using catkit::Error;
using catkit::errc;

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(errc::size_limit_exceeded, "integer overflow in exact arithmetic");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(errc::size_limit_exceeded, "integer overflow in exact arithmetic");
  return r;
}

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct SNFResult {
  std::vector<long long> diagonal;  // nonzero invariant factors, d1 | d2 | ...
  int rank = 0;
};

// U * input * V = D with U, V unimodular.
struct SNFDecomposition {
  IntMatrix d, u, v;
  SNFResult result;
};

namespace detail {

inline void add_row(IntMatrix& m, int dst, int src, long long q) {  // row dst += q * row src
  for (int j = 0; j < m.cols; ++j) m.at(dst, j) = checked_add(m.at(dst, j), checked_mul(q, m.at(src, j)));
}

inline void add_col(IntMatrix& m, int dst, int src, long long q) {
  for (int i = 0; i < m.rows; ++i) m.at(i, dst) = checked_add(m.at(i, dst), checked_mul(q, m.at(i, src)));
}

inline void swap_rows(IntMatrix& m, int i, int k) {
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(i, j), m.at(k, j));
}

inline void swap_cols(IntMatrix& m, int j, int k) {
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, j), m.at(i, k));
}

inline void negate_row(IntMatrix& m, int i) {
  for (int j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace detail

// Pivoting by minimal absolute value; no modular shortcuts.
inline SNFDecomposition smith_normal_form_ex(IntMatrix m) {
  SNFDecomposition out;
  out.u = IntMatrix::identity(m.rows);
  out.v = IntMatrix::identity(m.cols);

  int t = 0;
  const int lim = std::min(m.rows, m.cols);
  while (t < lim) {
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j)
        if (m.at(i, j) != 0 && (pi < 0 || std::llabs(m.at(i, j)) < std::llabs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    detail::swap_rows(m, t, pi);
    detail::swap_rows(out.u, t, pi);
    detail::swap_cols(m, t, pj);
    detail::swap_cols(out.v, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        long long q = m.at(i, t) / m.at(t, t);
        detail::add_row(m, i, t, -q);
        detail::add_row(out.u, i, t, -q);
        if (m.at(i, t) != 0) {  // remainder strictly smaller: promote it to pivot
          detail::swap_rows(m, t, i);
          detail::swap_rows(out.u, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        long long q = m.at(t, j) / m.at(t, t);
        detail::add_col(m, j, t, -q);
        detail::add_col(out.v, j, t, -q);
        if (m.at(t, j) != 0) {
          detail::swap_cols(m, t, j);
          detail::swap_cols(out.v, t, j);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest of the submatrix
        for (int i = t + 1; i < m.rows && clean; ++i)
          for (int j = t + 1; j < m.cols && clean; ++j)
            if (m.at(i, j) % m.at(t, t) != 0) {
              detail::add_row(m, t, i, 1);
              detail::add_row(out.u, t, i, 1);
              clean = false;
            }
      }
    }
    if (m.at(t, t) < 0) {
      detail::negate_row(m, t);
      detail::negate_row(out.u, t);
    }
    ++t;
  }

  out.d = m;
  for (int k = 0; k < lim; ++k)
    if (m.at(k, k) != 0) out.result.diagonal.push_back(m.at(k, k));
  out.result.rank = static_cast<int>(out.result.diagonal.size());
  return out;
}

inline SNFResult smith_normal_form(const IntMatrix& m) { return smith_normal_form_ex(m).result; }

inline std::vector<long long> mat_vec(const IntMatrix& m, const std::vector<long long>& v) {
  std::vector<long long> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] = checked_add(out[i], checked_mul(m.at(i, j), v[static_cast<std::size_t>(j)]));
  return out;
}

// Does v lie in the integer column span of m?  Solvability of m x = v read
// off the Smith form: with U m V = D, the system is consistent over Z iff
// each (U v)_k is divisible by d_k and vanishes beyond the rank.
inline bool lattice_contains(const IntMatrix& m, const std::vector<long long>& v) {
  if (static_cast<int>(v.size()) != m.rows) throw Error(errc::malformed_input, "lattice_contains: size mismatch");
  SNFDecomposition dec = smith_normal_form_ex(m);
  std::vector<long long> w = mat_vec(dec.u, v);
  int lim = std::min(m.rows, m.cols);
  for (int k = 0; k < m.rows; ++k) {
    long long dk = k < lim ? dec.d.at(k, k) : 0;
    if (dk == 0) {
      if (w[static_cast<std::size_t>(k)] != 0) return false;
    } else if (w[static_cast<std::size_t>(k)] % dk != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace catkit::topo

#endif
