#pragma once

// Small exact integer linear algebra: dense int64 vectors/matrices, Smith and
// Hermite normal forms, integer kernels and linear solves.  Everything here is
// sized for root-system lattices (dimensions <= 10), so the quadratic
// elimination loops are deliberately simple.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "satake/errors.hpp"

namespace satake {

using Int = std::int64_t;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline Int checked_mul(Int a, Int b) {
  __int128 r = static_cast<__int128>(a) * b;
  require(r <= INT64_MAX && r >= INT64_MIN, ErrorCode::Overflow, "integer product out of range");
  return static_cast<Int>(r);
}

inline Int dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorCode::ShapeMismatch, "dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorCode::ShapeMismatch, "vec_add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorCode::ShapeMismatch, "vec_sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec vec_scale(Int c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec vec_neg(const Vec& a) { return vec_scale(-1, a); }

inline bool is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline Mat identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
  return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat r(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    require(a[i].size() == k, ErrorCode::ShapeMismatch, "mat_mul: inner mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      Int c = a[i][t];
      if (c == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += c * b[t][j];
    }
  }
  return r;
}

// Column echelon form via unimodular column operations: returns (H, U) with
// A*U = H, pivot rows strictly increasing, pivots positive, and every
// non-pivot column identically zero above its first pivot row.
inline void column_echelon(Mat& h, Mat& u) {
  std::size_t mrows = h.size();
  std::size_t ncols = mrows ? h[0].size() : 0;
  u = identity(static_cast<int>(ncols));
  std::size_t c = 0;
  auto colop_sub = [&](std::size_t k, Int q, std::size_t j) {
    for (std::size_t r = 0; r < mrows; ++r) h[r][k] -= q * h[r][j];
    for (std::size_t r = 0; r < ncols; ++r) u[r][k] -= q * u[r][j];
  };
  auto colswap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < mrows; ++r) std::swap(h[r][a], h[r][b]);
    for (std::size_t r = 0; r < ncols; ++r) std::swap(u[r][a], u[r][b]);
  };
  auto colneg = [&](std::size_t a) {
    for (std::size_t r = 0; r < mrows; ++r) h[r][a] = -h[r][a];
    for (std::size_t r = 0; r < ncols; ++r) u[r][a] = -u[r][a];
  };
  for (std::size_t row = 0; row < mrows && c < ncols; ++row) {
    while (true) {
      std::size_t best = ncols;
      for (std::size_t j = c; j < ncols; ++j) {
        if (h[row][j] != 0 && (best == ncols || std::llabs(h[row][j]) < std::llabs(h[row][best])))
          best = j;
      }
      if (best == ncols) break;  // row has no pivot among free columns
      bool again = false;
      for (std::size_t j = c; j < ncols; ++j) {
        if (j == best || h[row][j] == 0) continue;
        Int q = h[row][j] / h[row][best];
        colop_sub(j, q, best);
        if (h[row][j] != 0) again = true;
      }
      if (!again) {
        colswap(c, best);
        if (h[row][c] < 0) colneg(c);
        ++c;
        break;
      }
    }
  }
}

// Basis (as rows) of { x in Z^d : A x = 0 }.  The result spans the full
// saturated kernel lattice.
inline Mat kernel_basis(const Mat& a, int d) {
  if (a.empty()) return identity(d);
  Mat h = a, u;
  column_echelon(h, u);
  std::size_t ncols = static_cast<std::size_t>(d);
  Mat out;
  for (std::size_t j = 0; j < ncols; ++j) {
    bool zero = true;
    for (std::size_t r = 0; r < h.size(); ++r)
      if (h[r][j] != 0) zero = false;
    if (!zero) continue;
    Vec col(ncols);
    for (std::size_t r = 0; r < ncols; ++r) col[r] = u[r][j];
    out.push_back(col);
  }
  return out;
}

// One integer solution of A x = t, if any.
inline std::optional<Vec> solve_integer(const Mat& a, const Vec& t) {
  if (a.empty()) return Vec{};
  std::size_t mrows = a.size(), ncols = a[0].size();
  Mat h = a, u;
  column_echelon(h, u);
  Vec y(ncols, 0);
  std::size_t next_col = 0;
  for (std::size_t row = 0; row < mrows; ++row) {
    Int acc = t[row];
    for (std::size_t j = 0; j < next_col; ++j) acc -= h[row][j] * y[j];
    if (next_col < ncols && h[row][next_col] != 0) {
      if (acc % h[row][next_col] != 0) return std::nullopt;
      y[next_col] = acc / h[row][next_col];
      ++next_col;
    } else if (acc != 0) {
      return std::nullopt;
    }
  }
  Vec x(ncols, 0);
  for (std::size_t r = 0; r < ncols; ++r)
    for (std::size_t j = 0; j < ncols; ++j) x[r] += u[r][j] * y[j];
  if (mat_vec(a, x) != t) fail(ErrorCode::Internal, "solve_integer: verification failed");
  return x;
}

// Row Hermite normal form: unimodular row operations only.  Pivots positive,
// entries above each pivot reduced into [0, pivot).  Zero rows are dropped,
// so the result is a canonical basis of the row lattice.
inline Mat row_hnf(Mat b) {
  std::size_t rows = b.size();
  std::size_t cols = rows ? b[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (b[i][c] != 0 && (best == rows || std::llabs(b[i][c]) < std::llabs(b[best][c]))) best = i;
      if (best == rows) break;
      bool again = false;
      for (std::size_t i = r; i < rows; ++i) {
        if (i == best || b[i][c] == 0) continue;
        Int q = b[i][c] / b[best][c];
        for (std::size_t j = 0; j < cols; ++j) b[i][j] -= q * b[best][j];
        if (b[i][c] != 0) again = true;
      }
      if (!again) {
        std::swap(b[r], b[best]);
        if (b[r][c] < 0)
          for (std::size_t j = 0; j < cols; ++j) b[r][j] = -b[r][j];
        for (std::size_t i = 0; i < r; ++i) {
          Int q = b[i][c] >= 0 ? b[i][c] / b[r][c] : -((-b[i][c] + b[r][c] - 1) / b[r][c]);
          if (q != 0)
            for (std::size_t j = 0; j < cols; ++j) b[i][j] -= q * b[r][j];
        }
        ++r;
        break;
      }
    }
  }
  b.resize(r);
  return b;
}

// Diagonal of the Smith normal form (non-negative, divisibility chain).
inline std::vector<Int> smith_diagonal(Mat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Int> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // locate a minimal nonzero entry in the remaining block
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Int q = a[i][t] / a[t][t];
      if (q != 0)
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Int q = a[t][j] / a[t][t];
      if (q != 0)
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // ensure divisibility of the remaining block
    bool adjusted = false;
    for (std::size_t i = t + 1; i < rows && !adjusted; ++i)
      for (std::size_t j = t + 1; j < cols && !adjusted; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          adjusted = true;
        }
    if (adjusted) continue;
    diag.push_back(std::llabs(a[t][t]));
    ++t;
  }
  return diag;
}

inline Int gcd_int(Int a, Int b) { return std::gcd(std::llabs(a), std::llabs(b)); }

// Exact rational with int64 parts, normalized with positive denominator.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}
  Rat(Int n, Int d) : num(n), den(d) { normalize(); }

  void normalize() {
    require(den != 0, ErrorCode::Internal, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd_int(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.den) + checked_mul(b.num, a.den), checked_mul(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.den) - checked_mul(b.num, a.den), checked_mul(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    require(b.num != 0, ErrorCode::Internal, "rational division by zero");
    return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
};

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;
  }
  return r;
}

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace satake
