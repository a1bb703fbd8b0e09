#pragma once

// Exact linear algebra over Z_k: prime-field row reduction and kernels with
// canonical (RREF) subspace bases, plus integer Smith normal form for
// composite-modulus solution counting.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace moveq {

using bigint = boost::multiprecision::cpp_int;

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t k) {
  v %= k;
  return v < 0 ? v + k : v;
}

inline bool is_prime(std::int64_t k) {
  if (k < 2) return false;
  if (k % 2 == 0) return k == 2;
  for (std::int64_t d = 3; d * d <= k; d += 2)
    if (k % d == 0) return false;
  return true;
}

// inverse of a mod p, p prime, a != 0 mod p
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod_reduce(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) throw std::domain_error("not invertible mod " + std::to_string(p));
  return mod_reduce(t, p);
}

struct ZkMatrix {
  int rows = 0;
  int cols = 0;
  std::int64_t modulus = 2;
  std::vector<std::int64_t> entries;  // row-major, reduced into [0, k)

  ZkMatrix() = default;
  ZkMatrix(int r, int c, std::int64_t k) : rows(r), cols(c), modulus(k) {
    if (k < 2) throw std::invalid_argument("modulus must be >= 2");
    if (r < 0 || c < 0) throw std::invalid_argument("negative dimension");
    entries.assign(static_cast<std::size_t>(r) * c, 0);
  }

  static ZkMatrix identity(int n, std::int64_t k) {
    ZkMatrix m(n, n, k);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::int64_t& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

  void set(int r, int c, std::int64_t v) { at(r, c) = mod_reduce(v, modulus); }

  bool operator==(const ZkMatrix&) const = default;
};

inline std::pair<ZkMatrix, int> rref(const ZkMatrix& m) {
  if (!is_prime(m.modulus)) throw std::domain_error("prime required");
  ZkMatrix a = m;
  const std::int64_t p = a.modulus;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int sel = -1;
    for (int r = row; r < a.rows; ++r)
      if (a.at(r, col) != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < a.cols; ++c) std::swap(a.at(sel, c), a.at(row, c));
    const std::int64_t inv = mod_inverse(a.at(row, col), p);
    for (int c = col; c < a.cols; ++c) a.at(row, c) = mod_reduce(a.at(row, c) * inv, p);
    for (int r = 0; r < a.rows; ++r) {
      if (r == row) continue;
      const std::int64_t f = a.at(r, col);
      if (f == 0) continue;
      for (int c = col; c < a.cols; ++c)
        a.at(r, c) = mod_reduce(a.at(r, c) - f * a.at(row, c), p);
    }
    ++row;
  }
  return {a, row};
}

struct SubspaceBasis {
  int ambient_dim = 0;
  std::int64_t modulus = 2;  // prime
  std::vector<std::vector<std::int64_t>> vectors;  // RREF rows, canonical

  int dim() const { return static_cast<int>(vectors.size()); }

  // canonicalize an arbitrary spanning set
  static SubspaceBasis span_of(int ambient, std::int64_t p,
                               const std::vector<std::vector<std::int64_t>>& gens) {
    if (!is_prime(p)) throw std::domain_error("prime required");
    ZkMatrix m(static_cast<int>(gens.size()), ambient, p);
    for (int r = 0; r < m.rows; ++r) {
      if (static_cast<int>(gens[r].size()) != ambient)
        throw std::invalid_argument("generator has wrong length");
      for (int c = 0; c < ambient; ++c) m.set(r, c, gens[r][c]);
    }
    auto [red, rank] = rref(m);
    SubspaceBasis b;
    b.ambient_dim = ambient;
    b.modulus = p;
    for (int r = 0; r < rank; ++r) {
      std::vector<std::int64_t> v(ambient);
      for (int c = 0; c < ambient; ++c) v[c] = red.at(r, c);
      b.vectors.push_back(std::move(v));
    }
    return b;
  }

  bool contains(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != ambient_dim)
      throw std::invalid_argument("vector has wrong length");
    std::vector<std::int64_t> w(v);
    for (auto& x : w) x = mod_reduce(x, modulus);
    for (const auto& row : vectors) {
      int piv = -1;
      for (int c = 0; c < ambient_dim; ++c)
        if (row[c] != 0) { piv = c; break; }
      if (piv < 0) continue;
      const std::int64_t f = w[piv];  // row has pivot 1
      if (f == 0) continue;
      for (int c = piv; c < ambient_dim; ++c)
        w[c] = mod_reduce(w[c] - f * row[c], modulus);
    }
    return std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x == 0; });
  }

  bool operator==(const SubspaceBasis&) const = default;
};

inline SubspaceBasis kernel(const ZkMatrix& m) {
  if (!is_prime(m.modulus)) throw std::domain_error("prime required");
  auto [red, rank] = rref(m);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (red.at(r, c) != 0) { pivot_of_col[c] = r; break; }
  std::vector<std::vector<std::int64_t>> gens;
  for (int c = 0; c < m.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;  // bound variable
    std::vector<std::int64_t> v(m.cols, 0);
    v[c] = 1;
    for (int cc = 0; cc < m.cols; ++cc) {
      int r = pivot_of_col[cc];
      if (r >= 0) v[cc] = mod_reduce(-red.at(r, c), m.modulus);
    }
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span_of(m.cols, m.modulus, gens);
}

inline bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim || a.modulus != b.modulus)
    throw std::invalid_argument("subspace_equal: mismatched ambient space");
  return a.vectors == b.vectors;
}

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Invariant factors d_1 | d_2 | ... of an integer matrix, padded with zeros to
// one entry per column (the shape wanted for counting solutions of m x = 0).
// Arbitrary-precision arithmetic internally; intermediate growth is harmless.
inline std::vector<std::int64_t> smith_normal_form(const IntMatrix& m, int cols = -1) {
  const int rows = static_cast<int>(m.size());
  if (cols < 0) cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<std::vector<bigint>> a(rows, std::vector<bigint>(cols));
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(m[r].size()) != cols)
      throw std::invalid_argument("ragged matrix");
    for (int c = 0; c < cols; ++c) a[r][c] = m[r][c];
  }
  const int n = std::min(rows, cols);
  std::vector<bigint> diag;

  auto nonzero_below = [&](int t) {
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c)
        if (a[r][c] != 0) return std::pair{r, c};
    return std::pair{-1, -1};
  };

  for (int t = 0; t < n; ++t) {
    auto [pr, pc] = nonzero_below(t);
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);

    bool again = true;
    while (again) {
      again = false;
      // find minimal nonzero in the working submatrix, move it to (t,t)
      int br = t, bc = t;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (a[r][c] != 0 &&
              (a[br][bc] == 0 || abs(a[r][c]) < abs(a[br][bc]))) {
            br = r; bc = c;
          }
      if (br != t) std::swap(a[t], a[br]);
      if (bc != t)
        for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][bc]);

      for (int r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        const bigint q = a[r][t] / a[t][t];
        for (int c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) again = true;
      }
      for (int c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        const bigint q = a[t][c] / a[t][t];
        for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) again = true;
      }
      if (!again) {
        // pivot must divide every remaining entry
        for (int r = t + 1; r < rows && !again; ++r)
          for (int c = t + 1; c < cols && !again; ++c)
            if (a[r][c] % a[t][t] != 0) {
              for (int cc = t; cc < cols; ++cc) a[t][cc] += a[r][cc];
              again = true;
            }
      }
    }
    diag.push_back(abs(a[t][t]));
  }

  std::vector<std::int64_t> result;
  for (const bigint& d : diag) {
    if (d > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("invariant factor exceeds int64");
    result.push_back(static_cast<std::int64_t>(d));
  }
  result.resize(cols, 0);
  return result;
}

// Invariant factors of {x in Z_k^cols : m x = 0}, trivial factors dropped.
inline std::vector<std::int64_t> solution_group_factors(const IntMatrix& m, int cols,
                                                        std::int64_t k) {
  if (k < 2) throw std::invalid_argument("modulus must be >= 2");
  auto d = smith_normal_form(m, cols);
  std::vector<std::int64_t> fac;
  for (std::int64_t di : d) {
    const std::int64_t g = di == 0 ? k : std::gcd(di, k);
    if (g > 1) fac.push_back(g);
  }
  std::sort(fac.begin(), fac.end());
  return fac;
}

}  // namespace moveq
