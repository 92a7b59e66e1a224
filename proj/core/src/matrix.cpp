#include "latsec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "latsec/error.hpp"

namespace latsec::mat {

RationalMatrix identity(std::size_t n) {
  RationalMatrix out(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return {};
  RationalMatrix out(a[0].size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  RationalMatrix out(a.size(), RationalVector(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RationalVector row_times(std::span<const Rational> row, const RationalMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  RationalVector out(cols, Rational(0));
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += row[k] * a[k][j];
  }
  return out;
}

RationalMatrix scale(const RationalMatrix& a, const Rational& factor) {
  RationalMatrix out = a;
  for (auto& row : out)
    for (auto& v : row) v *= factor;
  return out;
}

RationalMatrix gram(const RationalMatrix& a) { return multiply(a, transpose(a)); }

namespace {

// Gaussian elimination on a copy; returns (rank, determinant of the leading
// square block when full rank).
std::pair<std::size_t, Rational> eliminate(RationalMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  Rational det = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) {
      det = 0;
      continue;
    }
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      det = -det;
    }
    det *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  if (r < rows) det = 0;
  return {r, det};
}

}  // namespace

Rational determinant(const RationalMatrix& a) {
  if (a.empty() || a.size() != a[0].size())
    throw Error(ErrorKind::unsupported_rank, "determinant of non-square matrix");
  return eliminate(a).second;
}

std::size_t rank(const RationalMatrix& a) { return eliminate(a).first; }

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n) throw Error(ErrorKind::unsupported_rank, "inverse of non-square matrix");
  RationalMatrix m = a;
  RationalMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::unsupported_rank, "singular matrix");
    std::swap(m[pivot], m[c]);
    std::swap(inv[pivot], inv[c]);
    const Rational p = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RationalMatrix from_int(const IntMatrix& a) {
  RationalMatrix out;
  out.reserve(a.size());
  for (const auto& row : a) {
    RationalVector r;
    r.reserve(row.size());
    for (auto v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<IntMatrix> to_int(const RationalMatrix& a) {
  IntMatrix out;
  out.reserve(a.size());
  for (const auto& row : a) {
    IntVector r;
    r.reserve(row.size());
    for (const auto& v : row) {
      if (!is_integer(v)) return std::nullopt;
      const BigInt n = boost::multiprecision::numerator(v);
      if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
      r.push_back(n.convert_to<std::int64_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<double>> to_double(const RationalMatrix& a) {
  std::vector<std::vector<double>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(a[i].size());
    for (const auto& v : a[i]) out[i].push_back(latsec::to_double(v));
  }
  return out;
}

std::vector<std::vector<double>> cholesky_upper(const std::vector<std::vector<double>>& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<double>> r(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    double d = g[i][i];
    for (std::size_t k = 0; k < i; ++k) d -= r[k][i] * r[k][i];
    if (!(d > 0.0)) throw Error(ErrorKind::unsupported_rank, "Gram matrix is not positive definite");
    r[i][i] = std::sqrt(d);
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = g[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
      r[i][j] = s / r[i][i];
    }
  }
  return r;
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows[0].size();
  std::vector<std::vector<BigInt>> m(rows.size(), std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = rows[i][j];

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == m.size()) break;
      std::swap(m[best], m[r]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        const BigInt q = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (std::size_t j = c; j < cols; ++j) m[r][j] = -m[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = m[i][c] / m[r][c];
      if (m[i][c] - q * m[r][c] < 0) q -= 1;
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  IntMatrix out(r, IntVector(cols));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[i][j] = m[i][j].convert_to<std::int64_t>();
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n) throw Error(ErrorKind::unsupported_rank, "Smith form needs a square matrix");
  using Big = std::vector<std::vector<BigInt>>;
  Big d(n, std::vector<BigInt>(n));
  Big q(n, std::vector<BigInt>(n, 0));     // accumulated column ops
  Big qinv(n, std::vector<BigInt>(n, 0));  // inverse of q
  for (std::size_t i = 0; i < n; ++i) {
    q[i][i] = 1;
    qinv[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) d[i][j] = a[i][j];
  }

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(d[i][x], d[i][y]);
      std::swap(q[i][x], q[i][y]);
    }
    std::swap(qinv[x], qinv[y]);
  };
  // col_y -= k * col_x ; inverse: row_x += k * row_y in qinv
  auto sub_col = [&](std::size_t y, std::size_t x, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
      d[i][y] -= k * d[i][x];
      q[i][y] -= k * q[i][x];
    }
    for (std::size_t j = 0; j < n; ++j) qinv[x][j] += k * qinv[y][j];
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = n, pj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d[i][j] != 0 && (pi == n || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw Error(ErrorKind::unsupported_rank, "Smith form of singular matrix");
      std::swap(d[pi], d[t]);
      swap_cols(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        const BigInt k = d[i][t] / d[t][t];
        for (std::size_t j = t; j < n; ++j) d[i][j] -= k * d[t][j];
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        sub_col(j, t, d[t][j] / d[t][t]);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      for (std::size_t j = t; j < n; ++j) d[t][j] += d[bad][j];
    }
    if (d[t][t] < 0)
      for (std::size_t j = t; j < n; ++j) d[t][j] = -d[t][j];
  }

  SmithForm out;
  out.diagonal.resize(n);
  out.right.assign(n, IntVector(n));
  out.right_inverse.assign(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal[i] = d[i][i].convert_to<std::int64_t>();
    for (std::size_t j = 0; j < n; ++j) {
      out.right_inverse[i][j] = q[i][j].convert_to<std::int64_t>();
      out.right[i][j] = qinv[i][j].convert_to<std::int64_t>();
    }
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

IntVector row_times(std::span<const std::int64_t> row, const IntMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  IntVector out(cols, 0);
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += row[k] * a[k][j];
  }
  return out;
}

}  // namespace latsec::mat
