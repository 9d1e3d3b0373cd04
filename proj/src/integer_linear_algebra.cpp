#include "satake/integer_linear_algebra.hpp"

#include <algorithm>
#include <utility>

namespace satake {

namespace {

BigMatrix identity(std::size_t n) {
  BigMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// floor division for BigInt (cpp_int divides toward zero)
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Row and column operations applied simultaneously to the working matrix and
// the accumulated transforms.
struct SmithWork {
  BigMatrix a;
  BigMatrix u;
  BigMatrix v;
  std::size_t rows;
  std::size_t cols;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const BigInt& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols; ++c) a[i][c] += f * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) u[i][c] += f * u[j][c];
  }
  // col_i += f * col_j
  void add_col(std::size_t i, std::size_t j, const BigInt& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows; ++r) a[r][i] += f * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][i] += f * v[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

BigInt determinant(BigMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t matrix_rank(BigMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      BigInt f = m[i][c];
      BigInt g = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
    }
    ++r;
  }
  return r;
}

SmithForm smith_normal_form(const BigMatrix& input, std::size_t cols) {
  SmithWork w{input, identity(input.size()), identity(cols), input.size(), cols};
  const std::size_t rows = input.size();
  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero magnitude in the trailing block
      bool found = false;
      std::size_t pr = t, pc = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (w.a[i][j] == 0) continue;
          BigInt mag = abs(w.a[i][j]);
          if (!found || mag < best) {
            found = true;
            best = mag;
            pr = i;
            pc = j;
          }
        }
      if (!found) goto done;
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.a[i][t] == 0) continue;
        w.add_row(i, t, -floor_div(w.a[i][t], w.a[t][t]));
        if (w.a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.a[t][j] == 0) continue;
        w.add_col(j, t, -floor_div(w.a[t][j], w.a[t][t]));
        if (w.a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility of the trailing block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.a[i][j] % w.a[t][t] != 0) {
            w.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (w.a[t][t] < 0) w.negate_row(t);
  }
done:
  SmithForm out;
  out.diagonal.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out.diagonal[i] = w.a[i][i];
    if (w.a[i][i] != 0) ++out.rank;
  }
  out.left = std::move(w.u);
  out.right = std::move(w.v);
  return out;
}

BigMatrix row_lattice_basis(const BigMatrix& rows, std::size_t cols) {
  // Incremental echelon insertion with extended-gcd row combinations.
  std::vector<std::vector<BigInt>> basis;  // basis[k] has its pivot at pivot_col[k]
  std::vector<std::size_t> pivot_col;
  for (std::vector<BigInt> r : rows) {
    for (;;) {
      std::size_t lead = 0;
      while (lead < cols && r[lead] == 0) ++lead;
      if (lead == cols) break;
      std::size_t pos = 0;
      while (pos < basis.size() && pivot_col[pos] < lead) ++pos;
      if (pos == basis.size() || pivot_col[pos] != lead) {
        // rows with a later pivot vanish at `lead`, so echelon form is kept
        basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
        pivot_col.insert(pivot_col.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        break;
      }
      auto& b = basis[pos];
      while (r[lead] != 0) {
        BigInt q = floor_div(b[lead], r[lead]);
        for (std::size_t j = 0; j < cols; ++j) b[j] -= q * r[j];
        std::swap(b, r);
      }
    }
  }
  for (auto& b : basis) {
    std::size_t lead = 0;
    while (lead < cols && b[lead] == 0) ++lead;
    if (lead < cols && b[lead] < 0)
      for (auto& x : b) x = -x;
  }
  return basis;
}

std::optional<IntegerSolution> solve_integer_system(const BigMatrix& a, const std::vector<BigInt>& b,
                                                    std::size_t cols) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw DomainError("solve_integer_system: size mismatch");
  SmithForm snf = smith_normal_form(a, cols);
  std::vector<BigInt> c(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) c[i] += snf.left[i][j] * b[j];
  std::vector<BigInt> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < snf.rank) {
      if (c[i] % snf.diagonal[i] != 0) return std::nullopt;
      y[i] = c[i] / snf.diagonal[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular.assign(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) sol.particular[i] += snf.right[i][j] * y[j];
  for (std::size_t j = snf.rank; j < cols; ++j) {
    std::vector<BigInt> k(cols);
    for (std::size_t i = 0; i < cols; ++i) k[i] = snf.right[i][j];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

std::optional<std::vector<Rational>> solve_rational_square(const BigMatrix& a, const std::vector<BigInt>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n] = Rational(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[c], m[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

std::vector<BigInt> clear_denominators(const std::vector<Rational>& v, BigInt* scale) {
  BigInt l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, denominator(q));
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(numerator(q) * (l / denominator(q)));
  if (scale) *scale = l;
  return out;
}

}  // namespace satake
