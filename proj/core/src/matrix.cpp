#include "afforb/exact/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace afforb {

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RationalMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) {
        throw BadParameters("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                            m(i, j).str() + " is not an integer");
      }
      r(i, j) = m(i, j).num();
    }
  return r;
}

BigInt det(const IntMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  // Bareiss fraction-free elimination; every division below is exact.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign < 0 ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

Rational det(const RationalMatrix& m) {
  if (!m.square()) throw DimensionMismatch("determinant of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      result = -result;
    }
    result *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return result;
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.square()) return false;
  return abs(det(m)) == 1;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw Singular("matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

BigInt maximal_minor_gcd(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t t = m.cols();
  if (t > rows) throw DimensionMismatch("more columns than rows");
  if (t == 0) return 1;
  BigInt g = 0;
  // Enumerate t-subsets of rows in lexicographic order.
  std::vector<std::size_t> pick(t);
  for (std::size_t i = 0; i < t; ++i) pick[i] = i;
  while (true) {
    IntMatrix sub(t, t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) sub(i, j) = m(pick[i], j);
    g = gcd(g, det(sub));
    if (g == 1) return g;
    std::size_t i = t;
    while (i > 0 && pick[i - 1] == rows - t + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g;
}

namespace {

// Replaces rows (r, i) of each matrix by P * (row_r, row_i) with
// P = [[s, t], [-b/g, a/g]], det P = 1.
void bezout_rows(IntMatrix& a, std::size_t r, std::size_t i, const BigInt& s, const BigInt& t,
                 const BigInt& bg, const BigInt& ag) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    BigInt x = s * a(r, j) + t * a(i, j);
    BigInt y = ag * a(i, j) - bg * a(r, j);
    a(r, j) = std::move(x);
    a(i, j) = std::move(y);
  }
}

void negate_row(IntMatrix& a, std::size_t r) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
}

void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, const BigInt& k) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += k * a(src, j);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.H;
  IntMatrix& k = out.K;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        k.swap_rows(r, i);
        continue;
      }
      const Bezout bz = bezout(h(r, c), h(i, c));
      const BigInt bg = h(i, c) / bz.g;
      const BigInt ag = h(r, c) / bz.g;
      bezout_rows(h, r, i, bz.s, bz.t, bg, ag);
      bezout_rows(k, r, i, bz.s, bz.t, bg, ag);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(k, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const BigInt q = floor_div(h(i, c), h(r, c));
      if (q == 0) continue;
      add_row_multiple(h, i, r, -q);
      add_row_multiple(k, i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

// Plain subtraction when a divides b, otherwise gcdext.
static Bezout elimination(const BigInt& a, const BigInt& b) {
  if (b % a == 0) return Bezout{a, 1, 0};
  return bezout(a, b);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  // Invariant throughout: m = U * A * V.
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  // Rows (r, i) of A <- P * (r, i) with P = [[s, t], [-b/g, a/g]];
  // U <- U * P^{-1}, P^{-1} = [[a/g, -t], [b/g, s]].
  auto row_op = [&](std::size_t r, std::size_t i, std::size_t col) {
    const Bezout bz = elimination(a(r, col), a(i, col));
    const BigInt bg = a(i, col) / bz.g;
    const BigInt ag = a(r, col) / bz.g;
    bezout_rows(a, r, i, bz.s, bz.t, bg, ag);
    for (std::size_t j = 0; j < u.rows(); ++j) {
      BigInt x = ag * u(j, r) + bg * u(j, i);
      BigInt y = bz.s * u(j, i) - bz.t * u(j, r);
      u(j, r) = std::move(x);
      u(j, i) = std::move(y);
    }
  };
  // Columns (c, j) of A <- (c, j) * Q with Q = [[s, -b/g], [t, a/g]];
  // V <- Q^{-1} * V, Q^{-1} = [[a/g, b/g], [-t, s]].
  auto col_op = [&](std::size_t c, std::size_t j, std::size_t row) {
    const Bezout bz = elimination(a(row, c), a(row, j));
    const BigInt bg = a(row, j) / bz.g;
    const BigInt ag = a(row, c) / bz.g;
    for (std::size_t i = 0; i < rows; ++i) {
      BigInt x = bz.s * a(i, c) + bz.t * a(i, j);
      BigInt y = ag * a(i, j) - bg * a(i, c);
      a(i, c) = std::move(x);
      a(i, j) = std::move(y);
    }
    for (std::size_t k = 0; k < v.cols(); ++k) {
      BigInt x = ag * v(c, k) + bg * v(j, k);
      BigInt y = bz.s * v(j, k) - bz.t * v(c, k);
      v(c, k) = std::move(x);
      v(j, k) = std::move(y);
    }
  };

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    a.swap_rows(k, pr);
    u.swap_cols(k, pr);
    a.swap_cols(k, pc);
    v.swap_rows(k, pc);

    while (true) {
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i)
        if (a(i, k) != 0) row_op(k, i, k);
      for (std::size_t j = k + 1; j < cols; ++j)
        if (a(k, j) != 0) {
          col_op(k, j, k);
          clean = false;
        }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = k + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (mod(a(i, j), a(k, k)) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      // Row k += row bad; U <- U * (I - e_{k,bad}) keeps the invariant.
      add_row_multiple(a, k, bad, 1);
      for (std::size_t j = 0; j < u.rows(); ++j) u(j, bad) -= u(j, k);
    }
    if (a(k, k) < 0) {
      negate_row(a, k);
      for (std::size_t j = 0; j < u.rows(); ++j) u(j, k) = -u(j, k);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace afforb
