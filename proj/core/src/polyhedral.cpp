#include "afforb/polyhedral.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

namespace afforb {

namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

// Keeps every product in the enumerations below far from 128-bit overflow.
constexpr i64 kEntryLimit = i64{1} << 24;

// Column generators as machine integers.
struct SmallMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<i64> a;

  i64 operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

SmallMatrix to_small(const IntMatrix& m) {
  SmallMatrix s{m.rows(), m.cols(), std::vector<i64>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt& x = m(i, j);
      if (abs(x) > kEntryLimit) throw Overflow("entry " + x.get_str() + " too large to enumerate");
      s.a[i * s.cols + j] = x.get_si();
    }
  return s;
}

i128 small_det(std::vector<i64> m, std::size_t n) {
  if (n == 0) return 1;
  if (n == 1) return m[0];
  i128 total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c] == 0) continue;
    std::vector<i64> minor;
    minor.reserve((n - 1) * (n - 1));
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor.push_back(m[i * n + j]);
    const i128 sub = small_det(std::move(minor), n - 1);
    total += (c % 2 == 0 ? 1 : -1) * static_cast<i128>(m[c]) * sub;
  }
  return total;
}

// Solves G * mu = z through k rows of G with a nonzero minor:
// mu = adj * z_rows / det. Coordinates are recovered as numerators over det.
struct RowSolver {
  SmallMatrix g;
  std::vector<std::size_t> rows;
  std::vector<i128> adj;  // k x k
  i128 det = 0;

  std::vector<i128> numerators(std::span<const i64> z_rows) const {
    const std::size_t k = g.cols;
    std::vector<i128> n(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) n[i] += adj[i * k + j] * z_rows[j];
    return n;
  }

  // Value of row r of G * mu, times det.
  i128 scaled_row(std::size_t r, std::span<const i128> num) const {
    i128 s = 0;
    for (std::size_t i = 0; i < g.cols; ++i) s += static_cast<i128>(g(r, i)) * num[i];
    return s;
  }
};

RowSolver make_solver(SmallMatrix g, std::optional<std::size_t> required_row) {
  const std::size_t m = g.rows;
  const std::size_t k = g.cols;
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t start) -> bool {
    if (chosen.size() == k) {
      if (required_row && std::find(chosen.begin(), chosen.end(), *required_row) == chosen.end())
        return false;
      std::vector<i64> sub(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = g(chosen[i], j);
      return small_det(std::move(sub), k) != 0;
    }
    for (std::size_t r = start; r < m; ++r) {
      chosen.push_back(r);
      if (pick(r + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!pick(0)) throw NotIndependent("generators are linearly dependent");

  RowSolver s{std::move(g), chosen, std::vector<i128>(k * k), 0};
  std::vector<i64> sub(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = s.g(chosen[i], j);
  s.det = small_det(sub, k);
  // adj(i, j) = (-1)^(i+j) * minor(j, i)
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<i64> minor;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
          if (r != j && c != i) minor.push_back(sub[r * k + c]);
      s.adj[i * k + j] = ((i + j) % 2 == 0 ? 1 : -1) * small_det(std::move(minor), k - 1);
    }
  if (s.det < 0) {
    s.det = -s.det;
    for (auto& x : s.adj) x = -x;
  }
  return s;
}

// Calls visit(z) for every z in the integer box [lo_i, hi_i].
void for_each_in_box(std::span<const i64> lo, std::span<const i64> hi,
                     const std::function<void(std::span<const i64>)>& visit) {
  std::vector<i64> z(lo.begin(), lo.end());
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return;
  while (true) {
    visit(z);
    std::size_t i = 0;
    while (i < z.size() && z[i] == hi[i]) {
      z[i] = lo[i];
      ++i;
    }
    if (i == z.size()) return;
    ++z[i];
  }
}

i64 floor_div64(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
i64 ceil_div64(i64 a, i64 b) { return -floor_div64(-a, b); }

IntMatrix columns_subset(const IntMatrix& g, unsigned mask) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < g.cols(); ++j)
    if (mask & (1u << j)) cols.push_back(j);
  IntMatrix out(g.rows(), cols.size());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = g(i, cols[j]);
  return out;
}

}  // namespace

RationalSimplex::RationalSimplex(std::vector<RationalPoint> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw NotIndependent("simplex without vertices");
  const std::size_t n = vertices_.front().dim();
  for (const auto& v : vertices_)
    if (v.dim() != n) throw DimensionMismatch("simplex vertices of different dimension");
  if (vertices_.size() > n + 1 || rank(cone_generators()) != vertices_.size()) {
    throw NotIndependent("simplex vertices are affinely dependent");
  }
}

IntMatrix RationalSimplex::cone_generators() const {
  const std::size_t n = ambient_dim();
  IntMatrix g(n + 1, vertices_.size());
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    const HomogeneousVector h = homogeneous(vertices_[j]);
    for (std::size_t i = 0; i <= n; ++i) g(i, j) = h.entries[i];
  }
  return g;
}

bool is_regular_cone(const IntMatrix& gens) {
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    BigInt g = 0;
    for (std::size_t i = 0; i < gens.rows(); ++i) g = gcd(g, gens(i, j));
    if (g != 1) throw NotPrimitive("cone generator " + std::to_string(j) + " is not primitive");
  }
  if (gens.cols() > gens.rows() || rank(gens) != gens.cols()) {
    throw NotIndependent("cone generators are linearly dependent");
  }
  return maximal_minor_gcd(gens) == 1;
}

bool is_regular_simplex(const RationalSimplex& t) { return is_regular_cone(t.cone_generators()); }

AffineUnimodularMap unique_map(const RationalSimplex& from, const RationalSimplex& to) {
  const std::size_t n = from.ambient_dim();
  if (to.ambient_dim() != n || from.simplex_dim() != n || to.simplex_dim() != n) {
    throw DimensionMismatch("unique_map needs two full-dimensional simplices in the same space");
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (den(from.vertices()[i]) != den(to.vertices()[i])) {
      throw DenominatorMismatch("vertex " + std::to_string(i) + ": " + from.vertices()[i].str() +
                                " vs " + to.vertices()[i].str());
    }
  }
  if (!is_regular_simplex(from)) throw NotRegular("source simplex is not regular");
  if (!is_regular_simplex(to)) throw NotRegular("target simplex is not regular");

  const IntMatrix v = from.cone_generators();
  const IntMatrix w = to.cone_generators();
  const RationalMatrix m = to_rational(w) * inverse(v);
  IntMatrix mi;
  try {
    mi = to_integer(m);
  } catch (const BadParameters&) {
    throw InternalInconsistency("V'V^-1 is not integral");
  }
  AffineUnimodularMap gamma = [&] {
    try {
      return AffineUnimodularMap::from_homogeneous(mi);
    } catch (const Error& e) {
      throw InternalInconsistency(std::string("V'V^-1 is not an affine unimodular map: ") +
                                  e.what());
    }
  }();
  for (std::size_t i = 0; i <= n; ++i)
    if (gamma(from.vertices()[i]) != to.vertices()[i])
      throw InternalInconsistency("unique map does not send vertex " + std::to_string(i));
  return gamma;
}

std::vector<IntVector> parallelepiped_integer_points(const RationalSimplex& t) {
  const RowSolver s = make_solver(to_small(t.cone_generators()), std::nullopt);
  const std::size_t m = s.g.rows;
  const std::size_t k = s.g.cols;
  std::vector<i64> lo(k, 0), hi(k, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      const i64 e = s.g(s.rows[j], i);
      (e < 0 ? lo[j] : hi[j]) += e;
    }

  std::vector<IntVector> out;
  for_each_in_box(lo, hi, [&](std::span<const i64> z) {
    const std::vector<i128> num = s.numerators(z);
    for (const i128 x : num)
      if (x < 0 || x >= s.det) return;
    IntVector point(m);
    for (std::size_t r = 0; r < m; ++r) {
      const i128 v = s.scaled_row(r, num);
      if (v % s.det != 0) return;
      point[r] = static_cast<long>(v / s.det);
    }
    out.push_back(std::move(point));
  });
  return out;
}

bool densum_regularity_check(const RationalSimplex& t) {
  const IntMatrix all = t.cone_generators();
  const std::size_t m = all.rows();
  const std::size_t height_row = m - 1;
  const unsigned faces = 1u << all.cols();
  for (unsigned mask = 1; mask < faces; ++mask) {
    const RowSolver s = make_solver(to_small(columns_subset(all, mask)), height_row);
    const std::size_t k = s.g.cols;
    i64 sigma = 0;
    for (std::size_t i = 0; i < k; ++i) sigma += s.g(height_row, i);

    for (i64 h = 1; h < sigma; ++h) {
      // z / h is a convex combination of the face's vertices, so every
      // coordinate lies between the vertex extremes scaled by h.
      std::vector<i64> lo(k), hi(k);
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t r = s.rows[j];
        if (r == height_row) {
          lo[j] = hi[j] = h;
          continue;
        }
        i64 mn = ceil_div64(h * s.g(r, 0), s.g(height_row, 0));
        i64 mx = floor_div64(h * s.g(r, 0), s.g(height_row, 0));
        for (std::size_t i = 1; i < k; ++i) {
          mn = std::min(mn, ceil_div64(h * s.g(r, i), s.g(height_row, i)));
          mx = std::max(mx, floor_div64(h * s.g(r, i), s.g(height_row, i)));
        }
        lo[j] = mn;
        hi[j] = mx;
      }
      bool violated = false;
      for_each_in_box(lo, hi, [&](std::span<const i64> z) {
        if (violated) return;
        const std::vector<i128> num = s.numerators(z);
        for (const i128 x : num)
          if (x <= 0) return;
        for (std::size_t r = 0; r < m; ++r)
          if (s.scaled_row(r, num) % s.det != 0) return;
        violated = true;
      });
      if (violated) return false;
    }
  }
  return true;
}

}  // namespace afforb
