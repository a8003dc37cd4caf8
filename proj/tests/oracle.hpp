#pragma once

// Brute-force reference computations for the tests. Nothing here calls into
// the library beyond reading generator lists, so agreement with it is
// evidence rather than tautology.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mrees/monomial.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using V = std::array<long, 3>;
using Gens = std::vector<V>;

inline Gens gens_of(const mrees::MonomialIdeal& I) {
  Gens out;
  for (const auto& g : I.generators()) out.push_back({static_cast<long>(g.padded()[0]), static_cast<long>(g.padded()[1]),
                                                      static_cast<long>(g.padded()[2])});
  return out;
}

inline bool leq(const V& a, const V& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

inline bool member(const Gens& gens, const V& v) {
  for (const auto& g : gens) {
    if (leq(g, v)) return true;
  }
  return false;
}

// Drops dominated and repeated vectors by pairwise comparison.
inline Gens prune(Gens g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  Gens out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < g.size() && !dominated; ++j) dominated = j != i && leq(g[j], g[i]);
    if (!dominated) out.push_back(g[i]);
  }
  return out;
}

inline Gens product(const Gens& a, const Gens& b) {
  Gens out;
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back({x[0] + y[0], x[1] + y[1], x[2] + y[2]});
  }
  return prune(out);
}

inline Gens power(const Gens& a, int k) {
  Gens out{{0, 0, 0}};
  for (int i = 0; i < k; ++i) out = product(out, a);
  return out;
}

inline V scale(long k, const V& v) { return {k * v[0], k * v[1], k * v[2]}; }

/// v in closure(I) certified by (x^v)^k in I^k for some k <= kmax; returns that k.
class PowerMembership {
 public:
  PowerMembership(const Gens& gens, int kmax) {
    for (int k = 1; k <= kmax; ++k) powers_.push_back(power(gens, k));
  }
  std::optional<int> certify(const V& v) const {
    for (std::size_t k = 0; k < powers_.size(); ++k) {
      if (member(powers_[k], scale(static_cast<long>(k + 1), v))) return static_cast<int>(k + 1);
    }
    return std::nullopt;
  }

 private:
  std::vector<Gens> powers_;
};

/// v in conv(gens) + orthant, decided exactly. By Caratheodory it suffices to
/// look for a convex combination of at most three generators lying below v.
inline bool in_newton_polyhedron(const Gens& gens, const V& v) {
  const std::size_t n = gens.size();
  for (const auto& g : gens) {
    if (leq(g, v)) return true;
  }
  // Two generators: lambda in [0,1] with lambda*g1 + (1-lambda)*g2 <= v coordinatewise.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Q lo = 0, hi = 1;
      for (int c = 0; c < 3; ++c) {
        // lambda*(g1-g2) <= v - g2
        const long a = gens[i][c] - gens[j][c];
        const long b = v[c] - gens[j][c];
        if (a > 0) hi = std::min(hi, Q(b) / a);
        if (a < 0) lo = std::max(lo, Q(b) / a);
        if (a == 0 && b < 0) lo = 2;
      }
      if (lo <= hi) return true;
    }
  }
  // Three generators: (l1, l2) with l1, l2 >= 0, l1 + l2 <= 1 and three
  // coordinate constraints. A nonempty bounded region has a vertex, so test
  // every intersection of two constraint lines.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // constraint rows: p*l1 + q*l2 <= r
        std::vector<std::array<Q, 3>> rows;
        rows.push_back({Q(-1), Q(0), Q(0)});
        rows.push_back({Q(0), Q(-1), Q(0)});
        rows.push_back({Q(1), Q(1), Q(1)});
        for (int c = 0; c < 3; ++c) {
          rows.push_back({Q(gens[i][c] - gens[k][c]), Q(gens[j][c] - gens[k][c]), Q(v[c] - gens[k][c])});
        }
        bool found = false;
        for (std::size_t r1 = 0; r1 < rows.size() && !found; ++r1) {
          for (std::size_t r2 = r1 + 1; r2 < rows.size() && !found; ++r2) {
            const Q det = rows[r1][0] * rows[r2][1] - rows[r1][1] * rows[r2][0];
            if (det == 0) continue;
            const Q l1 = (rows[r1][2] * rows[r2][1] - rows[r1][1] * rows[r2][2]) / det;
            const Q l2 = (rows[r1][0] * rows[r2][2] - rows[r1][2] * rows[r2][0]) / det;
            bool ok = true;
            for (const auto& row : rows) ok = ok && row[0] * l1 + row[1] * l2 <= row[2];
            found = ok;
          }
        }
        if (found) return true;
      }
    }
  }
  return false;
}

/// Exponents of the pure powers, or nullopt when some variable has none.
inline std::optional<V> pure_bounds(const Gens& gens, int d) {
  V b{1, 1, 1};
  for (int i = 0; i < d; ++i) {
    long best = -1;
    for (const auto& g : gens) {
      bool pure = true;
      for (int j = 0; j < 3; ++j) pure = pure && (j == i || g[j] == 0);
      if (pure && (best < 0 || g[i] < best)) best = g[i];
    }
    if (best < 0) return std::nullopt;
    b[i] = best;
  }
  return b;
}

template <class Pred>
long count_outside(const V& box, Pred in_ideal) {
  long count = 0;
  for (long i = 0; i < box[0]; ++i) {
    for (long j = 0; j < box[1]; ++j) {
      for (long k = 0; k < box[2]; ++k) count += in_ideal(V{i, j, k}) ? 0 : 1;
    }
  }
  return count;
}

inline long colength(const Gens& gens, int d) {
  const auto b = pure_bounds(gens, d);
  return count_outside(*b, [&](const V& v) { return member(gens, v); });
}

/// lambda(R / closure(I^n)) via n*NP(I).
inline long normal_colength(const Gens& gens, int d, long n) {
  if (n == 0) return 0;
  Gens scaled;
  for (const auto& g : gens) scaled.push_back(scale(n, g));
  V box = *pure_bounds(scaled, d);
  return count_outside(box, [&](const V& v) { return in_newton_polyhedron(scaled, v); });
}

/// (e0, e1, e2, e3) from the cubic through H(o), ..., H(o+3) by Newton
/// forward differences, rewritten in the binomial basis of the library.
inline std::array<Q, 4> univariate_coefficients(const std::array<long, 4>& h, long o) {
  // Newton form: H(o+m) = d0 + d1 m + d2 C(m,2) + d3 C(m,3).
  std::array<Q, 4> d{Q(h[0]), Q(h[1] - h[0]), Q(h[2] - 2 * h[1] + h[0]), Q(h[3] - 3 * h[2] + 3 * h[1] - h[0])};
  // Monomial coefficients in n by expanding at m = n - o.
  auto value = [&](const Q& n) {
    const Q m = n - o;
    return d[0] + d[1] * m + d[2] * m * (m - 1) / 2 + d[3] * m * (m - 1) * (m - 2) / 6;
  };
  // P(n) = e0 C(n+2,3) - e1 C(n+1,2) + e2 n - e3; recover from P at n = 0, -1, -2, 1 where
  // C(n+2,3) = 0 at n = 0,-1,-2 and C(n+1,2) = 0 at n = 0,-1.
  const Q p0 = value(0), pm1 = value(-1), pm2 = value(-2), p1 = value(1);
  const Q e3 = -p0;
  const Q e2 = -(pm1 + e3);  // P(-1) = -e2 - e3
  // P(-2) = -e1 * C(-1,2) - 2 e2 - e3 with C(-1,2) = 1
  const Q e1 = -(pm2 + 2 * e2 + e3);
  // P(1) = e0 - e1 + e2 - e3
  const Q e0 = p1 + e1 - e2 + e3;
  return {e0, e1, e2, e3};
}

/// Exact solution of a square system over Q by Gauss-Jordan with pivoting
/// on the first nonzero entry; nullopt when singular.
inline std::optional<std::vector<Q>> gauss_solve(std::vector<std::vector<Q>> a, std::vector<Q> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Q f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

}  // namespace oracle
