#include "mrees/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "mrees/exact.hpp"
#include "mrees/kernels.hpp"

namespace mrees {

namespace {

ExponentVector require_bounds(const MonomialIdeal& ideal) {
  auto bounds = pure_power_bounds(ideal);
  if (!bounds) throw NotMPrimary("colength of a non-m-primary ideal " + format_ideal(ideal) + " is infinite");
  return *bounds;
}

// Generalized binomial coefficient C(m, k) for integer m and k >= 0.
std::int64_t binomial(std::int64_t m, int k) {
  std::int64_t num = 1;
  std::int64_t den = 1;
  for (int j = 0; j < k; ++j) {
    num = checked_mul(num, m - j);
    den *= j + 1;
  }
  return num / den;
}

std::string grade_text(std::span<const Exponent> n) {
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

// All points of [lo, hi]^arity in lexicographic order.
std::vector<std::vector<Exponent>> cube(int arity, Exponent lo, Exponent hi) {
  std::vector<std::vector<Exponent>> out{{}};
  for (int k = 0; k < arity; ++k) {
    std::vector<std::vector<Exponent>> next;
    for (const auto& p : out) {
      for (Exponent v = lo; v <= hi; ++v) {
        auto q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ExponentOverflow("Hilbert coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Exponent colength(const MonomialIdeal& ideal) {
  const ExponentVector a = require_bounds(ideal);
  const int d = ideal.dimension();
  if (ideal.is_unit()) return 0;
  const Exponent rows = d >= 2 ? a[0] : 1;
  const Exponent cols = d == 3 ? a[1] : 1;
  const Exponent top = a[d - 1];
  // cell = least last coordinate among generators sitting exactly on the
  // prefix column, then prefix minima turn it into the staircase height.
  std::vector<Exponent> h(static_cast<std::size_t>(checked_mul(rows, cols)), top);
  for (const auto& g : ideal.generators()) {
    const Exponent p0 = d >= 2 ? g[0] : 0;
    const Exponent p1 = d == 3 ? g[1] : 0;
    if (p0 >= rows || p1 >= cols) continue;
    auto& cell = h[static_cast<std::size_t>(p0 * cols + p1)];
    cell = std::min(cell, g[d - 1]);
  }
  Exponent total = 0;
  for (Exponent p0 = 0; p0 < rows; ++p0) {
    for (Exponent p1 = 0; p1 < cols; ++p1) {
      auto& cell = h[static_cast<std::size_t>(p0 * cols + p1)];
      if (p0 > 0) cell = std::min(cell, h[static_cast<std::size_t>((p0 - 1) * cols + p1)]);
      if (p1 > 0) cell = std::min(cell, h[static_cast<std::size_t>(p0 * cols + p1 - 1)]);
      total = checked_add(total, cell);
    }
  }
  return total;
}

Exponent colength_dense(const MonomialIdeal& ideal) {
  const ExponentVector a = require_bounds(ideal);
  const int d = ideal.dimension();
  kernels::Point3 box{1, 1, 1};
  for (int i = 0; i < d; ++i) box[static_cast<std::size_t>(i)] = a[i];
  std::vector<kernels::Point3> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.padded());
  return kernels::count_outside(gens, box);
}

// ---------------------------------------------------------------------------
// FiltrationCache

FiltrationCache::FiltrationCache(std::vector<MonomialIdeal> ideals, FiltrationKind kind)
    : ideals_(std::move(ideals)), kind_(kind) {
  if (ideals_.empty() || ideals_.size() > 3) throw PreconditionError("a filtration needs 1 to 3 ideals");
  for (const auto& ideal : ideals_) {
    if (!(ideal.ring() == ideals_.front().ring())) throw DimensionMismatch("ideals live in different rings");
    if (!is_m_primary(ideal)) throw NotMPrimary("filtration ideal " + format_ideal(ideal) + " is not m-primary");
  }
  if (kind_ == FiltrationKind::Normal) {
    closure_.emplace(ideals_);
  } else {
    for (const auto& ideal : ideals_) powers_.emplace_back(ideal);
  }
}

Grade FiltrationCache::grade(std::span<const Exponent> n) const {
  if (static_cast<int>(n.size()) != arity()) {
    throw DimensionMismatch("grade " + grade_text(n) + " has the wrong length for arity " + std::to_string(arity()));
  }
  Grade g{0, 0, 0};
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < 0) throw PreconditionError("negative filtration exponent in " + grade_text(n));
    g[i] = n[i];
  }
  return g;
}

const FiltrationEntry& FiltrationCache::entry(std::span<const Exponent> n) {
  const Grade g = grade(n);
  if (auto it = table_.find(g); it != table_.end()) return it->second;
  MonomialIdeal ideal;
  if (kind_ == FiltrationKind::Normal) {
    ideal = closure_->closure(n);
  } else {
    ideal = MonomialIdeal::unit(ring());
    for (std::size_t i = 0; i < n.size(); ++i) ideal = multiply(ideal, powers_[i].power(n[i]));
  }
  const Exponent len = colength(ideal);
  computed_.push_back(g);
  return table_.emplace(g, FiltrationEntry{std::move(ideal), len}).first->second;
}

bool FiltrationCache::adopt(const Grade& n, FiltrationEntry entry) {
  for (int i = 0; i < 3; ++i) {
    if (n[static_cast<std::size_t>(i)] < 0 || (i >= arity() && n[static_cast<std::size_t>(i)] != 0)) return false;
  }
  if (!(entry.ideal.ring() == ring()) || !is_m_primary(entry.ideal)) return false;
  if (colength(entry.ideal) != entry.colength) return false;
  table_.insert_or_assign(n, std::move(entry));
  return true;
}

std::string FiltrationCache::key() const {
  std::string k = kind_ == FiltrationKind::Normal ? "normal" : "adic";
  k += " [";
  const auto& names = ring().variable_names();
  for (std::size_t i = 0; i < names.size(); ++i) k += (i ? "," : "") + names[i];
  k += "]";
  for (const auto& ideal : ideals_) k += " " + format_ideal(ideal);
  return k;
}

Exponent normal_colength(FiltrationCache& cache, std::span<const Exponent> n) { return cache.colength_at(n); }

// ---------------------------------------------------------------------------
// HilbertPoly

std::vector<MultiIndex> basis_indices(int arity) {
  if (arity < 1 || arity > 3) throw PreconditionError("arity must be 1, 2 or 3");
  std::vector<MultiIndex> out;
  const int jmax = arity >= 2 ? 3 : 0;
  const int kmax = arity == 3 ? 3 : 0;
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= jmax; ++j) {
      for (int k = 0; k <= kmax; ++k) {
        if (i + j + k <= 3) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

std::int64_t basis_value(const MultiIndex& i, std::span<const Exponent> n) {
  std::int64_t v = 1;
  for (std::size_t k = 0; k < n.size(); ++k) v = checked_mul(v, binomial(n[k] + i[k] - 1, i[k]));
  return v;
}

HilbertPoly::HilbertPoly(int arity, std::map<MultiIndex, std::int64_t> coeffs) : arity_(arity) {
  for (const auto& i : basis_indices(arity)) coeffs_[i] = 0;
  for (const auto& [i, e] : coeffs) {
    auto it = coeffs_.find(i);
    if (it == coeffs_.end()) throw PreconditionError("multi-index outside the arity/degree range");
    it->second = e;
  }
}

std::int64_t HilbertPoly::coefficient(const MultiIndex& i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t HilbertPoly::value(std::span<const Exponent> n) const {
  if (static_cast<int>(n.size()) != arity_) throw DimensionMismatch("evaluation point has the wrong arity");
  std::int64_t total = 0;
  for (const auto& [i, e] : coeffs_) {
    const std::int64_t term = checked_mul(e, basis_value(i, n));
    total = (3 - (i[0] + i[1] + i[2])) % 2 ? checked_add(total, -term) : checked_add(total, term);
  }
  return total;
}

std::array<std::int64_t, 4> HilbertPoly::univariate() const {
  if (arity_ != 1) throw PreconditionError("univariate coefficients of a multivariate polynomial");
  return {coefficient({3, 0, 0}), coefficient({2, 0, 0}), coefficient({1, 0, 0}), coefficient({0, 0, 0})};
}

HilbertPoly fit(FiltrationCache& cache, int arity, Exponent offset) {
  if (arity != cache.arity()) throw PreconditionError("fit arity differs from the filtration arity");
  if (offset < 0) throw PreconditionError("negative fitting offset");
  const auto indices = basis_indices(arity);

  std::vector<std::vector<Exponent>> samples;
  for (const auto& p : cube(arity, 0, 3)) {
    Exponent s = 0;
    for (Exponent v : p) s += v;
    if (s > 3) continue;
    auto q = p;
    for (auto& v : q) v += offset;
    samples.push_back(std::move(q));
  }

  BigMatrix a;
  std::vector<BigInt> b;
  for (const auto& p : samples) {
    std::vector<BigInt> row;
    for (const auto& i : indices) {
      const std::int64_t sign = (3 - (i[0] + i[1] + i[2])) % 2 ? -1 : 1;
      row.emplace_back(sign * basis_value(i, p));
    }
    a.push_back(std::move(row));
    b.emplace_back(cache.colength_at(p));
  }
  const auto x = solve_exact(std::move(a), std::move(b));
  if (!x) throw InvariantViolation("simplex sampling grid produced a singular system");

  std::map<MultiIndex, std::int64_t> coeffs;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const Rational& q = (*x)[k];
    if (denominator(q) != 1) {
      std::ostringstream msg;
      msg << "offset " << offset << ": non-integral coefficient " << q << " at index (" << indices[k][0] << ","
          << indices[k][1] << "," << indices[k][2] << ")";
      throw PostulationFailure(msg.str());
    }
    coeffs[indices[k]] = to_int64(numerator(q));
  }
  HilbertPoly poly(arity, std::move(coeffs));

  std::string mismatches;
  for (const auto& p : cube(arity, offset, offset + 5)) {
    const std::int64_t want = cache.colength_at(p);
    const std::int64_t got = poly.value(p);
    if (want != got) {
      mismatches += " " + grade_text(p) + ": P=" + std::to_string(got) + " H=" + std::to_string(want);
    }
  }
  if (!mismatches.empty()) throw PostulationFailure("offset " + std::to_string(offset) + " mismatches:" + mismatches);
  return poly;
}

HilbertPoly stabilized_fit(FiltrationCache& cache, int arity) {
  constexpr Exponent kMaxOffset = 8;
  std::vector<std::optional<HilbertPoly>> fits;
  std::string table;
  for (Exponent o = 0; o <= kMaxOffset + 1; ++o) {
    try {
      fits.push_back(fit(cache, arity, o));
      table += "\n  offset " + std::to_string(o) + ": fitted";
    } catch (const PostulationFailure& e) {
      fits.emplace_back();
      table += "\n  offset " + std::to_string(o) + ": " + e.what();
    }
    if (o >= 1 && fits[o - 1] && fits[o] && *fits[o - 1] == *fits[o]) {
      HilbertPoly out = *fits[o - 1];
      out.stable_offset = static_cast<int>(o - 1);
      return out;
    }
  }
  throw NoStabilization("no two consecutive fits agree up to offset " + std::to_string(kMaxOffset) + table);
}

CheckReport postulation_check(const HilbertPoly& poly, FiltrationCache& cache, Exponent box) {
  if (box < 0) throw PreconditionError("postulation box must be nonnegative");
  if (poly.arity() != cache.arity()) throw PreconditionError("polynomial arity differs from the filtration arity");
  CheckReport report;
  report.check = "postulation";
  report.bound = box;
  for (const auto& p : cube(cache.arity(), 0, box)) {
    const std::int64_t h = cache.colength_at(p);
    const std::int64_t v = poly.value(p);
    if (h != v) {
      report.fail({p, std::nullopt, "P=" + std::to_string(v) + " H=" + std::to_string(h)});
    }
  }
  return report;
}

CheckReport postulation_check(FiltrationCache& cache, int arity, Exponent box) {
  const HilbertPoly poly = stabilized_fit(cache, arity);
  CheckReport report = postulation_check(poly, cache, box);
  report.notes.push_back("stable offset " + std::to_string(poly.stable_offset));
  return report;
}

std::int64_t e3_of_product(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw PreconditionError("e3 of an empty product");
  MonomialIdeal product = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) product = multiply(product, ideals[i]);
  FiltrationCache cache({product});
  return stabilized_fit(cache, 1).univariate()[3];
}

}  // namespace mrees
