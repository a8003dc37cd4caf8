#include "mrees/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace mrees {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw ExponentOverflow("exponent sum exceeds 64-bit range");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw ExponentOverflow("exponent product exceeds 64-bit range");
  return out;
}

ExponentVector::ExponentVector(std::initializer_list<Exponent> entries)
    : ExponentVector(std::span<const Exponent>(entries.begin(), entries.size())) {}

ExponentVector::ExponentVector(std::span<const Exponent> entries) {
  if (entries.empty() || entries.size() > kMaxDimension) {
    throw DimensionMismatch("exponent vectors have 1 to 3 entries, got " + std::to_string(entries.size()));
  }
  dim_ = static_cast<std::uint8_t>(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) throw PreconditionError("negative exponent " + std::to_string(entries[i]));
    e_[i] = entries[i];
  }
}

ExponentVector ExponentVector::zero(int dimension) {
  if (dimension < 1 || dimension > kMaxDimension) throw DimensionMismatch("dimension must be 1..3");
  ExponentVector v;
  v.dim_ = static_cast<std::uint8_t>(dimension);
  return v;
}

ExponentVector ExponentVector::pure_power(int dimension, int variable, Exponent k) {
  ExponentVector v = zero(dimension);
  if (variable < 0 || variable >= dimension) throw DimensionMismatch("variable index out of range");
  if (k < 0) throw PreconditionError("negative exponent");
  v.e_[static_cast<std::size_t>(variable)] = k;
  return v;
}

Exponent ExponentVector::total_degree() const { return checked_add(checked_add(e_[0], e_[1]), e_[2]); }

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector out = a;
  for (std::size_t i = 0; i < kMaxDimension; ++i) out.e_[i] = checked_add(a.e_[i], b.e_[i]);
  return out;
}

ExponentVector operator*(Exponent k, const ExponentVector& v) {
  if (k < 0) throw PreconditionError("negative multiplier");
  ExponentVector out = v;
  for (auto& x : out.e_) x = checked_mul(k, x);
  return out;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector out = a;
  for (std::size_t i = 0; i < kMaxDimension; ++i) out.e_[i] = std::max(a.e_[i], b.e_[i]);
  return out;
}

ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("exponent vectors of different length");
  ExponentVector out = a;
  for (std::size_t i = 0; i < kMaxDimension; ++i) out.e_[i] = std::max<Exponent>(a.e_[i] - b.e_[i], 0);
  return out;
}

namespace {

const std::vector<std::string>& default_names(int dimension) {
  static const std::vector<std::string> names[] = {{"x"}, {"x", "y"}, {"x", "y", "z"}};
  if (dimension < 1 || dimension > kMaxDimension) throw DimensionMismatch("dimension must be 1..3");
  return names[dimension - 1];
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw DimensionMismatch("ideals belong to different rings");
}

void require_dimension(const MonomialIdeal& ideal, const ExponentVector& v) {
  if (v.size() != ideal.dimension()) {
    throw DimensionMismatch("exponent vector of length " + std::to_string(v.size()) + " in a ring of dimension " +
                            std::to_string(ideal.dimension()));
  }
}

}  // namespace

RingContext::RingContext() : RingContext(default_names(3)) {}

RingContext::RingContext(std::vector<std::string> variable_names) {
  if (variable_names.empty() || variable_names.size() > kMaxDimension) {
    throw DimensionMismatch("rings have 1 to 3 variables");
  }
  std::set<std::string> seen;
  for (const auto& name : variable_names) {
    if (name.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(name).second) throw PreconditionError("duplicate variable name '" + name + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(variable_names));
}

RingContext RingContext::standard(int dimension) { return RingContext(default_names(dimension)); }

MonomialIdeal::MonomialIdeal() : MonomialIdeal(RingContext{}, {}) {}

MonomialIdeal::MonomialIdeal(RingContext ring, std::vector<ExponentVector> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(const RingContext& ring) { return MonomialIdeal(ring, {}); }

MonomialIdeal MonomialIdeal::unit(const RingContext& ring) {
  return MonomialIdeal(ring, {ExponentVector::zero(ring.dimension())});
}

MonomialIdeal MonomialIdeal::principal(const RingContext& ring, const ExponentVector& v) {
  if (v.size() != ring.dimension()) throw DimensionMismatch("monomial length differs from ring dimension");
  return MonomialIdeal(ring, {v});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_.front() == ExponentVector::zero(dimension());
}

MonomialIdeal minimalize(const RingContext& ring, std::span<const ExponentVector> raw) {
  std::vector<ExponentVector> sorted(raw.begin(), raw.end());
  for (const auto& v : sorted) {
    if (v.size() != ring.dimension()) {
      throw DimensionMismatch("exponent vector of length " + std::to_string(v.size()) + " in a ring of dimension " +
                              std::to_string(ring.dimension()));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // A divisor of g is lexicographically <= g, so it has already been seen.
  std::vector<ExponentVector> kept;
  kept.reserve(sorted.size());
  for (const auto& g : sorted) {
    bool dominated = false;
    for (const auto& h : kept) {
      if (h.divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  return MonomialIdeal(ring, std::move(kept));
}

MonomialIdeal minimalize(const RingContext& ring, std::initializer_list<ExponentVector> raw) {
  return minimalize(ring, std::span<const ExponentVector>(raw.begin(), raw.size()));
}

MonomialIdeal from_canonical(const RingContext& ring, std::vector<ExponentVector> gens) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < gens.size(); ++i) {
    assert(gens[i].size() == ring.dimension());
    if (i > 0) assert(gens[i - 1] < gens[i]);
    for (std::size_t j = 0; j < i; ++j) assert(!gens[j].divides(gens[i]));
  }
#endif
  return MonomialIdeal(ring, std::move(gens));
}

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& v) {
  require_dimension(ideal, v);
  for (const auto& g : ideal.generators()) {
    if (g.divides(v)) return true;
  }
  return false;
}

bool is_subset(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_same_ring(inner, outer);
  for (const auto& g : inner.generators()) {
    if (!contains_monomial(outer, g)) return false;
  }
  return true;
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> all(a.generators());
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ring(), all);
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> all;
  all.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) all.push_back(g + h);
  }
  return minimalize(a.ring(), all);
}

MonomialIdeal scale(const MonomialIdeal& ideal, const ExponentVector& v) {
  require_dimension(ideal, v);
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g + v);
  // Translation preserves both the antichain property and lex order.
  return from_canonical(ideal.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, Exponent n) {
  if (n < 0) throw PreconditionError("negative power");
  PowerCache cache(ideal);
  return cache.power(n);
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> all;
  all.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) all.push_back(lcm(g, h));
  }
  return minimalize(a.ring(), all);
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw ZeroIdealError("colon by the zero ideal");
  std::optional<MonomialIdeal> result;
  for (const auto& h : b.generators()) {
    std::vector<ExponentVector> part;
    part.reserve(a.size());
    for (const auto& g : a.generators()) part.push_back(quotient(g, h));
    MonomialIdeal piece = minimalize(a.ring(), part);
    result = result ? intersect(*result, piece) : std::move(piece);
  }
  return *result;
}

std::optional<ExponentVector> pure_power_bounds(const MonomialIdeal& ideal) {
  const int d = ideal.dimension();
  std::array<Exponent, kMaxDimension> bound{-1, -1, -1};
  for (const auto& g : ideal.generators()) {
    int support = -1;
    int count = 0;
    for (int i = 0; i < d; ++i) {
      if (g[i] > 0) {
        support = i;
        ++count;
      }
    }
    if (count == 0) return ExponentVector::zero(d);  // unit ideal
    if (count == 1) {
      auto& b = bound[static_cast<std::size_t>(support)];
      if (b < 0 || g[support] < b) b = g[support];
    }
  }
  for (int i = 0; i < d; ++i) {
    if (bound[static_cast<std::size_t>(i)] < 0) return std::nullopt;
  }
  return ExponentVector(std::span<const Exponent>(bound.data(), static_cast<std::size_t>(d)));
}

bool is_m_primary(const MonomialIdeal& ideal) { return pure_power_bounds(ideal).has_value(); }

ExponentVector generator_box(const MonomialIdeal& ideal) {
  ExponentVector box = ExponentVector::zero(ideal.dimension());
  for (const auto& g : ideal.generators()) box = lcm(box, g);
  return box;
}

std::optional<ExponentVector> generator_not_in(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_ring(lhs, rhs);
  const auto& gens = lhs.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (!contains_monomial(rhs, *it)) return *it;
  }
  return std::nullopt;
}

PowerCache::PowerCache(MonomialIdeal base) : unit_(MonomialIdeal::unit(base.ring())) {
  powers_.push_back(std::move(base));
}

const MonomialIdeal& PowerCache::power(Exponent n) {
  if (n < 0) throw PreconditionError("negative power");
  if (n == 0) return unit_;
  while (static_cast<Exponent>(powers_.size()) < n) powers_.push_back(multiply(powers_.back(), powers_.front()));
  return powers_[static_cast<std::size_t>(n - 1)];
}

std::string format_monomial(const ExponentVector& v, const RingContext& ring) {
  if (v.size() != ring.dimension()) throw DimensionMismatch("monomial length differs from ring dimension");
  const auto& names = ring.variable_names();
  const bool single_char = std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first && !single_char) out << '*';
    out << names[static_cast<std::size_t>(i)];
    if (v[i] > 1) out << '^' << v[i];
    first = false;
  }
  if (first) return "1";
  return out.str();
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  const auto& gens = ideal.generators();
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (it != gens.rbegin()) out += ", ";
    out += format_monomial(*it, ideal.ring());
  }
  out += ')';
  return out;
}

}  // namespace mrees
