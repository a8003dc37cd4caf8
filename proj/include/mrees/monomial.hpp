#pragma once

// Monomials and monomial ideals in at most three variables.
//
// A MonomialIdeal is always stored in canonical form: its minimal generators
// (an antichain under divisibility) sorted strictly increasing in
// lexicographic order of exponent vectors. Two ideals are equal iff their
// generator lists are equal. The empty list is the zero ideal and [(0,...,0)]
// is the unit ideal.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mrees/error.hpp"

namespace mrees {

using Exponent = std::int64_t;
inline constexpr int kMaxDimension = 3;

/// Checked exponent arithmetic; throws ExponentOverflow.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

class ExponentVector {
 public:
  ExponentVector() = default;
  ExponentVector(std::initializer_list<Exponent> entries);
  explicit ExponentVector(std::span<const Exponent> entries);

  static ExponentVector zero(int dimension);
  /// k * e_i in the given dimension.
  static ExponentVector pure_power(int dimension, int variable, Exponent k);

  int size() const { return dim_; }
  Exponent operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  /// Entries beyond size() are zero.
  const std::array<Exponent, kMaxDimension>& padded() const { return e_; }
  Exponent total_degree() const;

  /// Componentwise <=, i.e. the monomial x^this divides x^other.
  bool divides(const ExponentVector& other) const {
    return e_[0] <= other.e_[0] && e_[1] <= other.e_[1] && e_[2] <= other.e_[2];
  }

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  friend ExponentVector operator+(const ExponentVector&, const ExponentVector&);
  friend ExponentVector operator*(Exponent, const ExponentVector&);
  friend ExponentVector lcm(const ExponentVector&, const ExponentVector&);
  friend ExponentVector quotient(const ExponentVector&, const ExponentVector&);

  std::uint8_t dim_ = 0;
  std::array<Exponent, kMaxDimension> e_{0, 0, 0};
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
ExponentVector operator*(Exponent k, const ExponentVector& v);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
/// max(a - b, 0) componentwise: the generator of ((x^a) : x^b).
ExponentVector quotient(const ExponentVector& a, const ExponentVector& b);

/// Dimension and variable names of the polynomial ring k[x_1..x_d], d <= 3.
class RingContext {
 public:
  /// k[x,y,z].
  RingContext();
  explicit RingContext(std::vector<std::string> variable_names);
  /// Default names x / x,y / x,y,z.
  static RingContext standard(int dimension);

  int dimension() const { return static_cast<int>(names_->size()); }
  const std::vector<std::string>& variable_names() const { return *names_; }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class MonomialIdeal {
 public:
  /// The zero ideal of k[x,y,z].
  MonomialIdeal();

  static MonomialIdeal zero(const RingContext& ring);
  static MonomialIdeal unit(const RingContext& ring);
  static MonomialIdeal principal(const RingContext& ring, const ExponentVector& v);

  const RingContext& ring() const { return ring_; }
  int dimension() const { return ring_.dimension(); }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }
  /// Total order on canonical forms (for use as map keys).
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ < b.gens_; }

 private:
  friend MonomialIdeal minimalize(const RingContext&, std::span<const ExponentVector>);
  friend MonomialIdeal from_canonical(const RingContext&, std::vector<ExponentVector>);
  MonomialIdeal(RingContext ring, std::vector<ExponentVector> gens);

  RingContext ring_;
  std::vector<ExponentVector> gens_;
};

/// Canonical ideal generated by `raw`. Throws DimensionMismatch if a vector
/// has the wrong length.
MonomialIdeal minimalize(const RingContext& ring, std::span<const ExponentVector> raw);
MonomialIdeal minimalize(const RingContext& ring, std::initializer_list<ExponentVector> raw);

/// Wraps a list that the caller guarantees is already canonical. Checked in
/// debug builds only.
MonomialIdeal from_canonical(const RingContext& ring, std::vector<ExponentVector> gens);

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& v);
/// inner ⊆ outer.
bool is_subset(const MonomialIdeal& inner, const MonomialIdeal& outer);

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
/// x^v · I.
MonomialIdeal scale(const MonomialIdeal& ideal, const ExponentVector& v);
MonomialIdeal power(const MonomialIdeal& ideal, Exponent n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// (a : b). Throws ZeroIdealError when b is zero.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimal pure-power exponents (a_1..a_d) when the ideal is m-primary.
std::optional<ExponentVector> pure_power_bounds(const MonomialIdeal& ideal);
bool is_m_primary(const MonomialIdeal& ideal);
/// Componentwise max of the generators (zero vector for the zero ideal).
ExponentVector generator_box(const MonomialIdeal& ideal);

/// Lexicographically largest generator of `lhs` that is not in `rhs`
/// (x^2 > xy > xz > y^2 ...), or nullopt when lhs ⊆ rhs.
std::optional<ExponentVector> generator_not_in(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// Memoized powers of one ideal.
class PowerCache {
 public:
  explicit PowerCache(MonomialIdeal base);
  const MonomialIdeal& base() const { return powers_.front(); }
  const MonomialIdeal& power(Exponent n);

 private:
  std::vector<MonomialIdeal> powers_;  // powers_[k] = base^(k+1)
  MonomialIdeal unit_;
};

/// "x^2y" style text; "1" for the zero vector. Uses '*' between factors when
/// some variable name is longer than one character.
std::string format_monomial(const ExponentVector& v, const RingContext& ring);
/// "(x^2, xy, y^2)", generators listed from lexicographically largest down.
/// The zero ideal prints as "(0)".
std::string format_ideal(const MonomialIdeal& ideal);

}  // namespace mrees
