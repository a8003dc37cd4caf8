#pragma once

// Front end: the ideal expression language, the persistent filtration cache
// and the command dispatcher behind the `mrees` executable.
//
// Grammar:
//   expr    := term ('+' term)*
//   term    := factor ('*' factor)*
//   factor  := atom ('^' NAT)?
//   atom    := NAME | monomial | 'closure' '(' expr ')'
//            | 'intersect' '(' expr ',' expr ')' | 'colon' '(' expr ',' expr ')'
//            | '(' genlist ')' | '(' expr ')' | '(' '0' ')'
//   genlist := monomial (',' monomial)*
//   monomial:= (VAR ('^' NAT)?)+ | '1'
// A bare monomial denotes the principal ideal it generates.

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrees/hilbert.hpp"

namespace mrees::cli {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct IdealExpr {
  enum class Kind { Literal, Name, Sum, Product, Power, Closure, Intersect, Colon };

  Kind kind = Kind::Literal;
  std::size_t position = 0;
  std::vector<ExponentVector> generators;  ///< Literal
  std::string name;                        ///< Name
  Exponent exponent = 0;                   ///< Power
  std::vector<std::shared_ptr<const IdealExpr>> children;
};

using Bindings = std::map<std::string, MonomialIdeal>;

/// Names in `bindings` are accepted as NAME atoms; everything else must be a
/// variable of the ring or a keyword.
IdealExpr parse_ideal(std::string_view text, const RingContext& ring, const Bindings& bindings = {});
MonomialIdeal evaluate(const IdealExpr& expr, const RingContext& ring, const Bindings& bindings = {});
MonomialIdeal parse_and_evaluate(std::string_view text, const RingContext& ring, const Bindings& bindings = {});
ExponentVector parse_monomial(std::string_view text, const RingContext& ring);

/// Persisted filtration entries, one JSON object per line, appended after
/// each run. Records belong to a cache key; unreadable lines are skipped
/// with a warning.
class CacheStore {
 public:
  CacheStore() = default;
  CacheStore(std::string path, std::ostream& warnings);

  /// The cache for this tuple, with matching persisted records adopted on
  /// first use.
  FiltrationCache& get(const std::vector<MonomialIdeal>& ideals, FiltrationKind kind = FiltrationKind::Normal);
  /// Appends every entry computed during this run.
  void flush();

  std::size_t loaded_records() const { return loaded_; }
  std::size_t skipped_records() const { return skipped_; }

 private:
  struct Record {
    Grade grade;
    std::vector<ExponentVector> generators;
    Exponent colength;
  };

  std::optional<std::string> path_;
  std::ostream* warnings_ = nullptr;
  std::map<std::string, std::vector<Record>> records_;
  std::map<std::string, std::unique_ptr<FiltrationCache>> caches_;
  std::size_t loaded_ = 0;
  std::size_t skipped_ = 0;
};

/// Runs one command line (without the program name). Exit status 0 on
/// success or a passing check, 1 on a failing mathematical check, 2 on a
/// usage or parse error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrees::cli
