#include <cctype>

#include "mrees/cli.hpp"
#include "mrees/newton.hpp"

namespace mrees::cli {

namespace {

using ExprPtr = std::shared_ptr<const IdealExpr>;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const RingContext& ring, const Bindings& bindings)
      : s_(text), ring_(ring), bindings_(bindings) {}

  IdealExpr parse_all() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return *e;
  }

  ExponentVector parse_single_monomial() {
    skip_ws();
    ExponentVector v = parse_monomial();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input after monomial", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  static ExprPtr node(IdealExpr::Kind kind, std::size_t at, std::vector<ExprPtr> children) {
    auto e = std::make_shared<IdealExpr>();
    e->kind = kind;
    e->position = at;
    e->children = std::move(children);
    return e;
  }

  static ExprPtr literal(std::size_t at, std::vector<ExponentVector> gens) {
    auto e = std::make_shared<IdealExpr>();
    e->kind = IdealExpr::Kind::Literal;
    e->position = at;
    e->generators = std::move(gens);
    return e;
  }

  ExprPtr parse_expr() {
    ExprPtr left = parse_term();
    while (peek() == '+') {
      const std::size_t at = pos_++;
      left = node(IdealExpr::Kind::Sum, at, {left, parse_term()});
    }
    return left;
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_factor();
    while (peek() == '*') {
      const std::size_t at = pos_++;
      left = node(IdealExpr::Kind::Product, at, {left, parse_factor()});
    }
    return left;
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    while (peek() == '^') {
      const std::size_t at = pos_++;
      auto e = std::make_shared<IdealExpr>();
      e->kind = IdealExpr::Kind::Power;
      e->position = at;
      e->exponent = parse_nat();
      e->children = {base};
      base = e;
    }
    return base;
  }

  Exponent parse_nat() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') throw ParseError("negative exponent", pos_);
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("expected a natural number", pos_);
    }
    Exponent v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = checked_add(checked_mul(v, 10), s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::string_view word_at(std::size_t at) const {
    std::size_t end = at;
    while (end < s_.size() && ident_char(s_[end])) ++end;
    return s_.substr(at, end - at);
  }

  // Length of the longest variable name starting at pos_, or 0.
  std::size_t variable_at(int* index) const {
    std::size_t best = 0;
    const auto& names = ring_.variable_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& n = names[i];
      if (n.size() > best && s_.substr(pos_, n.size()) == n) {
        best = n.size();
        *index = static_cast<int>(i);
      }
    }
    return best;
  }

  // (VAR ('^' NAT)?)+ with optional '*' between factors, or '1'.
  ExponentVector parse_monomial() {
    const int d = ring_.dimension();
    std::array<Exponent, 3> e{0, 0, 0};
    if (pos_ < s_.size() && s_[pos_] == '1' && (pos_ + 1 >= s_.size() || !ident_char(s_[pos_ + 1]))) {
      ++pos_;
      return ExponentVector::zero(d);
    }
    bool any = false;
    for (;;) {
      int var = -1;
      const std::size_t len = variable_at(&var);
      if (len == 0) {
        if (!any) {
          if (pos_ < s_.size() && ident_start(s_[pos_])) {
            throw ParseError("unknown variable '" + std::string(word_at(pos_)) + "'", pos_);
          }
          throw ParseError("expected a monomial", pos_);
        }
        break;
      }
      pos_ += len;
      any = true;
      Exponent k = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        k = parse_nat();
      }
      auto& slot = e[static_cast<std::size_t>(var)];
      slot = checked_add(slot, k);
      // '*' or blanks continue the monomial only when another variable follows.
      const std::size_t save = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      }
      int next = -1;
      if (variable_at(&next) == 0) {
        pos_ = save;
        break;
      }
    }
    return ExponentVector(std::span<const Exponent>(e.data(), static_cast<std::size_t>(d)));
  }

  // '(' already consumed; parses genlist ')' or returns nullopt with pos_
  // restored and the reason kept in `failure`.
  std::optional<std::vector<ExponentVector>> try_genlist(std::optional<ParseError>& failure) {
    const std::size_t start = pos_;
    try {
      std::vector<ExponentVector> gens;
      for (;;) {
        skip_ws();
        gens.push_back(parse_monomial());
        const char c = peek();
        if (c == ',') {
          ++pos_;
          continue;
        }
        if (c == ')') {
          ++pos_;
          return gens;
        }
        if (c == '\0') throw ParseError("expected ',' or ')' but input ended", pos_);
        throw ParseError("expected ',' or ')'", pos_);
      }
    } catch (const ParseError& e) {
      failure = e;
    }
    pos_ = start;
    return std::nullopt;
  }

  ExprPtr parse_atom() {
    const char c = peek();
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      if (peek() == '0') {
        const std::size_t zero_at = pos_++;
        if (peek() == ')') {
          ++pos_;
          return literal(at, {});
        }
        pos_ = zero_at;
      }
      std::optional<ParseError> genlist_failure;
      if (auto gens = try_genlist(genlist_failure)) return literal(at, std::move(*gens));
      // Report whichever reading got further into the input.
      try {
        ExprPtr inner = parse_expr();
        expect(')');
        return inner;
      } catch (const ParseError& e) {
        if (genlist_failure && genlist_failure->position() > e.position()) throw *genlist_failure;
        throw;
      }
    }
    if (c == '1' || c == '0') {
      if (c == '0') {
        ++pos_;
        return literal(at, {});
      }
      return literal(at, {parse_monomial()});
    }
    if (ident_start(c)) {
      const std::string word(word_at(pos_));
      const std::size_t after = pos_ + word.size();
      auto followed_by_paren = [&] {
        std::size_t p = after;
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
        return p < s_.size() && s_[p] == '(';
      };
      if ((word == "closure" || word == "intersect" || word == "colon") && followed_by_paren()) {
        pos_ = after;
        expect('(');
        ExprPtr first = parse_expr();
        if (word == "closure") {
          expect(')');
          return node(IdealExpr::Kind::Closure, at, {first});
        }
        expect(',');
        ExprPtr second = parse_expr();
        expect(')');
        return node(word == "intersect" ? IdealExpr::Kind::Intersect : IdealExpr::Kind::Colon, at, {first, second});
      }
      if (bindings_.count(word) != 0) {
        pos_ = after;
        auto e = std::make_shared<IdealExpr>();
        e->kind = IdealExpr::Kind::Name;
        e->position = at;
        e->name = word;
        return e;
      }
      return literal(at, {parse_monomial()});
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const RingContext& ring_;
  const Bindings& bindings_;
};

}  // namespace

IdealExpr parse_ideal(std::string_view text, const RingContext& ring, const Bindings& bindings) {
  return Parser(text, ring, bindings).parse_all();
}

ExponentVector parse_monomial(std::string_view text, const RingContext& ring) {
  return Parser(text, ring, {}).parse_single_monomial();
}

MonomialIdeal evaluate(const IdealExpr& expr, const RingContext& ring, const Bindings& bindings) {
  auto child = [&](std::size_t i) { return evaluate(*expr.children[i], ring, bindings); };
  switch (expr.kind) {
    case IdealExpr::Kind::Literal:
      return minimalize(ring, expr.generators);
    case IdealExpr::Kind::Name: {
      auto it = bindings.find(expr.name);
      if (it == bindings.end()) throw ParseError("unbound name '" + expr.name + "'", expr.position);
      if (!(it->second.ring() == ring)) throw DimensionMismatch("binding '" + expr.name + "' lives in another ring");
      return it->second;
    }
    case IdealExpr::Kind::Sum:
      return add(child(0), child(1));
    case IdealExpr::Kind::Product:
      return multiply(child(0), child(1));
    case IdealExpr::Kind::Power:
      return power(child(0), expr.exponent);
    case IdealExpr::Kind::Closure:
      return integral_closure(child(0));
    case IdealExpr::Kind::Intersect:
      return intersect(child(0), child(1));
    case IdealExpr::Kind::Colon:
      return colon(child(0), child(1));
  }
  throw InvariantViolation("unknown expression kind");
}

MonomialIdeal parse_and_evaluate(std::string_view text, const RingContext& ring, const Bindings& bindings) {
  return evaluate(parse_ideal(text, ring, bindings), ring, bindings);
}

}  // namespace mrees::cli
