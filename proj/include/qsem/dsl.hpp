#pragma once

// Proposition scripts: definitions of kets and projectors followed by
// evaluation queries.
//
//   script    := statement* ;
//   statement := "let" IDENT "=" expr
//              | "eval" MODE expr "in" IDENT ("post" IDENT)? ;
//   MODE      := "bivalent" | "supervaluationist" | "many_valued" | "weak" ;
//   expr      := term ("(x)" term)* ;
//   term      := "not" term | "proj" "(" expr ")"
//              | "ket" "[" scalar ("," scalar)* "]" | IDENT | "(" expr ")" ;
//   scalar    := ["-"] INT ["/" INT] [("+"|"-") ["-"] INT ["/" INT] "i"]
//              | ["-"] INT ["/" INT] "i" | ["-"] "i" ;
//
// "#" starts a comment running to the end of the line. Numbers are exact:
// decimal literals are rejected. "(x)" after a complete term is the tensor
// product; at the start of a term it is an ordinary parenthesized name.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qsem/error.hpp"
#include "qsem/linalg.hpp"
#include "qsem/projector.hpp"
#include "qsem/semantics.hpp"

namespace qsem::dsl {

struct Pos {
  std::size_t line = 1;
  std::size_t col = 1;

  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

/// Any script diagnostic; carries the source position it refers to.
class ScriptError : public Error {
 public:
  ScriptError(Pos pos, const std::string& msg)
      : Error(pos.str() + ": " + msg), pos_(pos), detail_(msg) {}

  Pos pos() const { return pos_; }
  const std::string& detail() const { return detail_; }

 private:
  Pos pos_;
  std::string detail_;
};

class ParseError : public ScriptError {
 public:
  using ScriptError::ScriptError;
};
class CheckError : public ScriptError {
 public:
  using ScriptError::ScriptError;
};
class EvalError : public ScriptError {
 public:
  using ScriptError::ScriptError;
};

// ---------------------------------------------------------------------------
// AST

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct KetLiteral {
  std::vector<Scalar> entries;
};
struct Proj {
  ExprPtr arg;
};
struct Neg {
  ExprPtr arg;
};
struct Tensor {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Name {
  std::string id;
};

struct Expr {
  std::variant<KetLiteral, Proj, Neg, Tensor, Name> node;
  Pos pos;
};

enum class Mode { Bivalent, Supervaluationist, ManyValued, Weak };

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::Bivalent: return "bivalent";
    case Mode::Supervaluationist: return "supervaluationist";
    case Mode::ManyValued: return "many_valued";
    case Mode::Weak: return "weak";
  }
  return "?";
}

inline std::optional<Mode> mode_from_string(std::string_view s) {
  if (s == "bivalent") return Mode::Bivalent;
  if (s == "supervaluationist") return Mode::Supervaluationist;
  if (s == "many_valued") return Mode::ManyValued;
  if (s == "weak") return Mode::Weak;
  return std::nullopt;
}

struct Let {
  std::string name;
  ExprPtr value;
  Pos pos;
};

struct Eval {
  Mode mode;
  ExprPtr prop;
  std::string state;
  std::optional<std::string> post;
  Pos pos;
};

using Statement = std::variant<Let, Eval>;

struct Script {
  std::vector<Statement> statements;
};

template <class T>
ExprPtr make_expr(T node, Pos pos) {
  return std::make_shared<const Expr>(Expr{std::move(node), pos});
}

/// Structural equality, ignoring source positions.
inline bool same_structure(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, KetLiteral>) return x.entries == y.entries;
        else if constexpr (std::is_same_v<T, Name>) return x.id == y.id;
        else if constexpr (std::is_same_v<T, Tensor>)
          return same_structure(*x.lhs, *y.lhs) && same_structure(*x.rhs, *y.rhs);
        else return same_structure(*x.arg, *y.arg);
      },
      a.node);
}

inline bool same_structure(const Script& a, const Script& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    const auto& sa = a.statements[i];
    const auto& sb = b.statements[i];
    if (sa.index() != sb.index()) return false;
    if (const auto* la = std::get_if<Let>(&sa)) {
      const auto& lb = std::get<Let>(sb);
      if (la->name != lb.name || !same_structure(*la->value, *lb.value)) return false;
    } else {
      const auto& ea = std::get<Eval>(sa);
      const auto& eb = std::get<Eval>(sb);
      if (ea.mode != eb.mode || ea.state != eb.state || ea.post != eb.post ||
          !same_structure(*ea.prop, *eb.prop))
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Printing

inline std::string print(const Expr& e);

namespace detail {
inline std::string print_operand(const Expr& e, bool parenthesize_tensor) {
  std::string s = print(e);
  if (parenthesize_tensor && std::holds_alternative<Tensor>(e.node)) return "(" + s + ")";
  return s;
}
}  // namespace detail

/// Canonical source text; parses back to a structurally identical tree.
inline std::string print(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, KetLiteral>) {
          std::string s = "ket[";
          for (std::size_t i = 0; i < x.entries.size(); ++i) {
            if (i) s += ", ";
            s += x.entries[i].str();
          }
          return s + "]";
        } else if constexpr (std::is_same_v<T, Name>) {
          return x.id;
        } else if constexpr (std::is_same_v<T, Proj>) {
          return "proj(" + print(*x.arg) + ")";
        } else if constexpr (std::is_same_v<T, Neg>) {
          return "not " + detail::print_operand(*x.arg, true);
        } else {
          return detail::print_operand(*x.lhs, false) + " (x) " +
                 detail::print_operand(*x.rhs, true);
        }
      },
      e.node);
}

inline std::string print(const Statement& st) {
  if (const auto* let = std::get_if<Let>(&st)) return "let " + let->name + " = " + print(*let->value);
  const auto& ev = std::get<Eval>(st);
  std::string s = "eval " + std::string(to_string(ev.mode)) + " " + print(*ev.prop) + " in " + ev.state;
  if (ev.post) s += " post " + *ev.post;
  return s;
}

inline std::string print(const Script& script) {
  std::string out;
  for (const auto& st : script.statements) out += print(st) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Int, Equals, LParen, RParen, LBracket, RBracket, Comma, Slash, Plus, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  Pos pos;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  Pos pos;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++pos.line;
      pos.col = 1;
    } else {
      ++pos.col;
    }
    ++i;
  };
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };

  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    Pos start = pos;
    if (is_ident_start(c)) {
      std::string text;
      while (i < src.size() && is_ident_char(src[i])) {
        text += src[i];
        advance();
      }
      out.push_back({Tok::Ident, std::move(text), start});
      continue;
    }
    if (is_digit(c)) {
      std::string text;
      while (i < src.size() && is_digit(src[i])) {
        text += src[i];
        advance();
      }
      bool exponent = i + 1 < src.size() && (src[i] == 'e' || src[i] == 'E') &&
                      (is_digit(src[i + 1]) || src[i + 1] == '-' || src[i + 1] == '+');
      if (exponent || (i < src.size() && src[i] == '.'))
        throw ParseError(start, "decimal literals are not allowed; write exact rationals as p/q");
      out.push_back({Tok::Int, std::move(text), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '=': kind = Tok::Equals; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case '/': kind = Tok::Slash; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '.':
        throw ParseError(start, "decimal literals are not allowed; write exact rationals as p/q");
      default: {
        std::string shown = (static_cast<unsigned char>(c) < 0x80 && std::isprint(static_cast<unsigned char>(c)))
                                ? std::string(1, c)
                                : "non-ASCII byte";
        throw ParseError(start, "unexpected character '" + shown + "'");
      }
    }
    advance();
    out.push_back({kind, std::string(1, c), start});
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace detail {

inline bool is_reserved(std::string_view s) {
  return s == "let" || s == "eval" || s == "in" || s == "post" || s == "not" || s == "proj" ||
         s == "ket";
}

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Int: return "number '" + t.text + "'";
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Script script() {
    Script s;
    while (peek().kind != Tok::End) s.statements.push_back(statement());
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t k = std::min(at_ + ahead, toks_.size() - 1);
    return toks_[k];
  }
  const Token& next() {
    const Token& t = toks_[at_];
    if (t.kind != Tok::End) ++at_;
    return t;
  }
  bool is_word(const Token& t, std::string_view w) const { return t.kind == Tok::Ident && t.text == w; }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw ParseError(t.pos, "expected " + expected + ", found " + describe(t));
  }
  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), what);
    return next();
  }
  void expect_word(std::string_view w) {
    if (!is_word(peek(), w)) fail(peek(), "'" + std::string(w) + "'");
    next();
  }
  std::string identifier(const std::string& what) {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t, what);
    if (is_reserved(t.text))
      throw ParseError(t.pos, "'" + t.text + "' is a reserved word and cannot be used as " + what);
    return next().text;
  }

  Statement statement() {
    const Token& t = peek();
    if (is_word(t, "let")) {
      Pos pos = next().pos;
      std::string name = identifier("a name");
      expect(Tok::Equals, "'='");
      return Let{std::move(name), expr(), pos};
    }
    if (is_word(t, "eval")) {
      Pos pos = next().pos;
      const Token& m = peek();
      if (m.kind != Tok::Ident) fail(m, "a semantics mode");
      auto mode = mode_from_string(m.text);
      if (!mode)
        throw ParseError(m.pos, "unknown semantics mode '" + m.text +
                                    "'; expected bivalent, supervaluationist, many_valued or weak");
      next();
      ExprPtr prop = expr();
      expect_word("in");
      std::string state = identifier("a state name");
      std::optional<std::string> post;
      if (is_word(peek(), "post")) {
        next();
        post = identifier("a post-selection state name");
      }
      return Eval{*mode, std::move(prop), std::move(state), std::move(post), pos};
    }
    if (t.kind == Tok::Ident)
      throw ParseError(t.pos, "unknown keyword '" + t.text + "'; expected 'let' or 'eval'");
    fail(t, "'let' or 'eval'");
  }

  bool at_tensor() const {
    return peek().kind == Tok::LParen && is_word(peek(1), "x") && peek(2).kind == Tok::RParen;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at_tensor()) {
      Pos pos = next().pos;
      next();
      next();
      ExprPtr rhs = term();
      lhs = make_expr(Tensor{std::move(lhs), std::move(rhs)}, pos);
    }
    return lhs;
  }

  ExprPtr term() {
    const Token& t = peek();
    if (is_word(t, "not")) {
      Pos pos = next().pos;
      return make_expr(Neg{term()}, pos);
    }
    if (is_word(t, "proj")) {
      Pos pos = next().pos;
      expect(Tok::LParen, "'(' after proj");
      ExprPtr arg = expr();
      expect(Tok::RParen, "')'");
      return make_expr(Proj{std::move(arg)}, pos);
    }
    if (is_word(t, "ket")) {
      Pos pos = next().pos;
      expect(Tok::LBracket, "'[' after ket");
      KetLiteral ket;
      ket.entries.push_back(scalar());
      while (peek().kind == Tok::Comma) {
        next();
        ket.entries.push_back(scalar());
      }
      expect(Tok::RBracket, "',' or ']'");
      if (ket.entries.size() > kMaxDim)
        throw ParseError(pos, "ket dimension exceeds the limit of " + std::to_string(kMaxDim));
      return make_expr(std::move(ket), pos);
    }
    if (t.kind == Tok::LParen) {
      next();
      ExprPtr inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      Pos pos = t.pos;
      return make_expr(Name{identifier("a name")}, pos);
    }
    fail(t, "an expression");
  }

  // p or p/q, unsigned.
  Rational magnitude() {
    const Token& num = expect(Tok::Int, "a number");
    mpz_class n(num.text);
    mpz_class d(1);
    if (peek().kind == Tok::Slash) {
      next();
      const Token& den = expect(Tok::Int, "a denominator");
      d = mpz_class(den.text);
      if (d == 0) throw ParseError(den.pos, "zero denominator");
    }
    return make_rational(n, d);
  }

  Scalar scalar() {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    if (is_word(peek(), "i")) {
      next();
      return Scalar(Rational(0), Rational(negative ? -1 : 1));
    }
    Rational first = magnitude();
    if (negative) first = -first;
    if (is_word(peek(), "i")) {
      next();
      return Scalar(Rational(0), first);
    }
    if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) return Scalar(first);
    bool minus = next().kind == Tok::Minus;
    if (peek().kind == Tok::Minus) {
      next();
      minus = !minus;
    }
    Rational im = magnitude();
    if (!is_word(peek(), "i")) fail(peek(), "'i' after the imaginary part");
    next();
    return Scalar(first, minus ? Rational(-im) : im);
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace detail

inline Script parse(std::string_view source) {
  return detail::Parser(tokenize(source)).script();
}

// ---------------------------------------------------------------------------
// Checking

enum class Kind { Vector, Projector };

struct TypeInfo {
  Kind kind;
  std::size_t dim;
};

class CheckedScript;
inline CheckedScript check(Script script);

/// A script that passed name resolution, kinding and dimension checks.
class CheckedScript {
 public:
  const Script& script() const { return script_; }
  /// Type of every let-bound name.
  const std::map<std::string, TypeInfo>& bindings() const { return bindings_; }

 private:
  friend CheckedScript check(Script script);
  CheckedScript(Script s, std::map<std::string, TypeInfo> b)
      : script_(std::move(s)), bindings_(std::move(b)) {}

  Script script_;
  std::map<std::string, TypeInfo> bindings_;
};

namespace detail {

inline std::string kind_name(Kind k) { return k == Kind::Vector ? "vector" : "projector"; }

inline TypeInfo type_of(const Expr& e, const std::map<std::string, TypeInfo>& env) {
  return std::visit(
      [&](const auto& x) -> TypeInfo {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, KetLiteral>) {
          return {Kind::Vector, x.entries.size()};
        } else if constexpr (std::is_same_v<T, Name>) {
          auto it = env.find(x.id);
          if (it == env.end()) throw CheckError(e.pos, "unbound name '" + x.id + "'");
          return it->second;
        } else if constexpr (std::is_same_v<T, Proj>) {
          TypeInfo a = type_of(*x.arg, env);
          if (a.kind != Kind::Vector)
            throw CheckError(e.pos, "proj expects a vector, got a " + kind_name(a.kind));
          return {Kind::Projector, a.dim};
        } else if constexpr (std::is_same_v<T, Neg>) {
          TypeInfo a = type_of(*x.arg, env);
          if (a.kind != Kind::Projector)
            throw CheckError(e.pos, "not expects a projector, got a " + kind_name(a.kind));
          return a;
        } else {
          TypeInfo l = type_of(*x.lhs, env);
          TypeInfo r = type_of(*x.rhs, env);
          if (l.kind != r.kind)
            throw CheckError(e.pos, "tensor of a " + kind_name(l.kind) + " and a " +
                                        kind_name(r.kind));
          if (l.dim * r.dim > kMaxDim)
            throw CheckError(e.pos, "tensor dimension " + std::to_string(l.dim * r.dim) +
                                        " exceeds the limit of " + std::to_string(kMaxDim));
          return {l.kind, l.dim * r.dim};
        }
      },
      e.node);
}

inline TypeInfo state_type(const std::string& name, Pos pos,
                           const std::map<std::string, TypeInfo>& env) {
  auto it = env.find(name);
  if (it == env.end()) throw CheckError(pos, "unbound name '" + name + "'");
  if (it->second.kind != Kind::Vector)
    throw CheckError(pos, "'" + name + "' is a projector, not a state");
  return it->second;
}

}  // namespace detail

inline CheckedScript check(Script script) {
  std::map<std::string, TypeInfo> env;
  for (const auto& st : script.statements) {
    if (const auto* let = std::get_if<Let>(&st)) {
      if (env.count(let->name))
        throw CheckError(let->pos, "name '" + let->name + "' is already bound");
      env.emplace(let->name, detail::type_of(*let->value, env));
      continue;
    }
    const auto& ev = std::get<Eval>(st);
    TypeInfo prop = detail::type_of(*ev.prop, env);
    if (prop.kind != Kind::Projector)
      throw CheckError(ev.prop->pos, "evaluated proposition must be a projector, got a vector");
    TypeInfo state = detail::state_type(ev.state, ev.pos, env);
    if (state.dim != prop.dim)
      throw CheckError(ev.pos, "dimension mismatch: proposition acts on C^" +
                                   std::to_string(prop.dim) + " but state '" + ev.state +
                                   "' lies in C^" + std::to_string(state.dim));
    if (ev.mode == Mode::Weak && !ev.post)
      throw CheckError(ev.pos, "weak evaluation needs a post-selected state ('post NAME')");
    if (ev.mode != Mode::Weak && ev.post)
      throw CheckError(ev.pos, "'post' is only allowed with weak evaluation");
    if (ev.post) {
      TypeInfo post = detail::state_type(*ev.post, ev.pos, env);
      if (post.dim != prop.dim)
        throw CheckError(ev.pos, "dimension mismatch: post-selected state '" + *ev.post +
                                     "' lies in C^" + std::to_string(post.dim) +
                                     " but the proposition acts on C^" + std::to_string(prop.dim));
    }
  }
  return CheckedScript(std::move(script), std::move(env));
}

// ---------------------------------------------------------------------------
// Evaluation

struct QueryResult {
  std::string query;      // canonical text of the eval statement
  std::string semantics;  // mode keyword
  TruthValue value;
  Pos pos;
};

namespace detail {

using Value = std::variant<ExactVector, Projector>;

inline Value eval_expr(const Expr& e, const std::map<std::string, Value>& env) {
  try {
    return std::visit(
        [&](const auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, KetLiteral>) {
            return ExactVector(x.entries);
          } else if constexpr (std::is_same_v<T, Name>) {
            return env.at(x.id);
          } else if constexpr (std::is_same_v<T, Proj>) {
            return from_ket(std::get<ExactVector>(eval_expr(*x.arg, env)), print(e));
          } else if constexpr (std::is_same_v<T, Neg>) {
            return negate(std::get<Projector>(eval_expr(*x.arg, env)));
          } else {
            Value l = eval_expr(*x.lhs, env);
            Value r = eval_expr(*x.rhs, env);
            if (const auto* pl = std::get_if<Projector>(&l))
              return tensor(*pl, std::get<Projector>(r));
            return kronecker(std::get<ExactVector>(l), std::get<ExactVector>(r));
          }
        },
        e.node);
  } catch (const ScriptError&) {
    throw;
  } catch (const Error& err) {
    throw EvalError(e.pos, err.what());
  }
}

inline State lookup_state(const std::map<std::string, Value>& env, const std::string& name) {
  return State(std::get<ExactVector>(env.at(name)), name);
}

}  // namespace detail

/// Evaluates lets in order and answers every eval query.
inline std::vector<QueryResult> run(const CheckedScript& checked) {
  std::map<std::string, detail::Value> env;
  std::vector<QueryResult> results;
  for (const auto& st : checked.script().statements) {
    if (const auto* let = std::get_if<Let>(&st)) {
      detail::Value v = detail::eval_expr(*let->value, env);
      if (auto* p = std::get_if<Projector>(&v)) v = p->relabeled(let->name);
      env.emplace(let->name, std::move(v));
      continue;
    }
    const auto& ev = std::get<Eval>(st);
    std::string query = print(st);
    try {
      Projector prop = std::get<Projector>(detail::eval_expr(*ev.prop, env));
      if (std::holds_alternative<Name>(ev.prop->node)) prop = prop.relabeled(std::get<Name>(ev.prop->node).id);
      State psi = detail::lookup_state(env, ev.state);
      SemanticsKind kind = Bivalent{};
      switch (ev.mode) {
        case Mode::Bivalent: kind = Bivalent{}; break;
        case Mode::Supervaluationist: kind = Supervaluationist{}; break;
        case Mode::ManyValued: kind = ManyValued{}; break;
        case Mode::Weak: kind = WeakValued{detail::lookup_state(env, *ev.post)}; break;
      }
      results.push_back({query, std::string(to_string(ev.mode)), evaluate(kind, prop, psi), ev.pos});
    } catch (const EvalError& err) {
      throw EvalError(err.pos(), "in '" + query + "': " + err.detail());
    } catch (const Error& err) {
      throw EvalError(ev.pos, "in '" + query + "': " + err.what());
    }
  }
  return results;
}

}  // namespace qsem::dsl
