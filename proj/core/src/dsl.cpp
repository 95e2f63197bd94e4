// Copyright 2026 The mdolap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mdolap/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <utility>

#include "lexer.hpp"

namespace mdolap::dsl {

std::string_view to_string(Severity s) noexcept { return s == Severity::Error ? "error" : "warning"; }

std::string format_diagnostic(const Diagnostic& d) {
  return std::to_string(d.pos.line) + ":" + std::to_string(d.pos.column) + ": " + std::string(to_string(d.severity)) +
         ": " + d.message;
}

namespace {

struct Failure {
  Diagnostic diag;
};

std::string squote(std::string_view s) { return "'" + std::string(s) + "'"; }

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }

  const Token& next() {
    const Token& t = toks_[i_];
    if (i_ + 1 < toks_.size()) ++i_;
    prev_end_ = t.end;
    return t;
  }

  bool at_end() const { return peek().kind == TokenKind::End; }
  bool at(TokenKind k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return peek().kind == TokenKind::Ident && peek().text == w; }
  SourcePos prev_end() const { return prev_end_; }

  [[noreturn]] static void fail(const Token& t, std::string message) {
    throw Failure{Diagnostic{Severity::Error, std::move(message), t.pos, t.text}};
  }
  [[noreturn]] static void fail_at(const Ident& id, std::string message) {
    throw Failure{Diagnostic{Severity::Error, std::move(message), id.pos, id.text}};
  }

  const Token& expect(TokenKind k, std::string_view what) {
    if (!at(k)) fail(peek(), "expected " + std::string(what) + ", found " + describe(peek()));
    return next();
  }

  const Token& expect_word(std::string_view w) {
    if (!at_word(w)) fail(peek(), "expected " + squote(w) + ", found " + describe(peek()));
    return next();
  }

  Ident ident(std::string_view what = "an identifier") {
    const Token& t = expect(TokenKind::Ident, what);
    return Ident{t.text, t.pos};
  }

  /// Skips past the current token, then up to the next token satisfying `stop`.
  template <class Pred>
  void recover(Pred stop) {
    if (!at_end()) next();
    while (!at_end() && !stop(peek())) next();
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  SourcePos prev_end_{1, 1};
};

// ---------------------------------------------------------------------------
// Conditions

struct CondLeaf {
  Ident attribute;
  std::optional<Value> literal;
  SourcePos literal_pos;
};

class ConditionParser {
 public:
  explicit ConditionParser(Parser& p) : p_(p) {}

  Condition parse() { return parse_or(); }
  const std::vector<CondLeaf>& leaves() const { return leaves_; }

 private:
  Condition parse_or() {
    Condition c = parse_and();
    while (p_.at_word("OR")) {
      p_.next();
      c = Condition::any_of(std::move(c), parse_and());
    }
    return c;
  }

  Condition parse_and() {
    Condition c = parse_unary();
    while (p_.at_word("AND")) {
      p_.next();
      c = Condition::all_of(std::move(c), parse_unary());
    }
    return c;
  }

  Condition parse_unary() {
    if (p_.at_word("NOT")) {
      p_.next();
      return Condition::negate(parse_unary());
    }
    return parse_primary();
  }

  Condition parse_primary() {
    if (p_.at_word("TRUE")) {
      p_.next();
      return Condition::always();
    }
    if (p_.at(TokenKind::LParen)) {
      p_.next();
      Condition c = parse_or();
      p_.expect(TokenKind::RParen, "')'");
      return c;
    }
    Ident attr = p_.ident("an attribute name");
    if (p_.at_word("IS")) {
      p_.next();
      bool negated = false;
      if (p_.at_word("NOT")) {
        p_.next();
        negated = true;
      }
      p_.expect_word("NULL");
      leaves_.push_back({attr, std::nullopt, {}});
      return negated ? Condition::is_not_null(attr.text) : Condition::is_null(attr.text);
    }
    const Token& op_tok = p_.expect(TokenKind::Op, "a comparison operator");
    CompareOp op = op_of(op_tok.text);
    if (p_.at_word("NULL")) {
      const Token& null_tok = p_.next();
      leaves_.push_back({attr, std::nullopt, {}});
      if (op == CompareOp::Eq) return Condition::is_null(attr.text);
      if (op == CompareOp::Ne) return Condition::is_not_null(attr.text);
      Parser::fail(null_tok, "NULL can only be compared with = or <>");
    }
    const Token& lit = p_.peek();
    Value v = literal(lit);
    p_.next();
    leaves_.push_back({attr, v, lit.pos});
    return Condition::compare(attr.text, op, std::move(v));
  }

  static CompareOp op_of(std::string_view s) {
    if (s == "=") return CompareOp::Eq;
    if (s == "<>") return CompareOp::Ne;
    if (s == "<") return CompareOp::Lt;
    if (s == "<=") return CompareOp::Le;
    if (s == ">") return CompareOp::Gt;
    return CompareOp::Ge;
  }

  static Value literal(const Token& t) {
    if (t.kind == TokenKind::String) return Value::text(t.text);
    if (t.kind == TokenKind::Number) {
      if (t.text.find('.') == std::string::npos) {
        std::int64_t n = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) Parser::fail(t, "integer literal out of range");
        return Value::integer(n);
      }
      auto d = Decimal::parse(t.text);
      if (!d) Parser::fail(t, "decimal literal needs at most two fraction digits");
      return Value::decimal(*d);
    }
    Parser::fail(t, "expected a literal, found " + describe(t));
  }

  Parser& p_;
  std::vector<CondLeaf> leaves_;
};

/// Rebuilds a condition, converting integer literals compared with Id into
/// canonical identifier text.
Condition normalize_id_literals(const Condition& c) {
  switch (c.kind()) {
    case Condition::Kind::Compare:
      if (c.attribute() == kIdAttribute && c.literal().is_int()) {
        return Condition::compare(c.attribute(), c.op(), Value::text(std::to_string(c.literal().as_int())));
      }
      return c;
    case Condition::Kind::And:
    case Condition::Kind::Or: {
      Condition out = normalize_id_literals(c.children().front());
      for (std::size_t k = 1; k < c.children().size(); ++k) {
        Condition next = normalize_id_literals(c.children()[k]);
        out = c.kind() == Condition::Kind::And ? Condition::all_of(std::move(out), std::move(next))
                                               : Condition::any_of(std::move(out), std::move(next));
      }
      return out;
    }
    case Condition::Kind::Not: return Condition::negate(normalize_id_literals(c.children().front()));
    default: return c;
  }
}

void check_condition(const Dimension& d, const std::vector<CondLeaf>& leaves) {
  for (const auto& leaf : leaves) {
    auto idx = d.attribute_index(leaf.attribute.text);
    if (!idx) Parser::fail_at(leaf.attribute, "unknown attribute " + squote(leaf.attribute.text) + " in " + d.name);
    if (!leaf.literal) continue;
    ValueKind kind = d.attributes[*idx].kind;
    bool numeric_attr = kind == ValueKind::Int || kind == ValueKind::Decimal;
    bool numeric_lit = leaf.literal->is_numeric();
    if (kind == ValueKind::Id && leaf.literal->is_int()) continue;
    if (kind == ValueKind::All || numeric_attr != numeric_lit) {
      throw Failure{Diagnostic{Severity::Error,
                               "type mismatch: " + leaf.attribute.text + " is " + std::string(to_string(kind)),
                               leaf.literal_pos, leaf.literal->to_literal()}};
    }
  }
}

// ---------------------------------------------------------------------------
// Schema

bool top_keyword(const Token& t) {
  return t.kind == TokenKind::Ident && (t.text == "DIMENSION" || t.text == "FACT" || t.text == "CONSTRAINT");
}

class SchemaParser {
 public:
  explicit SchemaParser(std::string_view text) : p_(text) {}

  ParseResult<Constellation> run() {
    ParseResult<Constellation> out;
    try {
      p_.expect_word("CONSTELLATION");
      c_.name = p_.ident("a constellation name").text;
    } catch (const Failure& f) {
      out.diagnostics.push_back(f.diag);
      return out;
    }
    int phase = 0;  // 0 dimensions, 1 facts, 2 constraints
    while (!p_.at_end()) {
      try {
        if (p_.at_word("DIMENSION")) {
          if (phase > 0) Parser::fail(p_.peek(), "dimensions must be declared before facts and constraints");
          dimension();
        } else if (p_.at_word("FACT")) {
          if (phase > 1) Parser::fail(p_.peek(), "facts must be declared before constraints");
          phase = 1;
          fact();
        } else if (p_.at_word("CONSTRAINT")) {
          phase = 2;
          constraint();
        } else {
          Parser::fail(p_.peek(), "expected DIMENSION, FACT or CONSTRAINT, found " + describe(p_.peek()));
        }
      } catch (const Failure& f) {
        out.diagnostics.push_back(f.diag);
        p_.recover(top_keyword);
      }
    }
    if (out.diagnostics.empty()) out.value = std::move(c_);
    return out;
  }

 private:
  void claim_name(const Ident& name) {
    if (!names_.insert(name.text).second) Parser::fail_at(name, "duplicate name " + squote(name.text));
  }

  ValueKind kind_word(bool measure) {
    const Token& t = p_.expect(TokenKind::Ident, "a type (STRING, INT or DECIMAL)");
    auto k = parse_value_kind(t.text);
    if (!k || *k == ValueKind::Id || *k == ValueKind::All) {
      Parser::fail(t, "expected STRING, INT or DECIMAL, found " + describe(t));
    }
    if (measure && *k == ValueKind::String) Parser::fail(t, "measures must be INT or DECIMAL");
    return *k;
  }

  void dimension() {
    p_.expect_word("DIMENSION");
    Ident name = p_.ident("a dimension name");
    claim_name(name);
    p_.expect(TokenKind::LParen, "'('");
    p_.expect_word("ATTRIBUTES");
    p_.expect(TokenKind::LParen, "'('");
    std::vector<AttributeSpec> attrs;
    std::set<std::string> seen;
    do {
      if (!attrs.empty()) p_.next();
      Ident a = p_.ident("an attribute name");
      if (a.text == kIdAttribute || a.text == kAllAttribute) {
        Parser::fail_at(a, "attribute name " + squote(a.text) + " is implicit");
      }
      if (!seen.insert(a.text).second) Parser::fail_at(a, "duplicate attribute " + squote(a.text));
      attrs.push_back({a.text, kind_word(false)});
    } while (p_.at(TokenKind::Comma));
    p_.expect(TokenKind::RParen, "')'");
    Dimension d = Dimension::make(name.text, std::move(attrs));
    if (!p_.at_word("HIERARCHY")) Parser::fail(p_.peek(), "expected HIERARCHY, found " + describe(p_.peek()));
    while (p_.at_word("HIERARCHY")) d.hierarchies.push_back(hierarchy(d));
    p_.expect(TokenKind::RParen, "')'");
    c_.dimensions.push_back(std::move(d));
  }

  Hierarchy hierarchy(const Dimension& d) {
    p_.expect_word("HIERARCHY");
    Ident name = p_.ident("a hierarchy name");
    if (d.find_hierarchy(name.text)) Parser::fail_at(name, "duplicate hierarchy " + squote(name.text));
    Hierarchy h;
    h.name = name.text;
    p_.expect(TokenKind::Colon, "':'");
    p_.expect_word("Id");
    h.params.emplace_back(kIdAttribute);
    while (true) {
      if (!p_.at(TokenKind::Arrow)) {
        throw Failure{Diagnostic{Severity::Error, "hierarchy " + squote(h.name) + " must end with '-> All'",
                                 p_.prev_end(), ""}};
      }
      p_.next();
      Ident param = p_.ident("a parameter name");
      if (param.text == kAllAttribute) {
        if (h.params.size() < 2) Parser::fail_at(param, "hierarchy needs a parameter between Id and All");
        h.params.emplace_back(kAllAttribute);
        break;
      }
      if (!d.attribute_index(param.text)) Parser::fail_at(param, "unknown attribute " + squote(param.text));
      if (std::find(h.params.begin(), h.params.end(), param.text) != h.params.end()) {
        Parser::fail_at(param, "parameter " + squote(param.text) + " repeats on the path");
      }
      h.params.push_back(param.text);
    }
    if (p_.at_word("WEAK")) weak(d, h);
    if (p_.at_word("WHEN")) {
      p_.next();
      ConditionParser cp(p_);
      Condition cond = cp.parse();
      check_condition(d, cp.leaves());
      h.condition = normalize_id_literals(cond);
    }
    return h;
  }

  void weak(const Dimension& d, Hierarchy& h) {
    p_.expect_word("WEAK");
    p_.expect(TokenKind::LParen, "'('");
    std::set<std::string> used;
    bool first = true;
    do {
      if (!first) p_.next();
      first = false;
      Ident owner = p_.ident("a parameter name");
      if (!h.level_of(owner.text) || owner.text == kAllAttribute) {
        Parser::fail_at(owner, squote(owner.text) + " is not a parameter of " + h.name);
      }
      if (h.weak.count(owner.text)) Parser::fail_at(owner, "weak attributes of " + squote(owner.text) + " repeated");
      p_.expect(TokenKind::Colon, "':'");
      std::vector<std::string> attrs;
      do {
        if (!attrs.empty()) p_.next();
        Ident a = p_.ident("an attribute name");
        if (!d.attribute_index(a.text)) Parser::fail_at(a, "unknown attribute " + squote(a.text));
        if (h.level_of(a.text)) Parser::fail_at(a, squote(a.text) + " is a parameter of " + h.name);
        if (!used.insert(a.text).second) Parser::fail_at(a, "weak attribute " + squote(a.text) + " repeated");
        attrs.push_back(a.text);
      } while (p_.at(TokenKind::Comma));
      h.weak.emplace(owner.text, std::move(attrs));
    } while (p_.at(TokenKind::Semicolon));
    p_.expect(TokenKind::RParen, "')'");
  }

  void fact() {
    p_.expect_word("FACT");
    Ident name = p_.ident("a fact name");
    claim_name(name);
    Fact f;
    f.name = name.text;
    p_.expect(TokenKind::LParen, "'('");
    p_.expect_word("MEASURES");
    p_.expect(TokenKind::LParen, "'('");
    do {
      if (!f.measures.empty()) p_.next();
      Ident m = p_.ident("a measure name");
      if (f.measure_index(m.text)) Parser::fail_at(m, "duplicate measure " + squote(m.text));
      ValueKind kind = kind_word(true);
      const Token& agg_tok = p_.expect(TokenKind::Ident, "an aggregation");
      auto agg = parse_aggregation(agg_tok.text);
      if (!agg) Parser::fail(agg_tok, "expected SUM, AVG, COUNT, MIN or MAX, found " + describe(agg_tok));
      f.measures.push_back({m.text, kind, *agg});
    } while (p_.at(TokenKind::Comma));
    p_.expect(TokenKind::RParen, "')'");
    p_.expect_word("DIMENSIONS");
    p_.expect(TokenKind::LParen, "'('");
    do {
      if (!f.dimensions.empty()) p_.next();
      Ident d = p_.ident("a dimension name");
      if (!c_.find_dimension(d.text)) Parser::fail_at(d, "unknown dimension " + squote(d.text));
      if (f.link_index(d.text)) Parser::fail_at(d, "dimension " + squote(d.text) + " linked twice");
      f.dimensions.push_back(d.text);
    } while (p_.at(TokenKind::Comma));
    p_.expect(TokenKind::RParen, "')'");
    p_.expect(TokenKind::RParen, "')'");
    c_.facts.push_back(std::move(f));
  }

  ConstraintKind kind_of_constraint() {
    const Token& t = p_.expect(TokenKind::Ident, "a constraint kind");
    auto k = parse_constraint_kind(t.text);
    if (!k) Parser::fail(t, "expected EXCLUSION, INCLUSION, SIMULTANEITY, TOTALITY or PARTITION, found " + describe(t));
    return *k;
  }

  void need_hierarchy(const Dimension& d, const Ident& h) {
    if (!d.find_hierarchy(h.text)) Parser::fail_at(h, "unknown hierarchy " + squote(h.text) + " in " + d.name);
  }

  const Dimension& need_dimension(const Ident& d) {
    const Dimension* dim = c_.find_dimension(d.text);
    if (!dim) Parser::fail_at(d, "unknown dimension " + squote(d.text));
    return *dim;
  }

  HierarchyRef qualified(const Fact& f) {
    Ident d = p_.ident("a dimension name");
    const Dimension& dim = need_dimension(d);
    if (!f.link_index(d.text)) Parser::fail_at(d, squote(d.text) + " is not linked to " + f.name);
    p_.expect(TokenKind::Dot, "'.'");
    Ident h = p_.ident("a hierarchy name");
    need_hierarchy(dim, h);
    return {d.text, h.text};
  }

  void constraint() {
    p_.expect_word("CONSTRAINT");
    Constraint k;
    if (p_.at_word("INTRA")) {
      p_.next();
      k.scope = ConstraintScope::Intra;
      Ident d = p_.ident("a dimension name");
      const Dimension& dim = need_dimension(d);
      p_.expect(TokenKind::Colon, "':'");
      Ident l = p_.ident("a hierarchy name");
      need_hierarchy(dim, l);
      k.kind = kind_of_constraint();
      Ident r = p_.ident("a hierarchy name");
      need_hierarchy(dim, r);
      if (l.text == r.text) Parser::fail_at(r, "an intra constraint needs two distinct hierarchies");
      k.left = {d.text, l.text};
      k.right = {d.text, r.text};
    } else if (p_.at_word("INTER")) {
      p_.next();
      k.scope = ConstraintScope::Inter;
      p_.expect_word("ON");
      Ident f = p_.ident("a fact name");
      const Fact* fact = c_.find_fact(f.text);
      if (!fact) Parser::fail_at(f, "unknown fact " + squote(f.text));
      k.fact = f.text;
      p_.expect(TokenKind::Colon, "':'");
      k.left = qualified(*fact);
      k.kind = kind_of_constraint();
      SourcePos right_pos = p_.peek().pos;
      k.right = qualified(*fact);
      if (k.left.dimension == k.right.dimension) {
        throw Failure{Diagnostic{Severity::Error, "an inter constraint needs two distinct dimensions", right_pos,
                                 k.right.dimension}};
      }
    } else {
      Parser::fail(p_.peek(), "expected INTRA or INTER, found " + describe(p_.peek()));
    }
    c_.constraints.push_back(std::move(k));
  }

  Parser p_;
  Constellation c_;
  std::set<std::string> names_;
};

// ---------------------------------------------------------------------------
// Queries

QueryPtr wrap(QueryExpr e) { return std::make_shared<const QueryExpr>(std::move(e)); }

struct Arg {
  QueryPtr call;
  Ident name;
  const Token* tok = nullptr;
};

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : p_(text) {}

  ParseResult<QueryPtr> run() {
    ParseResult<QueryPtr> out;
    try {
      QueryPtr e = call();
      if (!p_.at_end()) Parser::fail(p_.peek(), "unexpected " + describe(p_.peek()) + " after the expression");
      out.value = std::move(e);
    } catch (const Failure& f) {
      out.diagnostics.push_back(f.diag);
    }
    return out;
  }

 private:
  QueryPtr call() {
    if (!p_.at(TokenKind::Ident)) Parser::fail(p_.peek(), "expected an operator call, found " + describe(p_.peek()));
    Ident op = p_.ident();
    static const std::set<std::string, std::less<>> kOps{"Display", "DrillDown", "RollUp", "HRotate", "DRotate"};
    if (!kOps.count(op.text)) Parser::fail_at(op, "unknown operator " + squote(op.text));
    p_.expect(TokenKind::LParen, "'('");
    std::vector<Arg> args;
    if (!p_.at(TokenKind::RParen)) {
      do {
        if (!args.empty()) p_.next();
        args.push_back(arg());
      } while (p_.at(TokenKind::Comma));
    }
    p_.expect(TokenKind::RParen, "')'");
    return build(op, args);
  }

  Arg arg() {
    const Token& t = p_.peek();
    Arg a;
    a.tok = &t;
    if (t.kind == TokenKind::Ident && p_.peek(1).kind == TokenKind::LParen) {
      a.call = call();
    } else if (t.kind == TokenKind::Ident) {
      a.name = p_.ident();
    } else {
      Parser::fail(t, "expected an identifier or operator call, found " + describe(t));
    }
    return a;
  }

  static void arity(const Ident& op, const std::vector<Arg>& args, std::size_t lo, std::size_t hi) {
    if (args.size() >= lo && args.size() <= hi) return;
    std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + " or " + std::to_string(hi);
    Parser::fail_at(op, op.text + " expects " + want + " arguments, found " + std::to_string(args.size()));
  }

  static const Ident& name(const Arg& a) {
    if (a.call) Parser::fail(*a.tok, "expected an identifier, found an operator call");
    return a.name;
  }

  static QueryPtr input(const Arg& a) {
    if (!a.call) Parser::fail(*a.tok, "expected an operator call, found " + describe(*a.tok));
    return a.call;
  }

  static std::optional<bool> flag(const std::vector<Arg>& args, std::size_t i) {
    if (args.size() <= i) return std::nullopt;
    const Ident& f = name(args[i]);
    if (f.text == "true") return true;
    if (f.text == "false") return false;
    Parser::fail_at(f, "expected true or false, found " + squote(f.text));
  }

  static QueryPtr build(const Ident& op, const std::vector<Arg>& a) {
    QueryPtr out;
    if (op.text == "Display") {
      arity(op, a, 5, 5);
      out = make_display(name(a[0]), name(a[1]), name(a[2]), name(a[3]), name(a[4]));
    } else if (op.text == "DrillDown") {
      arity(op, a, 3, 3);
      out = make_drilldown(input(a[0]), name(a[1]), name(a[2]));
    } else if (op.text == "RollUp") {
      arity(op, a, 3, 3);
      out = make_rollup(input(a[0]), name(a[1]), name(a[2]));
    } else if (op.text == "HRotate") {
      arity(op, a, 4, 5);
      out = make_hrotate(input(a[0]), name(a[1]), name(a[2]), name(a[3]), flag(a, 4));
    } else {
      arity(op, a, 4, 5);
      out = make_drotate(input(a[0]), name(a[1]), name(a[2]), name(a[3]), flag(a, 4));
    }
    QueryExpr positioned = *out;
    positioned.pos = op.pos;
    return wrap(std::move(positioned));
  }

  Parser p_;
};

bool same(const QueryPtr& a, const QueryPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}

std::string flag_text(const std::optional<bool>& f) { return f ? (*f ? ", true" : ", false") : ""; }

}  // namespace

std::string_view QueryExpr::op_name() const noexcept {
  static constexpr std::string_view kNames[] = {"Display", "DrillDown", "RollUp", "HRotate", "DRotate"};
  return kNames[node.index()];
}

const QueryExpr* QueryExpr::input() const noexcept {
  return std::visit(
      [](const auto& n) -> const QueryExpr* {
        if constexpr (std::is_same_v<std::decay_t<decltype(n)>, DisplayNode>) {
          return nullptr;
        } else {
          return n.input.get();
        }
      },
      node);
}

bool operator==(const QueryExpr& a, const QueryExpr& b) { return a.node == b.node; }
bool operator==(const DisplayNode& a, const DisplayNode& b) {
  return a.fact == b.fact && a.row == b.row && a.col == b.col && a.row_hierarchy == b.row_hierarchy &&
         a.col_hierarchy == b.col_hierarchy;
}
bool operator==(const DrillDownNode& a, const DrillDownNode& b) {
  return same(a.input, b.input) && a.dimension == b.dimension && a.parameter == b.parameter;
}
bool operator==(const RollUpNode& a, const RollUpNode& b) {
  return same(a.input, b.input) && a.dimension == b.dimension && a.parameter == b.parameter;
}
bool operator==(const HRotateNode& a, const HRotateNode& b) {
  return same(a.input, b.input) && a.dimension == b.dimension && a.from == b.from && a.to == b.to && a.flag == b.flag;
}
bool operator==(const DRotateNode& a, const DRotateNode& b) {
  return same(a.input, b.input) && a.from == b.from && a.to == b.to && a.hierarchy == b.hierarchy &&
         a.flag == b.flag;
}

QueryPtr make_display(Ident fact, Ident row, Ident col, Ident row_hierarchy, Ident col_hierarchy) {
  return wrap({DisplayNode{std::move(fact), std::move(row), std::move(col), std::move(row_hierarchy),
                           std::move(col_hierarchy)},
               {}});
}
QueryPtr make_drilldown(QueryPtr input, Ident dim, Ident param) {
  return wrap({DrillDownNode{std::move(input), std::move(dim), std::move(param)}, {}});
}
QueryPtr make_rollup(QueryPtr input, Ident dim, Ident param) {
  return wrap({RollUpNode{std::move(input), std::move(dim), std::move(param)}, {}});
}
QueryPtr make_hrotate(QueryPtr input, Ident dim, Ident from, Ident to, std::optional<bool> flag) {
  return wrap({HRotateNode{std::move(input), std::move(dim), std::move(from), std::move(to), flag}, {}});
}
QueryPtr make_drotate(QueryPtr input, Ident from, Ident to, Ident hierarchy, std::optional<bool> flag) {
  return wrap({DRotateNode{std::move(input), std::move(from), std::move(to), std::move(hierarchy), flag}, {}});
}

ParseResult<Constellation> parse_schema(std::string_view text) { return SchemaParser(text).run(); }

ParseResult<Condition> parse_condition(std::string_view text) {
  ParseResult<Condition> out;
  Parser p(text);
  try {
    ConditionParser cp(p);
    Condition c = cp.parse();
    if (!p.at_end()) Parser::fail(p.peek(), "unexpected " + describe(p.peek()) + " after the condition");
    out.value = std::move(c);
  } catch (const Failure& f) {
    out.diagnostics.push_back(f.diag);
  }
  return out;
}

ParseResult<QueryPtr> parse_query(std::string_view text) { return QueryParser(text).run(); }

std::string format_query(const QueryExpr& e) {
  std::string args = std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DisplayNode>) {
          return n.fact.text + ", " + n.row.text + ", " + n.col.text + ", " + n.row_hierarchy.text + ", " +
                 n.col_hierarchy.text;
        } else if constexpr (std::is_same_v<T, DrillDownNode> || std::is_same_v<T, RollUpNode>) {
          return format_query(*n.input) + ", " + n.dimension.text + ", " + n.parameter.text;
        } else if constexpr (std::is_same_v<T, HRotateNode>) {
          return format_query(*n.input) + ", " + n.dimension.text + ", " + n.from.text + ", " + n.to.text +
                 flag_text(n.flag);
        } else {
          return format_query(*n.input) + ", " + n.from.text + ", " + n.to.text + ", " + n.hierarchy.text +
                 flag_text(n.flag);
        }
      },
      e.node);
  return std::string(e.op_name()) + "(" + args + ")";
}

nlohmann::json query_to_json(const QueryExpr& e) {
  nlohmann::json j = {{"op", e.op_name()}};
  std::visit(
      [&j](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DisplayNode>) {
          j["fact"] = n.fact.text;
          j["row"] = n.row.text;
          j["col"] = n.col.text;
          j["rowHierarchy"] = n.row_hierarchy.text;
          j["colHierarchy"] = n.col_hierarchy.text;
        } else if constexpr (std::is_same_v<T, DrillDownNode> || std::is_same_v<T, RollUpNode>) {
          j["input"] = query_to_json(*n.input);
          j["dimension"] = n.dimension.text;
          j["parameter"] = n.parameter.text;
        } else if constexpr (std::is_same_v<T, HRotateNode>) {
          j["input"] = query_to_json(*n.input);
          j["dimension"] = n.dimension.text;
          j["from"] = n.from.text;
          j["to"] = n.to.text;
          if (n.flag) j["flag"] = *n.flag;
        } else {
          j["input"] = query_to_json(*n.input);
          j["from"] = n.from.text;
          j["to"] = n.to.text;
          j["hierarchy"] = n.hierarchy.text;
          if (n.flag) j["flag"] = *n.flag;
        }
      },
      e.node);
  return j;
}

namespace {

[[noreturn]] void bad_json(const std::string& what) { throw Error(ErrorCode::ParseError, "query JSON: " + what); }

Ident field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) bad_json(std::string("missing string field '") + key + "'");
  return Ident{it->get<std::string>()};
}

std::optional<bool> json_flag(const nlohmann::json& j) {
  auto it = j.find("flag");
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_boolean()) bad_json("'flag' must be a boolean");
  return it->get<bool>();
}

QueryPtr json_input(const nlohmann::json& j, int depth);

QueryPtr from_json(const nlohmann::json& j, int depth) {
  if (depth > 256) bad_json("expression nested too deeply");
  if (!j.is_object()) bad_json("expected an object");
  std::string op = field(j, "op").text;
  if (op == "Display") {
    return make_display(field(j, "fact"), field(j, "row"), field(j, "col"), field(j, "rowHierarchy"),
                        field(j, "colHierarchy"));
  }
  if (op == "DrillDown") return make_drilldown(json_input(j, depth), field(j, "dimension"), field(j, "parameter"));
  if (op == "RollUp") return make_rollup(json_input(j, depth), field(j, "dimension"), field(j, "parameter"));
  if (op == "HRotate") {
    return make_hrotate(json_input(j, depth), field(j, "dimension"), field(j, "from"), field(j, "to"), json_flag(j));
  }
  if (op == "DRotate") {
    return make_drotate(json_input(j, depth), field(j, "from"), field(j, "to"), field(j, "hierarchy"), json_flag(j));
  }
  bad_json("unknown operator '" + op + "'");
}

QueryPtr json_input(const nlohmann::json& j, int depth) {
  auto it = j.find("input");
  if (it == j.end()) bad_json("missing field 'input'");
  return from_json(*it, depth + 1);
}

}  // namespace

QueryPtr query_from_json(const nlohmann::json& j) { return from_json(j, 0); }

std::string format_schema(const Constellation& c) {
  std::string out = "CONSTELLATION " + c.name + "\n";
  for (const auto& d : c.dimensions) {
    out += "\nDIMENSION " + d.name + " (\n  ATTRIBUTES (";
    for (std::size_t i = 1; i + 1 < d.attributes.size(); ++i) {
      if (i > 1) out += ", ";
      out += d.attributes[i].name + " " + std::string(to_string(d.attributes[i].kind));
    }
    out += ")\n";
    for (const auto& h : d.hierarchies) {
      out += "  HIERARCHY " + h.name + " : ";
      for (std::size_t i = 0; i < h.params.size(); ++i) out += (i ? " -> " : "") + h.params[i];
      if (!h.weak.empty()) {
        std::string groups;
        for (const auto& p : h.params) {
          auto it = h.weak.find(p);
          if (it == h.weak.end()) continue;
          if (!groups.empty()) groups += "; ";
          groups += p + " : ";
          for (std::size_t i = 0; i < it->second.size(); ++i) groups += (i ? ", " : "") + it->second[i];
        }
        out += "\n    WEAK (" + groups + ")";
      }
      if (!h.condition.is_true()) out += "\n    WHEN " + to_text(h.condition);
      out += "\n";
    }
    out += ")\n";
  }
  for (const auto& f : c.facts) {
    out += "\nFACT " + f.name + " (\n  MEASURES (";
    for (std::size_t i = 0; i < f.measures.size(); ++i) {
      const auto& m = f.measures[i];
      out += (i ? ", " : "") + m.name + " " + std::string(to_string(m.kind)) + " " + std::string(to_string(m.agg));
    }
    out += ")\n  DIMENSIONS (";
    for (std::size_t i = 0; i < f.dimensions.size(); ++i) out += (i ? ", " : "") + f.dimensions[i];
    out += ")\n)\n";
  }
  if (!c.constraints.empty()) out += "\n";
  for (const auto& k : c.constraints) out += k.describe() + "\n";
  return out;
}

}  // namespace mdolap::dsl
