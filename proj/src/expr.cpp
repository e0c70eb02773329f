#include "gspec/expr.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <vector>

#include "gspec/errors.hpp"

namespace gspec {

namespace {

enum class TokenKind { integer, name, symbol, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokenKind::integer, std::string(text.substr(start, i - start)), start});
    } else if (name_start(c)) {
      while (i < text.size() && name_char(text[i])) ++i;
      if (i < text.size() && text[i] == ':') {  // group argument, e.g. L_k_interchange:S3
        ++i;
        if (i < text.size() && text[i] == '<') {
          const auto close = text.find('>', i);
          if (close == std::string_view::npos) throw ParseError("unterminated group generators", i);
          i = close + 1;
          if (i < text.size() && text[i] == '@') ++i;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        } else {
          while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        }
      }
      out.push_back({TokenKind::name, std::string(text.substr(start, i - start)), start});
    } else if (std::string_view("+-*(),=").find(c) != std::string_view::npos) {
      ++i;
      out.push_back({TokenKind::symbol, std::string(1, c), start});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  out.push_back({TokenKind::end, "", text.size()});
  return out;
}

enum class Op { integer, builtin, variable, add, sub, mul, neg, compose, box, restrict, quotient, let };

struct Node {
  Op op;
  std::size_t position = 0;
  std::vector<std::unique_ptr<Node>> args;
  Integer value;                          // integer literal
  std::optional<Species> builtin;         // resolved built-in
  const Node* binding = nullptr;          // variable -> its let
  std::string name;                       // let variable
  unsigned min_degree = 0;                // restrict
  std::optional<unsigned> max_degree;     // restrict
  mutable GroupPtr variable_group;        // let: inferred group of the bound series
};

using NodePtr = std::unique_ptr<Node>;

bool is_keyword(const std::string& s) {
  return s == "box" || s == "let" || s == "in" || s == "restrict" || s == "quotient";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (peek().kind != TokenKind::end) throw ParseError("unexpected '" + peek().text + "'", peek().position);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at_symbol(const char* s) const { return peek().kind == TokenKind::symbol && peek().text == s; }
  bool at_word(const char* s) const { return peek().kind == TokenKind::name && peek().text == s; }

  void expect_symbol(const char* s) {
    if (!at_symbol(s))
      throw ParseError(std::string("expected '") + s + "'" + (peek().kind == TokenKind::end ? " before end of input" : ""),
                       peek().position);
    ++pos_;
  }

  static NodePtr binary(Op op, std::size_t position, NodePtr a, NodePtr b) {
    auto n = std::make_unique<Node>();
    n->op = op;
    n->position = position;
    n->args.push_back(std::move(a));
    n->args.push_back(std::move(b));
    return n;
  }

  unsigned integer_argument() {
    if (peek().kind != TokenKind::integer) throw ParseError("expected an integer", peek().position);
    const Token& t = next();
    try {
      return static_cast<unsigned>(std::stoul(t.text));
    } catch (const std::exception&) {
      throw ParseError("integer out of range", t.position);
    }
  }

  NodePtr expr() {
    NodePtr left = sum();
    while (at_word("box")) {
      const std::size_t p = next().position;
      left = binary(Op::box, p, std::move(left), sum());
    }
    return left;
  }

  NodePtr sum() {
    NodePtr left = product();
    while (at_symbol("+") || at_symbol("-")) {
      const Token& t = next();
      left = binary(t.text == "+" ? Op::add : Op::sub, t.position, std::move(left), product());
    }
    return left;
  }

  NodePtr product() {
    NodePtr left = unary();
    while (at_symbol("*")) {
      const std::size_t p = next().position;
      left = binary(Op::mul, p, std::move(left), unary());
    }
    return left;
  }

  NodePtr unary() {
    if (at_symbol("-")) {
      auto n = std::make_unique<Node>();
      n->op = Op::neg;
      n->position = next().position;
      n->args.push_back(unary());
      return n;
    }
    NodePtr e = primary();
    while (at_symbol("(")) {
      const std::size_t p = next().position;
      NodePtr inner = expr();
      expect_symbol(")");
      e = binary(Op::compose, p, std::move(e), std::move(inner));
    }
    return e;
  }

  NodePtr primary() {
    const Token& t = peek();
    auto n = std::make_unique<Node>();
    n->position = t.position;
    switch (t.kind) {
      case TokenKind::end:
        throw ParseError("unexpected end of input", t.position);
      case TokenKind::integer:
        n->op = Op::integer;
        n->value = Integer(next().text);
        return n;
      case TokenKind::symbol:
        if (t.text == "(") {
          next();
          NodePtr e = expr();
          expect_symbol(")");
          return e;
        }
        throw ParseError("unexpected '" + t.text + "'", t.position);
      case TokenKind::name:
        break;
    }
    const std::string word = next().text;
    if (word == "restrict") {
      n->op = Op::restrict;
      expect_symbol("(");
      n->args.push_back(expr());
      expect_symbol(",");
      n->min_degree = integer_argument();
      if (at_symbol(",")) {
        next();
        n->max_degree = integer_argument();
      }
      expect_symbol(")");
      return n;
    }
    if (word == "quotient") {
      n->op = Op::quotient;
      expect_symbol("(");
      n->args.push_back(expr());
      expect_symbol(")");
      return n;
    }
    if (word == "let") {
      n->op = Op::let;
      if (peek().kind != TokenKind::name || is_keyword(peek().text))
        throw ParseError("expected a variable name after 'let'", peek().position);
      n->name = next().text;
      expect_symbol("=");
      scopes_.push_back(n.get());
      n->args.push_back(expr());
      if (!at_word("in")) throw ParseError("expected 'in'", peek().position);
      next();
      n->args.push_back(expr());
      scopes_.pop_back();
      return n;
    }
    if (is_keyword(word)) throw ParseError("unexpected '" + word + "'", n->position);
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if ((*it)->name == word) {
        n->op = Op::variable;
        n->binding = *it;
        return n;
      }
    n->op = Op::builtin;
    try {
      n->builtin = library::lookup(word);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), n->position);
    }
    return n;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Node*> scopes_;
};

GroupPtr group_of(const Species& s) {
  if (auto g = std::get_if<GroupCycleIndexSeries>(&s)) return g->group();
  return nullptr;
}

// Group the value of a node lives over, or null for a plain series.
GroupPtr infer_group(const Node& n) {
  switch (n.op) {
    case Op::integer:
      return nullptr;
    case Op::quotient:
      infer_group(*n.args[0]);  // visits nested lets
      return nullptr;
    case Op::builtin:
      return group_of(*n.builtin);
    case Op::variable:
      return n.binding->variable_group;
    case Op::let:
      n.variable_group = infer_group(*n.args[0]);
      return infer_group(*n.args[1]);
    default: {
      GroupPtr found;
      for (const auto& a : n.args)
        if (auto g = infer_group(*a); g && !found) found = g;
      return found;
    }
  }
}

GroupCycleIndexSeries lift_to(const Species& s, const GroupPtr& group) {
  if (auto g = std::get_if<GroupCycleIndexSeries>(&s)) return *g;
  return trivial_lift(std::get<CycleIndexSeries>(s), group);
}

class Evaluator {
 public:
  Species eval(const Node& n) {
    switch (n.op) {
      case Op::integer:
        return scale(library::one(), Rational(n.value));
      case Op::builtin:
        return *n.builtin;
      case Op::variable:
        return bound_.at(n.binding);
      case Op::neg:
        return std::visit([](const auto& s) -> Species { return scale(s, Rational(-1)); }, eval(*n.args[0]));
      case Op::restrict:
        return std::visit([&](const auto& s) -> Species { return restrict(s, n.min_degree, n.max_degree); },
                          eval(*n.args[0]));
      case Op::quotient: {
        Species s = eval(*n.args[0]);
        if (auto g = std::get_if<GroupCycleIndexSeries>(&s)) return quotient(*g);
        return s;
      }
      case Op::let:
        return eval_let(n);
      default:
        return eval_binary(n);
    }
  }

 private:
  Species eval_let(const Node& n) {
    const GroupPtr& group = n.variable_group;
    if (group) {
      auto placeholder = GroupCycleIndexSeries::placeholder(group, n.name);
      bound_.insert_or_assign(&n, placeholder);
      define_recursive(placeholder, lift_to(eval(*n.args[0]), group));
    } else {
      auto placeholder = CycleIndexSeries::placeholder(n.name);
      bound_.insert_or_assign(&n, placeholder);
      Species body = eval(*n.args[0]);
      if (!std::holds_alternative<CycleIndexSeries>(body))
        throw GroupMismatchError("recursive definition of '" + n.name + "' changes group");
      define_recursive(placeholder, std::get<CycleIndexSeries>(body));
    }
    return eval(*n.args[1]);
  }

  Species eval_binary(const Node& n) {
    Species a = eval(*n.args[0]);
    Species b = eval(*n.args[1]);
    const auto* pa = std::get_if<CycleIndexSeries>(&a);
    const auto* pb = std::get_if<CycleIndexSeries>(&b);
    if (pa && pb) {
      switch (n.op) {
        case Op::add: return add(*pa, *pb);
        case Op::sub: return subtract(*pa, *pb);
        case Op::mul: return multiply(*pa, *pb);
        case Op::compose: return plethysm(*pa, *pb);
        case Op::box:
          return gamma_functorial(trivial_lift(*pa, trivial_group()), trivial_lift(*pb, trivial_group()))
              .identity_component();
        default: break;
      }
    }
    GroupPtr group = group_of(a) ? group_of(a) : group_of(b);
    const auto ga = lift_to(a, group);
    const auto gb = lift_to(b, group);
    switch (n.op) {
      case Op::add: return add(ga, gb);
      case Op::sub: return subtract(ga, gb);
      case Op::mul: return multiply(ga, gb);
      case Op::compose: return gamma_plethysm(ga, gb);
      case Op::box: return gamma_functorial(ga, gb);
      default: throw std::logic_error("unhandled expression node");
    }
  }

  std::map<const Node*, Species> bound_;
};

}  // namespace

Species evaluate_expression(std::string_view text) {
  NodePtr root = Parser(text).parse();
  infer_group(*root);
  return Evaluator().eval(*root);
}

GroupCycleIndexSeries as_gamma(const Species& s) { return lift_to(s, trivial_group()); }

}  // namespace gspec
