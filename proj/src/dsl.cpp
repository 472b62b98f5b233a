#include "inducibility/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "inducibility/nesting.hpp"

namespace inducibility {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------------------
// Lexer

struct Token {
  enum class Kind { Ident, Number, String, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  SourceSpan span;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1, column = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (true) {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) advance(1);
    Token tok;
    tok.span = SourceSpan{i, i, line, column};
    if (i == src.size()) {
      out.push_back(tok);
      return out;
    }
    const char c = src[i];
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(src.substr(i, j - i));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '.' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      tok.kind = Token::Kind::Number;
      tok.text = std::string(src.substr(i, j - i));
    } else if (c == '"') {
      ++j;
      std::string value;
      while (j < src.size() && src[j] != '"') {
        if (src[j] == '\\' && j + 1 < src.size()) ++j;
        value += src[j++];
      }
      if (j == src.size()) throw ParseError("unterminated string", line, column);
      ++j;
      tok.kind = Token::Kind::String;
      tok.text = std::move(value);
    } else if (std::string_view("(),:;/").find(c) != std::string_view::npos) {
      j = i + 1;
      tok.kind = Token::Kind::Punct;
      tok.text = std::string(1, c);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    advance(j - i);
    tok.span.end = i;
    out.push_back(std::move(tok));
  }
}

// ---------------------------------------------------------------------------
// Parser

const std::regex kIndexedLeaf("^(K|A|C|P|loopK)([0-9]+)$");

bool is_operator(std::string_view name) {
  for (const char* op : {"complement", "blowup", "compose", "tensor", "union", "bernoulli", "bipartite", "load"}) {
    if (name == op) return true;
  }
  return false;
}

bool is_parameterized_leaf(std::string_view name) { return name == "kpart" || name == "paley" || name == "cayley2"; }

struct Arg {
  ExprPtr expr;
  std::optional<NumberLiteral> number;
  std::optional<std::string> text;
  std::optional<NumberLiteral> weight;
  bool after_semicolon = false;
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprPtr parse() {
    ExprPtr e = node();
    if (peek().kind != Token::Kind::End) error(peek(), "unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  bool at_punct(char c) const { return peek().kind == Token::Kind::Punct && peek().text[0] == c; }

  [[noreturn]] static void error(const Token& tok, const std::string& message) {
    throw ParseError(message, tok.span.line, tok.span.column);
  }
  [[noreturn]] static void error(const SourceSpan& span, const std::string& message) {
    throw ParseError(message, span.line, span.column);
  }

  void expect(char c) {
    if (!at_punct(c)) {
      const std::string found = peek().kind == Token::Kind::End ? "end of input" : "'" + peek().text + "'";
      error(peek(), std::string("expected '") + c + "', found " + found);
    }
    take();
  }

  ExprPtr node() {
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Ident) {
      error(tok, tok.kind == Token::Kind::End ? "expected an expression, found end of input"
                                              : "expected an expression, found '" + tok.text + "'");
    }
    take();
    if (at_punct('(')) return call(tok);
    return leaf(tok);
  }

  ExprPtr leaf(const Token& tok) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Named;
    e->span = tok.span;
    std::smatch m;
    if (std::regex_match(tok.text, m, kIndexedLeaf)) {
      e->name = m[1];
      e->params.push_back(small_int(m[2], tok.span));
      return e;
    }
    if (is_fixed_name(tok.text)) {
      e->name = tok.text;
      return e;
    }
    if (is_operator(tok.text) || is_parameterized_leaf(tok.text)) error(tok, tok.text + " expects arguments");
    error(tok, "unknown identifier '" + tok.text + "'");
  }

  static int small_int(const std::string& digits, const SourceSpan& span) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("integer '" + digits + "' out of range", span.line, span.column);
    }
    return value;
  }

  std::optional<NumberLiteral> number() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Ident && tok.text == "alpha") {
      take();
      return NumberLiteral{"alpha"};
    }
    if (tok.kind != Token::Kind::Number) return std::nullopt;
    take();
    std::string text = tok.text;
    if (at_punct('/')) {
      take();
      if (peek().kind != Token::Kind::Number || peek().text.find('.') != std::string::npos) {
        error(peek(), "expected an integer denominator");
      }
      if (tok.text.find('.') != std::string::npos) error(tok, "a fraction needs an integer numerator");
      text += "/" + take().text;
    }
    return NumberLiteral{std::move(text)};
  }

  std::vector<Arg> arguments() {
    expect('(');
    std::vector<Arg> args;
    if (at_punct(')')) {
      take();
      return args;
    }
    bool semicolon = false;
    while (true) {
      Arg a;
      a.span = peek().span;
      a.after_semicolon = semicolon;
      if (peek().kind == Token::Kind::String) {
        a.text = take().text;
      } else if (auto n = number()) {
        a.number = std::move(n);
      } else {
        a.expr = node();
        if (at_punct(':')) {
          take();
          a.weight = number();
          if (!a.weight) error(peek(), "expected a mass after ':'");
        }
      }
      args.push_back(std::move(a));
      if (at_punct(',')) {
        take();
      } else if (at_punct(';')) {
        take();
        semicolon = true;
      } else {
        expect(')');
        return args;
      }
    }
  }

  static void arity(const Token& tok, const std::vector<Arg>& args, std::size_t lo, std::size_t hi) {
    if (args.size() >= lo && args.size() <= hi) return;
    std::string want = lo == hi ? std::to_string(lo) : hi == SIZE_MAX ? "at least " + std::to_string(lo)
                                                                       : std::to_string(lo) + ".." + std::to_string(hi);
    error(tok, tok.text + " expects " + want + " argument" + (lo == 1 && hi == 1 ? "" : "s") + ", got " +
                   std::to_string(args.size()));
  }

  static ExprPtr expr_arg(const Token& tok, const Arg& a) {
    if (!a.expr) error(a.span, tok.text + " expects an expression here");
    if (a.weight) error(a.span, "masses are only allowed inside union");
    return a.expr;
  }

  static NumberLiteral number_arg(const Token& tok, const Arg& a) {
    if (!a.number) error(a.span, tok.text + " expects a number here");
    return *a.number;
  }

  static int int_arg(const Token& tok, const Arg& a) {
    const NumberLiteral n = number_arg(tok, a);
    if (n.is_alpha() || n.text.find_first_not_of("0123456789") != std::string::npos) {
      error(a.span, tok.text + " expects an integer here");
    }
    return small_int(n.text, a.span);
  }

  ExprPtr call(const Token& tok) {
    const std::vector<Arg> args = arguments();
    auto e = std::make_shared<Expr>();
    e->span = tok.span;
    e->span.end = tokens_[pos_ - 1].span.end;
    const std::string& op = tok.text;
    for (const Arg& a : args) {
      if (a.after_semicolon && op != "cayley2") error(a.span, "';' is only used by cayley2");
    }
    if (op == "complement") {
      arity(tok, args, 1, 1);
      e->kind = Expr::Kind::Complement;
      e->children.push_back(expr_arg(tok, args[0]));
    } else if (op == "blowup") {
      arity(tok, args, 2, 2);
      e->kind = Expr::Kind::BlowUp;
      e->children.push_back(expr_arg(tok, args[0]));
      e->params.push_back(int_arg(tok, args[1]));
    } else if (op == "compose") {
      arity(tok, args, 2, 2);
      e->kind = Expr::Kind::Compose;
      for (const Arg& a : args) e->children.push_back(expr_arg(tok, a));
    } else if (op == "tensor") {
      arity(tok, args, 2, SIZE_MAX);
      e->kind = Expr::Kind::Tensor;
      for (const Arg& a : args) e->children.push_back(expr_arg(tok, a));
    } else if (op == "union") {
      arity(tok, args, 1, SIZE_MAX);
      e->kind = Expr::Kind::Union;
      const bool weighted = args[0].weight.has_value();
      for (const Arg& a : args) {
        if (!a.expr) error(a.span, "union expects expressions");
        if (a.weight.has_value() != weighted) error(a.span, "give a mass to every union part or to none");
        e->children.push_back(a.expr);
        if (weighted) e->weights.push_back(*a.weight);
      }
    } else if (op == "bernoulli" || op == "bipartite") {
      arity(tok, args, 1, 1);
      e->kind = op == "bernoulli" ? Expr::Kind::Bernoulli : Expr::Kind::Bipartite;
      e->weights.push_back(number_arg(tok, args[0]));
    } else if (op == "load") {
      arity(tok, args, 1, 1);
      if (!args[0].text) error(args[0].span, "load expects a quoted path");
      e->kind = Expr::Kind::Load;
      e->name = *args[0].text;
    } else if (op == "kpart") {
      arity(tok, args, 1, SIZE_MAX);
      e->kind = Expr::Kind::Named;
      e->name = op;
      for (const Arg& a : args) e->params.push_back(int_arg(tok, a));
    } else if (op == "paley") {
      arity(tok, args, 1, 1);
      e->kind = Expr::Kind::Named;
      e->name = op;
      e->params.push_back(int_arg(tok, args[0]));
    } else if (op == "cayley2") {
      arity(tok, args, 1, SIZE_MAX);
      if (args[0].after_semicolon) error(args[0].span, "cayley2 expects the dimension first");
      for (std::size_t i = 2; i < args.size(); ++i) {
        if (args[1].after_semicolon != args[i].after_semicolon) error(args[i].span, "weights follow a single ';'");
      }
      e->kind = Expr::Kind::Named;
      e->name = op;
      for (const Arg& a : args) e->params.push_back(int_arg(tok, a));
    } else {
      error(tok, "unknown identifier '" + op + "'");
    }
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void print_to(std::ostream& os, const Expr& e);

void print_list(std::ostream& os, const Expr& e) {
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) os << ", ";
    print_to(os, *e.children[i]);
    if (!e.weights.empty()) os << ':' << e.weights[i].text;
  }
}

void print_to(std::ostream& os, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Named:
      if (e.name == "kpart" || e.name == "paley" || e.name == "cayley2") {
        os << e.name << '(';
        for (std::size_t i = 0; i < e.params.size(); ++i) {
          if (i) os << (e.name == "cayley2" && i == 1 ? "; " : ", ");
          os << e.params[i];
        }
        os << ')';
      } else {
        os << e.name;
        if (!e.params.empty()) os << e.params[0];
      }
      return;
    case Expr::Kind::Complement:
      os << "complement(";
      print_list(os, e);
      os << ')';
      return;
    case Expr::Kind::BlowUp:
      os << "blowup(";
      print_to(os, *e.children[0]);
      os << ", " << e.params[0] << ')';
      return;
    case Expr::Kind::Compose:
      os << "compose(";
      print_list(os, e);
      os << ')';
      return;
    case Expr::Kind::Tensor:
      os << "tensor(";
      print_list(os, e);
      os << ')';
      return;
    case Expr::Kind::Union:
      os << "union(";
      print_list(os, e);
      os << ')';
      return;
    case Expr::Kind::Bernoulli:
      os << "bernoulli(" << e.weights[0].text << ')';
      return;
    case Expr::Kind::Bipartite:
      os << "bipartite(" << e.weights[0].text << ')';
      return;
    case Expr::Kind::Load:
      os << "load(\"";
      for (char c : e.name) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
      }
      os << "\")";
      return;
  }
}

// ---------------------------------------------------------------------------
// Evaluation

[[noreturn]] void fail(const Expr& e, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(e.span.line) + ", column " + std::to_string(e.span.column) +
                              ": " + message);
}

class Evaluator {
 public:
  explicit Evaluator(const EvalOptions& options) : options_(options) {}

  Construction eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Named:
        return checked(e, named(e));
      case Expr::Kind::Load:
        return checked(e, load(e));
      case Expr::Kind::Complement: {
        Construction c = eval(*e.children[0]);
        if (auto* g = std::get_if<LabeledGraph>(&c)) return complement(*g);
        if (auto* m = std::get_if<ExactModel>(&c)) return model_complement(*m);
        return model_complement(std::get<ApproxModel>(c));
      }
      case Expr::Kind::BlowUp: {
        const LabeledGraph g = graph_child(e, 0, "blowup");
        if (e.params[0] < 1) fail(e, "blow-up factor must be positive");
        size_check(e, static_cast<std::int64_t>(g.order()) * e.params[0]);
        return blow_up(g, e.params[0]);
      }
      case Expr::Kind::Compose: {
        const LabeledGraph outer = graph_child(e, 0, "compose");
        const LabeledGraph inner = graph_child(e, 1, "compose");
        if (outer.has_loops()) fail(*e.children[0], "compose needs a loopless outer graph");
        size_check(e, static_cast<std::int64_t>(outer.order()) * inner.order());
        return compose(outer, inner);
      }
      case Expr::Kind::Tensor: {
        std::vector<Construction> parts;
        bool graphs = true;
        std::int64_t size = 1;
        for (const auto& child : e.children) {
          parts.push_back(eval(*child));
          graphs = graphs && is_graph(parts.back());
          size *= types_of(parts.back());
          size_check(e, size);
        }
        if (graphs) {
          LabeledGraph g = std::get<LabeledGraph>(parts[0]);
          for (std::size_t i = 1; i < parts.size(); ++i) g = tensor(g, std::get<LabeledGraph>(parts[i]));
          return g;
        }
        return fold_models(parts, [](const auto& a, const auto& b) { return model_tensor(a, b); });
      }
      case Expr::Kind::Union: {
        std::vector<Construction> parts;
        for (const auto& child : e.children) parts.push_back(eval(*child));
        if (e.weights.empty()) {
          std::int64_t size = 0;
          for (const auto& p : parts) {
            if (!is_graph(p)) fail(e, "a union involving models needs a mass for every part");
            size += std::get<LabeledGraph>(p).order();
          }
          size_check(e, size);
          LabeledGraph g = std::get<LabeledGraph>(parts[0]);
          for (std::size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, std::get<LabeledGraph>(parts[i]));
          return g;
        }
        if (options_.approximate) return weighted_union<double>(e, parts);
        return weighted_union<Rational>(e, parts);
      }
      case Expr::Kind::Bernoulli:
      case Expr::Kind::Bipartite: {
        const bool bern = e.kind == Expr::Kind::Bernoulli;
        if (options_.approximate) {
          const double p = probability<double>(e, e.weights[0]);
          return bern ? Construction(bernoulli(p)) : Construction(bipartite_random(p));
        }
        const Rational p = probability<Rational>(e, e.weights[0]);
        return bern ? Construction(bernoulli(p)) : Construction(bipartite_random(p));
      }
    }
    fail(e, "unsupported expression");
  }

  template <typename Scalar>
  Scalar number(const Expr& where, const NumberLiteral& n) const {
    if (n.is_alpha()) {
      if constexpr (is_exact_v<Scalar>) {
        fail(where, "alpha = 2 + sqrt(3) is irrational; rerun in approximate mode (--approx)");
      } else {
        return 2.0 + std::sqrt(3.0);
      }
    }
    try {
      return from_rational<Scalar>(parse_rational(n.text));
    } catch (const std::invalid_argument&) {
      fail(where, "malformed number '" + n.text + "'");
    }
  }

 private:
  Construction checked(const Expr& e, LabeledGraph g) {
    size_check(e, g.order());
    return g;
  }

  void size_check(const Expr& e, std::int64_t size) const {
    if (size > options_.max_vertices) {
      fail(e, "construction has " + std::to_string(size) + " vertices, above the limit of " +
                  std::to_string(options_.max_vertices) +
                  "; profile commands reach tensor and compose products without building them");
    }
  }

  static std::int64_t types_of(const Construction& c) {
    return std::visit([](const auto& x) -> std::int64_t {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, LabeledGraph>) {
        return x.order();
      } else {
        return x.types();
      }
    }, c);
  }

  LabeledGraph named(const Expr& e) const {
    try {
      return build_named(e.name == "kpart" ? std::string_view("Kpart") : std::string_view(e.name), e.params);
    } catch (const std::invalid_argument& err) {
      fail(e, err.what());
    }
  }

  LabeledGraph load(const Expr& e) const {
    std::ifstream in(e.name);
    if (!in) fail(e, "cannot open '" + e.name + "'");
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
      if (line.empty()) continue;
      try {
        return graph6_decode(line);
      } catch (const std::invalid_argument& err) {
        fail(e, "'" + e.name + "': " + err.what());
      }
    }
    fail(e, "'" + e.name + "' holds no graph");
  }

  LabeledGraph graph_child(const Expr& e, std::size_t i, const char* op) {
    Construction c = eval(*e.children[i]);
    if (!is_graph(c)) fail(*e.children[i], std::string(op) + " needs a graph, not a step model");
    return std::get<LabeledGraph>(std::move(c));
  }

  template <typename Scalar>
  StepModel<Scalar> lift(const Construction& c) const {
    if (auto* g = std::get_if<LabeledGraph>(&c)) return from_graph<Scalar>(*g);
    if constexpr (is_exact_v<Scalar>) {
      return std::get<ExactModel>(c);
    } else {
      if (auto* m = std::get_if<ExactModel>(&c)) return to_approx(*m);
      return std::get<ApproxModel>(c);
    }
  }

  template <typename Op>
  Construction fold_models(const std::vector<Construction>& parts, Op op) const {
    if (options_.approximate) {
      ApproxModel m = lift<double>(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) m = op(m, lift<double>(parts[i]));
      return m;
    }
    ExactModel m = lift<Rational>(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) m = op(m, lift<Rational>(parts[i]));
    return m;
  }

  template <typename Scalar>
  Construction weighted_union(const Expr& e, const std::vector<Construction>& parts) const {
    std::vector<std::pair<StepModel<Scalar>, Scalar>> weighted;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Scalar w = number<Scalar>(*e.children[i], e.weights[i]);
      if (!(w > Scalar(0))) fail(*e.children[i], "union masses must be positive");
      weighted.emplace_back(lift<Scalar>(parts[i]), w);
    }
    return model_union(weighted);
  }

  template <typename Scalar>
  Scalar probability(const Expr& e, const NumberLiteral& n) const {
    const Scalar p = number<Scalar>(e, n);
    if (p < Scalar(0) || p > Scalar(1)) fail(e, "edge probability must lie in [0, 1]");
    return p;
  }

  EvalOptions options_;
};

// ---------------------------------------------------------------------------
// Profile routes

template <typename Scalar>
LabeledProfile<Scalar> direct_profile(const Expr& e, int t, const ProfileOptions& options) {
  const Construction c = evaluate(e, options.eval);
  if (auto* g = std::get_if<LabeledGraph>(&c)) {
    return labeled_repetitive_profile(from_graph<Scalar>(*g), t, options.budget);
  }
  if constexpr (is_exact_v<Scalar>) {
    return labeled_repetitive_profile(std::get<ExactModel>(c), t, options.budget);
  } else {
    if (auto* m = std::get_if<ExactModel>(&c)) return labeled_repetitive_profile(to_approx(*m), t, options.budget);
    return labeled_repetitive_profile(std::get<ApproxModel>(c), t, options.budget);
  }
}

template <typename Scalar>
LabeledProfile<Scalar> routed_profile(const Expr& e, int t, const ProfileOptions& options) {
  if (options.route == Route::Direct) return direct_profile<Scalar>(e, t, options);
  switch (e.kind) {
    case Expr::Kind::Tensor: {
      LabeledProfile<Scalar> r = routed_profile<Scalar>(*e.children[0], t, options);
      for (std::size_t i = 1; i < e.children.size(); ++i) r = convolve(r, routed_profile<Scalar>(*e.children[i], t, options));
      return r;
    }
    case Expr::Kind::Complement: {
      const LabeledProfile<Scalar> inner = routed_profile<Scalar>(*e.children[0], t, options);
      LabeledProfile<Scalar> r = inner;
      const LabeledMask flip = full_mask(t);
      for (Eigen::Index m = 0; m < r.values.size(); ++m) r.values(m ^ flip) = inner.values(m);
      return r;
    }
    case Expr::Kind::Compose:
      if constexpr (is_exact_v<Scalar>) {
        const Construction outer = evaluate(*e.children[0], options.eval);
        const auto* g = std::get_if<LabeledGraph>(&outer);
        if (!g) fail(*e.children[0], "compose needs a graph, not a step model");
        if (g->has_loops()) fail(*e.children[0], "compose needs a loopless outer graph");
        if (g->order() < 2) return routed_profile<Scalar>(*e.children[1], t, options);
        return compose_profile(*g, routed_profile<Scalar>(*e.children[1], t, options));
      }
      [[fallthrough]];
    default:
      return direct_profile<Scalar>(e, t, options);
  }
}

}  // namespace

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.params != b.params || a.weights != b.weights ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!same_tree(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
  std::ostringstream os;
  print_to(os, e);
  return os.str();
}

Construction evaluate(const Expr& e, const EvalOptions& options) { return Evaluator(options).eval(e); }

bool is_graph(const Construction& c) { return std::holds_alternative<LabeledGraph>(c); }

LabeledProfile<Rational> labeled_profile_exact(const Expr& e, int t, const ProfileOptions& options) {
  ProfileOptions exact = options;
  exact.eval.approximate = false;
  return routed_profile<Rational>(e, t, exact);
}

LabeledProfile<double> labeled_profile_approx(const Expr& e, int t, const ProfileOptions& options) {
  ProfileOptions approx = options;
  approx.eval.approximate = true;
  return routed_profile<double>(e, t, approx);
}

}  // namespace inducibility
