#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "inducibility/labeled_graph.hpp"
#include "inducibility/profile.hpp"
#include "inducibility/spectral.hpp"
#include "inducibility/step_model.hpp"

namespace inducibility {

/// Location of a node in the source text; line and column are 1-based.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Number literal kept as written: "2", "3/10", "0.3" or "alpha" (2 + sqrt 3).
struct NumberLiteral {
  std::string text;

  bool is_alpha() const { return text == "alpha"; }
  friend bool operator==(const NumberLiteral&, const NumberLiteral&) = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Construction expression.
///
///   Named       K3, loopK1, M4, bull, kpart(2,3), paley(17), cayley2(10; 1,2)
///   Complement  complement(e)
///   BlowUp      blowup(e, m)
///   Compose     compose(outer, inner)       outer must be a loopless graph
///   Tensor      tensor(e1, e2, ...)
///   Union       union(e1:w1, e2:w2, ...)    model with masses proportional to w
///               union(e1, e2, ...)          disjoint union of graphs
///   Bernoulli   bernoulli(p)
///   Bipartite   bipartite(p)
///   Load        load("file.g6")
struct Expr {
  enum class Kind { Named, Complement, BlowUp, Compose, Tensor, Union, Bernoulli, Bipartite, Load };

  Kind kind = Kind::Named;
  SourceSpan span;
  std::string name;                    // Named: catalogue name; Load: path
  std::vector<int> params;             // Named parameters; BlowUp factor
  std::vector<ExprPtr> children;
  std::vector<NumberLiteral> weights;  // Union masses (empty when unweighted); Bernoulli/Bipartite p
};

/// Structural equality, ignoring spans.
bool same_tree(const Expr& a, const Expr& b);

ExprPtr parse_expr(std::string_view text);

/// Canonical text; parse_expr(print_expr(e)) reproduces e.
std::string print_expr(const Expr& e);

struct EvalOptions {
  bool approximate = false;
  int max_vertices = 4096;
};

using Construction = std::variant<LabeledGraph, ExactModel, ApproxModel>;

/// Graph when every leaf is a graph and every operator is graph-valued;
/// otherwise a step model, exact unless `approximate` is set.
Construction evaluate(const Expr& e, const EvalOptions& options = {});

bool is_graph(const Construction& c);

/// How labeled repetitive profiles are obtained from an expression.
enum class Route {
  Auto,    // convolution for tensors, composition for compose, mask flips for complements
  Direct,  // evaluate the whole expression, then enumerate
};

struct ProfileOptions {
  EvalOptions eval;
  Route route = Route::Auto;
  std::uint64_t budget = kDefaultAssignmentBudget;
};

LabeledProfile<Rational> labeled_profile_exact(const Expr& e, int t, const ProfileOptions& options = {});
LabeledProfile<double> labeled_profile_approx(const Expr& e, int t, const ProfileOptions& options = {});

}  // namespace inducibility
