#include "inducibility/quantum_spec.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "inducibility/iso_table.hpp"

namespace inducibility {

namespace {

class QuantumParser {
 public:
  explicit QuantumParser(std::string_view text) : s_(text) {}

  QuantumGraph parse(std::optional<int> t) {
    t_ = t;
    std::map<int, Rational> coeffs;
    skip();
    bool first = true;
    while (true) {
      Rational sign(1);
      if (peek('+') || peek('-')) {
        sign = s_[i_] == '-' ? Rational(-1) : Rational(1);
        ++i_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational c = sign;
      if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) {
        c *= number();
        skip();
        if (peek('*')) {
          ++i_;
          skip();
        }
      }
      coeffs[atom()] += c;
      skip();
      if (i_ == s_.size()) break;
    }
    if (!t_) fail("no terms");
    QuantumGraph q{*t_, {}};
    for (auto& [type, c] : coeffs) {
      if (c != 0) q.terms.emplace_back(type, c);
    }
    if (q.terms.empty()) fail("all coefficients cancel");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("quantum graph '" + std::string(s_) + "' at offset " + std::to_string(i_) + ": " +
                                message);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) const { return i_ < s_.size() && s_[i_] == c; }

  std::string_view digits() {
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(start, i_ - start);
  }

  Rational number() {
    const std::size_t start = i_;
    digits();
    if (peek('.')) {
      ++i_;
      digits();
    } else if (peek('/')) {
      ++i_;
      if (digits().empty()) fail("expected a denominator");
    }
    try {
      return parse_rational(s_.substr(start, i_ - start));
    } catch (const std::invalid_argument&) {
      fail("malformed coefficient");
    }
  }

  int small() {
    const auto d = digits();
    if (d.empty() || d.size() > 3) fail("expected a small integer");
    return std::stoi(std::string(d));
  }

  void settle_order(int t) {
    if (t_ && *t_ != t) fail("mixes orders " + std::to_string(*t_) + " and " + std::to_string(t));
    t_ = t;
  }

  int atom() {
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    const std::string name(s_.substr(start, i_ - start));
    if (name.empty()) fail("expected a type name");
    skip();
    if (name == "G" && peek('(')) return edge_list();
    std::vector<int> orders;
    for (int t = 2; t <= kMaxOrder; ++t) {
      if (iso_table(t).find(name) >= 0) orders.push_back(t);
    }
    if (orders.empty()) fail("unknown type name '" + name + "'");
    int t = orders.front();
    if (orders.size() > 1) {
      if (!t_) fail("type name '" + name + "' exists at several orders");
      t = *t_;
    }
    settle_order(t);
    return iso_table(t).find(name);
  }

  int edge_list() {
    ++i_;
    skip();
    const int n = small();
    if (n < 2 || n > kMaxOrder) fail("graph order must lie in 2..5");
    skip();
    LabeledGraph g(n);
    if (peek(':')) {
      ++i_;
      skip();
      while (!peek(')')) {
        const int a = small();
        skip();
        if (!peek('-')) fail("expected '-' in edge");
        ++i_;
        skip();
        const int b = small();
        if (a < 1 || b < 1 || a > n || b > n || a == b) fail("edge endpoints must be distinct vertices in 1.." + std::to_string(n));
        g.set_edge(a - 1, b - 1, true);
        skip();
        if (peek(',')) {
          ++i_;
          skip();
        } else if (!peek(')')) {
          fail("expected ',' or ')'");
        }
      }
    }
    if (!peek(')')) fail("expected ')'");
    ++i_;
    settle_order(n);
    return iso_table(n).find(g);
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::optional<int> t_;
};

}  // namespace

QuantumGraph parse_quantum(std::string_view text, std::optional<int> t) { return QuantumParser(text).parse(t); }

std::string print_quantum(const QuantumGraph& q) {
  const IsoTable& table = iso_table(q.t);
  std::string out;
  for (const auto& [type, c] : q.terms) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += table[type].name;
  }
  return out;
}

}  // namespace inducibility
