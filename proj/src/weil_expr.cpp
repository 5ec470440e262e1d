#include "lfam/weil_expr.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace lfam::weil {

ParseError::ParseError(std::size_t position, const std::string& message)
    : DomainError("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Evaluation top() {
    Evaluation ev;
    skip();
    for (auto [name, q] : {std::pair{"eps", Query::Epsilon}, std::pair{"gamma", Query::Gamma},
                           std::pair{"logcond", Query::LogConductor}}) {
      if (peek_word(name)) {
        pos_ += std::char_traits<char>::length(name);
        expect('(');
        ev.rep = sum();
        expect(')');
        ev.query = q;
        finish();
        return ev;
      }
    }
    ev.rep = sum();
    finish();
    return ev;
  }

 private:
  WeilRep sum() {
    WeilRep r = product();
    while (accept_op("(+)")) r += product();
    return r;
  }

  WeilRep product() {
    WeilRep r = factor();
    while (accept_op("(*)")) r = tensor(r, factor());
    return r;
  }

  WeilRep factor() {
    skip();
    if (peek_word("sym^")) {
      pos_ += 4;
      const std::size_t at = pos_;
      const std::int64_t m = integer();
      if (m < 1) throw ParseError(at, "symmetric power must be positive");
      expect('(');
      WeilRep inner = sum();
      expect(')');
      return semantic(at, [&] { return sym_power(inner, static_cast<int>(m)); });
    }
    if (peek_word("wedge2")) {
      const std::size_t at = pos_;
      pos_ += 6;
      expect('(');
      WeilRep inner = sum();
      expect(')');
      return semantic(at, [&] { return wedge2(inner); });
    }
    if (at_char('(')) {
      ++pos_;
      WeilRep r = sum();
      expect(')');
      return r;
    }
    if (at_char('[')) return atom();
    throw ParseError(pos_, pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'"
                                            : "unexpected end of input");
  }

  WeilRep atom() {
    const std::size_t start = pos_;
    expect('[');
    skip();
    Kind kind = Kind::Disc;
    std::int64_t k = 0;
    if (at_char('+')) {
      kind = Kind::Plus;
      ++pos_;
    } else if (at_char('-')) {
      kind = Kind::Minus;
      ++pos_;
    } else {
      k = integer();
      if (k < 1) throw ParseError(start, "weight must be at least 1");
    }
    Rational t{0};
    skip();
    if (at_char(',')) {
      ++pos_;
      t = rational();
    }
    expect(']');
    if (kind == Kind::Plus) return WeilIrr::plus(t);
    if (kind == Kind::Minus) return WeilIrr::minus(t);
    return WeilRep::disc(static_cast<int>(k), t);
  }

  template <typename F>
  WeilRep semantic(std::size_t at, F&& f) {
    try {
      return f();
    } catch (const std::exception& e) {
      throw ParseError(at, e.what());
    }
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    bool neg = false;
    if (at_char('-')) {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError(start, "expected an integer");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 40)) throw ParseError(start, "integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  Rational rational() {
    const std::int64_t num = integer();
    skip();
    if (at_char('/')) {
      ++pos_;
      const std::size_t at = pos_;
      const std::int64_t den = integer();
      if (den == 0) throw ParseError(at, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  bool accept_op(const char* op) {
    skip();
    if (s_.compare(pos_, std::char_traits<char>::length(op), op) == 0) {
      pos_ += std::char_traits<char>::length(op);
      return true;
    }
    return false;
  }

  bool peek_word(const char* w) {
    skip();
    return s_.compare(pos_, std::char_traits<char>::length(w), w) == 0;
  }

  bool at_char(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!at_char(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, "trailing input");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string number(double v) {
  std::ostringstream o;
  o.precision(12);
  o << v;
  return o.str();
}

}  // namespace

std::string Evaluation::text() const {
  switch (query) {
    case Query::Epsilon: return epsilon_factor(rep).to_string();
    case Query::Gamma: return gamma_factor(rep).to_string();
    case Query::LogConductor: return number(log_analytic_conductor(rep));
    case Query::None: break;
  }
  return rep.to_string();
}

nlohmann::json Evaluation::to_json(const std::string& expression) const {
  nlohmann::json j;
  j["expression"] = expression;
  j["decomposition"] = rep.to_string();
  j["dimension"] = rep.dimension();
  j["epsilon"] = epsilon_factor(rep).to_string();
  j["gamma"] = gamma_factor(rep).to_string();
  j["log_conductor"] = log_analytic_conductor(rep);
  if (query != Query::None) j["result"] = text();
  return j;
}

Evaluation evaluate(const std::string& expression) {
  if (expression.empty()) throw ParseError(0, "empty expression");
  return Parser(expression).top();
}

}  // namespace lfam::weil
