#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypergerm/errors.hpp"
#include "hypergerm/expr.hpp"

namespace hypergerm {

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  const std::vector<std::string>& variables;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) {
      throw SyntaxError(pos, std::string("expected ") + what);
    }
  }

  [[noreturn]] void fail(const std::string& message) {
    throw SyntaxError(pos, message);
  }

  Expr parse() {
    Expr e = expression();
    if (!at_end()) fail("unexpected trailing input");
    return e;
  }

  Expr expression() {
    bool negate = accept('-');
    Expr acc = term();
    if (negate) acc = neg(acc);
    while (true) {
      if (accept('+')) {
        acc = add(acc, term());
      } else if (accept('-')) {
        acc = sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = factor();
    while (true) {
      if (accept('*')) {
        acc = mul(acc, factor());
      } else if (accept('/')) {
        acc = div(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Expr factor() {
    Expr b = base();
    if (accept('^')) return int_pow(b, integer());
    return b;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    bool negative = pos < text.size() && text[pos] == '-';
    if (negative) ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(start, "expected an integer exponent");
    long v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1L << 40)) throw SyntaxError(start, "exponent too large");
      ++pos;
    }
    return negative ? -v : v;
  }

  Expr base() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Expr e = expression();
      expect(')', "')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr number() {
    std::size_t start = pos;
    auto digits = [&] {
      std::size_t s = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      return pos > s;
    };
    digits();
    BigInt mantissa(std::string(text.substr(start, pos - start)));
    long frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      std::size_t fs = pos;
      if (!digits()) throw SyntaxError(pos, "expected digits after '.'");
      for (std::size_t i = fs; i < pos; ++i) {
        mantissa = mantissa * 10 + (text[i] - '0');
        ++frac_digits;
      }
    }
    long exponent10 = 0;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      ++pos;
      bool eneg = false;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        eneg = text[pos] == '-';
        ++pos;
      }
      std::size_t es = pos;
      if (!digits()) throw SyntaxError(pos, "expected digits in exponent");
      for (std::size_t i = es; i < pos; ++i) {
        exponent10 = exponent10 * 10 + (text[i] - '0');
        if (exponent10 > 100000) throw SyntaxError(es, "exponent too large");
      }
      if (eneg) exponent10 = -exponent10;
    }
    long net = exponent10 - frac_digits;
    Rational value(mantissa);
    BigInt scale = pow(BigInt(10), static_cast<unsigned>(net < 0 ? -net : net));
    if (net >= 0) {
      value *= Rational(scale);
    } else {
      value /= Rational(scale);
    }
    return constant(value);
  }

  Expr identifier() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    std::string name(text.substr(start, pos - start));
    static const std::pair<const char*, Expr (*)(const Expr&)> functions[] = {
        {"exp", exp_of}, {"log", log_of},   {"sin", sin_of},
        {"cos", cos_of}, {"abs", abs_of},   {"floor", floor_of},
    };
    for (const auto& [fn_name, builder] : functions) {
      if (name == fn_name) {
        expect('(', "'(' after function name");
        Expr arg = expression();
        expect(')', "')'");
        return builder(arg);
      }
    }
    for (std::size_t id = 0; id < variables.size(); ++id) {
      if (name == variables[id]) return variable(static_cast<int>(id));
    }
    pos = start;
    throw UnknownIdentifier(name);
  }
};

}  // namespace

Expr parse_expr(std::string_view text, const std::vector<std::string>& variables) {
  Parser p{text, 0, variables};
  return p.parse();
}

}  // namespace hypergerm
