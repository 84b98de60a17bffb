#include <cctype>
#include <sstream>

#include "idealgb/error.hpp"
#include "idealgb/polynomial.hpp"

namespace idealgb {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    if (vars_.empty()) throw Error("variable list is empty");
    Polynomial p = expression();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = primary();
    if (!accept('^')) return base;
    skipSpace();
    const auto exponent = integer("exponent");
    if (!exponent.fits_uint_p()) fail("exponent too large");
    Polynomial r = Polynomial::constant(vars_.size(), 1);
    for (unsigned long i = exponent.get_ui(); i > 0; --i) r = r * base;
    return r;
  }

  Polynomial primary() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer("number"));
      skipSpace();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skipSpace();
        const std::size_t den_pos = pos_;
        Integer den = integer("denominator");
        if (den == 0) throw ParseError("zero denominator", den_pos);
        value /= Rational(den);
      }
      return Polynomial::constant(vars_.size(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Polynomial::monomial(Monomial::variable(vars_.size(), i));
      }
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Integer integer(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const std::vector<std::string>& vars) {
  return ExpressionParser(text, vars).parse();
}

std::string format(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.nvars() != vars.size()) throw DimensionMismatch("variable names do not match monomial");
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format(const Polynomial& p, const std::vector<std::string>& vars,
                   const MonomialOrder& order) {
  if (p.isZero()) return "0";
  auto terms = p.sortedTerms(order);
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = abs(c);
    if (m.isOne()) {
      os << to_string(magnitude);
    } else if (magnitude == 1) {
      os << format(m, vars);
    } else {
      os << to_string(magnitude) << '*' << format(m, vars);
    }
  }
  return os.str();
}

}  // namespace idealgb
