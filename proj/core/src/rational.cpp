#include "idealgb/rational.hpp"

#include <cctype>
#include <mutex>
#include <vector>

#include "idealgb/error.hpp"

namespace idealgb {

namespace {

bool isDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);

  bool negative = false;
  std::size_t offset = begin;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
    ++offset;
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  if (!isDigits(num)) throw ParseError("expected integer numerator", offset);
  Rational r;
  if (slash == std::string_view::npos) {
    r = Rational(Integer(std::string(num)));
  } else {
    const std::string_view den = body.substr(slash + 1);
    if (!isDigits(den)) {
      throw ParseError("expected integer denominator", offset + slash + 1);
    }
    const Integer d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator", offset + slash + 1);
    r = Rational(Integer(std::string(num)), d);
    r.canonicalize();
  }
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer factorial(unsigned n) {
  static std::mutex mu;
  static std::vector<Integer> table{Integer(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  }
  return table[n];
}

}  // namespace idealgb
