#include "cherednik/element_syntax.hpp"

#include <cctype>

#include "cherednik/errors.hpp"

namespace cherednik {

std::string format_key(const PBWKey& key) {
  std::string out = exponents_str(key.dual, 'x');
  if (key.group != 0) {
    if (!out.empty()) out += "*";
    out += "g" + std::to_string(key.group);
  }
  const std::string right = exponents_str(key.vec, 'y');
  if (!right.empty()) {
    if (!out.empty()) out += "*";
    out += right;
  }
  return out.empty() ? "1" : out;
}

std::string format_element(const PBWElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : x.terms()) {
    const std::string body = format_key(key);
    const bool unit = body == "1";
    std::string coeff;
    bool negative = false;
    if (c.is_rational()) {
      mpq_class q = c.to_rational();
      negative = q < 0;
      q = abs(q);
      if (!(q == 1 && !unit)) coeff = q.get_str();
    } else {
      coeff = c.str();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (coeff.empty()) {
      out += body;
    } else {
      out += coeff;
      if (!unit) out += "*" + body;
    }
  }
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, const CherednikAlgebra& algebra) : text_(text), algebra_(algebra) {}

  PBWElement parse() {
    skip_ws();
    PBWElement total = algebra_.zero();
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      PBWElement t = term();
      if (negative) total -= t;
      else total += t;
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  unsigned long number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ - start > 9) fail("number too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned long exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    return number();
  }

  PBWElement term() {
    PBWElement acc = algebra_.one();
    while (true) {
      skip_ws();
      factor(acc);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return acc;
  }

  void factor(PBWElement& acc) {
    const char c = peek();
    const unsigned field = algebra_.group().field();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      number();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        number();
      }
      acc = parse_scalar(text_.substr(start, pos_ - start), 1) * acc;
      return;
    }
    if (c == '(') {
      const std::size_t start = pos_;
      int depth = 0;
      do {
        if (peek() == '(') ++depth;
        if (peek() == ')') --depth;
        if (peek() == '\0') fail("unbalanced parenthesis");
        ++pos_;
      } while (depth > 0);
      try {
        acc = parse_scalar(text_.substr(start, pos_ - start), field) * acc;
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad coefficient: ") + e.what(), 1, start + 1);
      }
      return;
    }
    if (c == 'z') {
      ++pos_;
      if (field == 1) fail("'z' is not available over the rationals");
      acc = Scalar::zeta(field, static_cast<long>(exponent())) * acc;
      return;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      const unsigned long idx = number();
      if (idx < 1 || idx > algebra_.rank()) fail("variable index out of range");
      const unsigned long e = exponent();
      const PBWElement gen = c == 'x' ? algebra_.dual(idx - 1) : algebra_.vec(idx - 1);
      for (unsigned long k = 0; k < e; ++k) acc = algebra_.multiply(acc, gen);
      return;
    }
    if (c == 'g') {
      ++pos_;
      const unsigned long idx = number();
      if (idx >= algebra_.group().order()) fail("group element index out of range");
      acc = algebra_.multiply(acc, algebra_.group_element(idx));
      return;
    }
    fail(std::string("unexpected character '") + (c == '\0' ? std::string("end of input") : std::string(1, c)) + "'");
  }

  std::string_view text_;
  const CherednikAlgebra& algebra_;
  std::size_t pos_ = 0;
};

}  // namespace

PBWElement parse_element(std::string_view text, const CherednikAlgebra& algebra) {
  return ElementParser(text, algebra).parse();
}

}  // namespace cherednik
