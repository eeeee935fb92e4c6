#ifndef NSZ_POLY_IO_HPP
#define NSZ_POLY_IO_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nsz/poly.hpp"

namespace nsz {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := base ['^' nat]
//          base := rational | variable | '(' expr ')'
//          rational := int ['/' nat], variable := 'x' nat (1-based)
class PolyParser {
 public:
  PolyParser(const std::string& s, int nvars) : s_(s), nvars_(nvars) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  MultiPoly expr() {
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (get() == '-') sign = -1;
    }
    MultiPoly acc = Rat(sign) * term();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        MultiPoly t = term();
        acc = c == '+' ? acc + t : acc - t;
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        get();
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      long e = natural();
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }

  MultiPoly base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      MultiPoly r = expr();
      skip_ws();
      if (get() != ')') fail("expected ')'");
      return r;
    }
    if (c == 'x') {
      get();
      long idx = natural();
      if (idx < 1 || idx > nvars_) fail("variable index out of range");
      return MultiPoly::variable(nvars_, static_cast<int>(idx) - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      skip_ws();
      if (peek() == '/') {
        get();
        skip_ws();
        Int den = integer();
        if (den == 0) fail("zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return MultiPoly::constant(nvars_, q);
      }
      return MultiPoly::constant(nvars_, Rat(num));
    }
    fail("unexpected character");
    return MultiPoly(nvars_);
  }

  Int integer() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected integer literal");
    return parse_int(digits);
  }

  long natural() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected natural literal");
    return std::stol(digits);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_++];
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + why);
  }

  const std::string& s_;
  int nvars_;
  size_t pos_ = 0;
};

// Max variable index occurring in the text (0 when none).
inline int scan_nvars(const std::string& s) {
  int best = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'x') {
      size_t j = i + 1;
      std::string digits;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) digits += s[j++];
      if (!digits.empty()) best = std::max(best, std::stoi(digits));
    }
  }
  return best;
}

}  // namespace detail

// Parse with an explicit ambient variable count.
inline MultiPoly parse_poly(const std::string& s, int nvars) {
  return detail::PolyParser(s, nvars).parse();
}

// Parse inferring nvars from the largest variable index used.
inline MultiPoly parse_poly(const std::string& s) {
  return parse_poly(s, detail::scan_nvars(s));
}

inline std::string render_rat(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Canonical rendering: grevlex-descending terms, '^1' omitted, unit
// coefficients omitted on non-constant monomials. parse(render(f)) == f.
inline std::string render_poly(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = total_degree(m) > 0;
    bool coeff_written = false;
    if (!has_vars || a != 1) {
      os << render_rat(a);
      coeff_written = true;
    }
    bool first_var = !coeff_written;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace nsz

#endif
