#include <cctype>

#include "ggor/error.hpp"
#include "ggor/ring.hpp"

namespace ggor {
namespace {

// expr   := ['+'|'-'] term { ('+'|'-') term }
// term   := power { '*' power }
// power  := atom [ '^' integer ]
// atom   := number | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start);
      if (digits.size() > 6) throw ParseError("exponent too large", start);
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        std::size_t slash = pos_++;
        std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", slash + 1);
        num += "/" + den;
        mpq_class q(num);
        if (q.get_den() == 0) throw ParseError("zero denominator", slash);
        q.canonicalize();
        return Polynomial::constant(ring_, q);
      }
      return Polynomial::constant(ring_, mpq_class(mpz_class(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx)
        throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse_all();
}

}  // namespace ggor
