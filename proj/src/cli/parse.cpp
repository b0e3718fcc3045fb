#include <cctype>

#include "bfun/cli.hpp"
#include "bfun/errors.hpp"

namespace bfun::cli {

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary ('*' unary)*
// unary  := '-' unary | '+' unary | power
// power  := atom ('^' integer)?
// atom   := number ('/' number)? | name | '(' expr ')'
class Parser {
 public:
  Parser(const std::string& s, const AlgebraPtr& a) : s_(s), a_(a) {}

  NcPoly parse() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty expression");
    NcPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip();
    return pos_ == s_.size();
  }

  NcPoly expr() {
    NcPoly p = term();
    while (true) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  NcPoly term() {
    NcPoly p = unary();
    while (eat('*')) p = p * unary();
    skip();
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
      throw SyntaxError(pos_, "implicit multiplication is not accepted");
    return p;
  }

  NcPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power_();
  }

  NcPoly power_() {
    NcPoly base = atom();
    if (!eat('^')) return base;
    skip();
    const std::size_t at = pos_;
    Integer e = digits();
    if (!e.fits_uint_p() || e > 65535) throw ExponentOverflow("exponent too large at position " + std::to_string(at));
    return power(base, static_cast<unsigned>(e.get_ui()));
  }

  Integer digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected an integer");
    return Integer(s_.substr(start, pos_ - start));
  }

  NcPoly atom() {
    skip();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(digits());
      if (eat('/')) {
        const std::size_t at = pos_;
        Integer d = digits();
        if (d == 0) throw SyntaxError(at, "division by zero");
        q /= Rational(d);
      }
      return NcPoly::constant(a_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      auto v = a_->find(name);
      if (!v) throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(start));
      return NcPoly::variable(a_, *v);
    }
    if (eat('(')) {
      NcPoly p = expr();
      if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
      return p;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  AlgebraPtr a_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_poly(const std::string& text, const AlgebraPtr& a) { return Parser(text, a).parse(); }

NcPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return parse_poly(text, make_polynomial_ring(vars));
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t b = cur.find_first_not_of(" \t"), e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidArgument("empty name in list '" + text + "'");
    out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

}  // namespace bfun::cli
