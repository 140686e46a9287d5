#include <cctype>
#include <optional>

#include "apolar/poly.hpp"

namespace apolar {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarAlphabet& alphabet, Side default_side)
      : text_(text), alphabet_(alphabet), side_(default_side) {}

  Polynomial run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    Side side = seen_ ? *seen_ : side_;
    return p.with_side(side);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::kParse, "parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '.';
  }

  Polynomial constant(const Scalar& c) const { return Polynomial::constant(alphabet_, Side::kForm, c); }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
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
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial den = unary();
        if (!den.is_constant() || den.is_zero()) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc *= den.terms().front().coef.inverse();
      } else if (starts_factor()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      if (peek('-')) fail("negative exponent");
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a non-negative integer");
      }
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 4096) fail("exponent too large");
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    std::size_t start = pos_;
    std::string digits;
    std::size_t frac_digits = 0;
    bool dot = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (dot) ++frac_digits;
      } else if (c == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac_digits; ++k) den *= 10;
    return constant(Scalar(mpq_class(num, den)));
  }

  Polynomial identifier() {
    std::size_t start = pos_;
    char letter = text_[pos_++];
    std::string index;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) index += text_[pos_++];
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      pos_ = start;
      fail("unknown identifier");
    }
    if (letter == 'i' && index.empty()) return constant(Scalar::imaginary_unit());
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(letter)));
    Side side = std::isupper(static_cast<unsigned char>(letter)) ? Side::kOperator : Side::kForm;
    int k = 0;
    if (index.empty()) {
      if (lower == 'x' && alphabet_.m == 1) {
        k = 1;
      } else {
        pos_ = start;
        fail("unknown variable '" + std::string(1, letter) + "'");
      }
    } else {
      k = std::stoi(index);
    }
    std::optional<std::size_t> var;
    if (lower == 'x' && k >= 1 && k <= alphabet_.m) var = alphabet_.x(k - 1);
    if (lower == 'y' && k >= 1 && k <= alphabet_.n) var = alphabet_.y(k - 1);
    if (lower == 't' && k >= 1 && k <= alphabet_.aux) var = alphabet_.t(k - 1);
    if (!var) {
      pos_ = start;
      fail("unknown variable '" + std::string(1, letter) + index + "' for alphabet m=" +
           std::to_string(alphabet_.m) + ", n=" + std::to_string(alphabet_.n));
    }
    if (seen_ && *seen_ != side) {
      pos_ = start;
      fail("mixed lowercase and uppercase variables");
    }
    seen_ = side;
    return Polynomial::variable(alphabet_, Side::kForm, *var);
  }

  std::string_view text_;
  VarAlphabet alphabet_;
  Side side_;
  std::optional<Side> seen_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const VarAlphabet& alphabet, Side default_side) {
  return Parser(text, alphabet, default_side).run();
}

Scalar parse_scalar(std::string_view text) {
  Polynomial p = parse_poly(text, VarAlphabet{0, 0, 0});
  if (p.is_zero()) return Scalar(0);
  return p.terms().front().coef;
}

}  // namespace apolar
