#include "nccr/bundle_spec.hpp"

#include <cctype>
#include <climits>
#include <vector>

namespace nccr {

SpecError::SpecError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(const std::string& text, int n) : s_(text), n_(n) {}

  bwb::BundleExpr parse() {
    bwb::BundleExpr out(n_);
    skip_ws();
    if (at_end()) fail("empty bundle specification");
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      advance();
    }
    for (;;) {
      bwb::BundleExpr t = term();
      out += sign > 0 ? t : Integer(-1) * t;
      skip_ws();
      if (at_end()) break;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        continue;
      }
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return out;
  }

 private:
  bwb::BundleExpr term() {
    skip_ws();
    Integer coeff = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      skip_ws();
      expect('*');
    }
    return coeff * atom();
  }

  bwb::BundleExpr atom() {
    skip_ws();
    const int line = line_;
    const int col = col_;
    std::string name;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      name += peek();
      advance();
    }
    if (name.empty()) fail("expected O, omega, wedgeT or hom");
    std::vector<int> args = arguments();
    auto arity = [&](std::size_t k) {
      if (args.size() != k) {
        throw SpecError(line, col, name + " takes " + std::to_string(k) + " argument(s), got " +
                                       std::to_string(args.size()));
      }
    };
    auto range = [&](int v, int lo, int hi, const char* what) {
      if (v < lo || v > hi) {
        throw SpecError(line, col,
                        name + ": " + what + " = " + std::to_string(v) + " outside valid range [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "] for n = " +
                            std::to_string(n_));
      }
    };
    if (name == "O") {
      arity(1);
      return bwb::BundleExpr(bwb::line_bundle(n_, args[0]));
    }
    if (name == "omega") {
      arity(2);
      range(args[0], 0, n_ - 1, "p");
      return bwb::omega(n_, args[0], args[1]);
    }
    if (name == "wedgeT") {
      arity(2);
      range(args[0], 0, n_ - 1, "p");
      return bwb::wedge_tangent(n_, args[0], args[1]);
    }
    if (name == "hom") {
      arity(3);
      range(args[0], 1, n_, "a");
      range(args[1], 1, n_, "b");
      return bwb::hom_bundle(args[0], args[1], args[2], n_);
    }
    throw SpecError(line, col, "unknown bundle '" + name + "'");
  }

  std::vector<int> arguments() {
    skip_ws();
    expect('(');
    std::vector<int> out;
    skip_ws();
    if (!at_end() && peek() == ')') {
      advance();
      return out;
    }
    for (;;) {
      skip_ws();
      out.push_back(small_int());
      skip_ws();
      if (!at_end() && peek() == ',') {
        advance();
        continue;
      }
      expect(')');
      return out;
    }
  }

  int small_int() {
    const int line = line_;
    const int col = col_;
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      advance();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 100000) throw SpecError(line, col, "integer too large");
      advance();
    }
    return static_cast<int>(neg ? -v : v);
  }

  Integer integer() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Integer(digits);
  }

  void expect(char c) {
    if (at_end()) fail(std::string("expected '") + c + "' but reached end of input");
    if (peek() != c) fail(std::string("expected '") + c + "', found '" + peek() + "'");
    advance();
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw SpecError(line_, col_, msg); }

  const std::string& s_;
  int n_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bwb::BundleExpr parse_bundle_spec(const std::string& text, int n) {
  if (n < 2) throw SpecError(1, 1, "n must be at least 2");
  return Parser(text, n).parse();
}

}  // namespace nccr
