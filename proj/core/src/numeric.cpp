#include "nccr/numeric.hpp"

#include <stdexcept>

namespace nccr {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::int64_t to_i64(const Integer& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) {
    throw std::overflow_error("integer does not fit into 64 bits: " + x.get_str());
  }
  return static_cast<std::int64_t>(x.get_si());
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s.push_back(c);
  }
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational: " + text);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational out;
  if (out.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (out.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  out.canonicalize();
  return out;
}

}  // namespace nccr
