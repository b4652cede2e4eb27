#include "nccr/repmoduli.hpp"

#include <sstream>

namespace nccr::rep {

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("ModP: division by zero");
  std::int64_t result = 1, base = v_, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return ModP(result);
}

std::string to_string(const ModP& x) { return std::to_string(x.value()); }

RepTriple<Rational> random_triple(int n, int box, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random_triple: n must be >= 2");
  if (box < 1) throw std::invalid_argument("random_triple: box must be >= 1");
  std::uniform_int_distribution<int> dist(-box, box);
  std::vector<long> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : a) {
      x = dist(rng);
      nonzero = nonzero || x != 0;
    }
  }
  for (;;) {
    long s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      b[i] = dist(rng);
      s += a[i] * b[i];
    }
    if (s == 0) break;
  }
  RepTriple<Rational> t{n, {}, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    t.alpha.emplace_back(a[i]);
    t.beta.emplace_back(b[i]);
  }
  return t;
}

RepTriple<ModP> to_modp(const RepTriple<Rational>& t) {
  auto conv = [](const Rational& x) {
    return ModP(x.get_num().get_si()) / ModP(x.get_den().get_si());
  };
  RepTriple<ModP> out{t.n, {}, {}};
  for (const auto& x : t.alpha) out.alpha.push_back(conv(x));
  for (const auto& x : t.beta) out.beta.push_back(conv(x));
  return out;
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty entry in vector '" + text + "'");
    out.push_back(parse_rational(item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty vector");
  return out;
}

}  // namespace nccr::rep
