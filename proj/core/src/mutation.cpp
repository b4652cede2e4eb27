#include "nccr/mutation.hpp"

#include "nccr/bwb.hpp"
#include "nccr/combinat.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace nccr::mut {

ModuleLabel ModuleLabel::normalized(int n) const {
  if (kind == LabelKind::M) return *this;
  if (index == n - 1) return m(n - 1);
  if (index == 0) return m(-1);
  return *this;
}

std::string ModuleLabel::str() const {
  switch (kind) {
    case LabelKind::M: return "M(" + std::to_string(index) + ")";
    case LabelKind::L: return "L(" + std::to_string(index) + ")";
    case LabelKind::WedgeT: return "WedgeT(" + std::to_string(index) + ")";
  }
  return "?";
}

std::optional<ModuleLabel> parse_module_label(const std::string& text) {
  static const std::regex re(R"(^\s*(M|L|WedgeT)\(\s*([-+]?\d{1,6})\s*\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  const int v = std::stoi(m[2]);
  if (m[1] == "M") return ModuleLabel::m(v);
  if (m[1] == "L") return ModuleLabel::l(v);
  return ModuleLabel::wedge_t(v);
}

std::string to_string(Chain c) { return c == Chain::minus ? "minus" : "plus"; }

std::vector<EulerTerm> euler_sequence(int n, Chain chain) {
  if (n < 2) throw std::invalid_argument("euler_sequence: n must be >= 2");
  std::vector<EulerTerm> out;
  if (chain == Chain::minus) {
    out.push_back({ModuleLabel::m(n - 1), "", 1});
    for (int k = n - 1; k >= 1; --k) {
      out.push_back({ModuleLabel::m(k - 1), "wedge^" + std::to_string(k) + " V", binomial(n, k)});
    }
    out.push_back({ModuleLabel::m(-1), "", 1});
  } else {
    out.push_back({ModuleLabel::m(-1), "", 1});
    for (int j = 0; j <= n - 2; ++j) {
      out.push_back({ModuleLabel::m(j), "wedge^" + std::to_string(n - 1 - j) + " V*", binomial(n, n - 1 - j)});
    }
    out.push_back({ModuleLabel::m(n - 1), "", 1});
  }
  return out;
}

Integer label_rank(const ModuleLabel& l, int n) {
  switch (l.kind) {
    case LabelKind::M: return 1;
    case LabelKind::L: return binomial(n - 1, l.index);
    case LabelKind::WedgeT: return binomial(n - 1, n - 1 - l.index);
  }
  return 0;
}

namespace {

void validate(const ModuleLabel& l, int n) {
  const bool ok = l.kind == LabelKind::M ? (l.index >= -n + 1 && l.index <= n - 1) : (l.index >= 0 && l.index <= n - 1);
  if (!ok) throw std::invalid_argument("label " + l.str() + " out of range for n = " + std::to_string(n));
}

bwb::BundleExpr sheaf_of(const ModuleLabel& l, int n, Chain chain) {
  validate(l, n);
  switch (l.kind) {
    case LabelKind::M: return bwb::line_bundle(n, chain == Chain::minus ? -l.index : l.index);
    case LabelKind::L:
      if (chain != Chain::minus) throw std::invalid_argument("L(k) lives on the descending chain");
      return bwb::omega(n, l.index, 1);
    case LabelKind::WedgeT:
      if (chain != Chain::plus) throw std::invalid_argument("WedgeT(j) lives on the ascending chain");
      return bwb::omega(n, n - 1 - l.index, n - 1);
  }
  throw std::logic_error("sheaf_of");
}

Chain natural_chain(const ModuleLabel& l) { return l.kind == LabelKind::WedgeT ? Chain::plus : Chain::minus; }

std::vector<Integer> scaled(std::vector<Integer> v, const Integer& c) {
  for (auto& x : v) x *= c;
  return v;
}

std::vector<Integer> minus(std::vector<Integer> a, const std::vector<Integer>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

}  // namespace

std::vector<Integer> fiber_hilbert(const ModuleLabel& l, int n, int max_degree, Chain chain) {
  const bwb::BundleExpr g = sheaf_of(l, n, chain);
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(max_degree + 1));
  for (int m = 0; m <= max_degree; ++m) {
    const bwb::CohTable h = bwb::cohomology(g.tensor(bwb::BundleExpr(bwb::sym_tangent(n, m, 0))));
    auto it = h.find(0);
    out.push_back(it == h.end() ? Integer(0) : it->second);
  }
  return out;
}

coh::GradedDims hilbert_of_label(const ModuleLabel& l, int n, int cap) {
  validate(l, n);
  if (l.kind == LabelKind::M) return coh::hilbert_M(l.index, n, cap);
  // The lowest nonzero fibre degree is at most n - 1.
  const std::vector<Integer> f = fiber_hilbert(l, n, cap + n, natural_chain(l));
  std::size_t s = 0;
  while (s < f.size() && f[s] == 0) ++s;
  coh::GradedDims out(cap);
  for (int k = 0; k <= cap && s + static_cast<std::size_t>(k) < f.size(); ++k) out[k] = f[s + static_cast<std::size_t>(k)];
  return out;
}

std::map<ModuleLabel, int> MutationState::summands() const {
  std::map<ModuleLabel, int> out;
  for (int a = 0; a <= n - 2; ++a) ++out[ModuleLabel::m(a)];
  ++out[moving.normalized(n)];
  return out;
}

std::string MutationState::summands_str() const {
  std::string out;
  for (const auto& [l, mult] : summands()) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += l.str();
  }
  const ModuleLabel norm = moving.normalized(n);
  if (!(norm == moving)) out += "  [" + moving.str() + " = " + norm.str() + "]";
  return out;
}

MutationState initial_state(int n) {
  if (n < 2) throw std::invalid_argument("initial_state: n must be >= 2");
  MutationState s;
  s.n = n;
  s.chain = Chain::minus;
  s.moving = ModuleLabel::l(n - 1);
  return s;
}

namespace {

std::string w_str(int n) { return "W = M(0) + ... + M(" + std::to_string(n - 2) + ")"; }

}  // namespace

MutationState mutate_step(const MutationState& s) {
  MutationState t = s;
  const int n = s.n;
  if (s.chain == Chain::minus) {
    const int k = s.moving.index;
    if (k < 1) throw std::logic_error("mutate_step: descending chain already at L(0)");
    t.moving = ModuleLabel::l(k - 1);
    t.approximation = "(wedge^" + std::to_string(k) + " V (x) M(" + std::to_string(k - 1) + ")) + " + w_str(n);
  } else {
    const int j = s.moving.index;
    if (j > n - 2) throw std::logic_error("mutate_step: ascending chain already at WedgeT(n-1)");
    t.moving = ModuleLabel::wedge_t(j + 1);
    t.approximation = "(wedge^" + std::to_string(n - 1 - j) + " V* (x) M(" + std::to_string(j) + ")) + " + w_str(n);
  }
  ++t.step;
  return t;
}

MutationState restart_ascending(const MutationState& s) {
  if (s.chain != Chain::minus || s.moving.index != 0) {
    throw std::logic_error("restart_ascending: state is not at the end of a descending chain");
  }
  MutationState t = s;
  t.chain = Chain::plus;
  t.moving = ModuleLabel::wedge_t(0);
  return t;
}

std::vector<SpliceCheck> splice_checks(int n, int cap) {
  std::vector<SpliceCheck> out;
  auto check = [&](Chain chain, const ModuleLabel& ker, const ModuleLabel& mid, const Integer& mult,
                   const std::string& coeff, const ModuleLabel& cok) {
    const auto a = fiber_hilbert(ker, n, cap, chain);
    const auto b = fiber_hilbert(mid, n, cap, chain);
    const auto c = fiber_hilbert(cok, n, cap, chain);
    SpliceCheck sc;
    sc.chain = chain;
    sc.sequence = "0 -> " + ker.str() + " -> " + coeff + " (x) " + mid.str() + " -> " + cok.str() + " -> 0";
    sc.pass = true;
    for (int m = 0; m <= cap; ++m) {
      const auto i = static_cast<std::size_t>(m);
      sc.alternating.push_back(a[i] - mult * b[i] + c[i]);
      sc.pass = sc.pass && sc.alternating.back() == 0;
    }
    out.push_back(std::move(sc));
  };
  for (int k = n - 1; k >= 1; --k) {
    check(Chain::minus, ModuleLabel::l(k), ModuleLabel::m(k - 1), binomial(n, k), "wedge^" + std::to_string(k) + " V",
          ModuleLabel::l(k - 1));
  }
  for (int j = 0; j <= n - 2; ++j) {
    check(Chain::plus, ModuleLabel::wedge_t(j), ModuleLabel::m(j), binomial(n, n - 1 - j),
          "wedge^" + std::to_string(n - 1 - j) + " V*", ModuleLabel::wedge_t(j + 1));
  }
  return out;
}

std::vector<RecursionCheck> recursion_checks(int n, int cap) {
  std::vector<RecursionCheck> out;
  const auto nn = static_cast<std::size_t>(n);
  {
    // Middle term of the splice with kernel L(k): wedge^k V (x) M(k-1).
    auto mid = [&](int k) { return scaled(fiber_hilbert(ModuleLabel::m(k - 1), n, cap, Chain::minus), binomial(n, k)); };
    std::vector<std::vector<Integer>> top(nn), bottom(nn);
    top[nn - 1] = fiber_hilbert(ModuleLabel::m(n - 1), n, cap, Chain::minus);
    for (int k = n - 1; k >= 1; --k) top[static_cast<std::size_t>(k - 1)] = minus(mid(k), top[static_cast<std::size_t>(k)]);
    bottom[0] = fiber_hilbert(ModuleLabel::m(-1), n, cap, Chain::minus);
    for (int k = 1; k <= n - 1; ++k) bottom[static_cast<std::size_t>(k)] = minus(mid(k), bottom[static_cast<std::size_t>(k - 1)]);
    for (int k = 0; k <= n - 1; ++k) {
      RecursionCheck r;
      r.label = ModuleLabel::l(k);
      r.direct = fiber_hilbert(r.label, n, cap, Chain::minus);
      r.from_top = top[static_cast<std::size_t>(k)];
      r.from_bottom = bottom[static_cast<std::size_t>(k)];
      r.pass = r.direct == r.from_top && r.direct == r.from_bottom;
      out.push_back(std::move(r));
    }
  }
  {
    // Middle term of the splice with kernel WedgeT(j): wedge^{n-1-j} V* (x) M(j).
    auto mid = [&](int j) { return scaled(fiber_hilbert(ModuleLabel::m(j), n, cap, Chain::plus), binomial(n, n - 1 - j)); };
    std::vector<std::vector<Integer>> top(nn), bottom(nn);
    bottom[0] = fiber_hilbert(ModuleLabel::m(-1), n, cap, Chain::plus);
    for (int j = 0; j <= n - 2; ++j) bottom[static_cast<std::size_t>(j + 1)] = minus(mid(j), bottom[static_cast<std::size_t>(j)]);
    top[nn - 1] = fiber_hilbert(ModuleLabel::m(n - 1), n, cap, Chain::plus);
    for (int j = n - 2; j >= 0; --j) top[static_cast<std::size_t>(j)] = minus(mid(j), top[static_cast<std::size_t>(j + 1)]);
    for (int j = 0; j <= n - 1; ++j) {
      RecursionCheck r;
      r.label = ModuleLabel::wedge_t(j);
      r.direct = fiber_hilbert(r.label, n, cap, Chain::plus);
      r.from_top = top[static_cast<std::size_t>(j)];
      r.from_bottom = bottom[static_cast<std::size_t>(j)];
      r.pass = r.direct == r.from_top && r.direct == r.from_bottom;
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

std::vector<std::vector<Integer>> hilbert_data(const MutationState& s, int cap) {
  std::vector<std::vector<Integer>> out;
  for (int a = 0; a <= s.n - 2; ++a) out.push_back(hilbert_of_label(ModuleLabel::m(a), s.n, cap).dims);
  out.push_back(hilbert_of_label(s.moving, s.n, cap).dims);
  std::sort(out.begin(), out.end());
  return out;
}

Integer state_rank(const MutationState& s) {
  Integer total = 0;
  for (const auto& [l, mult] : s.summands()) total += mult * label_rank(l, s.n);
  return 2 * total;
}

}  // namespace

bool OrbitReport::pass() const {
  return closes_after == 2 * n - 2 && hilbert_equal && splices_exact && recursion_consistent;
}

OrbitReport orbit_check(int n, int cap) {
  if (n < 2) throw std::invalid_argument("orbit_check: n must be >= 2");
  OrbitReport rep;
  rep.n = n;
  rep.cap = cap;
  const MutationState start = initial_state(n);
  const auto start_summands = start.summands();
  const auto start_hilbert = hilbert_data(start, cap);
  MutationState s = start;
  rep.steps.push_back({0, s.chain, s.summands_str(), "", state_rank(s)});
  for (int i = 1; i <= 2 * n - 2; ++i) {
    if (s.chain == Chain::minus && s.moving.index == 0) s = restart_ascending(s);
    s = mutate_step(s);
    rep.steps.push_back({s.step, s.chain, s.summands_str(), s.approximation, state_rank(s)});
    if (rep.closes_after < 0 && s.summands() == start_summands) {
      rep.closes_after = s.step;
      rep.hilbert_equal = hilbert_data(s, cap) == start_hilbert;
    }
  }
  const auto splices = splice_checks(n, cap);
  rep.splices_exact = std::all_of(splices.begin(), splices.end(), [](const SpliceCheck& c) { return c.pass; });
  const auto rec = recursion_checks(n, cap);
  rep.recursion_consistent = std::all_of(rec.begin(), rec.end(), [](const RecursionCheck& c) { return c.pass; });
  return rep;
}

bool EndpointReport::pass() const {
  const bool tilt = std::all_of(tilting.begin(), tilting.end(), [](const coh::TiltingReport& r) { return r.pass; });
  return tilt && rank_start == expected_rank && rank_end == expected_rank;
}

EndpointReport endpoint_algebra_check(int n) {
  if (n < 3) throw std::invalid_argument("endpoint_algebra_check: n must be >= 3");
  EndpointReport rep;
  rep.n = n;
  for (int k = 0; k <= n - 1; ++k) rep.tilting.push_back(coh::tilting_check({coh::Family::Sk, n, k}));
  MutationState s = initial_state(n);
  rep.rank_start = state_rank(s);
  for (int i = 0; i < n - 1; ++i) s = mutate_step(s);
  rep.rank_end = state_rank(s);
  rep.expected_rank = coh::nccr_rank(coh::NccrFamily::LambdaK, n);
  return rep;
}

}  // namespace nccr::mut
