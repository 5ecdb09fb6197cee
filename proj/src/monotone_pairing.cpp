#include "pairkit/monotone_pairing.hpp"

namespace pairkit {

namespace {

// Default bound on the galloping search. Doubling makes reaching it cost
// only ~4096 evaluations, so it can sit far beyond any practical argument
// and still fire promptly when g turns out to be bounded.
const Nat kDefaultGallopCap = Nat(1) << 4096;

Nat pseudo_inverse_impl(const MonotoneSource& g, const Nat& y, const Nat& cap) {
  if (g(0) >= y) return 0;
  // Invariant: g(lo) < y <= g(hi) once the gallop ends.
  Nat lo = 0;
  Nat hi = 1;
  while (g(hi) < y) {
    lo = hi;
    hi <<= 1;
    if (hi > cap) {
      throw ContractViolation("'" + g.description() + "' never reaches " +
                              to_string(y) + " below " + to_string(cap) +
                              "; not unbounded?");
    }
  }
  while (hi - lo > 1) {
    Nat mid = (lo + hi) >> 1;
    (g(mid) < y ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

struct MonotoneSource::State {
  std::function<Nat(const Nat&)> fn;
  std::string description;
  Nat gallop_cap;
  std::mutex mutex;
  std::vector<Nat> steps;  // steps[k] = s_k; s_0 = 0
};

MonotoneSource::MonotoneSource(std::function<Nat(const Nat&)> fn,
                               std::string description)
    : state_(std::make_shared<State>()) {
  if (!fn) throw std::invalid_argument("MonotoneSource: null function");
  state_->fn = std::move(fn);
  state_->description = std::move(description);
  state_->gallop_cap = kDefaultGallopCap;
  state_->steps.emplace_back(0);
}

Nat MonotoneSource::operator()(const Nat& x) const { return state_->fn(x); }

const std::string& MonotoneSource::description() const {
  return state_->description;
}

Nat MonotoneSource::gallop_cap() const {
  std::lock_guard lock(state_->mutex);
  return state_->gallop_cap;
}

void MonotoneSource::set_gallop_cap(Nat cap) {
  if (cap < 1) throw std::invalid_argument("gallop cap must be >= 1");
  std::lock_guard lock(state_->mutex);
  state_->gallop_cap = std::move(cap);
}

Nat pseudo_inverse(const MonotoneSource& g, const Nat& y) {
  return pseudo_inverse_impl(g, y, g.gallop_cap());
}

Nat step_point(const MonotoneSource& g, std::uint64_t k) {
  auto& state = *g.state_;
  std::lock_guard lock(state.mutex);
  while (state.steps.size() <= k) {
    Nat above_last = g(state.steps.back()) + 1;
    state.steps.push_back(pseudo_inverse_impl(g, above_last, state.gallop_cap));
  }
  return state.steps[k];
}

Nat phi(const MonotoneSource& g, const Nat& x, const Nat& y) {
  if (y > g(x)) return y * pseudo_inverse(g, y) + x;
  return x * (g(x) + 1) + y;
}

std::pair<Nat, Nat> psi(const MonotoneSource& g, const Nat& z) {
  // Find the first shell whose image covers z: smallest m with
  // z < s_{m+1} * (g(s_m) + 1).
  std::uint64_t m = 0;
  while (z >= step_point(g, m + 1) * (g(step_point(g, m)) + 1)) ++m;
  const Nat sm = step_point(g, m);
  if (z < sm * (g(sm) + 1)) return {z % sm, z / sm};
  const Nat rows = g(sm) + 1;
  return {z / rows, z % rows};
}

std::uint64_t shell_index(const MonotoneSource& g, const Nat& x, const Nat& y) {
  std::uint64_t k = 0;
  while (x >= step_point(g, k + 1) || y > g(step_point(g, k))) ++k;
  return k;
}

ShellDescriptor describe_shell(const MonotoneSource& g, std::uint64_t k) {
  ShellDescriptor d;
  d.index = k;
  d.step_lo = step_point(g, k);
  d.step_hi = step_point(g, k + 1);
  d.g_at_step = g(d.step_lo);
  d.b_bound = d.step_hi * (d.g_at_step + 1);
  return d;
}

std::optional<Nat> find_monotonicity_break(const MonotoneSource& g,
                                           const Nat& limit) {
  Nat prev = g(0);
  for (Nat x = 1; x <= limit; ++x) {
    Nat cur = g(x);
    if (cur < prev) return x - 1;
    prev = std::move(cur);
  }
  return std::nullopt;
}

}  // namespace pairkit
