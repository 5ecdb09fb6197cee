#include "pairkit/verify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "pairkit/intmath.hpp"
#include "pairkit/monotone_pairing.hpp"
#include "pairkit/rosenberg_strong.hpp"
#include "pairkit/sfc.hpp"

namespace pairkit {

namespace {

std::string render_tuple(std::span<const Nat> point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += to_string(point[i]);
  }
  return out + ")";
}

// Visits the box lexicographically until fn returns a counterexample.
// Empty boxes (some bound zero) pass vacuously.
template <typename Fn>
CheckResult for_each_point(std::span<const Nat> bounds, Fn&& fn) {
  for (const Nat& b : bounds) {
    if (b <= 0) return std::nullopt;
  }
  std::vector<Nat> point(bounds.size(), Nat(0));
  while (true) {
    if (CheckResult r = fn(point)) return r;
    std::size_t axis = bounds.size();
    while (axis-- > 0) {
      if (++point[axis] < bounds[axis]) break;
      point[axis] = 0;
      if (axis == 0) return std::nullopt;
    }
  }
}

// Uniform draw from [0, bound) by rejection on whole 64-bit words; exact and
// reproducible across platforms, unlike distribution adapters.
Nat random_below(std::mt19937_64& rng, const Nat& bound) {
  if (bound <= 1) return Nat(0);
  const std::uint64_t bits = boost::multiprecision::msb(Nat(bound - 1)) + 1;
  while (true) {
    Nat value = 0;
    std::uint64_t filled = 0;
    while (filled < bits) {
      value = (value << 64) | rng();
      filled += 64;
    }
    value >>= (filled - bits);
    if (value < bound) return value;
  }
}

Nat box_volume(std::span<const Nat> bounds) {
  Nat v = 1;
  for (const Nat& b : bounds) v *= b;
  return v;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b,
                          const char* what) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::domain_error(std::string(what) + ": exponent overflow");
  }
  return a * b;
}

// Runs fn over the whole box when it is small enough, otherwise over the
// deterministic boundary-plus-random sample.
template <typename Fn>
CheckResult over_box_or_sample(std::span<const Nat> bounds,
                               std::span<const std::vector<Nat>> axis_extremes,
                               std::uint64_t budget, Fn&& fn) {
  if (box_volume(bounds) <= budget) {
    return for_each_point(bounds, fn);
  }
  for (const std::vector<Nat>& point :
       sample_box(bounds, axis_extremes, budget)) {
    if (CheckResult r = fn(point)) return r;
  }
  return std::nullopt;
}

// Extreme coordinate values for digit-length properties: 0 and every
// top-of-a-digit-length value n^j - 1 below the bound.
std::vector<Nat> length_extremes(std::uint64_t base, const Nat& bound) {
  std::vector<Nat> values{Nat(0)};
  for (Nat top = base - 1; top < bound; top = (top + 1) * base - 1) {
    values.push_back(top);
  }
  return values;
}

}  // namespace

std::vector<std::vector<Nat>> sample_box(
    std::span<const Nat> bounds,
    std::span<const std::vector<Nat>> axis_extremes, std::uint64_t budget,
    std::uint64_t seed) {
  if (bounds.size() != axis_extremes.size()) {
    throw std::invalid_argument("sample_box: one extreme list per axis");
  }
  for (const Nat& b : bounds) {
    if (b <= 0) return {};
  }
  std::vector<std::vector<Nat>> points;
  std::set<std::vector<Nat>> seen;
  const auto push = [&points, &seen](std::vector<Nat> point) {
    if (seen.insert(point).second) points.push_back(std::move(point));
  };

  // All combinations of per-axis extremes, lexicographically.
  std::vector<std::size_t> idx(bounds.size(), 0);
  while (true) {
    std::vector<Nat> point(bounds.size());
    bool in_box = true;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      point[i] = axis_extremes[i][idx[i]];
      in_box = in_box && point[i] < bounds[i];
    }
    if (in_box) push(std::move(point));
    std::size_t axis = bounds.size();
    bool done = true;
    while (axis-- > 0) {
      if (++idx[axis] < axis_extremes[axis].size()) {
        done = false;
        break;
      }
      idx[axis] = 0;
    }
    if (done) break;
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    std::vector<Nat> point(bounds.size());
    for (std::size_t axis = 0; axis < bounds.size(); ++axis) {
      point[axis] = random_below(rng, bounds[axis]);
    }
    push(std::move(point));
  }
  return points;
}

TuplerHandle TuplerHandle::from(const Proportions& p) {
  TuplerHandle h;
  h.label = "p(" + std::to_string(p.a()) + "," + std::to_string(p.b()) + ")";
  h.arity = 2;
  h.forward = [p](std::span<const Nat> point) {
    if (point.size() != 2) throw std::invalid_argument("pair: need 2 values");
    return p.pair(point[0], point[1]);
  };
  h.backward = [p](const Nat& z) {
    auto [x, y] = p.unpair(z);
    return std::vector<Nat>{std::move(x), std::move(y)};
  };
  return h;
}

TuplerHandle TuplerHandle::from(const CurveSpec& spec) {
  TuplerHandle h;
  h.label = spec.name();
  h.arity = spec.dim();
  h.forward = [spec](std::span<const Nat> point) { return spec.encode(point); };
  h.backward = [spec](const Nat& z) { return spec.decode(z); };
  return h;
}

TuplerHandle TuplerHandle::from(const MonotoneSource& g) {
  TuplerHandle h;
  h.label = "phi[" + g.description() + "]";
  h.arity = 2;
  h.forward = [g](std::span<const Nat> point) {
    if (point.size() != 2) throw std::invalid_argument("phi: need 2 values");
    return phi(g, point[0], point[1]);
  };
  h.backward = [g](const Nat& z) {
    auto [x, y] = psi(g, z);
    return std::vector<Nat>{std::move(x), std::move(y)};
  };
  return h;
}

TuplerHandle TuplerHandle::rs(std::size_t dim) {
  if (dim == 0) throw std::domain_error("rs: dimension must be >= 1");
  TuplerHandle h;
  h.label = "rs" + std::to_string(dim);
  h.arity = dim;
  h.forward = [](std::span<const Nat> point) { return rs_pair(point); };
  h.backward = [dim](const Nat& z) { return rs_unpair(dim, z); };
  return h;
}

CheckResult check_bijection(const TuplerHandle& t, const Nat& z_max) {
  if (!t.backward) {
    throw std::invalid_argument("check_bijection: handle has no backward");
  }
  std::map<std::vector<Nat>, Nat> decoded;
  for (Nat z = 0; z <= z_max; ++z) {
    std::vector<Nat> tuple = t.backward(z);
    const Nat again = t.forward(tuple);
    if (again != z) {
      Counterexample cex;
      cex.predicate = "round_trip";
      cex.inputs = {tuple};
      cex.observed = {z, again};
      cex.detail = t.label + ": backward(" + to_string(z) + ") = " +
                   render_tuple(tuple) + " but forward maps it to " +
                   to_string(again);
      return cex;
    }
    auto [it, fresh] = decoded.emplace(std::move(tuple), z);
    if (!fresh) {
      Counterexample cex;
      cex.predicate = "distinct_decodes";
      cex.inputs = {it->first};
      cex.observed = {it->second, z};
      cex.detail = t.label + ": " + to_string(it->second) + " and " +
                   to_string(z) + " both decode to " + render_tuple(it->first);
      return cex;
    }
  }
  return std::nullopt;
}

CheckResult check_base_n_perfect(const TuplerHandle& t, std::uint64_t base,
                                 std::uint64_t k_max, std::uint64_t budget) {
  if (base < 2) throw std::domain_error("check_base_n_perfect: base must be >= 2");
  const std::size_t d = t.arity;
  if (d == 0) throw std::invalid_argument("check_base_n_perfect: arity 0 handle");

  const Nat bound = ipow(base, k_max);
  const std::vector<Nat> bounds(d, bound);
  const std::vector<std::vector<Nat>> extremes(d, length_extremes(base, bound));

  const auto visit = [&](std::span<const Nat> point) -> CheckResult {
    std::uint64_t widest = 0;
    for (const Nat& c : point) widest = std::max(widest, len_base(base, c));
    const Nat code = t.forward(point);
    const std::uint64_t code_len = len_base(base, code);
    if (code_len <= d * widest) return std::nullopt;
    Counterexample cex;
    cex.predicate = "base_n_perfect";
    cex.inputs = {std::vector<Nat>(point.begin(), point.end())};
    cex.observed = {code, Nat(code_len), Nat(d * widest)};
    cex.detail = t.label + ": f" + render_tuple(point) + " = " +
                 to_string(code) + " has " + std::to_string(code_len) +
                 " base-" + std::to_string(base) + " digits, above the " +
                 std::to_string(d) + "*" + std::to_string(widest) +
                 " allowed";
    return cex;
  };
  return over_box_or_sample(bounds, extremes, budget, visit);
}

CheckResult check_proportional(const TuplerHandle& t, std::uint64_t base,
                               const Proportions& p, std::uint64_t k_max,
                               std::uint64_t budget) {
  if (base < 2) throw std::domain_error("check_proportional: base must be >= 2");
  if (t.arity != 2) {
    throw std::invalid_argument("check_proportional: needs a 2-ary handle");
  }
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const std::uint64_t xlen = checked_mul(p.a(), k, "a*k");
    const std::uint64_t ylen = checked_mul(p.b(), k, "b*k");
    const std::uint64_t out_len = xlen + ylen;
    const std::vector<Nat> bounds{ipow(base, xlen), ipow(base, ylen)};
    const std::vector<std::vector<Nat>> extremes{
        length_extremes(base, bounds[0]), length_extremes(base, bounds[1])};

    const auto visit = [&](std::span<const Nat> point) -> CheckResult {
      const Nat code = t.forward(point);
      const std::uint64_t code_len = len_base(base, code);
      if (code_len <= out_len) return std::nullopt;
      Counterexample cex;
      cex.predicate = "proportional";
      cex.inputs = {std::vector<Nat>(point.begin(), point.end())};
      cex.observed = {code, Nat(code_len), Nat(out_len), Nat(k)};
      cex.detail = t.label + ": with constants (" + std::to_string(p.a()) +
                   "," + std::to_string(p.b()) + ") at k=" + std::to_string(k) +
                   ", f" + render_tuple(point) + " = " + to_string(code) +
                   " has " + std::to_string(code_len) + " base-" +
                   std::to_string(base) + " digits, above " +
                   std::to_string(out_len);
      return cex;
    };
    if (CheckResult r = over_box_or_sample(bounds, extremes, budget, visit)) {
      return r;
    }
  }
  return std::nullopt;
}

CheckResult check_shell_numbering(
    const TuplerHandle& t,
    const std::function<Nat(std::span<const Nat>)>& shell,
    std::span<const Nat> box) {
  if (box.size() != t.arity) {
    throw std::invalid_argument("check_shell_numbering: box/arity mismatch");
  }
  if (!shell) {
    throw std::invalid_argument("check_shell_numbering: null shell function");
  }

  struct Extremes {
    Nat min_code, max_code;
    std::vector<Nat> min_point, max_point;
  };
  std::map<Nat, Extremes> shells;
  for_each_point(box, [&](std::span<const Nat> point) -> CheckResult {
    Nat s = shell(point);
    Nat code = t.forward(point);
    auto [it, fresh] = shells.try_emplace(std::move(s));
    Extremes& e = it->second;
    if (fresh || code < e.min_code) {
      e.min_code = code;
      e.min_point.assign(point.begin(), point.end());
    }
    if (fresh || code > e.max_code) {
      e.max_code = code;
      e.max_point.assign(point.begin(), point.end());
    }
    return std::nullopt;
  });

  // Codes from a lower shell must all sit below codes from any higher one;
  // with per-shell extremes this reduces to adjacent comparisons.
  const Extremes* prev = nullptr;
  const Nat* prev_shell = nullptr;
  for (const auto& [s, e] : shells) {
    if (prev != nullptr && prev->max_code >= e.min_code) {
      Counterexample cex;
      cex.predicate = "shell_numbering";
      cex.inputs = {prev->max_point, e.min_point};
      cex.observed = {*prev_shell, s, prev->max_code, e.min_code};
      cex.detail = t.label + ": s" + render_tuple(prev->max_point) + " = " +
                   to_string(*prev_shell) + " < s" + render_tuple(e.min_point) +
                   " = " + to_string(s) + " but f" +
                   render_tuple(prev->max_point) + " = " +
                   to_string(prev->max_code) + " >= f" +
                   render_tuple(e.min_point) + " = " + to_string(e.min_code);
      return cex;
    }
    prev = &e;
    prev_shell = &s;
  }
  return std::nullopt;
}

CheckResult check_base_n_shells(const TuplerHandle& t, std::uint64_t base,
                                std::span<const Nat> box) {
  if (base < 2) throw std::domain_error("check_base_n_shells: base must be >= 2");
  return check_shell_numbering(
      t,
      [base](std::span<const Nat> point) {
        std::uint64_t widest = 0;
        for (const Nat& c : point) {
          widest = std::max(widest, len_base(base, c));
        }
        return Nat(widest);
      },
      box);
}

}  // namespace pairkit
