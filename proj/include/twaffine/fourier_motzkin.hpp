#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "twaffine/functional.hpp"

namespace twaffine::fm {

/// a . x >= b
struct Inequality {
  std::vector<Rational> a;
  Rational b;

  friend auto operator<=>(const Inequality& x, const Inequality& y) {
    if (auto c = std::lexicographical_compare_three_way(x.a.begin(), x.a.end(), y.a.begin(), y.a.end(),
                                                        [](const Rational& p, const Rational& q) {
                                                          return p < q ? std::strong_ordering::less
                                                                 : q < p ? std::strong_ordering::greater
                                                                         : std::strong_ordering::equal;
                                                        });
        c != 0)
      return c;
    return x.b < y.b ? std::strong_ordering::less : y.b < x.b ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend bool operator==(const Inequality& x, const Inequality& y) { return x.a == y.a && x.b == y.b; }
};

/// Scale so the first nonzero coefficient has absolute value 1.
inline Inequality normalized(Inequality q) {
  for (const auto& c : q.a)
    if (c != 0) {
      Rational s = c < 0 ? Rational(-c) : c;
      for (auto& x : q.a) x /= s;
      q.b /= s;
      return q;
    }
  return q;
}

/// Picks the value of smallest magnitude in [lo, hi], preferring integers.
inline Rational pick_value(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  auto ok = [&](const Rational& x) { return (!lo || x >= *lo) && (!hi || x <= *hi); };
  if (ok(0)) return 0;
  if (lo && *lo > 0) {
    Rational c = Rational(numerator(*lo) / denominator(*lo) + (numerator(*lo) % denominator(*lo) != 0 ? 1 : 0));
    return ok(c) ? c : *lo;
  }
  Rational f = Rational(numerator(*hi) / denominator(*hi) - (numerator(*hi) % denominator(*hi) != 0 ? 1 : 0));
  return ok(f) ? f : *hi;
}

/// Solves the system exactly by Fourier-Motzkin elimination. Returns a
/// feasible point (chosen variable by variable in index order, each with the
/// smallest magnitude allowed by the earlier choices) or nullopt.
inline std::optional<std::vector<Rational>> solve(const std::vector<Inequality>& system, std::size_t nvars) {
  for (const auto& q : system)
    if (q.a.size() != nvars) throw std::invalid_argument("inequality has the wrong number of variables");
  // stages[j] involves only variables 0..j-1
  std::vector<std::vector<Inequality>> stages(nvars + 1);
  {
    std::set<Inequality> s;
    for (const auto& q : system) s.insert(normalized(q));
    stages[nvars].assign(s.begin(), s.end());
  }
  for (std::size_t j = nvars; j-- > 0;) {
    std::vector<Inequality> pos, neg;
    std::set<Inequality> next;
    for (const auto& q : stages[j + 1]) {
      if (q.a[j] > 0)
        pos.push_back(q);
      else if (q.a[j] < 0)
        neg.push_back(q);
      else
        next.insert(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rational sp = p.a[j], sn = -n.a[j];
        Inequality c{std::vector<Rational>(nvars), p.b / sp + n.b / sn};
        for (std::size_t v = 0; v < nvars; ++v) c.a[v] = p.a[v] / sp + n.a[v] / sn;
        c.a[j] = 0;
        next.insert(normalized(c));
      }
    stages[j].assign(next.begin(), next.end());
  }
  for (const auto& q : stages[0])
    if (q.b > 0) return std::nullopt;

  std::vector<Rational> x(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    std::optional<Rational> lo, hi;
    for (const auto& q : stages[j + 1]) {
      if (q.a[j] == 0) continue;
      Rational rest = q.b;
      for (std::size_t v = 0; v < j; ++v) rest -= q.a[v] * x[v];
      Rational bound = rest / q.a[j];
      if (q.a[j] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) return std::nullopt;
    x[j] = pick_value(lo, hi);
  }
  for (const auto& q : system) {
    Rational s = 0;
    for (std::size_t v = 0; v < nvars; ++v) s += q.a[v] * x[v];
    if (s < q.b) throw std::logic_error("Fourier-Motzkin back-substitution produced an infeasible point");
  }
  return x;
}

}  // namespace twaffine::fm
