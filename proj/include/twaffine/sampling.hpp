#pragma once

// Seeded generators for functionals and shadow configurations, and the
// adversarial mutations used to test the validators.

#include <optional>
#include <random>
#include <string>

#include "twaffine/functional.hpp"
#include "twaffine/shadow.hpp"

namespace twaffine {

using Rng = std::mt19937_64;

inline Coord uniform(Rng& rng, Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); }

/// Random rational functional with delta coefficient 0. Each coefficient is
/// zero with probability `zero_bias`, otherwise p/q with 1 <= |p| <= 6, 1 <= q <= 4.
inline Functional random_functional(Rng& rng, Ambient a, double zero_bias = 0.2) {
  Functional z(a);
  std::bernoulli_distribution zero(zero_bias);
  auto draw = [&]() -> Rational {
    if (zero(rng)) return 0;
    Coord p = uniform(rng, 1, 6) * (uniform(rng, 0, 1) ? 1 : -1);
    return Rational(p, uniform(rng, 1, 4));
  };
  for (int i = 1; i <= a.k; ++i) z.eps(i) = draw();
  for (int j = 1; j <= a.l; ++j) z.del(j) = draw();
  return z;
}

inline HybridProfile random_profile(Rng& rng, Coord mmax) {
  HybridProfile p;
  p.hcase = uniform(rng, 0, 1) ? HybridCase::III : HybridCase::IV;
  p.m = uniform(rng, -mmax / 2, mmax / 2);
  p.t = static_cast<int>(uniform(rng, -1, 1));
  return p;
}

/// Sign of v under the lexicographic order (z1, z2).
inline int lex_sign(const Functional& z1, const std::optional<Functional>& z2, const RootVector& v) {
  int s = z1.sign(v);
  if (s != 0 || !z2) return s;
  return z2->sign(v);
}

/// Config seeded from functionals: positive classes FullLN, negative classes
/// FullIN, and zero classes Hybrid with a profile drawn for the larger member
/// of each +- pair and mirrored onto the other.
inline ShadowConfig config_from_functionals(const RootSystem& rs, const Functional& z1,
                                            const std::optional<Functional>& z2, Rng& rng, Coord mmax) {
  ShadowConfig cfg{rs.params(), {}};
  for (const auto& d : rs.real_dot_roots()) {
    if (d < -d) continue;
    int s = lex_sign(z1, z2, d);
    if (s > 0) {
      cfg.states.emplace(d, ClassState::full_ln());
      cfg.states.emplace(-d, ClassState::full_in());
    } else if (s < 0) {
      cfg.states.emplace(d, ClassState::full_in());
      cfg.states.emplace(-d, ClassState::full_ln());
    } else {
      auto p = random_profile(rng, mmax);
      cfg.states.emplace(d, ClassState::hybrid(p));
      cfg.states.emplace(-d, ClassState::hybrid(p.mirrored()));
    }
  }
  return cfg;
}

struct SampledConfig {
  ShadowConfig cfg;
  Functional z1;
  std::optional<Functional> z2;
  int attempts = 0;
};

/// Draws functionals until the seeded config is tight and meets the
/// nonempty-proper hypothesis on the window. Returns nullopt after
/// `max_attempts` failures.
inline std::optional<SampledConfig> sample_tight_config(const RootSystem& rs, Rng& rng, Coord mmax,
                                                        int max_attempts = 200) {
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    Functional z1 = random_functional(rng, rs.ambient(), 0.35);
    std::optional<Functional> z2;
    if (uniform(rng, 0, 1)) z2 = random_functional(rng, rs.ambient(), 0.35);
    auto cfg = config_from_functionals(rs, z1, z2, rng, mmax);
    Shadow sh(cfg, std::shared_ptr<const RootSystem>(&rs, [](const RootSystem*) {}));
    if (!sh.is_tight() || !sh.validate().ok() || !sh.hypothesis_main2(mmax).ok()) continue;
    return SampledConfig{std::move(cfg), std::move(z1), std::move(z2), attempt};
  }
  return std::nullopt;
}

enum class MutationKind { BreakSymmetry, BreakDoubling, BreakClosure };

inline std::string_view to_string(MutationKind k) {
  switch (k) {
    case MutationKind::BreakSymmetry:
      return "break-symmetry";
    case MutationKind::BreakDoubling:
      return "break-doubling";
    case MutationKind::BreakClosure:
      break;
  }
  return "break-closure";
}

struct Mutant {
  ShadowConfig cfg;
  MutationKind kind;
  std::string description;
};

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(xs.size()) - 1))];
}

/// Make one class hybrid and give its negative a state that disagrees.
inline std::optional<Mutant> mutate_symmetry(const RootSystem& rs, const ShadowConfig& base, Rng& rng, Coord mmax) {
  auto real = rs.real_dot_roots();
  if (real.empty()) return std::nullopt;
  RootVector d = pick(rng, real);
  ShadowConfig cfg = base;
  HybridProfile p = random_profile(rng, mmax);
  cfg.states[d] = ClassState::hybrid(p);
  std::string what;
  switch (uniform(rng, 0, 2)) {
    case 0:
      cfg.states[-d] = ClassState::full_ln();
      break;
    case 1:
      cfg.states[-d] = ClassState::full_in();
      break;
    default: {
      // shift the boundary of the mirrored profile by one step of the class
      HybridProfile q = p.mirrored();
      q.m += rs.s_set(-d).modulus();
      cfg.states[-d] = ClassState::hybrid(q);
    }
  }
  what = to_string(d) + " -> " + to_string(cfg.states[d]) + ", " + to_string(-d) + " -> " + to_string(cfg.states[-d]);
  return Mutant{std::move(cfg), MutationKind::BreakSymmetry, what};
}

/// For a class with odd roots and a full state, give its double the opposite
/// full state.
inline std::optional<Mutant> mutate_doubling(const RootSystem& rs, const ShadowConfig& base, Rng& rng) {
  std::vector<RootVector> cands;
  for (const auto& d : rs.real_dot_roots()) {
    if (!rs.is_dot_root(2 * d)) continue;
    ProgressionSet s = rs.s_set(d);
    bool odd = false;
    for (Coord n = 0; n < s.modulus(); ++n) odd = odd || (s.contains(n) && !rs.is_even_root(d.with_dc(n)));
    if (odd) cands.push_back(d);
  }
  if (cands.empty()) return std::nullopt;
  RootVector d = pick(rng, cands);
  ShadowConfig cfg = base;
  bool ln = uniform(rng, 0, 1);
  cfg.states[d] = ln ? ClassState::full_ln() : ClassState::full_in();
  cfg.states[-d] = ln ? ClassState::full_in() : ClassState::full_ln();
  cfg.states[2 * d] = ln ? ClassState::full_in() : ClassState::full_ln();
  cfg.states[-2 * d] = ln ? ClassState::full_ln() : ClassState::full_in();
  return Mutant{std::move(cfg), MutationKind::BreakDoubling,
                to_string(d) + " -> " + to_string(cfg.states[d]) + ", " + to_string(2 * d) + " -> " +
                    to_string(cfg.states[2 * d])};
}

/// Pick classes u, v in P whose sum w is a real class reachable inside the
/// window, then force w out of P (w full_in, -w full_ln).
inline std::optional<Mutant> mutate_closure(const RootSystem& rs, const ShadowConfig& base, Rng& rng, Coord mmax) {
  Shadow sh(base, std::shared_ptr<const RootSystem>(&rs, [](const RootSystem*) {}));
  auto real = rs.real_dot_roots();
  std::vector<std::pair<RootVector, RootVector>> cands;
  for (const auto& u : real)
    for (const auto& v : real) {
      RootVector w = u + v;
      if (w.is_zero() || !std::binary_search(real.begin(), real.end(), w)) continue;
      if (w == u || w == v || w == -u || w == -v) continue;
      if (!sh.dot_in_P(u) || !sh.dot_in_P(v)) continue;
      ProgressionSet reach = intersection(minkowski_sum(rs.s_set(u), rs.s_set(v)), rs.s_set(w));
      bool hit = false;
      for (Coord n = -mmax / 2; n <= mmax / 2 && !hit; ++n) hit = reach.contains(n);
      if (hit) cands.emplace_back(u, v);
    }
  if (cands.empty()) return std::nullopt;
  auto [u, v] = pick(rng, cands);
  RootVector w = u + v;
  ShadowConfig cfg = base;
  cfg.states[w] = ClassState::full_in();
  cfg.states[-w] = ClassState::full_ln();
  return Mutant{std::move(cfg), MutationKind::BreakClosure,
                to_string(u) + " + " + to_string(v) + " = " + to_string(w) + " forced full_in"};
}

}  // namespace twaffine
