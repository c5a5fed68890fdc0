#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "twaffine/fourier_motzkin.hpp"
#include "twaffine/functional.hpp"
#include "twaffine/shadow.hpp"

namespace twaffine {

class EmptyComponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- triangular decompositions ------------------------------------------

struct TriangularDecomp {
  std::vector<RootVector> positive, zero, negative;
};

inline TriangularDecomp triangular(const std::vector<RootVector>& s, const Functional& z) {
  TriangularDecomp t;
  for (const auto& v : s) {
    int sg = z.sign(v);
    (sg > 0 ? t.positive : sg < 0 ? t.negative : t.zero).push_back(v);
  }
  return t;
}

// --- dot parabolics -----------------------------------------------------

struct DotParabolic {
  int component = 1;
  std::vector<RootVector> members;  // sorted

  bool contains(const RootVector& v) const { return std::binary_search(members.begin(), members.end(), v); }
};

/// {a in dot R_0(i) : z(a) >= 0}
inline DotParabolic half_space(const RootSystem& rs, int i, const Functional& z) {
  DotParabolic p{i, {}};
  for (const auto& a : rs.dot_roots_0(i))
    if (z.sign(a) >= 0) p.members.push_back(a);
  return p;
}

inline bool is_proper(const RootSystem& rs, const DotParabolic& p) {
  return p.members.size() != rs.dot_roots_0(p.component).size();
}

/// Cover and closure on the finite set dot R_0(i).
inline Verdict is_parabolic(const RootSystem& rs, const DotParabolic& p) {
  Verdict v{"parabolic(" + std::to_string(p.component) + ")", 0, {}};
  const auto& all = rs.dot_roots_0(p.component);
  auto in_all = [&](const RootVector& x) { return std::binary_search(all.begin(), all.end(), x); };
  for (const auto& m : p.members)
    if (!in_all(m)) v.fail("subset of dot R0", to_string(m));
  for (const auto& a : all) {
    ++v.checks;
    if (!p.contains(a) && !p.contains(-a)) v.fail("P u -P covers", to_string(a));
  }
  for (const auto& a : p.members)
    for (const auto& b : p.members) {
      RootVector s = a + b;
      if (!in_all(s)) continue;
      ++v.checks;
      if (!p.contains(s)) v.fail("closed under sums", to_string(a) + " + " + to_string(b) + " = " + to_string(s));
    }
  return v;
}

/// dot P_i: dot roots of R_0(i) with some lift into P.
inline DotParabolic dot_parabolic_from_P(const Shadow& sh, int i) {
  const auto& rs = sh.roots();
  if (!rs.params().has_component(i))
    throw EmptyComponent("R0(" + std::to_string(i) + ") is empty for " + rs.params().instance_name());
  DotParabolic p{i, {}};
  for (const auto& a : rs.dot_roots_0(i)) {
    if (a.is_zero()) {
      p.members.push_back(a);
      continue;
    }
    // P is constant along classes
    if (sh.dot_in_P(a)) p.members.push_back(a);
  }
  return p;
}

/// (dot P_i + Z delta) n R_0(i) = P n R_0(i) on the window.
inline Verdict check_round_trip(const Shadow& sh, const DotParabolic& p, Coord mmax) {
  Verdict v{"round-trip(" + std::to_string(p.component) + ")", 0, {}};
  const auto& rs = sh.roots();
  for (const auto& r : rs.enumerate_window(mmax)) {
    if (!rs.in_even_component(p.component, r)) continue;
    ++v.checks;
    bool lhs = p.contains(dot_part(r));
    bool rhs = sh.in_P(r);
    if (lhs != rhs) v.fail("P_i recovered from dot P_i", to_string(r) + (rhs ? " is in P only" : " is in dot P_i + Z delta only"));
  }
  return v;
}

// --- functional synthesis -----------------------------------------------

/// The coordinates spanned by dot R_0(i): del for i = 1, eps for i = 2.
inline std::vector<BasisIndex> component_basis(const AlgebraParams& p, int i) {
  std::vector<BasisIndex> b;
  if (i == 1)
    for (int j = 1; j <= p.l; ++j) b.push_back(BasisIndex::del(j));
  else
    for (int r = 1; r <= p.k; ++r) b.push_back(BasisIndex::eps(r));
  return b;
}

inline Coord coordinate(const RootVector& v, const BasisIndex& b) {
  return b.kind == BasisIndex::Kind::Eps ? v.eps(b.index) : b.kind == BasisIndex::Kind::Del ? v.del(b.index) : v.dc();
}

/// Exact rational z_i with {a in dot R_0(i) : z_i(a) >= 0} = p. Strict
/// inequalities are solved as >= 1 (the system is homogeneous). Throws
/// Infeasible when no such functional exists.
inline Functional synthesize_functional(const RootSystem& rs, const DotParabolic& p) {
  const auto basis = component_basis(rs.params(), p.component);
  std::vector<fm::Inequality> sys;
  auto row = [&](const RootVector& a, int sign, int rhs) {
    fm::Inequality q{{}, rhs};
    for (const auto& b : basis) q.a.push_back(Rational(sign * coordinate(a, b)));
    sys.push_back(std::move(q));
  };
  for (const auto& a : rs.dot_roots_0(p.component)) {
    bool in = p.contains(a), neg_in = p.contains(-a);
    if (a.is_zero()) {
      if (!in) throw Infeasible("0 is not in the set, so it is not a half-space");
      continue;
    }
    if (in && neg_in) {
      row(a, 1, 0);
      row(a, -1, 0);
    } else if (in) {
      row(a, 1, 1);
    } else {
      row(a, -1, 1);
    }
  }
  auto x = fm::solve(sys, basis.size());
  if (!x) throw Infeasible("no functional realizes the given set in component " + std::to_string(p.component));
  Functional z(rs.ambient());
  for (std::size_t n = 0; n < basis.size(); ++n) {
    if (basis[n].kind == BasisIndex::Kind::Eps)
      z.eps(basis[n].index) = (*x)[n];
    else
      z.del(basis[n].index) = (*x)[n];
  }
  return z;
}

struct ExtendedZeta {
  Functional zeta;
  bool trivial = false;
};

/// z_1 (+) z_2 on span{eps, del, delta} with delta coefficient 0.
inline ExtendedZeta extend_zeta(const AlgebraParams& p, const Functional& z1, const std::optional<Functional>& z2) {
  Functional z(p.ambient());
  for (int j = 1; j <= p.l; ++j) z.del(j) = z1.del()[static_cast<std::size_t>(j - 1)];
  if (z2)
    for (int i = 1; i <= p.k; ++i) z.eps(i) = z2->eps()[static_cast<std::size_t>(i - 1)];
  z.delta() = 0;
  return {z, z.is_zero()};
}

inline void require_delta_free(const Functional& z) {
  if (z.delta() != 0) throw std::invalid_argument("functional must vanish on delta, got " + to_string(z));
}

/// z(a) > 0  <=>  a + S_a in R^ln and -a + S_-a in R^in, for every nonzero
/// real dot root a, on the window.
inline Verdict check_pos_criterion(const Shadow& sh, const Functional& z, Coord mmax) {
  require_delta_free(z);
  Verdict v{"pos-criterion", 0, {}};
  const auto& rs = sh.roots();
  for (const auto& a : rs.real_dot_roots()) {
    ++v.checks;
    bool lhs = z.sign(a) > 0;
    std::optional<RootVector> bad;
    ProgressionSet s = rs.s_set(a), sn = rs.s_set(-a);
    for (Coord n = -mmax; n <= mmax && !bad; ++n) {
      if (s.contains(n) && !sh.member_ln(a.with_dc(n))) bad = a.with_dc(n);
      if (!bad && sn.contains(n) && !sh.member_in((-a).with_dc(n))) bad = (-a).with_dc(n);
    }
    bool rhs = !bad;
    if (lhs && !rhs) v.fail("zeta(a) > 0 implies the ln/in split", to_string(a) + ": " + to_string(*bad) + " breaks it");
    if (!lhs && rhs) v.fail("the ln/in split implies zeta(a) > 0", to_string(a) + " has zeta = " + rational_short(z(a)));
  }
  return v;
}

// --- generators ----------------------------------------------------------

struct PiSet {
  Coord r = 1;
  std::vector<RootVector> phi_real, phi_full, phi_plus, pi;  // sorted
  bool variants_differ = false;
  Verdict equal_check{"eq-equal", 0, {}};
};

/// Phi (real and full variants), Phi^+ and its indecomposables Pi, plus the
/// window check of R^x = U_{a in Phi_full} (a + r Z delta).
inline PiSet phi_pi(const RootSystem& rs, const Functional& z, Coord mmax = 8) {
  require_delta_free(z);
  PiSet out;
  out.r = rs.r_invariants().global_r;
  for (const auto& a : rs.dot_roots()) {
    if (a.is_zero()) continue;
    ProgressionSet s = rs.s_set(a);
    bool real = form(a, a) != 0;
    for (Coord k : s.residues_mod(out.r)) {
      out.phi_full.push_back(a.with_dc(k));
      if (real) out.phi_real.push_back(a.with_dc(k));
    }
  }
  std::sort(out.phi_full.begin(), out.phi_full.end());
  std::sort(out.phi_real.begin(), out.phi_real.end());
  out.variants_differ = out.phi_full != out.phi_real;
  for (const auto& f : out.phi_real)
    if (z.sign(f) > 0) out.phi_plus.push_back(f);
  std::unordered_set<RootVector> sums;
  for (const auto& b : out.phi_plus)
    for (const auto& c : out.phi_plus) sums.insert(b + c);
  for (const auto& f : out.phi_plus)
    if (!sums.count(f)) out.pi.push_back(f);

  auto& v = out.equal_check;
  std::set<std::pair<RootVector, Coord>> cover;
  for (const auto& f : out.phi_full) cover.insert({dot_part(f), ((f.dc() % out.r) + out.r) % out.r});
  for (const auto& r : rs.enumerate_window(mmax)) {
    if (r.dot_is_zero()) continue;
    ++v.checks;
    if (!cover.count({dot_part(r), ((r.dc() % out.r) + out.r) % out.r}))
      v.fail("every non-imaginary root lies in some Phi + r Z delta", to_string(r));
  }
  for (const auto& f : out.phi_full)
    for (Coord m = -mmax; m <= mmax; ++m) {
      RootVector x = f.with_dc(f.dc() + m * out.r);
      if (std::abs(x.dc()) > mmax) continue;
      ++v.checks;
      if (!rs.is_root(x)) v.fail("Phi + r Z delta consists of roots", to_string(x));
    }
  return out;
}

/// Nonnegative integer coefficients over Pi summing to b exactly. Depth-first
/// search on zeta-descent with memoized dead ends. Throws NoDecompositionFound.
inline std::vector<Coord> decompose_over_pi(const RootVector& b, const PiSet& ps, const Functional& z) {
  if (!std::binary_search(ps.phi_plus.begin(), ps.phi_plus.end(), b))
    throw std::invalid_argument(to_string(b) + " is not in Phi^+");
  std::vector<Coord> t(ps.pi.size(), 0);
  std::unordered_set<RootVector> dead;
  auto dfs = [&](auto&& self, const RootVector& res) -> bool {
    if (res.is_zero()) return true;
    if (z.sign(res) <= 0 || dead.count(res)) return false;
    for (std::size_t n = 0; n < ps.pi.size(); ++n) {
      ++t[n];
      if (self(self, res - ps.pi[n])) return true;
      --t[n];
    }
    dead.insert(res);
    return false;
  };
  if (!dfs(dfs, b)) throw NoDecompositionFound("no decomposition of " + to_string(b) + " over Pi");
  return t;
}

/// Every element of Phi^+ decomposes over Pi and the coefficients reproduce it.
inline Verdict check_pi_decomposition(const PiSet& ps, const Functional& z) {
  Verdict v{"pi-decomposition", 0, {}};
  for (const auto& b : ps.phi_plus) {
    ++v.checks;
    try {
      auto t = decompose_over_pi(b, ps, z);
      RootVector sum = RootVector::zero(b.ambient());
      for (std::size_t n = 0; n < t.size(); ++n) sum = sum + t[n] * ps.pi[n];
      if (sum != b) v.fail("coefficients reproduce the root", to_string(b));
    } catch (const NoDecompositionFound& e) {
      v.fail("decomposes over Pi", e.what());
    }
  }
  return v;
}

// --- end-to-end ----------------------------------------------------------

struct PipelineResult {
  Verdict verdict{"pipeline", 0, {}};
  std::vector<DotParabolic> parabolics;
  std::vector<Functional> zetas;
  std::optional<ExtendedZeta> zeta;
};

/// validate -> check_P -> dot P_i -> parabolic -> synthesis -> extension ->
/// pos criterion, collecting every failure.
inline PipelineResult run_pipeline(const Shadow& sh, Coord mmax) {
  PipelineResult out;
  auto& v = out.verdict;
  const auto& rs = sh.roots();
  const auto& p = rs.params();
  auto step = [&](const Verdict& w) {
    v.absorb(w);
    return w.ok();
  };
  if (!step(sh.validate())) return out;
  step(sh.check_P(mmax));
  bool any_proper = false;
  std::optional<Functional> z1, z2;
  for (int i = 1; i <= 2; ++i) {
    if (!p.has_component(i)) continue;
    DotParabolic dp = dot_parabolic_from_P(sh, i);
    out.parabolics.push_back(dp);
    step(check_round_trip(sh, dp, mmax));
    ++v.checks;
    if (!step(is_parabolic(rs, dp))) continue;
    any_proper = any_proper || is_proper(rs, dp);
    try {
      Functional zi = synthesize_functional(rs, dp);
      ++v.checks;
      if (half_space(rs, i, zi).members != dp.members)
        v.fail("synthesized functional recovers dot P_" + std::to_string(i), to_string(zi));
      out.zetas.push_back(zi);
      (i == 1 ? z1 : z2) = zi;
    } catch (const Infeasible& e) {
      v.fail("synthesis", e.what());
    }
  }
  ++v.checks;
  if (!any_proper) v.fail("some dot P_i is proper", "all dot P_i are improper");
  if (z1) {
    out.zeta = extend_zeta(p, *z1, z2);
    ++v.checks;
    if (out.zeta->trivial) v.fail("extended zeta is nonzero", "zeta = 0");
    step(check_pos_criterion(sh, out.zeta->zeta, mmax));
  }
  return out;
}

}  // namespace twaffine
