#pragma once

// Test-only oracles. The root tables are re-typed here as explicit loops over
// indices and signs, independent of the clause/shape machinery in the library.

#include <functional>
#include <set>

#include "twaffine/family.hpp"
#include "twaffine/lattice.hpp"

namespace oracle {

using twaffine::AffineFamily;
using twaffine::AlgebraParams;
using twaffine::Ambient;
using twaffine::Coord;
using twaffine::RootVector;

using Pred = std::function<bool(Coord)>;

inline bool mod_is(Coord m, Coord r, Coord k) { return ((m % r) + r) % r == k; }

struct Builder {
  Ambient a;
  Coord mmax;
  std::set<RootVector> out;

  void put(const RootVector& dot, const Pred& ok) {
    for (Coord m = -mmax; m <= mmax; ++m)
      if (ok(m)) out.insert(dot.with_dc(m));
  }
  RootVector e(int i) const { return RootVector::eps(a, i); }
  RootVector d(int j) const { return RootVector::del(a, j); }

  void imaginary(const Pred& ok) { put(RootVector::zero(a), ok); }
  void pm_eps(const Pred& ok) {
    for (int i = 1; i <= a.k; ++i) put(e(i), ok), put(-e(i), ok);
  }
  void pm_del(const Pred& ok) {
    for (int j = 1; j <= a.l; ++j) put(d(j), ok), put(-d(j), ok);
  }
  void pm_two_eps(const Pred& ok) {
    for (int i = 1; i <= a.k; ++i) put(2 * e(i), ok), put(-2 * e(i), ok);
  }
  void pm_two_del(const Pred& ok) {
    for (int j = 1; j <= a.l; ++j) put(2 * d(j), ok), put(-2 * d(j), ok);
  }
  // +-(x +- y) over ordered pairs with distinct indices
  void eps_eps(const Pred& ok) {
    for (int i = 1; i <= a.k; ++i)
      for (int r = 1; r <= a.k; ++r)
        if (i != r)
          for (Coord s : {1, -1}) put(e(i) + s * e(r), ok), put(-(e(i) + s * e(r)), ok);
  }
  void del_del(const Pred& ok) {
    for (int j = 1; j <= a.l; ++j)
      for (int s = 1; s <= a.l; ++s)
        if (j != s)
          for (Coord t : {1, -1}) put(d(j) + t * d(s), ok), put(-(d(j) + t * d(s)), ok);
  }
  void eps_del(const Pred& ok) {
    for (int i = 1; i <= a.k; ++i)
      for (int j = 1; j <= a.l; ++j)
        for (Coord t : {1, -1}) put(e(i) + t * d(j), ok), put(-(e(i) + t * d(j)), ok);
  }
};

inline const Pred all = [](Coord) { return true; };
inline const Pred even = [](Coord m) { return mod_is(m, 2, 0); };
inline const Pred odd = [](Coord m) { return mod_is(m, 2, 1); };
inline const Pred four0 = [](Coord m) { return mod_is(m, 4, 0); };
inline const Pred four2 = [](Coord m) { return mod_is(m, 4, 2); };

/// The root system on the window |dc| <= mmax.
inline std::set<RootVector> roots(const AlgebraParams& p, Coord mmax) {
  Builder b{p.ambient(), mmax, {}};
  switch (p.family) {
    case AffineFamily::AEven2:
      b.imaginary(all);
      b.pm_eps(all), b.pm_del(all), b.eps_eps(all), b.del_del(all), b.eps_del(all);
      b.pm_two_eps(odd);
      b.pm_two_del(even);
      break;
    case AffineFamily::AOdd2:
      b.imaginary(all);
      b.eps_eps(all), b.del_del(all), b.eps_del(all);
      b.pm_two_eps(odd);
      b.pm_two_del(even);
      break;
    case AffineFamily::A4:
      b.imaginary(all);
      b.pm_eps(all), b.pm_del(all);
      b.eps_eps(even), b.del_del(even), b.eps_del(even);
      b.pm_two_eps(four2);
      b.pm_two_del(four0);
      break;
    case AffineFamily::D2:
      b.imaginary(all);
      b.pm_eps(all), b.pm_del(all);
      b.pm_two_del(even), b.eps_eps(even), b.del_del(even), b.eps_del(even);
      break;
  }
  return b.out;
}

/// Even component R_0(i) on the window.
inline std::set<RootVector> even_component(const AlgebraParams& p, int i, Coord mmax) {
  Builder b{p.ambient(), mmax, {}};
  if (i == 2 && p.k == 0) return {};
  switch (p.family) {
    case AffineFamily::AEven2:
      if (i == 1) {
        b.imaginary(p.l == 1 ? even : all);
        b.del_del(all);
        b.pm_two_del(even);
      } else {
        b.imaginary(all);
        b.pm_eps(all), b.eps_eps(all);
        b.pm_two_eps(odd);
      }
      break;
    case AffineFamily::AOdd2:
      if (i == 1) {
        b.imaginary(p.l == 1 ? even : all);
        b.del_del(all);
        b.pm_two_del(even);
      } else {
        b.imaginary(p.k == 1 ? even : all);
        b.eps_eps(all);
        b.pm_two_eps(odd);
      }
      break;
    case AffineFamily::A4:
      if (i == 1) {
        b.imaginary(even);
        b.pm_del(odd);
        b.del_del(even);
        b.pm_two_del(four0);
      } else {
        b.imaginary(even);
        b.pm_eps(even);
        b.eps_eps(even);
        b.pm_two_eps(four2);
      }
      break;
    case AffineFamily::D2:
      if (i == 1) {
        b.imaginary(even);
        b.del_del(even);
        b.pm_two_del(even);  // j = s
      } else {
        b.imaginary(all);
        b.pm_eps(all);
        b.eps_eps(even);
      }
      break;
  }
  return b.out;
}

/// Brute force: every integer vector with coordinates in [-2, 2] and
/// |dc| <= mmax that satisfies `member`.
template <class Member>
std::set<RootVector> brute_force(Ambient a, Coord mmax, Member&& member) {
  std::set<RootVector> out;
  const int n = a.k + a.l;
  std::vector<Coord> c(static_cast<std::size_t>(n), -2);
  for (;;) {
    std::vector<Coord> e(c.begin(), c.begin() + a.k), d(c.begin() + a.k, c.end());
    for (Coord m = -mmax; m <= mmax; ++m) {
      RootVector v(e, d, m);
      if (member(v)) out.insert(v);
    }
    int pos = 0;
    while (pos < n && c[static_cast<std::size_t>(pos)] == 2) c[static_cast<std::size_t>(pos++)] = -2;
    if (pos == n) break;
    ++c[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace oracle
