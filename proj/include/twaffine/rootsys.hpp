#pragma once

// Root membership, classification and the structural checks for one
// twisted affine family with fixed (k, l).

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "twaffine/family.hpp"
#include "twaffine/lattice.hpp"
#include "twaffine/progression.hpp"
#include "twaffine/verdict.hpp"

namespace twaffine {

enum class RootClass { Real, Imaginary, Nonsingular };
enum class Parity { Even, Odd };
enum class Component { InR0_1, InR0_2, OddPart, ImaginaryOnly };

inline std::string_view to_string(RootClass c) {
  switch (c) {
    case RootClass::Real: return "real";
    case RootClass::Imaginary: return "imaginary";
    case RootClass::Nonsingular: return "nonsingular";
  }
  return "?";
}

inline std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline std::string_view to_string(Component c) {
  switch (c) {
    case Component::InR0_1: return "R0(1)";
    case Component::InR0_2: return "R0(2)";
    case Component::OddPart: return "odd";
    case Component::ImaginaryOnly: return "imaginary";
  }
  return "?";
}

/// Parity is left unset for imaginary roots: the even/odd split of the
/// imaginary root spaces is not determined by the root data.
struct RootInfo {
  RootClass cls = RootClass::Real;
  std::optional<Parity> parity;
  Component component = Component::OddPart;
  friend bool operator==(const RootInfo&, const RootInfo&) = default;
};

class NotARoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotADotRoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ClassificationDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoDecompositionFound : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Syntactic class carried by a clause shape.
inline RootClass clause_class(DotKind k) {
  switch (k) {
    case DotKind::Zero: return RootClass::Imaginary;
    case DotKind::EpsPmDel: return RootClass::Nonsingular;
    default: return RootClass::Real;
  }
}

/// A table row compiled to a lookup from dot shape to the union of the
/// progressions attached to that shape.
class CompiledRow {
 public:
  CompiledRow() = default;
  explicit CompiledRow(const TableRow& row) {
    for (const auto& c : row) {
      auto& slot = by_kind_[static_cast<std::size_t>(c.kind)];
      slot = set_union(slot, c.progression);
    }
  }

  const ProgressionSet& progression(DotKind k) const { return by_kind_[static_cast<std::size_t>(k)]; }

  ProgressionSet progression(const RootVector& dot) const {
    auto k = dot_kind(dot);
    return k ? progression(*k) : ProgressionSet{};
  }

  bool contains(const RootVector& v) const {
    auto k = dot_kind(v);
    return k && progression(*k).contains(v.dc());
  }

 private:
  std::array<ProgressionSet, kAllDotKinds.size()> by_kind_{};
};

struct RInvariants {
  struct Entry {
    RootVector dot;
    Coord r = 1;  // minimal modulus of S
    Coord k = 0;  // its residue
    std::vector<Coord> residues_mod_global;  // S re-expressed modulo the global r
  };
  Coord global_r = 1;
  std::vector<Entry> entries;
};

/// Witnesses for writing a nonsingular dot root as a sum of two pieces whose
/// even multiples sit inside the even real roots.
struct NsDecomposition {
  RootVector alpha;
  RootVector beta;
  int kfactor = 2;
  Coord r_eta = 1;
};

enum class LengthPattern { EqualShorterThanSum, SumEqualsShorter, AllEqual };

class RootSystem {
 public:
  explicit RootSystem(AlgebraParams p)
      : params_(p),
        ambient_(p.ambient()),
        roots_(tables::roots(p)),
        comp_{CompiledRow(tables::even_component(p, 1)), CompiledRow(tables::even_component(p, 2))} {
    p.validate();
    for (DotKind k : tables::dot_roots(p))
      for (auto& v : dot_kind_members(k, ambient_)) dots_.push_back(v);
    std::sort(dots_.begin(), dots_.end());
    dots_.erase(std::unique(dots_.begin(), dots_.end()), dots_.end());
    dot_set_.insert(dots_.begin(), dots_.end());
    for (int i = 1; i <= 2; ++i) {
      auto& out = dots0_[static_cast<std::size_t>(i - 1)];
      for (DotKind k : tables::dot_roots_0(p, i))
        for (auto& v : dot_kind_members(k, ambient_)) out.push_back(v);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  }

  const AlgebraParams& params() const { return params_; }
  Ambient ambient() const { return ambient_; }

  void require_ambient(const RootVector& v) const {
    if (v.ambient() != ambient_) {
      std::ostringstream os;
      os << "ambient mismatch: vector has (k,l)=(" << v.ambient().k << "," << v.ambient().l << "), params have ("
         << ambient_.k << "," << ambient_.l << ")";
      throw AmbientMismatch(os.str());
    }
  }

  // --- membership -------------------------------------------------------

  bool is_root(const RootVector& v) const {
    require_ambient(v);
    return roots_.contains(v);
  }

  bool in_even_component(int i, const RootVector& v) const {
    require_ambient(v);
    return component_row(i).contains(v);
  }

  bool is_even_root(const RootVector& v) const { return in_even_component(1, v) || in_even_component(2, v); }

  /// Class read off from the matched clause, or nullopt if v is not a root.
  std::optional<RootClass> syntactic_class(const RootVector& v) const {
    if (!is_root(v)) return std::nullopt;
    return clause_class(*dot_kind(v));
  }

  /// Class computed from the form: (v,v) != 0 is real; v orthogonal to the
  /// whole (full-rank) root span is imaginary; otherwise nonsingular.
  RootClass metric_class(const RootVector& v) const {
    require_ambient(v);
    if (form(v, v) != 0) return RootClass::Real;
    bool radical = true;
    for (int i = 1; i <= ambient_.k && radical; ++i) radical = form(v, RootVector::eps(ambient_, i)) == 0;
    for (int j = 1; j <= ambient_.l && radical; ++j) radical = form(v, RootVector::del(ambient_, j)) == 0;
    return radical ? RootClass::Imaginary : RootClass::Nonsingular;
  }

  RootInfo classify(const RootVector& v) const {
    if (v.is_zero()) throw std::invalid_argument("classify: the zero vector is handled separately");
    auto syn = syntactic_class(v);
    if (!syn) throw NotARoot("not a root of " + params_.instance_name() + ": " + to_string(v));
    RootClass met = metric_class(v);
    if (*syn != met)
      throw ClassificationDisagreement("syntactic class " + std::string(twaffine::to_string(*syn)) + " vs metric class " +
                                       std::string(twaffine::to_string(met)) + " for " + to_string(v));
    RootInfo info;
    info.cls = met;
    if (met == RootClass::Imaginary) {
      info.component = Component::ImaginaryOnly;
      return info;
    }
    if (in_even_component(1, v)) {
      info.component = Component::InR0_1;
      info.parity = Parity::Even;
    } else if (in_even_component(2, v)) {
      info.component = Component::InR0_2;
      info.parity = Parity::Even;
    } else {
      info.component = Component::OddPart;
      info.parity = Parity::Odd;
    }
    return info;
  }

  // --- finite data ------------------------------------------------------

  /// Dot roots in canonical order, including 0.
  const std::vector<RootVector>& dot_roots() const { return dots_; }
  bool is_dot_root(const RootVector& v) const { return v.dc() == 0 && dot_set_.count(v) > 0; }

  /// Dot roots of R_0(i), including 0; empty when the component is empty.
  const std::vector<RootVector>& dot_roots_0(int i) const {
    check_component_index(i);
    return dots0_[static_cast<std::size_t>(i - 1)];
  }

  std::vector<RootVector> real_dot_roots() const { return dots_with_class(RootClass::Real); }
  std::vector<RootVector> nonsingular_dot_roots() const { return dots_with_class(RootClass::Nonsingular); }

  /// Roots with |dc| <= mmax in canonical (dc, eps, del) order.
  std::vector<RootVector> enumerate_window(Coord mmax) const {
    if (mmax < 0) throw std::invalid_argument("window bound must be nonnegative");
    std::vector<RootVector> out;
    for (const auto& d : dots_) {
      const ProgressionSet& s = roots_.progression(*dot_kind(d));
      for (Coord m = -mmax; m <= mmax; ++m)
        if (s.contains(m)) out.push_back(d.with_dc(m));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // --- S-sets -----------------------------------------------------------

  ProgressionSet s_set(const RootVector& dot) const {
    require_ambient(dot);
    if (dot.is_zero() || !is_dot_root(dot)) throw NotADotRoot("not a nonzero dot root: " + to_string(dot));
    return roots_.progression(dot);
  }

  ProgressionSet s_set_0(int i, const RootVector& dot) const {
    require_ambient(dot);
    const auto& d0 = dot_roots_0(i);
    if (dot.is_zero() || !std::binary_search(d0.begin(), d0.end(), dot))
      throw NotADotRoot("not a nonzero dot root of R0(" + std::to_string(i) + "): " + to_string(dot));
    return component_row(i).progression(dot);
  }

  /// {m : dot + m delta in R_0}; empty if dot is not an even dot shape.
  ProgressionSet even_progression(const RootVector& dot) const {
    return set_union(comp_[0].progression(dot), comp_[1].progression(dot));
  }

  RInvariants r_invariants() const {
    RInvariants inv;
    for (const auto& d : dots_) {
      if (d.is_zero()) continue;
      ProgressionSet s = s_set(d);
      if (s.residues().size() != 1)
        throw std::logic_error("S-set of " + to_string(d) + " is not a single progression: " + s.to_string());
      inv.entries.push_back({d, s.modulus(), s.residues().front(), {}});
      inv.global_r = std::max(inv.global_r, s.modulus());
    }
    for (auto& e : inv.entries) e.residues_mod_global = s_set(e.dot).residues_mod(inv.global_r);
    return inv;
  }

  // --- structural checks ------------------------------------------------

  /// Sums of two nonsingular roots that are roots are real or imaginary.
  Verdict check_ns_sum(Coord mmax) const {
    Verdict v{"ns-sum", 0, {}};
    std::vector<RootVector> ns;
    for (const auto& d : nonsingular_dot_roots())
      for (Coord m = -mmax; m <= mmax; ++m)
        if (roots_.contains(d.with_dc(m))) ns.push_back(d.with_dc(m));
    for (const auto& a : ns)
      for (const auto& b : ns) {
        RootVector s = a + b;
        if (std::abs(s.dc()) > mmax || !roots_.contains(s)) continue;
        ++v.checks;
        if (s.is_zero()) continue;
        if (clause_class(*dot_kind(s)) == RootClass::Nonsingular || metric_class(s) == RootClass::Nonsingular)
          v.fail("sum of nonsingular roots is nonsingular", to_string(a) + " + " + to_string(b) + " = " + to_string(s));
      }
    return v;
  }

  /// Squared length of a dot root of R_0(i) (the form is definite there).
  static Coord length_sq(const RootVector& v) { return std::abs(form(v, v)); }

  static std::optional<LengthPattern> length_pattern(const RootVector& a, const RootVector& b) {
    Coord la = length_sq(a), lb = length_sq(b), ls = length_sq(a + b);
    bool pa = la == lb && la < ls;
    bool pb = (ls == la && la < lb) || (ls == lb && lb < la);
    bool pc = la == lb && lb == ls;
    if (int(pa) + int(pb) + int(pc) != 1) return std::nullopt;
    if (pa) return LengthPattern::EqualShorterThanSum;
    if (pb) return LengthPattern::SumEqualsShorter;
    return LengthPattern::AllEqual;
  }

  /// If a, b, a+b are nonzero dot roots of R_0(i) with l(a)=l(b)<=l(a+b)
  /// then S_{a+b}(i) is contained in S_a(i) + S_b(i).
  Verdict check_sum_property(int i) const {
    Verdict v{"sum-property(" + std::to_string(i) + ")", 0, {}};
    const auto& d0 = dot_roots_0(i);
    for (const auto& a : d0)
      for (const auto& b : d0) {
        if (a.is_zero() || b.is_zero()) continue;
        RootVector s = a + b;
        if (s.is_zero() || !std::binary_search(d0.begin(), d0.end(), s)) continue;
        if (!(length_sq(a) == length_sq(b) && length_sq(a) <= length_sq(s))) continue;
        ++v.checks;
        ProgressionSet lhs = s_set_0(i, s);
        ProgressionSet rhs = minkowski_sum(s_set_0(i, a), s_set_0(i, b));
        if (!lhs.subset_of(rhs))
          v.fail("S(a+b) not in S(a)+S(b)",
                 to_string(a) + ", " + to_string(b) + ": " + lhs.to_string() + " vs " + rhs.to_string());
      }
    return v;
  }

  /// Exactly one of the three length patterns holds for every pair with a
  /// nonzero sum in the dot roots of R_0(i).
  Verdict check_fini(int i) const {
    Verdict v{"length-trichotomy(" + std::to_string(i) + ")", 0, {}};
    const auto& d0 = dot_roots_0(i);
    for (const auto& a : d0)
      for (const auto& b : d0) {
        if (a.is_zero() || b.is_zero()) continue;
        RootVector s = a + b;
        if (s.is_zero() || !std::binary_search(d0.begin(), d0.end(), s)) continue;
        ++v.checks;
        if (!length_pattern(a, b))
          v.fail("no length pattern", to_string(a) + ", " + to_string(b) + " (|a|^2=" + std::to_string(length_sq(a)) +
                                           ", |b|^2=" + std::to_string(length_sq(b)) +
                                           ", |a+b|^2=" + std::to_string(length_sq(s)) + ")");
      }
    return v;
  }

  /// True iff dot + (step Z + offset) delta lies in R_0 and the dot is real.
  bool even_real_progression(const RootVector& dot, Coord step, Coord offset) const {
    if (dot.is_zero() || form(dot, dot) == 0) return false;
    return ProgressionSet::single(step, offset).subset_of(even_progression(dot));
  }

  /// Checks the four containments and the non-root condition for a candidate split.
  bool ns_split_holds(const RootVector& eta, const NsDecomposition& d) const {
    if (d.alpha + d.beta != eta) return false;
    const Coord r = d.r_eta;
    const Coord k = d.kfactor;
    const RootVector ka = k * d.alpha;
    const RootVector tb = 2 * d.beta;
    if (!even_real_progression(ka, k * r, 0) || !even_real_progression(-ka, k * r, 0)) return false;
    if (!even_real_progression(tb, 2 * r, r) || !even_real_progression(-tb, 2 * r, r)) return false;
    return !is_dot_root(ka + tb) && !is_dot_root(ka - tb);
  }

  NsDecomposition ns_decompose(const RootVector& eta) const {
    require_ambient(eta);
    if (eta.dc() != 0 || eta.is_zero() || !is_dot_root(eta) || clause_class(*dot_kind(eta)) != RootClass::Nonsingular)
      throw NotADotRoot("not a nonzero nonsingular dot root: " + to_string(eta));
    NsDecomposition d;
    d.kfactor = params_.family == AffineFamily::D2 ? 1 : 2;
    d.r_eta = s_set(eta).modulus();
    for (const auto& a : split_candidates()) {
      d.alpha = a;
      d.beta = eta - a;
      if (d.beta.is_zero()) continue;
      if (ns_split_holds(eta, d)) return d;
    }
    throw NoDecompositionFound("no nonsingular split found for " + to_string(eta) + " in " + params_.instance_name());
  }

  Verdict check_ns_decompositions() const {
    Verdict v{"ns-decomposition", 0, {}};
    for (const auto& eta : nonsingular_dot_roots()) {
      ++v.checks;
      try {
        auto d = ns_decompose(eta);
        if (!ns_split_holds(eta, d)) v.fail("returned split fails re-verification", to_string(eta));
      } catch (const NoDecompositionFound& e) {
        v.fail("no decomposition", e.what());
      }
    }
    return v;
  }

  /// Twice a real odd root is a real even root.
  Verdict check_double_odd(Coord mmax) const {
    Verdict v{"double-odd", 0, {}};
    for (const auto& a : enumerate_window(mmax)) {
      if (a.is_zero() || std::abs(2 * a.dc()) > mmax) continue;
      RootInfo info = classify(a);
      if (info.cls != RootClass::Real || info.parity != Parity::Odd) continue;
      ++v.checks;
      RootVector t = 2 * a;
      if (!roots_.contains(t)) {
        v.fail("2a not a root", to_string(a));
        continue;
      }
      RootInfo ti = classify(t);
      if (ti.cls != RootClass::Real || ti.parity != Parity::Even) v.fail("2a not real even", to_string(a));
    }
    return v;
  }

  /// Syntactic vs metric class on the window, plus the containment of the
  /// even components in R and their overlap in Z delta.
  Verdict check_classification(Coord mmax) const {
    Verdict v{"classification", 0, {}};
    for (const auto& r : enumerate_window(mmax)) {
      if (r.is_zero()) continue;
      ++v.checks;
      try {
        classify(r);
      } catch (const ClassificationDisagreement& e) {
        v.fail("class disagreement", e.what());
      }
    }
    for (int i = 1; i <= 2; ++i)
      for (const auto& d : dot_roots_0(i))
        for (Coord m = -mmax; m <= mmax; ++m) {
          RootVector x = d.with_dc(m);
          if (!in_even_component(i, x)) continue;
          ++v.checks;
          if (!roots_.contains(x)) v.fail("R0(" + std::to_string(i) + ") not inside R", to_string(x));
          if (i == 1 && in_even_component(2, x) && !x.dot_is_zero())
            v.fail("R0(1) and R0(2) share a non-imaginary element", to_string(x));
        }
    return v;
  }

  /// Closed-form S tables against the S-sets computed from the root table,
  /// and the dot-root tables against the dot supports of the root tables.
  Verdict check_table_fidelity() const {
    Verdict v{"table-fidelity", 0, {}};
    for (const auto& d : dots_) {
      if (d.is_zero()) continue;
      ++v.checks;
      ProgressionSet want = tables::s_closed_form(params_.family, *dot_kind(d));
      ProgressionSet got = s_set(d);
      if (got != want) v.fail("S mismatch", to_string(d) + ": " + got.to_string() + " vs " + want.to_string());
    }
    for (int i = 1; i <= 2; ++i)
      for (const auto& d : dot_roots_0(i)) {
        if (d.is_zero()) continue;
        ++v.checks;
        ProgressionSet want = tables::s0_closed_form(params_.family, i, *dot_kind(d));
        ProgressionSet got = s_set_0(i, d);
        if (got != want)
          v.fail("S(" + std::to_string(i) + ") mismatch", to_string(d) + ": " + got.to_string() + " vs " + want.to_string());
      }
    ++v.checks;
    if (dot_support(roots_) != dots_) v.fail("dot-root table differs from dot support of R", params_.instance_name());
    for (int i = 1; i <= 2; ++i) {
      ++v.checks;
      if (dot_support(component_row(i)) != dot_roots_0(i))
        v.fail("dot-root table of R0(" + std::to_string(i) + ") differs from its dot support", params_.instance_name());
    }
    return v;
  }

  /// Dot parts d (over all shapes) for which d + Z delta meets the row.
  std::vector<RootVector> dot_support(const CompiledRow& row) const {
    std::vector<RootVector> out;
    for (DotKind k : kAllDotKinds)
      if (!row.progression(k).is_empty())
        for (auto& d : dot_kind_members(k, ambient_)) out.push_back(d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  const CompiledRow& root_row() const { return roots_; }
  const CompiledRow& component_row(int i) const {
    check_component_index(i);
    return comp_[static_cast<std::size_t>(i - 1)];
  }

 private:
  static void check_component_index(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("component index must be 1 or 2");
  }

  std::vector<RootVector> dots_with_class(RootClass c) const {
    std::vector<RootVector> out;
    for (const auto& d : dots_)
      if (!d.is_zero() && clause_class(*dot_kind(d)) == c) out.push_back(d);
    return out;
  }

  // Nonzero dot roots together with +-eps_i and +-del_j (absent from the dot
  // roots of a-odd-2 but needed as split pieces there).
  std::vector<RootVector> split_candidates() const {
    std::vector<RootVector> c;
    for (const auto& d : dots_)
      if (!d.is_zero()) c.push_back(d);
    for (DotKind k : {DotKind::Eps, DotKind::Del})
      for (auto& d : dot_kind_members(k, ambient_)) c.push_back(d);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  AlgebraParams params_;
  Ambient ambient_;
  CompiledRow roots_;
  std::array<CompiledRow, 2> comp_;
  std::vector<RootVector> dots_;
  std::unordered_set<RootVector> dot_set_;
  std::array<std::vector<RootVector>, 2> dots0_;
};

// Free-function spellings of the main queries.

inline bool is_root(const AlgebraParams& p, const RootVector& v) { return RootSystem(p).is_root(v); }
inline RootInfo classify(const AlgebraParams& p, const RootVector& v) { return RootSystem(p).classify(v); }
inline std::vector<RootVector> enumerate_window(const AlgebraParams& p, Coord mmax) {
  return RootSystem(p).enumerate_window(mmax);
}
inline std::vector<RootVector> dot_roots(const AlgebraParams& p) { return RootSystem(p).dot_roots(); }
inline std::vector<RootVector> dot_roots_0(const AlgebraParams& p, int i) { return RootSystem(p).dot_roots_0(i); }
inline ProgressionSet s_set(const AlgebraParams& p, const RootVector& dot) { return RootSystem(p).s_set(dot); }
inline ProgressionSet s_set_0(const AlgebraParams& p, int i, const RootVector& dot) {
  return RootSystem(p).s_set_0(i, dot);
}
inline RInvariants r_invariants(const AlgebraParams& p) { return RootSystem(p).r_invariants(); }
inline NsDecomposition ns_decompose(const AlgebraParams& p, const RootVector& eta) {
  return RootSystem(p).ns_decompose(eta);
}

}  // namespace twaffine
