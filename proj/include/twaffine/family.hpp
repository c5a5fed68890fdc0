#pragma once

// The four twisted affine families and their root data written as tables:
// every table row is a list of clauses (dot-root shape x progression of
// delta-multiples). One evaluator in rootsys.hpp serves all tables.

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twaffine/lattice.hpp"
#include "twaffine/progression.hpp"

namespace twaffine {

enum class AffineFamily {
  AEven2,  // A(2k, 2l-1)^(2)
  AOdd2,   // A(2k-1, 2l-1)^(2), (k,l) != (1,1)
  A4,      // A(2k, 2l)^(4)
  D2,      // D(k+1, l)^(2)
};

inline constexpr std::array<AffineFamily, 4> kAllFamilies{AffineFamily::AEven2, AffineFamily::AOdd2, AffineFamily::A4,
                                                          AffineFamily::D2};

inline std::string_view family_token(AffineFamily f) {
  switch (f) {
    case AffineFamily::AEven2: return "a-even-2";
    case AffineFamily::AOdd2: return "a-odd-2";
    case AffineFamily::A4: return "a-4";
    case AffineFamily::D2: return "d-2";
  }
  return "?";
}

inline std::string_view family_tex(AffineFamily f) {
  switch (f) {
    case AffineFamily::AEven2: return "A(2k,2\\ell-1)^{(2)}";
    case AffineFamily::AOdd2: return "A(2k-1,2\\ell-1)^{(2)}";
    case AffineFamily::A4: return "A(2k,2\\ell)^{(4)}";
    case AffineFamily::D2: return "D(k+1,\\ell)^{(2)}";
  }
  return "?";
}

inline std::string_view family_constraints(AffineFamily f) {
  switch (f) {
    case AffineFamily::AOdd2: return "k >= 1, l >= 1, (k,l) != (1,1)";
    default: return "k >= 0, l >= 1";
  }
}

inline std::optional<AffineFamily> parse_family(std::string_view token) {
  for (auto f : kAllFamilies)
    if (family_token(f) == token) return f;
  return std::nullopt;
}

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AlgebraParams {
  AffineFamily family = AffineFamily::AEven2;
  int k = 0;
  int l = 1;

  AlgebraParams() = default;
  AlgebraParams(AffineFamily f, int k_, int l_) : family(f), k(k_), l(l_) { validate(); }

  void validate() const {
    std::string fam(family_token(family));
    if (l < 1) throw InvalidParams(fam + ": l must be >= 1 (got l=" + std::to_string(l) + ")");
    if (k < 0) throw InvalidParams(fam + ": k must be >= 0 (got k=" + std::to_string(k) + ")");
    if (family == AffineFamily::AOdd2) {
      if (k < 1) throw InvalidParams(fam + ": k must be >= 1");
      if (k == 1 && l == 1) throw InvalidParams(fam + ": (k,l) = (1,1) is excluded");
    }
  }

  Ambient ambient() const { return {k, l}; }
  bool has_component(int i) const { return i == 1 || (i == 2 && k != 0); }

  /// e.g. "A(2,1)^(2)" for a-even-2 with k=l=1.
  std::string instance_name() const {
    std::ostringstream os;
    switch (family) {
      case AffineFamily::AEven2: os << "A(" << 2 * k << "," << 2 * l - 1 << ")^(2)"; break;
      case AffineFamily::AOdd2: os << "A(" << 2 * k - 1 << "," << 2 * l - 1 << ")^(2)"; break;
      case AffineFamily::A4: os << "A(" << 2 * k << "," << 2 * l << ")^(4)"; break;
      case AffineFamily::D2: os << "D(" << k + 1 << "," << l << ")^(2)"; break;
    }
    return os.str();
  }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

/// Every valid (k, l) with k <= kmax and l <= lmax for the family.
inline std::vector<AlgebraParams> valid_params(AffineFamily f, int kmax, int lmax) {
  std::vector<AlgebraParams> out;
  for (int k = 0; k <= kmax; ++k)
    for (int l = 1; l <= lmax; ++l) {
      if (f == AffineFamily::AOdd2 && (k < 1 || (k == 1 && l == 1))) continue;
      out.emplace_back(f, k, l);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Dot-root shapes

enum class DotKind {
  Zero,
  Eps,       // +-eps_i
  Del,       // +-del_j
  EpsPmEps,  // +-eps_i +- eps_r, i != r
  TwoEps,    // +-2 eps_i
  DelPmDel,  // +-del_j +- del_s, j != s
  TwoDel,    // +-2 del_j
  EpsPmDel,  // +-eps_i +- del_j
};

inline constexpr std::array<DotKind, 8> kAllDotKinds{DotKind::Zero,   DotKind::Eps,      DotKind::Del,    DotKind::EpsPmEps,
                                                     DotKind::TwoEps, DotKind::DelPmDel, DotKind::TwoDel, DotKind::EpsPmDel};

inline std::string_view dot_kind_name(DotKind k) {
  switch (k) {
    case DotKind::Zero: return "0";
    case DotKind::Eps: return "+-e_i";
    case DotKind::Del: return "+-d_j";
    case DotKind::EpsPmEps: return "+-e_i+-e_r";
    case DotKind::TwoEps: return "+-2e_i";
    case DotKind::DelPmDel: return "+-d_j+-d_s";
    case DotKind::TwoDel: return "+-2d_j";
    case DotKind::EpsPmDel: return "+-e_i+-d_j";
  }
  return "?";
}

inline std::string_view dot_kind_tex(DotKind k) {
  switch (k) {
    case DotKind::Zero: return "0";
    case DotKind::Eps: return "\\pm\\epsilon_i";
    case DotKind::Del: return "\\pm\\delta_j";
    case DotKind::EpsPmEps: return "\\pm\\epsilon_i\\pm\\epsilon_r";
    case DotKind::TwoEps: return "\\pm2\\epsilon_i";
    case DotKind::DelPmDel: return "\\pm\\delta_j\\pm\\delta_s";
    case DotKind::TwoDel: return "\\pm2\\delta_j";
    case DotKind::EpsPmDel: return "\\pm\\epsilon_i\\pm\\delta_j";
  }
  return "?";
}

/// Shape of the dot part of v, or nullopt if it matches none of the shapes.
inline std::optional<DotKind> dot_kind(const RootVector& v) {
  int ne = 0, nd = 0;
  Coord ve = 0, vd = 0;
  bool unit = true;
  for (Coord c : v.eps())
    if (c != 0) {
      ++ne;
      ve = c;
      if (c != 1 && c != -1) unit = false;
    }
  for (Coord c : v.del())
    if (c != 0) {
      ++nd;
      vd = c;
      if (c != 1 && c != -1) unit = false;
    }
  if (ne == 0 && nd == 0) return DotKind::Zero;
  if (ne == 1 && nd == 0) {
    if (ve == 1 || ve == -1) return DotKind::Eps;
    if (ve == 2 || ve == -2) return DotKind::TwoEps;
    return std::nullopt;
  }
  if (ne == 0 && nd == 1) {
    if (vd == 1 || vd == -1) return DotKind::Del;
    if (vd == 2 || vd == -2) return DotKind::TwoDel;
    return std::nullopt;
  }
  if (!unit) return std::nullopt;
  if (ne == 2 && nd == 0) return DotKind::EpsPmEps;
  if (ne == 0 && nd == 2) return DotKind::DelPmDel;
  if (ne == 1 && nd == 1) return DotKind::EpsPmDel;
  return std::nullopt;
}

/// All dot vectors of a given shape in the ambient lattice.
inline std::vector<RootVector> dot_kind_members(DotKind kind, Ambient a) {
  std::vector<RootVector> out;
  const RootVector z = RootVector::zero(a);
  auto e = [&](int i) { return RootVector::eps(a, i); };
  auto d = [&](int j) { return RootVector::del(a, j); };
  switch (kind) {
    case DotKind::Zero: out.push_back(z); break;
    case DotKind::Eps:
      for (int i = 1; i <= a.k; ++i) out.insert(out.end(), {e(i), -e(i)});
      break;
    case DotKind::Del:
      for (int j = 1; j <= a.l; ++j) out.insert(out.end(), {d(j), -d(j)});
      break;
    case DotKind::TwoEps:
      for (int i = 1; i <= a.k; ++i) out.insert(out.end(), {2 * e(i), -2 * e(i)});
      break;
    case DotKind::TwoDel:
      for (int j = 1; j <= a.l; ++j) out.insert(out.end(), {2 * d(j), -2 * d(j)});
      break;
    case DotKind::EpsPmEps:
      for (int i = 1; i <= a.k; ++i)
        for (int r = i + 1; r <= a.k; ++r)
          for (Coord s1 : {1, -1})
            for (Coord s2 : {1, -1}) out.push_back(s1 * e(i) + s2 * e(r));
      break;
    case DotKind::DelPmDel:
      for (int j = 1; j <= a.l; ++j)
        for (int s = j + 1; s <= a.l; ++s)
          for (Coord s1 : {1, -1})
            for (Coord s2 : {1, -1}) out.push_back(s1 * d(j) + s2 * d(s));
      break;
    case DotKind::EpsPmDel:
      for (int i = 1; i <= a.k; ++i)
        for (int j = 1; j <= a.l; ++j)
          for (Coord s1 : {1, -1})
            for (Coord s2 : {1, -1}) out.push_back(s1 * e(i) + s2 * d(j));
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table data

struct Clause {
  DotKind kind;
  ProgressionSet progression;
};

using TableRow = std::vector<Clause>;

namespace tables {

inline ProgressionSet Z() { return ProgressionSet::integers(); }
inline ProgressionSet P(Coord r, Coord k) { return ProgressionSet::single(r, k); }

/// Root system R.
inline TableRow roots(const AlgebraParams& p) {
  using K = DotKind;
  switch (p.family) {
    case AffineFamily::AEven2:
      return {{K::Zero, Z()},     {K::Eps, Z()},         {K::Del, Z()},    {K::EpsPmEps, Z()}, {K::DelPmDel, Z()},
              {K::EpsPmDel, Z()}, {K::TwoEps, P(2, 1)}, {K::TwoDel, P(2, 0)}};
    case AffineFamily::AOdd2:
      return {{K::Zero, Z()},     {K::EpsPmEps, Z()},   {K::DelPmDel, Z()},
              {K::EpsPmDel, Z()}, {K::TwoEps, P(2, 1)}, {K::TwoDel, P(2, 0)}};
    case AffineFamily::A4:
      return {{K::Zero, Z()},          {K::Eps, Z()},          {K::Del, Z()},        {K::EpsPmEps, P(2, 0)},
              {K::DelPmDel, P(2, 0)}, {K::EpsPmDel, P(2, 0)}, {K::TwoEps, P(4, 2)}, {K::TwoDel, P(4, 0)}};
    case AffineFamily::D2:
      return {{K::Zero, Z()},          {K::Eps, Z()},          {K::Del, Z()},
              {K::TwoDel, P(2, 0)},   {K::EpsPmEps, P(2, 0)}, {K::DelPmDel, P(2, 0)},
              {K::EpsPmDel, P(2, 0)}};
  }
  return {};
}

/// Even-part component R_0(i); empty row for i = 2 when k = 0.
inline TableRow even_component(const AlgebraParams& p, int i) {
  using K = DotKind;
  if (i != 1 && i != 2) throw std::invalid_argument("component index must be 1 or 2");
  if (!p.has_component(i)) return {};
  const bool l_is_1 = p.l == 1;
  const bool k_is_1 = p.k == 1;
  switch (p.family) {
    case AffineFamily::AEven2:
      if (i == 1) return {{K::Zero, l_is_1 ? P(2, 0) : Z()}, {K::DelPmDel, Z()}, {K::TwoDel, P(2, 0)}};
      return {{K::Zero, Z()}, {K::Eps, Z()}, {K::EpsPmEps, Z()}, {K::TwoEps, P(2, 1)}};
    case AffineFamily::AOdd2:
      if (i == 1) return {{K::Zero, l_is_1 ? P(2, 0) : Z()}, {K::DelPmDel, Z()}, {K::TwoDel, P(2, 0)}};
      return {{K::Zero, k_is_1 ? P(2, 0) : Z()}, {K::EpsPmEps, Z()}, {K::TwoEps, P(2, 1)}};
    case AffineFamily::A4:
      if (i == 1) return {{K::Zero, P(2, 0)}, {K::Del, P(2, 1)}, {K::DelPmDel, P(2, 0)}, {K::TwoDel, P(4, 0)}};
      return {{K::Zero, P(2, 0)}, {K::Eps, P(2, 0)}, {K::EpsPmEps, P(2, 0)}, {K::TwoEps, P(4, 2)}};
    case AffineFamily::D2:
      // j = s allowed in +-del_j +- del_s, which contributes +-2 del_j.
      if (i == 1) return {{K::Zero, P(2, 0)}, {K::DelPmDel, P(2, 0)}, {K::TwoDel, P(2, 0)}};
      return {{K::Zero, Z()}, {K::Eps, Z()}, {K::EpsPmEps, P(2, 0)}};
  }
  return {};
}

/// Shapes making up the finite set of dot roots (always contains Zero).
inline std::vector<DotKind> dot_roots(const AlgebraParams& p) {
  using K = DotKind;
  switch (p.family) {
    case AffineFamily::AEven2:
    case AffineFamily::A4:
      return {K::Zero, K::Eps, K::Del, K::EpsPmEps, K::TwoEps, K::DelPmDel, K::TwoDel, K::EpsPmDel};
    case AffineFamily::AOdd2: return {K::Zero, K::EpsPmEps, K::TwoEps, K::DelPmDel, K::TwoDel, K::EpsPmDel};
    case AffineFamily::D2: return {K::Zero, K::Eps, K::Del, K::EpsPmEps, K::DelPmDel, K::TwoDel, K::EpsPmDel};
  }
  return {};
}

/// Shapes of the dot roots of R_0(i); empty when the component is empty.
inline std::vector<DotKind> dot_roots_0(const AlgebraParams& p, int i) {
  using K = DotKind;
  if (i != 1 && i != 2) throw std::invalid_argument("component index must be 1 or 2");
  if (!p.has_component(i)) return {};
  switch (p.family) {
    case AffineFamily::AEven2:
      return i == 1 ? std::vector<K>{K::Zero, K::DelPmDel, K::TwoDel}
                    : std::vector<K>{K::Zero, K::Eps, K::EpsPmEps, K::TwoEps};
    case AffineFamily::AOdd2:
      return i == 1 ? std::vector<K>{K::Zero, K::DelPmDel, K::TwoDel} : std::vector<K>{K::Zero, K::EpsPmEps, K::TwoEps};
    case AffineFamily::A4:
      return i == 1 ? std::vector<K>{K::Zero, K::Del, K::DelPmDel, K::TwoDel}
                    : std::vector<K>{K::Zero, K::Eps, K::EpsPmEps, K::TwoEps};
    case AffineFamily::D2:
      return i == 1 ? std::vector<K>{K::Zero, K::DelPmDel, K::TwoDel} : std::vector<K>{K::Zero, K::Eps, K::EpsPmEps};
  }
  return {};
}

/// Closed form of S for a nonzero dot shape (an empty set where the shape is
/// absent from the family).
inline ProgressionSet s_closed_form(AffineFamily f, DotKind kind) {
  using K = DotKind;
  const ProgressionSet none;
  // columns: AEven2, AOdd2, A4, D2
  auto col = [f](ProgressionSet a, ProgressionSet b, ProgressionSet c, ProgressionSet d) {
    switch (f) {
      case AffineFamily::AEven2: return a;
      case AffineFamily::AOdd2: return b;
      case AffineFamily::A4: return c;
      case AffineFamily::D2: return d;
    }
    return ProgressionSet{};
  };
  switch (kind) {
    case K::Eps: return col(Z(), none, Z(), Z());
    case K::EpsPmEps: return col(Z(), Z(), P(2, 0), P(2, 0));
    case K::TwoEps: return col(P(2, 1), P(2, 1), P(4, 2), none);
    case K::Del: return col(Z(), none, Z(), Z());
    case K::DelPmDel: return col(Z(), Z(), P(2, 0), P(2, 0));
    case K::TwoDel: return col(P(2, 0), P(2, 0), P(4, 0), P(2, 0));
    case K::EpsPmDel: return col(Z(), Z(), P(2, 0), P(2, 0));
    case K::Zero: break;
  }
  throw std::invalid_argument("no closed form S-set for the zero dot root");
}

/// Closed form of S(i) for a nonzero dot shape of R_0(i).
inline ProgressionSet s0_closed_form(AffineFamily f, int i, DotKind kind) {
  using K = DotKind;
  const ProgressionSet none;
  auto col = [f](ProgressionSet a, ProgressionSet b, ProgressionSet c, ProgressionSet d) {
    switch (f) {
      case AffineFamily::AEven2: return a;
      case AffineFamily::AOdd2: return b;
      case AffineFamily::A4: return c;
      case AffineFamily::D2: return d;
    }
    return ProgressionSet{};
  };
  if (i == 1) {
    switch (kind) {
      case K::Del: return col(none, none, P(2, 1), none);
      case K::DelPmDel: return col(Z(), Z(), P(2, 0), P(2, 0));
      case K::TwoDel: return col(P(2, 0), P(2, 0), P(4, 0), P(2, 0));
      default: return none;
    }
  }
  if (i == 2) {
    switch (kind) {
      case K::Eps: return col(Z(), none, P(2, 0), Z());
      case K::EpsPmEps: return col(Z(), Z(), P(2, 0), P(2, 0));
      case K::TwoEps: return col(P(2, 1), P(2, 1), P(4, 2), none);
      default: return none;
    }
  }
  throw std::invalid_argument("component index must be 1 or 2");
}

/// Row shapes of the closed-form S tables, in display order.
inline std::vector<DotKind> s_table_rows() {
  using K = DotKind;
  return {K::Eps, K::EpsPmEps, K::TwoEps, K::Del, K::DelPmDel, K::TwoDel, K::EpsPmDel};
}

inline std::vector<std::pair<int, DotKind>> s0_table_rows() {
  using K = DotKind;
  return {{1, K::Del}, {1, K::DelPmDel}, {1, K::TwoDel}, {2, K::Eps}, {2, K::EpsPmEps}, {2, K::TwoEps}};
}

}  // namespace tables

}  // namespace twaffine
