#pragma once

// Integer vectors in the lattice spanned by eps_1..eps_k, del_1..del_l and
// the null direction delta, together with the invariant form.
//
// Form convention (used everywhere in the library):
//   (eps_i, eps_i) = +1, (del_j, del_j) = -1, all cross terms 0,
//   delta is isotropic and orthogonal to everything.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace twaffine {

using Coord = std::int64_t;

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CoordinateOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

inline Coord checked_add(Coord a, Coord b) {
  Coord r{};
  if (__builtin_add_overflow(a, b, &r)) throw CoordinateOverflow("lattice coordinate overflow in addition");
  return r;
}

inline Coord checked_mul(Coord a, Coord b) {
  Coord r{};
  if (__builtin_mul_overflow(a, b, &r)) throw CoordinateOverflow("lattice coordinate overflow in multiplication");
  return r;
}

}  // namespace detail

/// Rank data of the ambient lattice: k epsilon directions, l delta_j directions.
struct Ambient {
  int k = 0;
  int l = 0;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Basis element of the ambient lattice. Indices are 1-based as in the
/// usual notation eps_1..eps_k, del_1..del_l.
struct BasisIndex {
  enum class Kind { Eps, Del, DeltaIm };
  Kind kind = Kind::DeltaIm;
  int index = 0;

  static BasisIndex eps(int i) { return {Kind::Eps, i}; }
  static BasisIndex del(int j) { return {Kind::Del, j}; }
  static BasisIndex delta() { return {Kind::DeltaIm, 0}; }
};

/// An element  sum a_i eps_i + sum b_j del_j + c delta  with integer coefficients.
class RootVector {
 public:
  RootVector() = default;
  RootVector(std::vector<Coord> eps, std::vector<Coord> del, Coord dc)
      : eps_(std::move(eps)), del_(std::move(del)), dc_(dc) {}

  static RootVector zero(Ambient a) {
    return RootVector(std::vector<Coord>(static_cast<std::size_t>(a.k), 0),
                      std::vector<Coord>(static_cast<std::size_t>(a.l), 0), 0);
  }

  static RootVector basis(Ambient a, BasisIndex b) {
    RootVector v = zero(a);
    switch (b.kind) {
      case BasisIndex::Kind::Eps:
        if (b.index < 1 || b.index > a.k) throw std::out_of_range("eps index out of range");
        v.eps_[static_cast<std::size_t>(b.index - 1)] = 1;
        break;
      case BasisIndex::Kind::Del:
        if (b.index < 1 || b.index > a.l) throw std::out_of_range("del index out of range");
        v.del_[static_cast<std::size_t>(b.index - 1)] = 1;
        break;
      case BasisIndex::Kind::DeltaIm:
        v.dc_ = 1;
        break;
    }
    return v;
  }

  static RootVector eps(Ambient a, int i) { return basis(a, BasisIndex::eps(i)); }
  static RootVector del(Ambient a, int j) { return basis(a, BasisIndex::del(j)); }
  static RootVector delta(Ambient a) { return basis(a, BasisIndex::delta()); }

  Ambient ambient() const { return {static_cast<int>(eps_.size()), static_cast<int>(del_.size())}; }
  const std::vector<Coord>& eps() const { return eps_; }
  const std::vector<Coord>& del() const { return del_; }
  Coord dc() const { return dc_; }

  Coord eps(int i) const { return eps_.at(static_cast<std::size_t>(i - 1)); }
  Coord del(int j) const { return del_.at(static_cast<std::size_t>(j - 1)); }

  bool is_zero() const { return dc_ == 0 && dot_is_zero(); }
  bool dot_is_zero() const {
    return std::all_of(eps_.begin(), eps_.end(), [](Coord c) { return c == 0; }) &&
           std::all_of(del_.begin(), del_.end(), [](Coord c) { return c == 0; });
  }

  RootVector with_dc(Coord dc) const {
    RootVector v = *this;
    v.dc_ = dc;
    return v;
  }

  friend bool operator==(const RootVector&, const RootVector&) = default;

  // Total order used for every emitted root list: (dc, eps, del) lexicographic.
  friend std::strong_ordering operator<=>(const RootVector& u, const RootVector& v) {
    if (auto c = u.dc_ <=> v.dc_; c != 0) return c;
    if (auto c = u.eps_ <=> v.eps_; c != 0) return c;
    return u.del_ <=> v.del_;
  }

  RootVector operator-() const {
    RootVector v = *this;
    for (auto& c : v.eps_) c = detail::checked_mul(c, -1);
    for (auto& c : v.del_) c = detail::checked_mul(c, -1);
    v.dc_ = detail::checked_mul(v.dc_, -1);
    return v;
  }

 private:
  std::vector<Coord> eps_;
  std::vector<Coord> del_;
  Coord dc_ = 0;
};

inline void require_same_ambient(const RootVector& u, const RootVector& v) {
  if (u.ambient() != v.ambient()) {
    std::ostringstream os;
    os << "ambient mismatch: (k,l)=(" << u.ambient().k << "," << u.ambient().l << ") vs (" << v.ambient().k << ","
       << v.ambient().l << ")";
    throw AmbientMismatch(os.str());
  }
}

inline RootVector add(const RootVector& u, const RootVector& v) {
  require_same_ambient(u, v);
  std::vector<Coord> e(u.eps().size()), d(u.del().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = detail::checked_add(u.eps()[i], v.eps()[i]);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = detail::checked_add(u.del()[j], v.del()[j]);
  return RootVector(std::move(e), std::move(d), detail::checked_add(u.dc(), v.dc()));
}

inline RootVector negate(const RootVector& v) { return -v; }

inline RootVector scale(const RootVector& v, Coord s) {
  std::vector<Coord> e(v.eps()), d(v.del());
  for (auto& c : e) c = detail::checked_mul(c, s);
  for (auto& c : d) c = detail::checked_mul(c, s);
  return RootVector(std::move(e), std::move(d), detail::checked_mul(v.dc(), s));
}

inline RootVector operator+(const RootVector& u, const RootVector& v) { return add(u, v); }
inline RootVector operator-(const RootVector& u, const RootVector& v) { return add(u, -v); }
inline RootVector operator*(Coord s, const RootVector& v) { return scale(v, s); }

/// The invariant form. The delta coordinate never contributes.
inline Coord form(const RootVector& u, const RootVector& v) {
  require_same_ambient(u, v);
  Coord s = 0;
  for (std::size_t i = 0; i < u.eps().size(); ++i) s = detail::checked_add(s, detail::checked_mul(u.eps()[i], v.eps()[i]));
  for (std::size_t j = 0; j < u.del().size(); ++j) s = detail::checked_add(s, -detail::checked_mul(u.del()[j], v.del()[j]));
  return s;
}

/// Drops the delta coordinate.
inline RootVector dot_part(const RootVector& v) { return v.with_dc(0); }

// Human-readable form, e.g. "2e1-d2+3delta". The zero vector prints as "0".
inline std::string to_string(const RootVector& v) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](Coord c, const std::string& sym) {
    if (c == 0) return;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    Coord a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << sym;
    first = false;
  };
  for (std::size_t i = 0; i < v.eps().size(); ++i) term(v.eps()[i], "e" + std::to_string(i + 1));
  for (std::size_t j = 0; j < v.del().size(); ++j) term(v.del()[j], "d" + std::to_string(j + 1));
  term(v.dc(), "delta");
  if (first) os << "0";
  return os.str();
}

inline std::string to_tex(const RootVector& v) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](Coord c, const std::string& sym) {
    if (c == 0) return;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    Coord a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << sym;
    first = false;
  };
  for (std::size_t i = 0; i < v.eps().size(); ++i) term(v.eps()[i], "\\epsilon_{" + std::to_string(i + 1) + "}");
  for (std::size_t j = 0; j < v.del().size(); ++j) term(v.del()[j], "\\delta_{" + std::to_string(j + 1) + "}");
  term(v.dc(), "\\delta");
  if (first) os << "0";
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const RootVector& v) { return os << to_string(v); }

// Canonical JSON: {"eps":[...], "del":[...], "dc": n}
inline void to_json(nlohmann::json& j, const RootVector& v) {
  j = nlohmann::json{{"eps", v.eps()}, {"del", v.del()}, {"dc", v.dc()}};
}

inline void from_json(const nlohmann::json& j, RootVector& v) {
  if (!j.is_object()) throw std::invalid_argument("root vector: expected a JSON object");
  for (const char* key : {"eps", "del", "dc"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("root vector: missing key '") + key + "'");
  v = RootVector(j.at("eps").get<std::vector<Coord>>(), j.at("del").get<std::vector<Coord>>(), j.at("dc").get<Coord>());
}

}  // namespace twaffine

template <>
struct std::hash<twaffine::RootVector> {
  std::size_t operator()(const twaffine::RootVector& v) const noexcept {
    std::size_t h = std::hash<twaffine::Coord>{}(v.dc());
    auto mix = [&h](twaffine::Coord c) { h ^= std::hash<twaffine::Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (auto c : v.eps()) mix(c);
    mix(0x5bd1e995);
    for (auto c : v.del()) mix(c);
    return h;
  }
};
