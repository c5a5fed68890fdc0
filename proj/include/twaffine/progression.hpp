#pragma once

// Finite unions of arithmetic progressions  U_i (r Z + k_i)  inside Z,
// read as multiples of delta. Values of S-sets live here.

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "twaffine/lattice.hpp"

namespace twaffine {

class ProgressionSet {
 public:
  /// The empty set.
  ProgressionSet() = default;

  /// Union of the residue classes `residues` modulo `modulus`; stored canonically.
  ProgressionSet(Coord modulus, std::vector<Coord> residues) {
    if (modulus < 1) throw std::invalid_argument("progression modulus must be positive");
    std::set<Coord> rs;
    for (Coord x : residues) rs.insert(floor_mod(x, modulus));
    modulus_ = modulus;
    residues_.assign(rs.begin(), rs.end());
    canonicalize();
  }

  static ProgressionSet empty() { return {}; }
  static ProgressionSet integers() { return {1, {0}}; }
  /// r Z + k
  static ProgressionSet single(Coord r, Coord k) { return {r, {k}}; }

  bool is_empty() const { return residues_.empty(); }
  bool is_all() const { return modulus_ == 1 && !residues_.empty(); }
  Coord modulus() const { return modulus_; }
  const std::vector<Coord>& residues() const { return residues_; }

  bool contains(Coord m) const {
    return std::binary_search(residues_.begin(), residues_.end(), floor_mod(m, modulus_));
  }

  /// Residues of this set modulo `r`, which must be a multiple of the canonical modulus.
  std::vector<Coord> residues_mod(Coord r) const {
    if (r < 1 || r % modulus_ != 0) throw std::invalid_argument("re-expression modulus must be a multiple of the canonical modulus");
    std::vector<Coord> out;
    for (Coord x = 0; x < r; ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  ProgressionSet negated() const {
    std::vector<Coord> rs;
    for (Coord x : residues_) rs.push_back(-x);
    return is_empty() ? ProgressionSet{} : ProgressionSet(modulus_, rs);
  }

  ProgressionSet shifted(Coord by) const {
    std::vector<Coord> rs;
    for (Coord x : residues_) rs.push_back(x + by);
    return is_empty() ? ProgressionSet{} : ProgressionSet(modulus_, rs);
  }

  friend ProgressionSet set_union(const ProgressionSet& a, const ProgressionSet& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    Coord r = std::lcm(a.modulus_, b.modulus_);
    std::vector<Coord> rs = a.residues_mod(r);
    for (Coord x : b.residues_mod(r)) rs.push_back(x);
    return {r, rs};
  }

  friend ProgressionSet intersection(const ProgressionSet& a, const ProgressionSet& b) {
    if (a.is_empty() || b.is_empty()) return {};
    Coord r = std::lcm(a.modulus_, b.modulus_);
    std::vector<Coord> rs;
    for (Coord x = 0; x < r; ++x)
      if (a.contains(x) && b.contains(x)) rs.push_back(x);
    return rs.empty() ? ProgressionSet{} : ProgressionSet(r, rs);
  }

  /// Minkowski sum {x + y}.
  friend ProgressionSet minkowski_sum(const ProgressionSet& a, const ProgressionSet& b) {
    if (a.is_empty() || b.is_empty()) return {};
    Coord r = std::lcm(a.modulus_, b.modulus_);
    std::vector<Coord> rs;
    for (Coord x : a.residues_mod(r))
      for (Coord y : b.residues_mod(r)) rs.push_back(x + y);
    return {r, rs};
  }

  bool subset_of(const ProgressionSet& other) const {
    if (is_empty()) return true;
    Coord r = std::lcm(modulus_, other.is_empty() ? Coord{1} : other.modulus_);
    for (Coord x : residues_mod(r))
      if (!other.contains(x)) return false;
    return true;
  }

  friend bool operator==(const ProgressionSet&, const ProgressionSet&) = default;

  std::string to_string() const { return render("Z", "delta", "empty"); }
  std::string to_tex() const { return render("\\mathbb{Z}", "\\delta", "\\emptyset"); }

 private:
  static Coord floor_mod(Coord x, Coord r) {
    Coord m = x % r;
    return m < 0 ? m + r : m;
  }

  void canonicalize() {
    if (residues_.empty()) {
      modulus_ = 1;
      return;
    }
    for (Coord d = 1; d < modulus_; ++d) {
      if (modulus_ % d != 0) continue;
      bool periodic = std::all_of(residues_.begin(), residues_.end(), [&](Coord x) { return contains((x + d) % modulus_); });
      if (!periodic) continue;
      std::set<Coord> rs;
      for (Coord x : residues_) rs.insert(x % d);
      modulus_ = d;
      residues_.assign(rs.begin(), rs.end());
      return;
    }
  }

  std::string render(const std::string& z, const std::string& delta, const std::string& none) const {
    if (is_empty()) return none;
    std::ostringstream os;
    for (std::size_t i = 0; i < residues_.size(); ++i) {
      if (i) os << " \\cup ";
      Coord k = residues_[i];
      std::string rz = (modulus_ == 1 ? "" : std::to_string(modulus_)) + z;
      if (k == 0)
        os << rz << delta;
      else
        os << "(" << rz << "+" << k << ")" << delta;
    }
    std::string s = os.str();
    if (z == "Z") {
      // plain-text union sign
      std::string::size_type p;
      while ((p = s.find(" \\cup ")) != std::string::npos) s.replace(p, 6, " u ");
    }
    return s;
  }

  Coord modulus_ = 1;
  std::vector<Coord> residues_;
};

inline std::ostream& operator<<(std::ostream& os, const ProgressionSet& s) { return os << s.to_string(); }

inline void to_json(nlohmann::json& j, const ProgressionSet& s) {
  j = nlohmann::json{{"mod", s.modulus()}, {"res", s.residues()}};
}

inline void from_json(const nlohmann::json& j, ProgressionSet& s) {
  auto res = j.at("res").get<std::vector<Coord>>();
  s = res.empty() ? ProgressionSet{} : ProgressionSet(j.at("mod").get<Coord>(), res);
}

}  // namespace twaffine
