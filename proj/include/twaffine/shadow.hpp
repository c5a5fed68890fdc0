#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "twaffine/rootsys.hpp"

namespace twaffine {

enum class StateKind { FullLN, FullIN, Hybrid };
enum class HybridCase { III, IV };

class NotARealRoot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Boundary data of a hybrid class, read relative to the class it is stored
/// under (the anchor). With g = anchor + m delta:
///   III: anchor + n delta is in iff n >= m+1;   -anchor + n delta is in iff n >= t-m
///   IV:  anchor + n delta is in iff n <= m-1;   -anchor + n delta is in iff n <= -m-t
/// and ln otherwise.
struct HybridProfile {
  HybridCase hcase = HybridCase::III;
  Coord m = 0;
  int t = 0;

  bool in_plus(Coord n) const { return hcase == HybridCase::III ? n >= m + 1 : n <= m - 1; }
  bool in_minus(Coord n) const { return hcase == HybridCase::III ? n >= t - m : n <= -m - t; }

  /// The same profile read from the opposite anchor.
  HybridProfile mirrored() const {
    if (hcase == HybridCase::III) return {HybridCase::III, t - m - 1, t};
    return {HybridCase::IV, 1 - m - t, t};
  }

  friend bool operator==(const HybridProfile&, const HybridProfile&) = default;
};

struct ClassState {
  StateKind kind = StateKind::FullLN;
  HybridProfile profile{};

  static ClassState full_ln() { return {StateKind::FullLN, {}}; }
  static ClassState full_in() { return {StateKind::FullIN, {}}; }
  static ClassState hybrid(HybridCase c, Coord m, int t) { return {StateKind::Hybrid, {c, m, t}}; }
  static ClassState hybrid(HybridProfile p) { return {StateKind::Hybrid, p}; }

  bool operator==(const ClassState& o) const {
    return kind == o.kind && (kind != StateKind::Hybrid || profile == o.profile);
  }
};

inline std::string to_string(const ClassState& s) {
  switch (s.kind) {
    case StateKind::FullLN:
      return "full_ln";
    case StateKind::FullIN:
      return "full_in";
    case StateKind::Hybrid:
      break;
  }
  return std::string("hybrid(") + (s.profile.hcase == HybridCase::III ? "III" : "IV") + ", m=" +
         std::to_string(s.profile.m) + ", t=" + std::to_string(s.profile.t) + ")";
}

/// Per-class states over the nonzero real dot roots.
struct ShadowConfig {
  AlgebraParams params;
  std::map<RootVector, ClassState> states;

  const ClassState& state(const RootVector& dot) const {
    auto it = states.find(dot);
    if (it == states.end()) throw ConfigError("no state for class " + to_string(dot));
    return it->second;
  }
};

inline void to_json(nlohmann::json& j, const ClassState& s) {
  switch (s.kind) {
    case StateKind::FullLN:
      j = "full_ln";
      return;
    case StateKind::FullIN:
      j = "full_in";
      return;
    case StateKind::Hybrid:
      j = nlohmann::json{{"hybrid",
                          {{"case", s.profile.hcase == HybridCase::III ? "III" : "IV"}, {"m", s.profile.m}, {"t", s.profile.t}}}};
      return;
  }
}

inline ClassState class_state_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "full_ln") return ClassState::full_ln();
    if (s == "full_in") return ClassState::full_in();
    throw ConfigError("unknown state \"" + s + "\"");
  }
  if (!j.is_object() || !j.contains("hybrid")) throw ConfigError("state must be \"full_ln\", \"full_in\" or {\"hybrid\": ...}");
  const auto& h = j.at("hybrid");
  if (!h.is_object() || !h.contains("case") || !h.contains("m") || !h.contains("t"))
    throw ConfigError("hybrid state needs \"case\", \"m\" and \"t\"");
  auto c = h.at("case").get<std::string>();
  if (c != "III" && c != "IV") throw ConfigError("hybrid case must be \"III\" or \"IV\"");
  int t = h.at("t").get<int>();
  if (t < -1 || t > 1) throw ConfigError("hybrid t must be one of -1, 0, 1");
  return ClassState::hybrid(c == "III" ? HybridCase::III : HybridCase::IV, h.at("m").get<Coord>(), t);
}

inline nlohmann::json config_to_json(const ShadowConfig& cfg) {
  auto classes = nlohmann::json::array();
  for (const auto& [dot, st] : cfg.states) classes.push_back({{"root", dot}, {"state", st}});
  return nlohmann::json{{"classes", classes}};
}

/// Reads {"classes": [{"root": ..., "state": ...}]}. A missing negative of a
/// hybrid class is filled in with the mirrored profile; any other missing
/// class is an error.
inline ShadowConfig config_from_json(const AlgebraParams& p, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("classes") || !j.at("classes").is_array())
    throw ConfigError("config JSON needs a \"classes\" array");
  RootSystem rs(p);
  ShadowConfig cfg{p, {}};
  std::size_t n = 0;
  for (const auto& entry : j.at("classes")) {
    const std::string at = "classes[" + std::to_string(n++) + "]: ";
    try {
      if (!entry.is_object() || !entry.contains("root") || !entry.contains("state"))
        throw ConfigError("each class needs \"root\" and \"state\"");
      RootVector v = entry.at("root").get<RootVector>();
      if (v.ambient() != p.ambient()) throw ConfigError("class root " + to_string(v) + " has the wrong ambient");
      if (v.dc() != 0) throw ConfigError("class root " + to_string(v) + " must have zero delta coordinate");
      if (!cfg.states.emplace(v, class_state_from_json(entry.at("state"))).second)
        throw ConfigError("class " + to_string(v) + " listed twice");
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(at + e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(at + e.what());
    }
  }
  for (const auto& d : rs.real_dot_roots()) {
    if (cfg.states.count(d)) continue;
    auto it = cfg.states.find(-d);
    if (it != cfg.states.end() && it->second.kind == StateKind::Hybrid)
      cfg.states.emplace(d, ClassState::hybrid(it->second.profile.mirrored()));
    else
      throw ConfigError("no state for class " + to_string(d) + " and none is forced by symmetry");
  }
  return cfg;
}

/// Evaluates a shadow configuration against its root system.
class Shadow {
 public:
  explicit Shadow(ShadowConfig cfg) : cfg_(std::move(cfg)), rs_(std::make_shared<RootSystem>(cfg_.params)) {}
  Shadow(ShadowConfig cfg, std::shared_ptr<const RootSystem> rs) : cfg_(std::move(cfg)), rs_(std::move(rs)) {}

  const ShadowConfig& config() const { return cfg_; }
  const RootSystem& roots() const { return *rs_; }

  // --- validation --------------------------------------------------------

  Verdict validate() const {
    Verdict v{"validate", 0, {}};
    const auto real = rs_->real_dot_roots();
    for (const auto& [dot, st] : cfg_.states) {
      ++v.checks;
      if (!std::binary_search(real.begin(), real.end(), dot) || dot.is_zero())
        v.fail("class key is not a nonzero real dot root", to_string(dot));
    }
    for (const auto& d : real) {
      ++v.checks;
      if (!cfg_.states.count(d)) v.fail("states not total", to_string(d));
    }
    if (!v.ok()) return v;
    for (const auto& d : real) {
      const auto& s = cfg_.state(d);
      const auto& sn = cfg_.state(-d);
      if (s.kind != StateKind::Hybrid) continue;
      ++v.checks;
      if (sn.kind != StateKind::Hybrid) {
        v.fail("(a) hybrid states are +- symmetric", to_string(d) + " is " + to_string(s) + " but " + to_string(-d) +
                                                         " is " + to_string(sn));
      } else if (auto n = profile_mismatch(d, s.profile, sn.profile)) {
        v.fail("(a) hybrid profiles agree across the +- pair",
               to_string(d) + " " + to_string(s) + " vs " + to_string(-d) + " " + to_string(sn) + " disagree at " + *n);
      }
    }
    for (const auto& d : real) {
      if (!class_has_odd_root(d)) continue;
      RootVector d2 = 2 * d;
      if (!rs_->is_dot_root(d2)) continue;
      ++v.checks;
      const auto& s = cfg_.state(d);
      const auto& s2 = cfg_.state(d2);
      if (s.kind != StateKind::Hybrid && s2.kind != s.kind)
        v.fail("(b) doubling preserves full states",
               to_string(d) + " is " + to_string(s) + " but " + to_string(d2) + " is " + to_string(s2));
    }
    return v;
  }

  // --- membership --------------------------------------------------------

  bool member_ln(const RootVector& v) const { return !member_in(v); }

  bool member_in(const RootVector& v) const {
    require_real(v);
    const auto& s = cfg_.state(dot_part(v));
    switch (s.kind) {
      case StateKind::FullLN:
        return false;
      case StateKind::FullIN:
        return true;
      case StateKind::Hybrid:
        break;
    }
    return s.profile.in_plus(v.dc());
  }

  bool is_hybrid_module() const {
    return std::all_of(cfg_.states.begin(), cfg_.states.end(),
                       [](const auto& kv) { return kv.second.kind == StateKind::Hybrid; });
  }
  bool is_tight() const { return !is_hybrid_module(); }

  /// On the window: R^ln meets R_0(i) in a nonempty proper subset of its real
  /// roots, for each nonempty component.
  Verdict hypothesis_main2(Coord mmax) const {
    Verdict v{"hypothesis", 0, {}};
    for (int i = 1; i <= 2; ++i) {
      if (!cfg_.params.has_component(i)) continue;
      ++v.checks;
      std::size_t total = 0, ln = 0;
      std::optional<RootVector> some_ln, some_in;
      for (const auto& r : rs_->enumerate_window(mmax)) {
        if (r.dot_is_zero() || !rs_->in_even_component(i, r)) continue;
        ++total;
        if (member_ln(r)) {
          ++ln;
          if (!some_ln) some_ln = r;
        } else if (!some_in) {
          some_in = r;
        }
      }
      std::string comp = "R0(" + std::to_string(i) + ")";
      if (ln == 0) v.fail("R^ln meets " + comp, "no ln root among " + std::to_string(total) + " real roots");
      if (ln == total) v.fail("R^ln is proper in " + comp, "all " + std::to_string(total) + " real roots are ln");
    }
    return v;
  }

  // --- the parabolic set -------------------------------------------------

  /// Membership of a real or imaginary root in P; depends only on the dot part.
  bool in_P(const RootVector& v) const {
    rs_->require_ambient(v);
    if (v.dot_is_zero()) {
      if (!rs_->is_root(v)) throw NotARoot("not a root: " + to_string(v));
      return true;
    }
    require_real(v);
    return dot_in_P(dot_part(v));
  }

  bool dot_in_P(const RootVector& dot) const {
    if (dot.is_zero()) return true;
    const auto& s = cfg_.state(dot);
    return s.kind != StateKind::FullIN || cfg_.state(-dot).kind == StateKind::FullIN;
  }

  /// Cover and closure of P on the window |dc| <= mmax. Membership is constant
  /// along classes, so the check runs over pairs of classes and looks for a
  /// concrete window witness whenever the class-level test fails.
  Verdict check_P(Coord mmax) const {
    Verdict v{"check-P", 0, {}};
    const auto real = rs_->real_dot_roots();
    for (const auto& d : real) {
      ++v.checks;
      if (!dot_in_P(d) && !dot_in_P(-d)) {
        auto w = window_member(d, mmax);
        if (w) v.fail("P u -P covers", to_string(*w));
      }
    }
    std::vector<RootVector> inP;
    for (const auto& d : real)
      if (dot_in_P(d)) inP.push_back(d);
    for (const auto& a : inP)
      for (const auto& b : inP) {
        RootVector s = a + b;
        if (s.is_zero() || !std::binary_search(real.begin(), real.end(), s)) continue;
        ++v.checks;
        if (dot_in_P(s)) continue;
        if (auto w = sum_witness(a, b, mmax))
          v.fail("P is closed", to_string(w->first) + " + " + to_string(w->second) + " = " +
                                    to_string(w->first + w->second) + " is not in P");
      }
    return v;
  }

 private:
  void require_real(const RootVector& v) const {
    rs_->require_ambient(v);
    if (v.dot_is_zero() || !rs_->is_root(v) || rs_->classify(v).cls != RootClass::Real)
      throw NotARealRoot("not a nonzero real root: " + to_string(v));
  }

  bool class_has_odd_root(const RootVector& d) const {
    ProgressionSet s = rs_->s_set(d);
    for (Coord n = 0; n < s.modulus(); ++n)
      if (s.contains(n) && !rs_->is_even_root(d.with_dc(n))) return true;
    return false;
  }

  std::optional<std::string> profile_mismatch(const RootVector& d, const HybridProfile& p, const HybridProfile& q) const {
    ProgressionSet sp = rs_->s_set(d), sn = rs_->s_set(-d);
    Coord bound = std::max(std::abs(p.m), std::abs(q.m)) + 8;
    for (Coord n = -bound; n <= bound; ++n) {
      if (sp.contains(n) && p.in_plus(n) != q.in_minus(n)) return to_string(d.with_dc(n));
      if (sn.contains(n) && p.in_minus(n) != q.in_plus(n)) return to_string((-d).with_dc(n));
    }
    return std::nullopt;
  }

  std::optional<RootVector> window_member(const RootVector& d, Coord mmax) const {
    ProgressionSet s = rs_->s_set(d);
    for (Coord n = 0; n <= mmax; ++n) {
      if (s.contains(n)) return d.with_dc(n);
      if (s.contains(-n)) return d.with_dc(-n);
    }
    return std::nullopt;
  }

  std::optional<std::pair<RootVector, RootVector>> sum_witness(const RootVector& a, const RootVector& b,
                                                               Coord mmax) const {
    ProgressionSet sa = rs_->s_set(a), sb = rs_->s_set(b), ss = rs_->s_set(a + b);
    for (Coord m1 = -mmax; m1 <= mmax; ++m1) {
      if (!sa.contains(m1)) continue;
      for (Coord m2 = -mmax; m2 <= mmax; ++m2)
        if (sb.contains(m2) && std::abs(m1 + m2) <= mmax && ss.contains(m1 + m2)) return {{a.with_dc(m1), b.with_dc(m2)}};
    }
    return std::nullopt;
  }

  ShadowConfig cfg_;
  std::shared_ptr<const RootSystem> rs_;
};

inline Verdict validate(const ShadowConfig& cfg) { return Shadow(cfg).validate(); }
inline bool member_ln(const ShadowConfig& cfg, const RootVector& v) { return Shadow(cfg).member_ln(v); }
inline bool member_in(const ShadowConfig& cfg, const RootVector& v) { return Shadow(cfg).member_in(v); }
inline bool is_tight(const ShadowConfig& cfg) { return Shadow(cfg).is_tight(); }
inline bool is_hybrid_module(const ShadowConfig& cfg) { return Shadow(cfg).is_hybrid_module(); }
inline Verdict check_P(const ShadowConfig& cfg, Coord mmax) { return Shadow(cfg).check_P(mmax); }

/// Uniform config: every class gets the same state (a hybrid profile is
/// mirrored onto the negative of each canonical class).
inline ShadowConfig uniform_config(const AlgebraParams& p, const ClassState& s) {
  RootSystem rs(p);
  ShadowConfig cfg{p, {}};
  for (const auto& d : rs.real_dot_roots()) {
    if (s.kind == StateKind::Hybrid && -d < d)
      cfg.states.emplace(d, ClassState::hybrid(s.profile.mirrored()));
    else
      cfg.states.emplace(d, s);
  }
  return cfg;
}

}  // namespace twaffine
