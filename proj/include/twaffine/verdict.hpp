#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace twaffine {

struct Failure {
  std::string check;
  std::string witness;
};

/// Outcome of an exhaustive or randomized check: how many instances were
/// examined and which of them failed. Failures carry concrete witnesses.
struct Verdict {
  std::string name;
  std::size_t checks = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }

  void fail(std::string check, std::string witness) { failures.push_back({std::move(check), std::move(witness)}); }

  /// Folds another verdict's counts and failures into this one.
  void absorb(const Verdict& other) {
    checks += other.checks;
    for (const auto& f : other.failures) failures.push_back({other.name + ": " + f.check, f.witness});
  }
};

inline void to_json(nlohmann::json& j, const Failure& f) { j = nlohmann::json{{"check", f.check}, {"witness", f.witness}}; }

inline void to_json(nlohmann::json& j, const Verdict& v) {
  j = nlohmann::json{{"suite", v.name}, {"checks", v.checks}, {"ok", v.ok()}, {"failures", v.failures}};
}

}  // namespace twaffine
