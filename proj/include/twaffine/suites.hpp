#pragma once

// Verification batteries shared by the command-line `verify` command and the
// acceptance runner.

#include <memory>
#include <vector>

#include "twaffine/parabolic.hpp"
#include "twaffine/sampling.hpp"

namespace twaffine::suites {

/// Root-system battery for one parameter set.
inline std::vector<Verdict> rootsys(const RootSystem& rs, Coord mmax) {
  std::vector<Verdict> out;
  out.push_back(rs.check_table_fidelity());
  out.push_back(rs.check_classification(mmax));
  out.push_back(rs.check_ns_sum(mmax));
  for (int i = 1; i <= 2; ++i) {
    out.push_back(rs.check_sum_property(i));
    out.push_back(rs.check_fini(i));
  }
  out.push_back(rs.check_ns_decompositions());
  out.push_back(rs.check_double_odd(mmax));
  return out;
}

/// Seeded tight configs through the whole shadow/parabolic pipeline.
inline Verdict pipeline(const std::shared_ptr<const RootSystem>& rs, Rng& rng, int samples, Coord mmax) {
  Verdict v{"pipeline", 0, {}};
  for (int n = 0; n < samples; ++n) {
    auto s = sample_tight_config(*rs, rng, mmax);
    ++v.checks;
    if (!s) {
      v.fail("sampling a tight config", rs->params().instance_name());
      continue;
    }
    auto res = run_pipeline(Shadow(s->cfg, rs), mmax);
    v.checks += res.verdict.checks;
    for (const auto& f : res.verdict.failures)
      v.fail(f.check, f.witness + " [config seeded from " + to_string(s->z1) + "]");
  }
  return v;
}

/// Mutated configs must be rejected by validate or check_P with a witness.
/// `examined` is incremented by the number of mutants tried.
inline Verdict mutants(const std::shared_ptr<const RootSystem>& rs, Rng& rng, int samples, Coord mmax,
                       int* examined = nullptr) {
  Verdict v{"mutants", 0, {}};
  int seen = 0;
  for (int n = 0; n < samples; ++n) {
    auto s = sample_tight_config(*rs, rng, mmax);
    if (!s) continue;
    std::optional<Mutant> m;
    switch (n % 3) {
      case 0:
        m = mutate_symmetry(*rs, s->cfg, rng, mmax);
        break;
      case 1:
        m = mutate_doubling(*rs, s->cfg, rng);
        if (m) break;
        [[fallthrough]];
      default:
        m = mutate_closure(*rs, s->cfg, rng, mmax);
    }
    if (!m) m = mutate_symmetry(*rs, s->cfg, rng, mmax);
    if (!m) continue;
    ++seen;
    ++v.checks;
    Shadow sh(m->cfg, rs);
    Verdict r = sh.validate();
    if (r.ok()) r = sh.check_P(mmax);
    if (r.ok())
      v.fail("mutant rejected", std::string(to_string(m->kind)) + ": " + m->description);
    else if (r.failures.front().witness.empty())
      v.fail("rejection carries a witness", std::string(to_string(m->kind)) + ": " + m->description);
  }
  if (examined) *examined += seen;
  return v;
}

/// Every element of Phi^+ decomposes over Pi, and the Phi window identity
/// holds, for random functionals.
inline Verdict pi_decomposition(const RootSystem& rs, Rng& rng, int samples, Coord mmax) {
  Verdict v{"pi-decomposition", 0, {}};
  for (int n = 0; n < samples; ++n) {
    Functional z = random_functional(rng, rs.ambient(), 0.2);
    auto ps = phi_pi(rs, z, mmax);
    v.absorb(ps.equal_check);
    v.absorb(check_pi_decomposition(ps, z));
  }
  return v;
}

/// Random functional -> half-space -> synthesized functional -> same half-space.
inline Verdict round_trip(const RootSystem& rs, int i, Rng& rng, int samples) {
  Verdict v{"round-trip(" + std::to_string(i) + ")", 0, {}};
  if (!rs.params().has_component(i)) return v;
  for (int n = 0; n < samples; ++n) {
    Functional z = random_functional(rng, rs.ambient(), 0.25);
    auto hs = half_space(rs, i, z);
    ++v.checks;
    auto par = is_parabolic(rs, hs);
    if (!par.ok()) {
      v.absorb(par);
      continue;
    }
    try {
      Functional zz = synthesize_functional(rs, hs);
      if (half_space(rs, i, zz).members != hs.members)
        v.fail("synthesized functional recovers the set", to_string(z) + " -> " + to_string(zz));
    } catch (const Infeasible& e) {
      v.fail("synthesis feasible", to_string(z) + ": " + e.what());
    }
  }
  return v;
}

}  // namespace twaffine::suites
