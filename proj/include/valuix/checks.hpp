#pragma once

// Deterministic random instances and the property suites run by
// `valuix check`. Every suite is a pure function of (seed, options).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "valuix/divisors.hpp"
#include "valuix/toric.hpp"
#include "valuix/valuation.hpp"

namespace valuix {

namespace gen {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);  // inclusive
Rat positive_rat(Rng& rng, std::int64_t num_max, std::int64_t den_max);
/// Positive weights with minimum exactly 1.
RatVec normalized_weights(Rng& rng, std::size_t n);
/// Primary monomial ideal with at most `max_gens` generators and exponents <= max_exp.
MonomialIdeal primary_ideal(Rng& rng, std::size_t n, std::int64_t max_exp = 6, std::size_t max_gens = 5);
MonomialIdeal ideal(Rng& rng, std::size_t n, bool primary, std::int64_t max_exp = 4);
/// Nontrivial region with rational generators.
NewtonRegion region(Rng& rng, std::size_t n);
PshGerm germ(Rng& rng, std::size_t n, bool primary);
/// Orthant subdivided at a few random interior rays.
Fan fan(Rng& rng, std::size_t n, std::size_t extra_rays);
/// Nonpositive PL function vanishing on the coordinate rays.
PLFunction pl_function(Rng& rng, const Fan& f);
ShiftedMonomialValuation shifted_valuation(Rng& rng, std::size_t n);
Polynomial polynomial(Rng& rng, std::size_t n, std::int64_t max_exp = 3, std::size_t terms = 3);

}  // namespace gen

struct CheckInstance {
  std::string label;
  bool ok = true;
  std::vector<std::string> witnesses;  // exact counterexamples when !ok
  std::vector<std::string> notes;      // reported facts that are not asserted
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckInstance> instances;
  bool ok() const;
};

struct CheckOptions {
  std::size_t count = 0;  // number of instances; 0 selects the suite default
  std::size_t dim = 0;    // 0 alternates between n = 2 and n = 3
  std::int64_t max_degree = kDefaultMaxDegree;
};

const std::vector<std::string>& check_suites();
/// Throws Error for an unknown suite name.
CheckReport run_check(const std::string& suite, std::uint64_t seed, const CheckOptions& options = {});

}  // namespace valuix
