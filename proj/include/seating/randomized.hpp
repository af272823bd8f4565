#pragma once

// Random binary preferences: each ordered pair is an approval with
// probability p, independently.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "seating/profile.hpp"

namespace seating {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "3/10", "0.25" or "1".
Rational parse_probability(const std::string& text);

struct GnpSpec {
  std::size_t n = 0;
  Rational p = 0;
  std::uint64_t seed = 0;
};

Profile sample_profile(const GnpSpec& spec);

/// Probability that agents i and j form a blocking pair in the identity
/// cycle arrangement; `near` means cyclic seat distance at most 2.
Rational blocking_probability(const Rational& p, bool near);

/// (96e)^(-1/2)
double lll_constant();

/// (n-1)!/2 * exp(-n(n-1)/(2n-3)) when p <= C/sqrt(n) or p >= 1 - C/sqrt(n).
std::optional<double> lll_bound(std::size_t n, double p);

struct StableEstimate {
  double mean = 0;
  double std_error = 0;
  std::vector<std::uint64_t> counts;  ///< stable cycle arrangements per trial
};

inline constexpr std::size_t kEstimateMaxAgents = 9;

/// Trial t samples with seed derive_seed(seed, t) and counts stable cycle
/// arrangements exactly. Throws LimitExceeded for n > 9.
StableEstimate estimate_expected_stable(std::size_t n, const Rational& p, std::size_t trials, std::uint64_t seed);
StableEstimate estimate_expected_stable_serial(std::size_t n, const Rational& p, std::size_t trials,
                                               std::uint64_t seed);

}  // namespace seating
