#include "seating/randomized.hpp"

#include <cmath>
#include <random>

#include "seating/dynamics.hpp"
#include "seating/exact.hpp"

namespace seating {

namespace {

/// Decimal digits only; cpp_int would read a leading 0 as octal.
boost::multiprecision::cpp_int decimal(std::string digits) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a decimal integer");
  const auto nz = digits.find_first_not_of('0');
  return boost::multiprecision::cpp_int(nz == std::string::npos ? std::string("0") : digits.substr(nz));
}

}  // namespace

Rational parse_probability(const std::string& text) {
  Rational p;
  try {
    const auto slash = text.find('/');
    const auto dot = text.find('.');
    if (slash != std::string::npos) {
      p = Rational(decimal(text.substr(0, slash)), decimal(text.substr(slash + 1)));
    } else if (dot != std::string::npos) {
      const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      boost::multiprecision::cpp_int den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      p = Rational(decimal(digits), den);
    } else {
      p = Rational(decimal(text));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse probability '" + text + "'");
  }
  if (p < 0 || p > 1) throw std::invalid_argument("probability must lie in [0,1]");
  return p;
}

namespace {

/// x < p * 2^64 for a uniform 64-bit x, computed exactly.
struct Threshold {
  boost::multiprecision::cpp_int num, den;
  explicit Threshold(const Rational& p) : num(numerator(p) << 64), den(denominator(p)) {}
  bool hit(std::uint64_t x) const { return boost::multiprecision::cpp_int(x) * den < num; }
};

Profile sample_with(std::size_t n, const Threshold& th, std::mt19937_64& rng) {
  Profile q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && th.hit(rng())) q.set(i, j, 1);
  return q;
}

}  // namespace

Profile sample_profile(const GnpSpec& spec) {
  if (spec.p < 0 || spec.p > 1) throw std::invalid_argument("probability must lie in [0,1]");
  std::mt19937_64 rng(spec.seed);
  return sample_with(spec.n, Threshold(spec.p), rng);
}

Rational blocking_probability(const Rational& p, bool near) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability must lie in [0,1]");
  const Rational q = 1 - p;
  if (near) return p * p * q * q;
  const Rational one_side = 2 * p * p * p * q + 2 * p * q * q * q + p * p * q * q;
  return one_side * one_side;
}

double lll_constant() { return 1.0 / std::sqrt(96.0 * std::exp(1.0)); }

std::optional<double> lll_bound(std::size_t n, double p) {
  if (n < 3) return std::nullopt;
  const double c = lll_constant() / std::sqrt(static_cast<double>(n));
  if (!(p <= c || p >= 1.0 - c)) return std::nullopt;
  const double nn = static_cast<double>(n);
  return std::exp(std::lgamma(nn) - std::log(2.0) - nn * (nn - 1) / (2 * nn - 3));
}

namespace {

std::uint64_t trial_count(std::size_t n, const Threshold& th, std::uint64_t seed, std::size_t t) {
  std::mt19937_64 rng(derive_seed(seed, t));
  return count_stable_serial(sample_with(n, th, rng), Topology::cycle(n));
}

StableEstimate summarize(std::vector<std::uint64_t> counts) {
  StableEstimate e;
  // Exact integer sums, one conversion at the end.
  boost::multiprecision::cpp_int sum = 0, sq = 0;
  for (auto c : counts) {
    sum += c;
    sq += boost::multiprecision::cpp_int(c) * c;
  }
  const std::size_t t = counts.size();
  if (t > 0) {
    const Rational mean(sum, t);
    e.mean = static_cast<double>(mean);
    if (t > 1) {
      const Rational var = (Rational(sq) - Rational(sum) * mean) / (t - 1);
      e.std_error = std::sqrt(static_cast<double>(var) / static_cast<double>(t));
    }
  }
  e.counts = std::move(counts);
  return e;
}

void require_estimable(std::size_t n, const Rational& p) {
  if (n > kEstimateMaxAgents)
    throw LimitExceeded("estimate_expected_stable counts arrangements exactly; n=" + std::to_string(n) +
                        " exceeds " + std::to_string(kEstimateMaxAgents));
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 seats");
  if (p < 0 || p > 1) throw std::invalid_argument("probability must lie in [0,1]");
}

}  // namespace

StableEstimate estimate_expected_stable_serial(std::size_t n, const Rational& p, std::size_t trials,
                                               std::uint64_t seed) {
  require_estimable(n, p);
  const Threshold th(p);
  std::vector<std::uint64_t> counts(trials);
  for (std::size_t t = 0; t < trials; ++t) counts[t] = trial_count(n, th, seed, t);
  return summarize(std::move(counts));
}

StableEstimate estimate_expected_stable(std::size_t n, const Rational& p, std::size_t trials, std::uint64_t seed) {
  require_estimable(n, p);
  const Threshold th(p);
  std::vector<std::uint64_t> counts(trials);
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < static_cast<long>(trials); ++t)
    counts[t] = trial_count(n, th, seed, static_cast<std::size_t>(t));
  return summarize(std::move(counts));
}

}  // namespace seating
