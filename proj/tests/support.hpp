#pragma once

#include <fstream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "seating/profile.hpp"

namespace support {

inline oracle::Matrix to_matrix(const seating::Profile& p) {
  oracle::Matrix m(p.size(), std::vector<long long>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) m[i][j] = p(i, j);
  return m;
}

inline seating::Profile to_profile(const oracle::Matrix& m) {
  std::vector<std::vector<seating::Value>> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rows[i].assign(m[i].begin(), m[i].end());
  return seating::Profile::from_rows(rows);
}

inline oracle::Seats to_seats(const seating::Arrangement& a) { return {a.seats().begin(), a.seats().end()}; }

inline seating::Profile random_profile(std::size_t n, const std::vector<long long>& values, std::mt19937_64& rng) {
  return to_profile(oracle::random_matrix(n, values, rng));
}

inline seating::ClassStructure random_classes(std::size_t k, std::size_t max_size, const std::vector<long long>& values,
                                              std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  seating::ClassStructure c;
  c.sizes.resize(k);
  for (auto& s : c.sizes) s = size(rng);
  c.matrix.assign(k, std::vector<seating::Value>(k));
  for (auto& row : c.matrix)
    for (auto& v : row) v = values[pick(rng)];
  return c;
}

/// Relabels agents of p by a random permutation.
inline seating::Profile shuffled(const seating::Profile& p, std::mt19937_64& rng) {
  std::vector<seating::Agent> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return p.restricted(order);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace support
