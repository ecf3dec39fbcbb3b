#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gztoda/exact/diffop.hpp"

namespace gztoda::exact {

struct RandomTestOptions {
  int trials = 10;
  uint64_t seed = 0;
  long height = 10000;
  int max_resamples = 100;
};

struct RandomTestResult {
  bool equal = true;
  int trials_run = 0;
  std::vector<ExactScalar> witness;  // first distinguishing point
  std::string witness_key;           // term (shift) where the values differ
};

/// Random point with entries p/q, |p| <= height, 1 <= q <= height.
std::vector<ExactScalar> random_point(std::size_t nvars, uint64_t& state, long height);

/// Compares two coefficient maps at random rational points. Keys are rendered with key_name.
template <class Key>
RandomTestResult identity_test_maps(const std::map<Key, RatFunc>& lhs, const std::map<Key, RatFunc>& rhs,
                                    std::size_t nvars, const RandomTestOptions& opt,
                                    std::string (*key_name)(const Key&));

RandomTestResult identity_test_random(const DifferenceOperator& lhs, const DifferenceOperator& rhs,
                                      const RandomTestOptions& opt);

/// Single rational functions.
RandomTestResult identity_test_random(const RatFunc& lhs, const RatFunc& rhs, std::size_t nvars,
                                      const RandomTestOptions& opt);

}  // namespace gztoda::exact

#include "gztoda/exact/identity_test_impl.hpp"
