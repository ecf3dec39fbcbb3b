#pragma once

#include <random>
#include <set>

#include "gztoda/error.hpp"

namespace gztoda::exact {

template <class Key>
RandomTestResult identity_test_maps(const std::map<Key, RatFunc>& lhs, const std::map<Key, RatFunc>& rhs,
                                    std::size_t nvars, const RandomTestOptions& opt,
                                    std::string (*key_name)(const Key&)) {
  if (opt.trials < 1) throw Error(ErrorCode::Config, "at least one trial is required");
  std::set<Key> keys;
  for (const auto& [k, c] : lhs) keys.insert(k);
  for (const auto& [k, c] : rhs) keys.insert(k);
  auto value = [](const std::map<Key, RatFunc>& m, const Key& k, const std::vector<ExactScalar>& pt) {
    auto it = m.find(k);
    return it == m.end() ? ExactScalar(0) : it->second.evaluate(pt);
  };
  RandomTestResult res;
  uint64_t state = opt.seed;
  for (int t = 0; t < opt.trials; ++t) {
    int attempts = 0;
    while (true) {
      auto pt = random_point(nvars, state, opt.height);
      try {
        for (const auto& k : keys) {
          if (value(lhs, k, pt) != value(rhs, k, pt)) {
            res.equal = false;
            res.trials_run = t + 1;
            res.witness = pt;
            res.witness_key = key_name(k);
            return res;
          }
        }
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DivZero) throw;
        if (++attempts > opt.max_resamples) {
          throw Error(ErrorCode::DegenerateSampler, "denominators vanished on " + std::to_string(attempts) + " samples");
        }
      }
    }
    res.trials_run = t + 1;
  }
  return res;
}

}  // namespace gztoda::exact
