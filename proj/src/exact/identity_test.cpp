#include "gztoda/exact/identity_test.hpp"

#include <algorithm>
#include <random>

namespace gztoda::exact {

std::vector<ExactScalar> random_point(std::size_t nvars, uint64_t& state, long height) {
  std::mt19937_64 rng(state);
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, std::max(1L, height));
  std::vector<ExactScalar> pt;
  pt.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    pt.emplace_back(q);
  }
  state = rng();
  return pt;
}

namespace {

std::string shift_key(const Shift& k) { return shift_string(k, nullptr); }
std::string unit_key(const int&) { return "value"; }

}  // namespace

RandomTestResult identity_test_random(const DifferenceOperator& lhs, const DifferenceOperator& rhs,
                                      const RandomTestOptions& opt) {
  if (!same_table(lhs.vars(), rhs.vars())) throw Error(ErrorCode::VarMismatch, "operators over different tables");
  return identity_test_maps<Shift>(lhs.terms(), rhs.terms(), lhs.vars()->size(), opt, &shift_key);
}

RandomTestResult identity_test_random(const RatFunc& lhs, const RatFunc& rhs, std::size_t nvars,
                                      const RandomTestOptions& opt) {
  std::map<int, RatFunc> a{{0, lhs}};
  std::map<int, RatFunc> b{{0, rhs}};
  return identity_test_maps<int>(a, b, nvars, opt, &unit_key);
}

}  // namespace gztoda::exact
