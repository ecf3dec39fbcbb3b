#pragma once

#include <map>
#include <string>

#include "gztoda/exact/identity_test.hpp"
#include "gztoda/exact/special_state.hpp"
#include "gztoda/report.hpp"

namespace gztoda::exact {

/// lhs == rhs as operators, decided according to opts.mode. In Both mode a
/// disagreement between the exact and the randomized verdict is a failure.
Check check_operators(const std::string& name, const DifferenceOperator& lhs, const DifferenceOperator& rhs,
                      const VerifyOptions& opts);

Check check_ratfuncs(const std::string& name, const RatFunc& lhs, const RatFunc& rhs, const VarTable& vars,
                     const VerifyOptions& opts);

/// Coefficient maps keyed by rendered basis words.
Check check_coefficient_maps(const std::string& name, const std::map<std::string, RatFunc>& lhs,
                             const std::map<std::string, RatFunc>& rhs, const VarTable& vars,
                             const VerifyOptions& opts);

/// Cores must agree structurally; prefactors are compared like RatFuncs.
Check check_states(const std::string& name, const SpecialState& lhs, const SpecialState& rhs,
                   const VerifyOptions& opts);

std::string point_string(const std::vector<ExactScalar>& pt, const VarTable* vars);
std::string truncate(std::string s, std::size_t n = 400);

}  // namespace gztoda::exact
