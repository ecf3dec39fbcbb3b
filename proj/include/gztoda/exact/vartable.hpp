#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gztoda::exact {

inline constexpr std::size_t kMaxVars = 16;

enum class VarRole {
  Planck,      // hbar
  Spectral,    // lambda, mu
  Gz,          // gamma_{nj}
  QParam,      // s = q^{1/4}, t = qdual^{1/4}
  TorusV,      // v_{nj}
  TorusDualV,  // dual v_{nj}
  Generic,
};

struct VarInfo {
  std::string name;
  VarRole role = VarRole::Generic;
  int row = 0;
  int col = 0;
};

/// Ordered, immutable list of variables. The order fixes the monomial order.
class VarTable {
 public:
  explicit VarTable(std::vector<VarInfo> vars);

  /// hbar, the requested spectral variables, then gamma_{nj} for 1 <= j <= n <= N.
  static std::shared_ptr<const VarTable> gelfand_zetlin(int N, const std::vector<std::string>& spectral = {});

  std::size_t size() const { return vars_.size(); }
  const VarInfo& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<VarInfo>& vars() const { return vars_; }

  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index(const std::string& name) const;

  std::optional<std::size_t> gz(int n, int j) const;
  std::size_t hbar() const;
  std::size_t spectral(const std::string& name) const { return index(name); }

  int rank() const { return rank_; }

  bool operator==(const VarTable& o) const;

 private:
  std::vector<VarInfo> vars_;
  int rank_ = 0;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

bool same_table(const VarTablePtr& a, const VarTablePtr& b);

}  // namespace gztoda::exact
