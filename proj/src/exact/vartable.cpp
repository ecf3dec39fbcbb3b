#include "gztoda/exact/vartable.hpp"

#include <algorithm>
#include <set>

#include "gztoda/error.hpp"

namespace gztoda::exact {

VarTable::VarTable(std::vector<VarInfo> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) {
    throw Error(ErrorCode::SizeLimit, "variable table exceeds " + std::to_string(kMaxVars) + " entries");
  }
  std::set<std::string> names;
  for (const auto& v : vars_) {
    if (!names.insert(v.name).second) throw Error(ErrorCode::VarMismatch, "duplicate variable " + v.name);
    if (v.role == VarRole::Gz) rank_ = std::max(rank_, v.row);
  }
}

std::shared_ptr<const VarTable> VarTable::gelfand_zetlin(int N, const std::vector<std::string>& spectral) {
  std::vector<VarInfo> vars;
  vars.push_back({"hbar", VarRole::Planck});
  for (const auto& s : spectral) vars.push_back({s, VarRole::Spectral});
  for (int n = 1; n <= N; ++n) {
    for (int j = 1; j <= n; ++j) {
      vars.push_back({"g" + std::to_string(n) + std::to_string(j), VarRole::Gz, n, j});
    }
  }
  return std::make_shared<const VarTable>(std::move(vars));
}

std::optional<std::size_t> VarTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VarTable::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw Error(ErrorCode::VarMismatch, "unknown variable " + name);
  return *i;
}

std::optional<std::size_t> VarTable::gz(int n, int j) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].role == VarRole::Gz && vars_[i].row == n && vars_[i].col == j) return i;
  }
  return std::nullopt;
}

std::size_t VarTable::hbar() const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].role == VarRole::Planck) return i;
  }
  throw Error(ErrorCode::VarMismatch, "table has no Planck variable");
}

bool VarTable::operator==(const VarTable& o) const {
  if (vars_.size() != o.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& a = vars_[i];
    const auto& b = o.vars_[i];
    if (a.name != b.name || a.role != b.role || a.row != b.row || a.col != b.col) return false;
  }
  return true;
}

bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace gztoda::exact
