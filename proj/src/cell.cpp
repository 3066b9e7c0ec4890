#include "pathem/cell.hpp"

namespace pathem {

CellRegistry& CellRegistry::global() {
  static CellRegistry reg = [] {
    CellRegistry r;
    register_builtin_cells(r);
    return r;
  }();
  return reg;
}

void CellRegistry::register_kind(KindInfo info) {
  if (info.kind.empty()) {
    throw ConfigError("", "kind", "cell kind must be non-empty");
  }
  auto [it, inserted] = kinds_.emplace(info.kind, std::move(info));
  (void)it;
  if (!inserted) {
    throw ConfigError("", "kind", "cell kind \"" + it->first + "\" already registered");
  }
}

bool CellRegistry::has(std::string_view kind) const { return kinds_.find(kind) != kinds_.end(); }

const CellRegistry::KindInfo& CellRegistry::info(std::string_view kind) const {
  auto it = kinds_.find(kind);
  if (it == kinds_.end()) {
    throw NotFoundError("unknown cell kind \"" + std::string(kind) + "\"");
  }
  return it->second;
}

std::vector<std::string> CellRegistry::kinds() const {
  std::vector<std::string> out;
  out.reserve(kinds_.size());
  for (const auto& [k, v] : kinds_) out.push_back(k);
  return out;
}

std::unique_ptr<Cell> CellRegistry::make(std::string_view kind, const Json& config,
                                         const CellBuildContext& ctx) const {
  const KindInfo& ki = info(kind);
  auto diags = ki.validate(config);
  if (!diags.empty()) {
    for (auto& d : diags) {
      if (d.where.empty()) d.where = ctx.cell_id;
    }
    throw ConfigError(std::move(diags));
  }
  return ki.factory(config, ctx);
}

}  // namespace pathem
