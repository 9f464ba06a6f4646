#pragma once

#include <string>
#include <variant>
#include <vector>

#include "genocchi/cfengine.hpp"

namespace genocchi {

/// Named coefficient scheme: either a J-fraction or an S-fraction with
/// closed-form generators, so arbitrary symbolic substitution stays possible.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::variant<JFractionSpec, SFractionSpec> spec;

  bool is_jfraction() const {
    return std::holds_alternative<JFractionSpec>(spec);
  }
  const JFractionSpec& jfraction() const {
    return std::get<JFractionSpec>(spec);
  }
  const SFractionSpec& sfraction() const {
    return std::get<SFractionSpec>(spec);
  }

  /// J entries expand directly; S entries expand as plain S-fractions.
  PowerSeries expand(int N) const;
};

std::vector<std::string> catalog_names();

/// Looks up a scheme; unknown names raise std::domain_error listing the
/// valid names.
CatalogEntry catalog(const std::string& name);

}  // namespace genocchi
