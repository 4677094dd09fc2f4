#pragma once

#include <functional>
#include <optional>

#include "hopfpar/groups.hpp"

namespace hopfpar {

/// Named construction available to the CLI and the test suites. Hopf-algebra
/// items carry a builder; pipeline items (factorizations, doubles, graded
/// modules, weak Hopf models) are dispatched by name in the verification
/// driver.
struct CatalogItem {
  std::string name;
  std::string kind;  // "hopf" or "pipeline"
  std::string description;
  FieldSpec default_field;
  std::function<HopfData(const FieldSpec&)> build;  // null for pipelines
  std::optional<GroupTable> group;  // set when the item is a group algebra
};

const std::vector<CatalogItem>& catalog();
const CatalogItem* catalog_find(const std::string& name);

/// Builds a Hopf catalog item over its default or an overridden field.
HopfData catalog_hopf(const std::string& name,
                      std::optional<FieldSpec> field = std::nullopt);

}  // namespace hopfpar
