#include "hopfpar/catalog.hpp"

namespace hopfpar {

namespace {

std::vector<CatalogItem> make_catalog() {
  std::vector<CatalogItem> items;
  const FieldSpec q{};
  const FieldSpec f2{2};

  auto add_group = [&](const std::string& name, const GroupTable& g,
                       const FieldSpec& f, const std::string& desc) {
    items.push_back({name, "hopf", desc, f,
                     [g](const FieldSpec& fld) { return group_algebra(g, fld); },
                     g});
  };
  auto add_dual_group = [&](const std::string& name, const GroupTable& g,
                            const FieldSpec& f, const std::string& desc) {
    items.push_back({name, "hopf", desc, f,
                     [g](const FieldSpec& fld) {
                       return dual_group_algebra(g, fld);
                     },
                     std::nullopt});
  };

  add_group("trivial", GroupTable::trivial(), q, "trivial Hopf algebra k");
  add_group("kC2", GroupTable::cyclic(2), q, "group algebra of C2");
  add_group("kC3", GroupTable::cyclic(3), q, "group algebra of C3");
  add_group("kC4", GroupTable::cyclic(4), q, "group algebra of C4");
  add_group("kV4", GroupTable::direct_product(GroupTable::cyclic(2),
                                              GroupTable::cyclic(2)),
            q, "group algebra of C2 x C2");
  add_group("kS3", GroupTable::symmetric3(), q, "group algebra of S3");
  add_dual_group("kC2*", GroupTable::cyclic(2), q, "dual of kC2");
  add_dual_group("kC2*_char2", GroupTable::cyclic(2), f2,
                 "dual of kC2 over F_2 (connected)");
  add_dual_group("kV4*_char2",
                 GroupTable::direct_product(GroupTable::cyclic(2),
                                            GroupTable::cyclic(2)),
                 f2, "dual of k(C2 x C2) over F_2 (connected)");
  items.push_back({"sweedler_h4", "hopf",
                   "Sweedler's 4-dimensional Hopf algebra", q,
                   [](const FieldSpec& fld) { return sweedler_h4(fld); },
                   std::nullopt});

  items.push_back({"s3_factorization", "pipeline",
                   "exact factorization S3 = C3 C2: twist, smash, Gamma_M",
                   q, nullptr, std::nullopt});
  items.push_back({"drinfeld_kc2", "pipeline", "Drinfel'd double of kC2", q,
                   nullptr, std::nullopt});
  items.push_back({"drinfeld_h4", "pipeline", "Drinfel'd double of Sweedler H4",
                   q, nullptr, std::nullopt});
  items.push_back({"graded_v4_swap", "pipeline",
                   "V4-graded partial C2-modules along the factor swap", f2,
                   nullptr, std::nullopt});
  items.push_back({"weakhopf_v4star_c2", "pipeline",
                   "weak Hopf model W for U = kV4* over F_2, G = C2", f2,
                   nullptr, std::nullopt});
  items.push_back({"smash_v4star_c2", "pipeline",
                   "(kV4* # kC2)_par = kV4* # k_par C2 over F_2", f2, nullptr,
                   std::nullopt});
  return items;
}

}  // namespace

const std::vector<CatalogItem>& catalog() {
  static const std::vector<CatalogItem> items = make_catalog();
  return items;
}

const CatalogItem* catalog_find(const std::string& name) {
  for (const auto& it : catalog())
    if (it.name == name) return &it;
  return nullptr;
}

HopfData catalog_hopf(const std::string& name, std::optional<FieldSpec> field) {
  const CatalogItem* it = catalog_find(name);
  if (!it) throw std::invalid_argument("unknown catalog item: " + name);
  if (!it->build)
    throw std::invalid_argument(name + " is a pipeline item, not a Hopf algebra");
  return it->build(field.value_or(it->default_field));
}

}  // namespace hopfpar
