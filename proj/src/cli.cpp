#include "hopfpar/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include "hopfpar/io.hpp"

namespace hopfpar {

namespace {

int finish(Report& rep, const CliOptions& opt, std::ostream& out,
           std::chrono::steady_clock::time_point start) {
  rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  out << rep.render();
  if (!opt.report_path.empty()) {
    std::ofstream f(opt.report_path, std::ios::binary);
    if (!f) {
      out << "cannot write report to " << opt.report_path << "\n";
      return 2;
    }
    f << rep.render();
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

Report suite_axioms(const HopfData& h) {
  Report rep = verify_hopf(h);
  rep.suite = "axioms";
  return rep;
}

Report suite_coradical(const HopfData& h) {
  Report rep;
  rep.suite = "coradical";
  Subspace h0 = coradical(h.coalgebra);
  rep.add("coradical-dim", true, "", std::to_string(h0.dim()));
  Filtration filt = coradical_filtration(h.coalgebra);
  for (std::size_t i = 0; i < filt.stages.size(); ++i)
    rep.add("H_" + std::to_string(i) + "-dim", true, "",
            std::to_string(filt.stages[i].dim()));
  rep.add("exhaustive-at", true, "", std::to_string(filt.exhaustive_at));
  rep.add("connected", true, "", is_connected(h.coalgebra) ? "true" : "false");
  rep.add("cosemisimple", true, "",
          is_cosemisimple(h.coalgebra) ? "true" : "false");
  ChevalleyResult ch = chevalley_quotient(h);
  rep.add("radical-hopf-ideal", true, "", ch.quotient ? "true" : "false");
  if (ch.quotient)
    rep.add("chevalley-quotient-dim", true, "",
            std::to_string(ch.quotient->quotient.dim()));
  return rep;
}

Report suite_par(const HopfData& h, std::size_t degree,
                 const GroupTable* group_oracle) {
  Report rep;
  rep.suite = "par";
  TruncatedQuotient t = truncated_hpar(h, degree);
  rep.merge(stabilization_report(t));
  if (t.stabilized()) {
    rep.add("hpar-dim", true, "", std::to_string(t.dim()));
    PartialRep br = bracket_rep(h, t);
    rep.merge(br.verified, "bracket");
    forgetful_map(h, t);  // throws unless it splits the bracket
    rep.add("forgetful-splits", true);
  }
  if (group_oracle) {
    GroupoidGamma gamma = gamma_groupoid(*group_oracle);
    rep.add("groupoid-arrows", true, "", std::to_string(gamma.size()));
    if (t.stabilized()) {
      rep.add("groupoid-dim-agrees", gamma.size() == t.dim());
      GroupoidAlgebra ga = groupoid_algebra(gamma, h.field());
      iso_kparG(ga, t, h);  // throws unless mutually inverse
      rep.add("groupoid-iso", true);
    }
  }
  return rep;
}

Report pipeline_s3_factorization(const FieldSpec& f) {
  Report rep;
  rep.suite = "s3-factorization";
  GroupTable s3 = GroupTable::symmetric3();
  const std::vector<std::size_t> m_elems{0, 1, 2};  // C3
  const std::vector<std::size_t> l_elems{0, 3};     // C2
  TwistMap r = exact_factorization_twist(s3, m_elems, l_elems, f);
  Report flags = check_twist(r);
  rep.merge(flags, "twist");

  SmashAlgebra smash = build_smash(r);
  rep.add("smash-is-hopf", smash.hopf.has_value());
  // multiplication map kC3 # kC2 -> kS3
  HopfData ks3 = group_algebra(s3, f);
  Matrix mu(f, 6, 6);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      mu.at(s3.mul(m_elems[a], l_elems[b]), a * 2 + b) = Scalar::one(f);
  Report iso = verify_morphism(hopf_morphism(*smash.hopf, ks3, mu),
                               MorphismKind::hopf);
  rep.merge(iso, "multiplication-iso");
  rep.add("multiplication-bijective", rref(mu).rank == 6);

  auto [actions, act_rep] = derive_actions(r);
  rep.merge(act_rep, "matched-pair");

  GammaMResult gm = gamma_M_groupoid(s3, m_elems, l_elems, f, 4);
  rep.add("gamma-M-arrows", gm.arrows.size() == 9, "",
          std::to_string(gm.arrows.size()));
  rep.merge(gm.verified, "gamma-M");
  return rep;
}

Report pipeline_drinfeld(const std::string& which, const FieldSpec& f) {
  Report rep;
  rep.suite = "drinfeld-" + which;
  HopfData h = which == "kC2" ? catalog_hopf("kC2", f) : sweedler_h4(f);
  DrinfeldResult d = drinfeld_twist(h);
  Report flags = check_twist(d.twist);
  rep.merge(flags, "twist");
  rep.merge(d.double_algebra.verified, "double");
  rep.add("double-dim", d.double_algebra.algebra.dim == h.dim() * h.dim(), "",
          std::to_string(d.double_algebra.algebra.dim));
  return rep;
}

Report pipeline_graded_v4_swap(const FieldSpec& f) {
  Report rep;
  rep.suite = "graded-v4-swap";
  GroupTable c2 = GroupTable::cyclic(2);
  GroupTable v4 = GroupTable::direct_product(c2, c2);
  // swap of the two factors: (i,j) -> (j,i)
  std::vector<std::vector<std::size_t>> f_on_g = {{0, 1, 2, 3}, {0, 2, 1, 3}};

  // eta = rank-one non-global partial rep of kC2 tensored with the identity
  HopfData kf = group_algebra(c2, f);
  const std::size_t dv = 4;
  AlgebraData endv = endomorphism_algebra(f, dv);
  Matrix eta_map(f, dv * dv, 2);
  for (std::size_t i = 0; i < dv; ++i)
    eta_map.at(i * dv + i, 0) = Scalar::one(f);  // eta(1) = id, eta(g) = 0
  PartialRep eta = make_partial_rep(kf, endv, eta_map);
  rep.merge(eta.verified, "eta");

  std::vector<Matrix> graders;
  for (std::size_t g = 0; g < 4; ++g) {
    Matrix p(f, dv, dv);
    p.at(g, g) = Scalar::one(f);
    graders.push_back(p);
  }
  TruncatedQuotient qf = truncated_hpar(kf, 4);
  GradedCompatResult res =
      graded_partial_compat(c2, v4, f_on_g, eta, graders, qf);
  rep.merge(res.report);
  rep.add("module-algebra-dim", res.smash && res.smash->dim == 12, "",
          res.smash ? std::to_string(res.smash->dim) : "none");
  return rep;
}

Report pipeline_weakhopf_v4star_c2(const FieldSpec& f) {
  Report rep;
  rep.suite = "weakhopf-v4star-c2";
  GroupTable c2 = GroupTable::cyclic(2);
  HopfData u = catalog_hopf("kV4*_char2", f);
  std::vector<Matrix> action;
  action.push_back(Matrix::identity(f, 4));
  Matrix swap(f, 4, 4);
  const std::size_t perm[4] = {0, 2, 1, 3};
  for (std::size_t i = 0; i < 4; ++i)
    swap.at(perm[i], i) = Scalar::one(f);
  action.push_back(swap);
  HopfCategoryResult w = hopf_category_weak_hopf(u, c2, action);
  rep.merge(w.verified, "W");
  rep.add("W-dim", w.weak.algebra.dim == 12, "",
          std::to_string(w.weak.algebra.dim));
  return rep;
}

Report pipeline_smash_v4star_c2(const FieldSpec& f, std::size_t degree) {
  Report rep;
  rep.suite = "smash-v4star-c2";
  GroupTable c2 = GroupTable::cyclic(2);
  HopfData u = catalog_hopf("kV4*_char2", f);
  HopfData kf = group_algebra(c2, f);

  // swap action of C2 on kV4*: p_g -> p_{swap(g)}
  Matrix action(f, 4, 2 * 4);
  const std::size_t perm[4] = {0, 2, 1, 3};
  for (std::size_t j = 0; j < 4; ++j) {
    action.at(j, 0 * 4 + j) = Scalar::one(f);
    action.at(perm[j], 1 * 4 + j) = Scalar::one(f);
  }
  TwistMap r = module_algebra_twist(kf, u, action);
  Report flags = check_twist(r);
  rep.merge(flags, "twist");

  SmashAlgebra smash = build_smash(r);
  rep.add("smash-is-hopf", smash.hopf.has_value());
  rep.add("smash-dim", smash.algebra.dim == 8, "",
          std::to_string(smash.algebra.dim));

  TruncatedQuotient smash_par = truncated_hpar(*smash.hopf, degree);
  rep.merge(stabilization_report(smash_par), "smash-par");
  rep.add("smash-par-dim", smash_par.stabilized() && smash_par.dim() == 12, "",
          smash_par.stabilized() ? std::to_string(smash_par.dim())
                                 : "not stabilized");
  TruncatedQuotient qf = truncated_hpar(kf, 4);
  TruncatedQuotient ucert = truncated_hpar(u, 4);
  rep.add("U-no-partiality",
          ucert.stabilized() && ucert.dim() == 4 &&
              rref(ucert.bracket()).rank == 4);
  LiftedTwist t = lift_twist_T(r, qf);
  rep.merge(t.verified, "lift");
  ParSmashIso iso = par_of_smash_iso(u, kf, r, *smash.hopf, smash_par, qf, t,
                                     ucert);
  rep.merge(iso.verified, "iso");
  return rep;
}

Report run_pipeline(const std::string& name, const FieldSpec& f,
                    std::size_t degree) {
  if (name == "s3_factorization") return pipeline_s3_factorization(f);
  if (name == "drinfeld_kc2") return pipeline_drinfeld("kC2", f);
  if (name == "drinfeld_h4") return pipeline_drinfeld("h4", f);
  if (name == "graded_v4_swap") return pipeline_graded_v4_swap(f);
  if (name == "weakhopf_v4star_c2") return pipeline_weakhopf_v4star_c2(f);
  if (name == "smash_v4star_c2") return pipeline_smash_v4star_c2(f, degree);
  throw std::invalid_argument("unknown pipeline: " + name);
}

std::optional<FieldSpec> parse_field_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "q") return FieldSpec{};
  if (text.rfind("fp:", 0) == 0)
    return FieldSpec(std::stoull(text.substr(3)));
  throw std::invalid_argument("bad --field value (want q or fp:<p>): " + text);
}

int cmd_catalog(std::ostream& out) {
  for (const auto& it : catalog())
    out << it.name << "  [" << it.kind << ", "
        << it.default_field.describe() << "]  " << it.description << "\n";
  return 0;
}

int cmd_verify(const std::string& name, const CliOptions& opt,
               std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const CatalogItem* item = catalog_find(name);
  if (!item) {
    out << "unknown catalog item: " << name << "\n";
    return 2;
  }
  std::optional<FieldSpec> field = parse_field_option(opt.field);
  Report rep;
  rep.suite = "verify-" + name;
  if (item->kind == "pipeline") {
    rep.merge(run_pipeline(name, field.value_or(item->default_field),
                           opt.degree));
  } else {
    HopfData h = catalog_hopf(name, field);
    if (opt.suite == "axioms" || opt.suite == "all")
      rep.merge(suite_axioms(h), "axioms");
    if (opt.suite == "coradical" || opt.suite == "all")
      rep.merge(suite_coradical(h), "coradical");
    if (opt.suite == "par" || opt.suite == "all") {
      const GroupTable* oracle =
          (opt.oracle == "groupoid" && item->group) ? &*item->group : nullptr;
      rep.merge(suite_par(h, opt.degree, oracle), "par");
    }
  }
  return finish(rep, opt, out, start);
}

int cmd_par(const std::string& name, const CliOptions& opt, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const CatalogItem* item = catalog_find(name);
  if (!item || !item->build) {
    out << "unknown Hopf catalog item: " << name << "\n";
    return 2;
  }
  HopfData h = catalog_hopf(name, parse_field_option(opt.field));
  const GroupTable* oracle =
      (opt.oracle == "groupoid" && item->group) ? &*item->group : nullptr;
  Report rep = suite_par(h, opt.degree, oracle);
  rep.suite = "par-" + name;
  return finish(rep, opt, out, start);
}

int cmd_export(const std::string& name, const std::string& path,
               const CliOptions& opt, std::ostream& out) {
  try {
    HopfData h = catalog_hopf(name, parse_field_option(opt.field));
    write_hopf_file(h, path);
    out << "wrote " << name << " to " << path << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    out << e.what() << "\n";
    return 2;
  }
}

int cmd_import(const std::string& path, const CliOptions& opt,
               std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  HopfData h;
  try {
    h = read_hopf_file(path);
  } catch (const ParseError& e) {
    out << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << e.what() << "\n";
    return 2;
  }
  Report rep = suite_axioms(h);
  rep.suite = "import-" + path;
  return finish(rep, opt, out, start);
}

}  // namespace hopfpar
