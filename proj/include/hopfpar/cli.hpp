#pragma once

#include <iosfwd>

#include "hopfpar/catalog.hpp"
#include "hopfpar/coradical.hpp"
#include "hopfpar/hpar.hpp"
#include "hopfpar/smash.hpp"

namespace hopfpar {

// generic per-item suites -----------------------------------------------------

Report suite_axioms(const HopfData& h);
/// Coradical, filtration stages, connectedness flags and the Chevalley
/// quotient outcome, as exact value items.
Report suite_coradical(const HopfData& h);
/// Truncation of k_par at the given degree with stabilization certificates;
/// for stabilized quotients the bracket axioms and the forgetful splitting;
/// optional groupoid cross-check for group algebras.
Report suite_par(const HopfData& h, std::size_t degree,
                 const GroupTable* group_oracle);

// pipeline items ---------------------------------------------------------------

Report pipeline_s3_factorization(const FieldSpec& f);
Report pipeline_drinfeld(const std::string& which, const FieldSpec& f);
Report pipeline_graded_v4_swap(const FieldSpec& f);
Report pipeline_weakhopf_v4star_c2(const FieldSpec& f);
Report pipeline_smash_v4star_c2(const FieldSpec& f, std::size_t degree);

/// Dispatches a pipeline catalog item by name.
Report run_pipeline(const std::string& name, const FieldSpec& f,
                    std::size_t degree);

// command built on the suites --------------------------------------------------

struct CliOptions {
  std::string field;        // "", "q", or "fp:<p>"
  std::size_t degree = 6;
  std::string oracle = "groupoid";  // or "none"
  std::string report_path;
  std::string suite = "all";
};

int cmd_catalog(std::ostream& out);
int cmd_verify(const std::string& name, const CliOptions& opt, std::ostream& out);
int cmd_par(const std::string& name, const CliOptions& opt, std::ostream& out);
int cmd_export(const std::string& name, const std::string& path,
               const CliOptions& opt, std::ostream& out);
int cmd_import(const std::string& path, const CliOptions& opt, std::ostream& out);

std::optional<FieldSpec> parse_field_option(const std::string& text);

}  // namespace hopfpar
