#pragma once

// Human-readable and JSON renderings of a computation.

#include <optional>
#include <string>

#include "kummer/engine.hpp"
#include "kummer/oracle.hpp"

namespace kummer {

struct ReportSections {
  bool invariants = true;  ///< eps/e tables, partition, classes, degree tables
  bool sha_omega = true;
  bool sha = true;
};

struct ReportContext {
  std::optional<unsigned long long> seed;
  std::optional<OracleResult> oracle;
};

/// "[9, 27]"
std::string factor_list(const AbelianPGroup& g);

/// "U_0" when c is U_r, "{1,4}" otherwise.
std::string class_label(const InvariantTable& table, const IndexSet& c, unsigned r);

std::string render_table(const TowerSpec& spec, const Computation& comp, const ReportSections& sections = {},
                         const ReportContext& context = {});

/// Stable schema; keys appear in a fixed order so equal inputs give
/// byte-identical output. indent < 0 gives a single line.
std::string render_json(const TowerSpec& spec, const Computation& comp, const ReportSections& sections = {},
                        const ReportContext& context = {}, int indent = 2);

}  // namespace kummer
