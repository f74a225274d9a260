#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ceresa {

/// Automorphism-group strata X_G of non-hyperelliptic genus-3 curves.
enum class StratumLabel { Id, C2, C2xC2, C3, D4, S3, C6, G16, S4, C9, G48, G96, GL3F2 };

std::string_view to_string(StratumLabel label);
/// Throws LookupError for unknown names.
StratumLabel parse_stratum_label(std::string_view name);

struct StratumRecord {
  StratumLabel label;
  int dim;
  /// Strata one step down the closure diagram (contained in the closure).
  std::vector<StratumLabel> closure_children;
  /// X_G lies in the locus where the Ceresa class vanishes in CH_1 (tensor Q).
  bool in_vrat;
  /// X_G lies in the locus where it vanishes in the Griffiths group.
  bool in_valg;
  std::optional<std::string> gap_label;
  std::optional<std::string> model_equation;
};

using StrataTable = std::vector<StratumRecord>;

/// The shipped table: 13 strata with dimensions, closure diagram and
/// vanishing verdicts.
const StrataTable& strata_table();

/// Throws LookupError when the label is absent.
const StratumRecord& stratum_info(StratumLabel label, const StrataTable& table = strata_table());
const StratumRecord& stratum_info(std::string_view label, const StrataTable& table = strata_table());

/// A known fact about one stratum, used to re-derive the verdicts.
struct StratumEvidence {
  enum class Kind { RatHolds, RatFails, AlgHolds, AlgFails };
  StratumLabel label;
  Kind kind;
  std::string source;
};

/// The facts the shipped verdicts rest on (one member with non-torsion
/// Ceresa class, or a whole-stratum vanishing criterion).
const std::vector<StratumEvidence>& strata_evidence();

/// Checks a table:
///   - in_vrat implies in_valg on every record;
///   - for every closure edge G -> H, in_vrat(G) implies in_vrat(H), and
///     likewise for in_valg;
///   - the flags agree with `evidence` propagated through the closure
///     (vanishing spreads down to smaller strata, non-vanishing up to larger
///     ones) wherever that propagation decides them.
/// Evidence about labels absent from the table is ignored.
bool verdict_consistency(const StrataTable& table = strata_table(),
                         const std::vector<StratumEvidence>& evidence = strata_evidence());

/// Human-readable reasons for a failed verdict_consistency (empty if it passes).
std::vector<std::string> verdict_inconsistencies(
    const StrataTable& table = strata_table(),
    const std::vector<StratumEvidence>& evidence = strata_evidence());

}  // namespace ceresa
