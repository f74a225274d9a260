#pragma once

#include <nlohmann/json.hpp>

#include "ceresa/elliptic.hpp"
#include "ceresa/picard.hpp"
#include "ceresa/quartic.hpp"
#include "ceresa/rat.hpp"
#include "ceresa/repcrit.hpp"
#include "ceresa/strata.hpp"

// JSON shapes used by the CLI and fixture files. Rationals are always the
// strings "p/q" or "p".

namespace ceresa {

using json = nlohmann::json;

json to_json(const Rat& r);
Rat rat_from_json(const json& j);

/// {"a": "p/q", "b": "p/q", "c": "p/q"}
json to_json(const DepressedQuartic& q);
DepressedQuartic quartic_from_json(const json& j);

/// {"I", "J", "disc"}
json to_json(const QuarticInvariants& inv);

/// {"x": "p/q", "y": "p/q"} or "infinity"
json to_json(const ECPoint& p);
ECPoint point_from_json(const json& j);

/// {"A", "B"}
json to_json(const WeierstrassCurve& E);

/// {"curve", "I", "J", "disc", "P", "P_short",
///  "chow": {"torsion": bool, "point_order": n?}, "griffiths": "torsion"}
json verdict_to_json(const DepressedQuartic& curve, const CeresaVerdict& v);

/// {"group_order": n, "level": L, "classes": [{"size": s, "exps": [...]}, ...]}
json to_json(const ActionProfile& p);
/// Throws MalformedProfile on schema violations.
ActionProfile profile_from_json(const json& j);

json to_json(const StratumRecord& r);

}  // namespace ceresa
