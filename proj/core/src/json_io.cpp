#include "ceresa/json_io.hpp"

#include "ceresa/errors.hpp"

namespace ceresa {

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw DomainError("expected a rational \"p/q\", got " + j.dump());
}

json to_json(const DepressedQuartic& q) {
  return {{"a", to_json(q.a)}, {"b", to_json(q.b)}, {"c", to_json(q.c)}};
}

DepressedQuartic quartic_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("quartic must be an object");
  return {rat_from_json(j.at("a")), rat_from_json(j.at("b")), rat_from_json(j.at("c"))};
}

json to_json(const QuarticInvariants& inv) {
  return {{"I", to_json(inv.I)}, {"J", to_json(inv.J)}, {"disc", to_json(inv.disc)}};
}

json to_json(const ECPoint& p) {
  if (p.is_infinity()) return "infinity";
  return {{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

ECPoint point_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return ECPoint::infinity();
  if (!j.is_object()) throw DomainError("point must be \"infinity\" or {\"x\", \"y\"}");
  return {rat_from_json(j.at("x")), rat_from_json(j.at("y"))};
}

json to_json(const WeierstrassCurve& E) { return {{"A", to_json(E.A())}, {"B", to_json(E.B())}}; }

json verdict_to_json(const DepressedQuartic& curve, const CeresaVerdict& v) {
  json chow = {{"torsion", v.chow_torsion()}};
  if (v.point_order) chow["point_order"] = *v.point_order;
  return {
      {"curve", to_json(curve)},
      {"I", to_json(v.invariants.I)},
      {"J", to_json(v.invariants.J)},
      {"disc", to_json(v.invariants.disc)},
      {"P", to_json(v.point)},
      {"P_short", to_json(v.point_short)},
      {"chow", chow},
      {"griffiths", "torsion"},
  };
}

json to_json(const ActionProfile& p) {
  json classes = json::array();
  for (const auto& c : p.classes) classes.push_back({{"size", c.size}, {"exps", c.exps}});
  return {{"group_order", p.group_order}, {"level", p.level}, {"classes", classes}};
}

ActionProfile profile_from_json(const json& j) {
  try {
    ActionProfile p;
    p.group_order = j.at("group_order").get<std::uint64_t>();
    p.level = j.at("level").get<std::uint32_t>();
    for (const auto& c : j.at("classes")) {
      p.classes.push_back({c.at("size").get<std::uint64_t>(), c.at("exps").get<std::vector<std::int64_t>>()});
    }
    return p;
  } catch (const json::exception& e) {
    throw MalformedProfile(e.what());
  }
}

json to_json(const StratumRecord& r) {
  json children = json::array();
  for (auto c : r.closure_children) children.push_back(std::string(to_string(c)));
  json out = {
      {"label", std::string(to_string(r.label))},
      {"dim", r.dim},
      {"closure_children", children},
      {"in_vrat", r.in_vrat},
      {"in_valg", r.in_valg},
  };
  out["gap_label"] = r.gap_label ? json(*r.gap_label) : json(nullptr);
  out["model_equation"] = r.model_equation ? json(*r.model_equation) : json(nullptr);
  return out;
}

}  // namespace ceresa
