#include "ceresa/strata.hpp"

#include <array>
#include <map>

#include "ceresa/errors.hpp"

namespace ceresa {

namespace {

using L = StratumLabel;

constexpr std::array<std::pair<L, std::string_view>, 13> kNames{{
    {L::Id, "Id"},   {L::C2, "C2"},   {L::C2xC2, "C2xC2"}, {L::C3, "C3"},   {L::D4, "D4"},
    {L::S3, "S3"},   {L::C6, "C6"},   {L::G16, "G16"},     {L::S4, "S4"},   {L::C9, "C9"},
    {L::G48, "G48"}, {L::G96, "G96"}, {L::GL3F2, "GL3F2"},
}};

}  // namespace

std::string_view to_string(StratumLabel label) {
  for (const auto& [l, name] : kNames) {
    if (l == label) return name;
  }
  return "?";
}

StratumLabel parse_stratum_label(std::string_view name) {
  for (const auto& [l, n] : kNames) {
    if (n == name) return l;
  }
  throw LookupError("unknown stratum '" + std::string(name) + "'");
}

const StrataTable& strata_table() {
  static const StrataTable table = {
      {L::Id, 6, {L::C2, L::C3}, false, false, {}, {}},
      {L::C2, 4, {L::C2xC2, L::S3, L::C6}, false, false, {}, {}},
      {L::C2xC2, 3, {L::D4}, false, false, {}, {}},
      {L::C3, 2, {L::C6, L::C9}, false, true, {}, "y^3 = x^4 + ax^2 + bx + c"},
      {L::D4, 2, {L::G16, L::S4}, false, false, {}, {}},
      {L::S3, 2, {L::S4}, false, false, {}, {}},
      {L::C6, 1, {L::G48}, false, true, {}, "y^3 = x^4 + ax^2 + c"},
      {L::G16, 1, {L::G48, L::G96}, false, false, "(16,13)", {}},
      {L::S4, 1, {L::GL3F2, L::G96}, false, false, {}, {}},
      {L::C9, 0, {}, true, true, {}, "y^3 z = x^4 + x z^3"},
      {L::G48, 0, {}, true, true, "(48,33)", "y^3 z = x^4 + z^4"},
      {L::G96, 0, {}, false, false, "(96,64)", "x^4 + y^4 + z^4 = 0"},
      {L::GL3F2, 0, {}, false, false, {}, "x^3 y + y^3 z + z^3 x = 0"},
  };
  return table;
}

const StratumRecord& stratum_info(StratumLabel label, const StrataTable& table) {
  for (const auto& r : table) {
    if (r.label == label) return r;
  }
  throw LookupError("stratum '" + std::string(to_string(label)) + "' not in table");
}

const StratumRecord& stratum_info(std::string_view label, const StrataTable& table) {
  return stratum_info(parse_stratum_label(label), table);
}

const std::vector<StratumEvidence>& strata_evidence() {
  using K = StratumEvidence::Kind;
  static const std::vector<StratumEvidence> evidence = {
      {L::C3, K::AlgHolds,
       "Picard curves: Ceresa class torsion modulo algebraic equivalence; (wedge^3 V)^{C3} = 0"},
      {L::C9, K::RatHolds, "y^3 = x^4 + x: H^3(J)_prim^{C9} = 0"},
      {L::G48, K::RatHolds, "y^3 = x^4 + 1: H^3(J)^{G48} = 0"},
      {L::C6, K::RatFails, "bielliptic Picard curve y^3 = x^4 + x^2 + 1 has P_f of infinite order"},
      {L::G96, K::AlgFails, "Fermat quartic: Ceresa class of infinite order in the Griffiths group"},
      {L::GL3F2, K::AlgFails, "Klein quartic: Ceresa class of infinite order in the Griffiths group"},
  };
  return evidence;
}

namespace {

enum class Status { Unknown, Holds, Fails };

struct Derivation {
  std::map<L, Status> rat;
  std::map<L, Status> alg;
  std::vector<std::string> conflicts;
};

class Closure {
 public:
  explicit Closure(const StrataTable& table) {
    for (const auto& r : table) {
      present_[r.label] = true;
      for (L child : r.closure_children) {
        down_[r.label].push_back(child);
        up_[child].push_back(r.label);
      }
    }
  }

  bool present(L l) const { return present_.contains(l); }

  /// l together with everything reachable along `edges`.
  std::vector<L> reach(L start, bool downward) const {
    const auto& edges = downward ? down_ : up_;
    std::vector<L> out{start};
    std::map<L, bool> seen{{start, true}};
    for (std::size_t i = 0; i < out.size(); ++i) {
      auto it = edges.find(out[i]);
      if (it == edges.end()) continue;
      for (L next : it->second) {
        if (seen.emplace(next, true).second) out.push_back(next);
      }
    }
    return out;
  }

 private:
  std::map<L, bool> present_;
  std::map<L, std::vector<L>> down_;
  std::map<L, std::vector<L>> up_;
};

void mark(std::map<L, Status>& statuses, L l, Status s, std::string_view what,
          std::vector<std::string>& conflicts) {
  Status& cur = statuses[l];
  if (cur != Status::Unknown && cur != s) {
    conflicts.push_back("evidence conflict on " + std::string(what) + " for " +
                        std::string(to_string(l)));
  }
  cur = s;
}

Derivation derive(const Closure& closure, const std::vector<StratumEvidence>& evidence) {
  using K = StratumEvidence::Kind;
  Derivation d;
  for (const auto& ev : evidence) {
    if (!closure.present(ev.label)) continue;
    const bool holds = ev.kind == K::RatHolds || ev.kind == K::AlgHolds;
    // Vanishing on a stratum spreads to the strata in its closure;
    // a non-vanishing member spreads to every stratum whose closure holds it.
    for (L l : closure.reach(ev.label, holds)) {
      switch (ev.kind) {
        case K::RatHolds:
          mark(d.rat, l, Status::Holds, "V_rat", d.conflicts);
          mark(d.alg, l, Status::Holds, "V_alg", d.conflicts);
          break;
        case K::AlgHolds:
          mark(d.alg, l, Status::Holds, "V_alg", d.conflicts);
          break;
        case K::RatFails:
          mark(d.rat, l, Status::Fails, "V_rat", d.conflicts);
          break;
        case K::AlgFails:
          mark(d.alg, l, Status::Fails, "V_alg", d.conflicts);
          mark(d.rat, l, Status::Fails, "V_rat", d.conflicts);
          break;
      }
    }
  }
  return d;
}

}  // namespace

std::vector<std::string> verdict_inconsistencies(const StrataTable& table,
                                                 const std::vector<StratumEvidence>& evidence) {
  std::vector<std::string> problems;
  std::map<L, const StratumRecord*> by_label;
  for (const auto& r : table) by_label[r.label] = &r;

  for (const auto& r : table) {
    const std::string name(to_string(r.label));
    if (r.in_vrat && !r.in_valg) problems.push_back(name + ": in V_rat but not in V_alg");
    for (L child : r.closure_children) {
      auto it = by_label.find(child);
      if (it == by_label.end()) continue;
      const std::string cname(to_string(child));
      if (r.in_vrat && !it->second->in_vrat) {
        problems.push_back(name + " in V_rat but " + cname + " in its closure is not");
      }
      if (r.in_valg && !it->second->in_valg) {
        problems.push_back(name + " in V_alg but " + cname + " in its closure is not");
      }
    }
  }

  const Closure closure(table);
  Derivation d = derive(closure, evidence);
  problems.insert(problems.end(), d.conflicts.begin(), d.conflicts.end());
  for (const auto& r : table) {
    const std::string name(to_string(r.label));
    if (auto s = d.rat[r.label]; s != Status::Unknown && r.in_vrat != (s == Status::Holds)) {
      problems.push_back(name + ": V_rat flag contradicts the evidence");
    }
    if (auto s = d.alg[r.label]; s != Status::Unknown && r.in_valg != (s == Status::Holds)) {
      problems.push_back(name + ": V_alg flag contradicts the evidence");
    }
  }
  return problems;
}

bool verdict_consistency(const StrataTable& table, const std::vector<StratumEvidence>& evidence) {
  return verdict_inconsistencies(table, evidence).empty();
}

}  // namespace ceresa
