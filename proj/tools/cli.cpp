#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ceresa/elliptic.hpp"
#include "ceresa/errors.hpp"
#include "ceresa/json_io.hpp"
#include "ceresa/picard.hpp"
#include "ceresa/quartic.hpp"
#include "ceresa/repcrit.hpp"
#include "ceresa/scan.hpp"
#include "ceresa/strata.hpp"

namespace ceresa::cli {

namespace {

enum class Format { Text, Json, Csv };

const CLI::Validator kRational(
    [](std::string& value) -> std::string {
      try {
        (void)Rat::parse(value);
        return {};
      } catch (const DomainError&) {
        return "expected a rational p/q, got '" + value + "'";
      }
    },
    "RATIONAL");

std::string quartic_str(const DepressedQuartic& q) { return q.poly().str(); }

std::string doubled_model_str(const Rat& D) {
  return "y^2 = 4x^3" + std::string(D.sign() < 0 ? " - " : " + ") + abs(D).str();
}

std::string short_model_str(const WeierstrassCurve& E) {
  std::ostringstream os;
  os << "y^2 = x^3";
  if (!E.A().is_zero()) os << (E.A().sign() < 0 ? " - " : " + ") << abs(E.A()) << "x";
  if (!E.B().is_zero()) os << (E.B().sign() < 0 ? " - " : " + ") << abs(E.B());
  return os.str();
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Shared state for one invocation; each subcommand fills its own fields.
struct Invocation {
  std::string format = "text";
  std::string a, b, c;
  std::string A, B, x, y;
  std::string I, J, t;
  std::string profile;
  std::string criterion;
  std::uint64_t m = 0, da = 0, db = 0;
  std::string group;
  bool check = false;
  std::string a_range, b_range, c_range, out_file;
  unsigned threads = 0;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Text;
  }
};

int cmd_invariants(const Invocation& in, std::ostream& out) {
  const DepressedQuartic q{Rat::parse(in.a), Rat::parse(in.b), Rat::parse(in.c)};
  const QuarticInvariants inv = invariants(q);
  if (in.fmt() == Format::Json) {
    json j = to_json(inv);
    j["curve"] = to_json(q);
    emit_json(out, j);
  } else {
    out << "f = " << quartic_str(q) << '\n'
        << "I = " << inv.I << '\n'
        << "J = " << inv.J << '\n'
        << "disc = " << inv.disc << '\n';
  }
  return kOk;
}

void print_verdict_text(std::ostream& out, const DepressedQuartic& q, const CeresaVerdict& v) {
  out << "curve: y^3 = " << quartic_str(q) << '\n'
      << "I = " << v.invariants.I << ", J = " << v.invariants.J << ", disc = " << v.invariants.disc << '\n'
      << "P_f = " << v.point.str() << " on " << doubled_model_str(Rat(-27) * v.invariants.disc) << '\n';
  if (v.point_order) {
    out << "Chow: torsion (P_f has order " << *v.point_order << ")\n";
  } else {
    out << "Chow: non-torsion (P_f has infinite order)\n";
  }
  out << "Griffiths: torsion\n";
}

int cmd_decide(const Invocation& in, std::ostream& out) {
  const DepressedQuartic q{Rat::parse(in.a), Rat::parse(in.b), Rat::parse(in.c)};
  const CeresaVerdict v = decide(PicardCurve(q));
  if (in.fmt() == Format::Json) {
    emit_json(out, verdict_to_json(q, v));
  } else {
    print_verdict_text(out, q, v);
  }
  return kOk;
}

int cmd_torsion(const Invocation& in, std::ostream& out) {
  const WeierstrassCurve E(Rat::parse(in.A), Rat::parse(in.B));
  const ECPoint P(Rat::parse(in.x), Rat::parse(in.y));
  const auto order = torsion_order_q(E, P);
  if (in.fmt() == Format::Json) {
    json j = {{"curve", to_json(E)}, {"point", to_json(P)}, {"torsion", order.has_value()}};
    if (order) j["order"] = *order;
    emit_json(out, j);
  } else {
    out << P.str() << " on " << short_model_str(E) << ": ";
    if (order) {
      out << "order " << *order << '\n';
    } else {
      out << "infinite order\n";
    }
  }
  return kOk;
}

int cmd_family(const Invocation& in, std::ostream& out) {
  const Rat I = Rat::parse(in.I);
  const Rat J = Rat::parse(in.J);
  const Rat t = Rat::parse(in.t);
  const PicardCurve C = family_generate(I, J, t);
  const CeresaVerdict v = decide(C);
  if (in.fmt() == Format::Json) {
    emit_json(out, {{"I", to_json(I)},
                    {"J", to_json(J)},
                    {"t", to_json(t)},
                    {"g", to_json(family_cubic(I, J, t))},
                    {"quartic", to_json(C.quartic())},
                    {"verdict", verdict_to_json(C.quartic(), v)}});
  } else {
    out << "g(t) = " << family_cubic(I, J, t) << '\n';
    print_verdict_text(out, C.quartic(), v);
  }
  return kOk;
}

int cmd_e0_torsion(const Invocation& in, std::ostream& out) {
  const auto points = e0_rational_torsion();
  if (in.fmt() == Format::Json) {
    json pts = json::array();
    for (const auto& p : points) pts.push_back(to_json(p));
    emit_json(out, {{"curve", "y^2 = 4x^3 - 27"}, {"points", pts}});
  } else {
    out << "E_0: y^2 = 4x^3 - 27, rational torsion of order " << points.size() << '\n';
    for (const auto& p : points) out << "  " << p.str() << '\n';
  }
  return kOk;
}

int cmd_bielliptic(const Invocation& in, std::ostream& out) {
  const BiellipticTrace tr = bielliptic_trace(Rat::parse(in.a), Rat::parse(in.c));
  const Rat dprime = tr.source_constant;
  if (in.fmt() == Format::Json) {
    emit_json(out, {{"a", in.a},
                    {"c", in.c},
                    {"source_curve", to_json(WeierstrassCurve(Rat(0), dprime))},
                    {"Q", to_json(tr.q)},
                    {"image", to_json(tr.image)},
                    {"scaled", to_json(tr.scaled)},
                    {"P_short", to_json(tr.target)},
                    {"consistent", tr.matches}});
  } else {
    out << "Q_f = " << tr.q.str() << " on " << short_model_str(WeierstrassCurve(Rat(0), dprime)) << '\n'
        << "phi(Q_f) = " << tr.image.str() << " on "
        << short_model_str(WeierstrassCurve(Rat(0), Rat(-27) * dprime)) << '\n'
        << "scaled = " << tr.scaled.str() << ", P_f = " << tr.target.str() << '\n'
        << "consistent: " << (tr.matches ? "true" : "false") << '\n';
  }
  return tr.matches ? kOk : kDomain;
}

ActionProfile load_profile(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream f(source);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw MalformedProfile(source + ": " + e.what());
    }
    return profile_from_json(j);
  }
  return preset_profile(source);
}

int cmd_repcrit(const Invocation& in, std::ostream& out) {
  const ActionProfile profile = normalized(load_profile(in.profile));
  const bool want_a = in.criterion.empty() || in.criterion == "a";
  const bool want_b = in.criterion.empty() || in.criterion == "b";

  json j = {{"profile", in.profile}, {"genus", profile.dim()}};
  if (want_b) {
    const auto d = dim_inv_wedge3(profile, Space::V);
    j["dim_wedge3_V_inv"] = d;
    j["thm_b"] = d == 0;
  }
  if (want_a) {
    const PrimitiveH3 h = primitive_h3_invariants(profile);
    j["dim_H3_inv"] = h.wedge3_h1;
    j["dim_H1_inv"] = h.h1;
    j["dim_H3_prim_inv"] = h.primitive();
    j["thm_a"] = h.primitive() == 0;
  }

  if (in.fmt() == Format::Json) {
    emit_json(out, j);
    return kOk;
  }
  out << "profile " << in.profile << ": |G| = " << profile.group_order << ", dim V = " << profile.dim() << '\n';
  if (want_b) {
    out << "dim (wedge^3 V)^G = " << j["dim_wedge3_V_inv"].get<std::uint64_t>() << "; criterion b "
        << (j["thm_b"].get<bool>() ? "holds" : "fails") << '\n';
  }
  if (want_a) {
    out << "dim H^3(J)^G = " << j["dim_H3_inv"].get<std::uint64_t>()
        << ", dim H^1(J)^G = " << j["dim_H1_inv"].get<std::uint64_t>()
        << ", dim H^3(J)_prim^G = " << j["dim_H3_prim_inv"].get<std::uint64_t>() << "; criterion a "
        << (j["thm_a"].get<bool>() ? "holds" : "fails") << '\n';
  }
  return kOk;
}

int cmd_dihedral(const Invocation& in, std::ostream& out) {
  const auto genus = dihedral_genus(in.m, in.da, in.db);
  const bool vanishing = genus >= 3 && dihedral_vanishing(in.m, in.da, in.db);
  const auto triple = dihedral_triple(in.m, in.da, in.db);
  const ActionProfile p = dihedral_profile(in.m, in.da, in.db);
  if (in.fmt() == Format::Json) {
    json j = {{"m", in.m},        {"a", in.da},
              {"b", in.db},       {"genus", genus},
              {"vanishing", vanishing}, {"characters", p.classes.at(1 % p.classes.size()).exps}};
    j["triple"] = triple ? json(*triple) : json(nullptr);
    emit_json(out, j);
    return kOk;
  }
  out << "genus " << genus << "; ";
  if (genus < 3) {
    out << "criterion needs genus >= 3\n";
    return kOk;
  }
  out << "(⋀³V)^{D_" << in.m << "} ";
  if (vanishing) {
    out << "= 0: criterion holds\n";
  } else {
    out << "≠ 0: criterion fails (triple " << (*triple)[0] << '+' << (*triple)[1] << '+' << (*triple)[2] << ")\n";
  }
  return kOk;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

void print_strata_text(std::ostream& out, const std::vector<const StratumRecord*>& rows) {
  out << std::left << std::setw(7) << "group" << std::setw(5) << "dim" << std::setw(7) << "V_rat"
      << std::setw(7) << "V_alg" << std::setw(9) << "GAP" << std::setw(22) << "closure" << "model\n";
  for (const auto* r : rows) {
    std::string children;
    for (auto c : r->closure_children) {
      if (!children.empty()) children += ",";
      children += to_string(c);
    }
    out << std::left << std::setw(7) << to_string(r->label) << std::setw(5) << r->dim << std::setw(7)
        << yes_no(r->in_vrat) << std::setw(7) << yes_no(r->in_valg) << std::setw(9)
        << r->gap_label.value_or("-") << std::setw(22) << (children.empty() ? "-" : children)
        << r->model_equation.value_or("-") << '\n';
  }
}

int cmd_strata(const Invocation& in, std::ostream& out) {
  if (in.check) {
    const auto problems = verdict_inconsistencies();
    if (in.fmt() == Format::Json) {
      emit_json(out, {{"consistent", problems.empty()}, {"problems", problems}});
    } else if (problems.empty()) {
      out << "strata verdicts consistent\n";
    } else {
      for (const auto& p : problems) out << "inconsistent: " << p << '\n';
    }
    return problems.empty() ? kOk : kDomain;
  }

  std::vector<const StratumRecord*> rows;
  if (!in.group.empty()) {
    rows.push_back(&stratum_info(in.group));
  } else {
    for (const auto& r : strata_table()) rows.push_back(&r);
  }
  if (in.fmt() == Format::Json) {
    if (!in.group.empty()) {
      emit_json(out, to_json(*rows.front()));
    } else {
      json arr = json::array();
      for (const auto* r : rows) arr.push_back(to_json(*r));
      emit_json(out, arr);
    }
  } else {
    print_strata_text(out, rows);
  }
  return kOk;
}

int cmd_scan(const Invocation& in, std::ostream& out) {
  ScanGrid grid{parse_axis(in.a_range), parse_axis(in.b_range), parse_axis(in.c_range)};
  unsigned threads = in.threads;
  if (const unsigned cap = env_thread_cap(); cap > 0) {
    threads = threads == 0 ? cap : std::min(threads, cap);
  }
  const auto records = scan(grid, ScanOptions{threads});

  std::string body;
  if (in.fmt() == Format::Json) {
    json arr = json::array();
    for (const auto& r : records) {
      json row = to_json(r.quartic);
      row.update(to_json(r.invariants));
      row["verdict"] = std::string(to_string(r.status));
      row["point_order"] = r.point_order ? json(*r.point_order) : json(nullptr);
      arr.push_back(row);
    }
    body = arr.dump(2) + "\n";
  } else {
    body = scan_to_csv(records);
  }

  if (in.out_file.empty()) {
    out << body;
    return kOk;
  }
  std::ofstream f(in.out_file, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + in.out_file + "' for writing");
  f << body;
  std::size_t torsion = 0, skipped = 0;
  for (const auto& r : records) {
    torsion += r.status == ScanStatus::Torsion;
    skipped += r.status == ScanStatus::Skipped;
  }
  out << "wrote " << records.size() << " records to " << in.out_file << " (" << torsion << " torsion, "
      << skipped << " skipped)\n";
  return kOk;
}

}  // namespace

std::vector<std::string> split_attached_values(std::vector<std::string> args) {
  std::vector<std::string> out;
  out.reserve(args.size());
  for (auto& arg : args) {
    // Only single-letter short flags; long options handle "=" natively.
    if (arg.size() > 3 && arg[0] == '-' && arg[1] != '-' && arg[2] == '=') {
      out.push_back(arg.substr(0, 2));
      out.push_back(arg.substr(3));
    } else {
      out.push_back(std::move(arg));
    }
  }
  return out;
}

unsigned env_thread_cap() {
  const char* raw = std::getenv("CERESA_KIT_THREADS");
  if (raw == nullptr) return 0;
  unsigned v = 0;
  const std::string_view s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return 0;
  return v;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  args = split_attached_values(std::move(args));
  Invocation in;

  CLI::App app{"Exact decision tools for Ceresa cycles of Picard curves", "ceresa-kit"};
  app.require_subcommand(1, 1);
  app.add_option("--format", in.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  auto add_rat = [](CLI::App* sub, const std::string& flag, std::string& target, const std::string& help) {
    sub->add_option(flag, target, help)->required()->check(kRational);
  };
  auto fallthrough = [](CLI::App* sub) { sub->fallthrough(); };

  auto* inv = app.add_subcommand("invariants", "I, J and disc of x^4 + ax^2 + bx + c");
  add_rat(inv, "-a", in.a, "coefficient a");
  add_rat(inv, "-b", in.b, "coefficient b");
  add_rat(inv, "-c", in.c, "coefficient c");

  auto* dec = app.add_subcommand("decide", "Ceresa verdicts for y^3 = x^4 + ax^2 + bx + c");
  add_rat(dec, "-a", in.a, "coefficient a");
  add_rat(dec, "-b", in.b, "coefficient b");
  add_rat(dec, "-c", in.c, "coefficient c");

  auto* tor = app.add_subcommand("torsion", "Order of (x, y) on y^2 = x^3 + Ax + B over Q");
  add_rat(tor, "-A", in.A, "coefficient A");
  add_rat(tor, "-B", in.B, "coefficient B");
  add_rat(tor, "-x", in.x, "x-coordinate");
  add_rat(tor, "-y", in.y, "y-coordinate");

  auto* fam = app.add_subcommand("family", "Member f_{(I,J),t} of a torsion family");
  add_rat(fam, "-I", in.I, "x-coordinate of a point on y^2 = 4x^3 - 27");
  add_rat(fam, "-J", in.J, "y-coordinate of a point on y^2 = 4x^3 - 27");
  add_rat(fam, "-t", in.t, "family parameter");

  auto* e0 = app.add_subcommand("e0-torsion", "Rational torsion of y^2 = 4x^3 - 27");

  auto* bie = app.add_subcommand("bielliptic", "Check phi(Q_f) = +-P_f for y^3 = x^4 + ax^2 + c");
  add_rat(bie, "-a", in.a, "coefficient a");
  add_rat(bie, "-c", in.c, "coefficient c");

  auto* rep = app.add_subcommand("repcrit", "Evaluate the invariant-theoretic vanishing criteria");
  rep->add_option("--profile", in.profile, "profile JSON file or preset (picard_c3, c9_x4px, klein_c7, dihedral:m,a,b)")
      ->required();
  rep->add_option("--criterion", in.criterion, "only criterion a or b")->check(CLI::IsMember({"a", "b"}));

  auto* dih = app.add_subcommand("dihedral", "Criterion for y^m = ((x+1)/(x-1))^a ((x+t)/(x-t))^b");
  dih->add_option("-m", in.m, "m")->required();
  dih->add_option("-a", in.da, "a")->required();
  dih->add_option("-b", in.db, "b")->required();

  auto* str = app.add_subcommand("strata", "Genus-3 automorphism strata and Ceresa verdicts");
  str->add_option("--group", in.group, "single stratum label");
  str->add_flag("--check", in.check, "re-derive and check the verdict table");

  auto* scn = app.add_subcommand("scan", "Decide every point of a rational (a, b, c) grid");
  scn->add_option("--a-range", in.a_range, "lo:hi[:step] or r1,r2,...")->required();
  scn->add_option("--b-range", in.b_range, "lo:hi[:step] or r1,r2,...")->required();
  scn->add_option("--c-range", in.c_range, "lo:hi[:step] or r1,r2,...")->required();
  scn->add_option("--out", in.out_file, "CSV output path (stdout if omitted)");
  scn->add_option("--threads", in.threads, "worker threads (0 = all cores; capped by CERESA_KIT_THREADS)");

  for (auto* sub : {inv, dec, tor, fam, e0, bie, rep, dih, str, scn}) fallthrough(sub);

  std::vector<std::string> reversed(args.rbegin(), std::prev(args.rend()));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*inv) return cmd_invariants(in, out);
    if (*dec) return cmd_decide(in, out);
    if (*tor) return cmd_torsion(in, out);
    if (*fam) return cmd_family(in, out);
    if (*e0) return cmd_e0_torsion(in, out);
    if (*bie) return cmd_bielliptic(in, out);
    if (*rep) return cmd_repcrit(in, out);
    if (*dih) return cmd_dihedral(in, out);
    if (*str) return cmd_strata(in, out);
    if (*scn) return cmd_scan(in, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace ceresa::cli
