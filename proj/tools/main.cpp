// Batch front end for the partineq library. Every subcommand reads its
// inputs from flags, writes one JSON document (or CSV where noted) to
// stdout, and exits 0. Library errors become {"error":..,"message":..}
// with exit 1 (exit 2 for internal invariant failures); bad usage exits 64.

#include <cstddef>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partineq/bounds.hpp"
#include "partineq/counting.hpp"
#include "partineq/errors.hpp"
#include "partineq/frobenius.hpp"
#include "partineq/injections.hpp"
#include "partineq/pairing.hpp"
#include "partineq/partition.hpp"
#include "partineq/qseries.hpp"

namespace {

using json = nlohmann::json;
using partineq::Errc;
using partineq::Int;

// Splits "2,3" into longs; used for V, bounds args and similar small values.
std::vector<long> parse_long_list(const std::string& text, const char* what) {
  std::vector<long> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok =
        (comma == std::string::npos) ? text.substr(pos) : text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      partineq::raise(Errc::Parse, std::string(what) + ": invalid integer '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Same, but arbitrary-precision; used for pairing tuples.
std::vector<Int> parse_int_list(const std::string& text, const char* what) {
  std::vector<Int> out;
  if (text.empty()) partineq::raise(Errc::Parse, std::string(what) + ": empty list");
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok =
        (comma == std::string::npos) ? text.substr(pos) : text.substr(pos, comma - pos);
    out.push_back(partineq::parse_int(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

partineq::ClassParams make_params(long L, long s, const std::string& v_csv,
                                  const std::string& kind) {
  partineq::ClassParams c;
  c.L = L;
  c.s = s;
  c.V = parse_long_list(v_csv, "--V");
  c.kind = partineq::class_kind_from_string(kind);
  c.validate();
  return c;
}

// Prints a document followed by exactly one newline.
void emit(const std::string& doc) {
  std::cout << doc;
  if (doc.empty() || doc.back() != '\n') std::cout << '\n';
}

void emit(const json& doc) { emit(doc.dump()); }

json partition_json(const partineq::Partition& p) {
  return json::parse(partineq::serialize(p));
}

json tuple_json(const std::vector<Int>& m) {
  json arr = json::array();
  for (const Int& v : m) arr.push_back(v.get_str());
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition-class counting, injections and q-series toolkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  unsigned long seed = 0;
  app.add_option("--seed", seed, "reserved; unused (all computation is deterministic)");

  // The parsed subcommand stores its work here; it runs after parsing so
  // that usage errors and computation errors get distinct exit codes.
  std::function<void()> action;

  // ---- count ----------------------------------------------------------
  struct {
    long L = 1, s = 1;
    std::string V, kind = "I";
    long nmax = 0;
    std::string format = "json";
  } cnt;
  {
    auto* sub = app.add_subcommand("count", "Per-weight member counts of one class");
    sub->add_option("--L", cnt.L, "window length")->required();
    sub->add_option("--s", cnt.s, "window offset (smallest admissible part)")->required();
    sub->add_option("--V", cnt.V, "marked parts, comma-separated");
    sub->add_option("--kind", cnt.kind, "class kind: I, D, DV, E, P or S");
    sub->add_option("--nmax", cnt.nmax, "largest weight to count")->required();
    sub->add_option("--format", cnt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->callback([&] {
      action = [&] {
        const partineq::ClassParams params = make_params(cnt.L, cnt.s, cnt.V, cnt.kind);
        const partineq::CountTable table =
            partineq::count_series(params, static_cast<std::size_t>(cnt.nmax));
        emit(cnt.format == "csv" ? partineq::to_csv(table) : partineq::to_json(table));
      };
    });
  }

  // ---- enumerate ------------------------------------------------------
  struct {
    long L = 1, s = 1;
    std::string V, kind = "I", n;
  } enm;
  {
    auto* sub = app.add_subcommand("enumerate", "List all class members of one weight");
    sub->add_option("--L", enm.L, "window length")->required();
    sub->add_option("--s", enm.s, "window offset")->required();
    sub->add_option("--V", enm.V, "marked parts, comma-separated");
    sub->add_option("--kind", enm.kind, "class kind: I, D, DV, E or S");
    sub->add_option("--n", enm.n, "weight to enumerate")->required();
    sub->callback([&] {
      action = [&] {
        const partineq::ClassParams params = make_params(enm.L, enm.s, enm.V, enm.kind);
        const Int n = partineq::parse_int(enm.n);
        const std::vector<partineq::Partition> members = partineq::enumerate_class(params, n);
        json out;
        out["n"] = n.get_str();
        out["count"] = members.size();
        out["members"] = json::array();
        for (const partineq::Partition& p : members) out["members"].push_back(partition_json(p));
        emit(out);
      };
    });
  }

  // ---- scan -----------------------------------------------------------
  struct {
    long aL = 1, as = 1, bL = 1, bs = 1;
    std::string aV, aKind = "I", bV, bKind = "D";
    long nmax = 0;
    std::string format = "json";
  } scn;
  {
    auto* sub = app.add_subcommand("scan", "Compare two classes' counts weight by weight");
    sub->add_option("--a-L", scn.aL, "first class window length")->required();
    sub->add_option("--a-s", scn.as, "first class window offset")->required();
    sub->add_option("--a-V", scn.aV, "first class marked parts");
    sub->add_option("--a-kind", scn.aKind, "first class kind");
    sub->add_option("--b-L", scn.bL, "second class window length")->required();
    sub->add_option("--b-s", scn.bs, "second class window offset")->required();
    sub->add_option("--b-V", scn.bV, "second class marked parts");
    sub->add_option("--b-kind", scn.bKind, "second class kind");
    sub->add_option("--nmax", scn.nmax, "largest weight to compare")->required();
    sub->add_option("--format", scn.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->callback([&] {
      action = [&] {
        const partineq::ClassParams a = make_params(scn.aL, scn.as, scn.aV, scn.aKind);
        const partineq::ClassParams b = make_params(scn.bL, scn.bs, scn.bV, scn.bKind);
        const partineq::ScanReport report =
            partineq::inequality_scan(a, b, static_cast<std::size_t>(scn.nmax));
        emit(scn.format == "csv" ? partineq::to_csv(report) : partineq::to_json(report));
      };
    });
  }

  // ---- map-t1 / map-t3 / map-alt ---------------------------------------
  struct MapOpts {
    long L = 1, s = 1;
    std::string V, partition;
    bool recover = false;
  };
  MapOpts mop[3];
  const auto add_map_subcommand = [&](const char* name, const char* help, partineq::MapId id) {
    MapOpts& o = mop[static_cast<int>(id)];
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--L", o.L, "window length")->required();
    sub->add_option("--s", o.s, "window offset")->required();
    sub->add_option("--V", o.V, "marked parts, comma-separated")->required();
    sub->add_option("--partition", o.partition,
                    "partition as a JSON array of [part, frequency] decimal strings")
        ->required();
    sub->add_flag("--recover", o.recover,
                  "treat the partition as an image and recover the encoding trace");
    sub->callback([&action, &o, id] {
      action = [&o, id] {
        const char* domain_kind = (id == partineq::MapId::T1) ? "I" : "DV";
        const partineq::ClassParams c = make_params(o.L, o.s, o.V, domain_kind);
        const partineq::Partition p = partineq::parse_partition(o.partition);
        json out;
        if (o.recover) {
          const partineq::MapTrace trace = partineq::recover_map(id, p, c);
          out["trace"] = json::parse(partineq::to_json(trace));
        } else {
          const partineq::MapResult res = partineq::apply_map(id, p, c);
          out["image"] = partition_json(res.image);
          out["trace"] = json::parse(partineq::to_json(res.trace));
        }
        emit(out);
      };
    });
  };
  add_map_subcommand("map-t1", "Apply the two-marked-parts injection (domain kind I)",
                     partineq::MapId::T1);
  add_map_subcommand("map-t3", "Apply the power-frequency injection (domain kind DV)",
                     partineq::MapId::T3);
  add_map_subcommand("map-alt", "Apply the support-pattern injection (domain kind DV)",
                     partineq::MapId::Alt);

  // ---- verify ---------------------------------------------------------
  struct {
    std::string map = "t1";
    long L = 1, s = 1;
    std::string V, n;
  } ver;
  {
    auto* sub = app.add_subcommand("verify", "Check a map on every domain member of one weight");
    sub->add_option("--map", ver.map, "map name: t1, t3 or alt")
        ->required()
        ->check(CLI::IsMember({"t1", "t3", "alt"}));
    sub->add_option("--L", ver.L, "window length")->required();
    sub->add_option("--s", ver.s, "window offset")->required();
    sub->add_option("--V", ver.V, "marked parts, comma-separated")->required();
    sub->add_option("--n", ver.n, "weight whose members to verify")->required();
    sub->callback([&] {
      action = [&] {
        const partineq::MapId id = partineq::map_id_from_string(ver.map);
        const char* domain_kind = (id == partineq::MapId::T1) ? "I" : "DV";
        const partineq::ClassParams domain = make_params(ver.L, ver.s, ver.V, domain_kind);
        const partineq::VerifyReport report =
            partineq::verify_injection(domain, id, partineq::parse_int(ver.n));
        emit(partineq::to_json(report));
      };
    });
  }

  // ---- qseries --------------------------------------------------------
  struct {
    std::string series = "h";
    long L = 1, s = 1;
    std::string V;
    long nmax = 0;
    std::string format = "json";
    bool scan = false;
  } qs;
  {
    auto* sub = app.add_subcommand("qseries", "Truncated window generating functions");
    sub->add_option("--series", qs.series, "which series: h, hprime or hdoubleprime")
        ->required()
        ->check(CLI::IsMember({"h", "hprime", "hdoubleprime"}));
    sub->add_option("--L", qs.L, "window length")->required();
    sub->add_option("--s", qs.s, "window offset")->required();
    sub->add_option("--V", qs.V, "marked parts, comma-separated")->required();
    sub->add_option("--nmax", qs.nmax, "truncation order")->required();
    sub->add_option("--format", qs.format, "output format for coefficients")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--scan", qs.scan, "report coefficient signs instead of coefficients");
    sub->callback([&] {
      action = [&] {
        const std::vector<long> V = parse_long_list(qs.V, "--V");
        const std::size_t nmax = static_cast<std::size_t>(qs.nmax);
        partineq::Series f;
        if (qs.series == "h") {
          f = partineq::h_series(qs.L, qs.s, V, nmax);
        } else if (qs.series == "hprime") {
          f = partineq::hprime_series(qs.L, qs.s, V, nmax);
        } else {
          f = partineq::hdoubleprime_series(qs.L, qs.s, V, nmax);
        }
        if (qs.scan) {
          emit(partineq::to_json(partineq::sign_scan(f)));
        } else if (qs.format == "csv") {
          emit(partineq::to_csv(f));
        } else {
          json out;
          out["nmax"] = f.nmax();
          out["coeff"] = json::array();
          for (std::size_t n = 0; n <= f.nmax(); ++n) out["coeff"].push_back(f[n].get_str());
          emit(out);
        }
      };
    });
  }

  // ---- pairing --------------------------------------------------------
  struct {
    std::string map = "cantor";
    std::string rank;
    std::string unrank;
    long t = 0;
  } pr;
  {
    auto* sub = app.add_subcommand("pairing", "Tuple ranking and unranking maps");
    sub->add_option("--map", pr.map, "map name: cantor, spiral, cns, psi0 or psi")
        ->required()
        ->check(CLI::IsMember({"cantor", "spiral", "cns", "psi0", "psi"}));
    auto* rank_opt = sub->add_option("--rank", pr.rank, "tuple to rank, comma-separated");
    auto* unrank_opt = sub->add_option("--unrank", pr.unrank, "value to unrank");
    sub->add_option("--t", pr.t, "tuple arity for unranking cns, psi0 and psi");
    rank_opt->excludes(unrank_opt);
    unrank_opt->excludes(rank_opt);
    sub->callback([&] {
      action = [&] {
        const bool want_rank = !pr.rank.empty();
        const bool want_unrank = !pr.unrank.empty();
        if (want_rank == want_unrank)
          partineq::raise(Errc::Domain, "pairing: pass exactly one of --rank and --unrank");
        json out;
        if (want_rank) {
          const std::vector<Int> m = parse_int_list(pr.rank, "--rank");
          Int value;
          if (pr.map == "cantor" || pr.map == "spiral") {
            if (m.size() != 2)
              partineq::raise(Errc::Domain, "pairing: " + pr.map + " ranks pairs only");
            value = (pr.map == "cantor") ? partineq::cantor_pair(m[0], m[1])
                                         : partineq::spiral_pair(m[0], m[1]);
          } else if (pr.map == "cns") {
            value = partineq::cns_rank(m);
          } else if (pr.map == "psi0") {
            value = partineq::psi0_rank(m);
          } else {
            value = partineq::psi_rank(m);
          }
          out["value"] = value.get_str();
        } else {
          const Int v = partineq::parse_int(pr.unrank);
          if (pr.map == "cantor" || pr.map == "spiral") {
            const auto [a, b] = (pr.map == "cantor") ? partineq::cantor_unpair(v)
                                                     : partineq::spiral_unpair(v);
            out["tuple"] = tuple_json({a, b});
          } else {
            if (pr.t <= 0)
              partineq::raise(Errc::Domain, "pairing: unranking " + pr.map + " needs --t");
            const std::size_t t = static_cast<std::size_t>(pr.t);
            if (pr.map == "cns") {
              const auto m = partineq::cns_unrank(v, t);
              if (m)
                out["tuple"] = tuple_json(*m);
              else
                out["tuple"] = nullptr;
            } else if (pr.map == "psi0") {
              out["tuple"] = tuple_json(partineq::psi0_unrank(v, t));
            } else {
              out["tuple"] = tuple_json(partineq::psi_unrank(v, t));
            }
          }
        }
        emit(out);
      };
    });
  }

  // ---- frobenius ------------------------------------------------------
  struct {
    std::string a, b, n, h;
  } fr;
  {
    auto* sub = app.add_subcommand("frobenius", "Two-coin linear representation solvers");
    sub->require_subcommand(1);

    auto* number = sub->add_subcommand("number", "Largest non-representable value ab-a-b");
    number->add_option("--a", fr.a, "first coin")->required();
    number->add_option("--b", fr.b, "second coin")->required();
    number->callback([&] {
      action = [&] {
        const Int g =
            partineq::frobenius_number(partineq::parse_int(fr.a), partineq::parse_int(fr.b));
        json out;
        out["frobenius"] = g.get_str();
        emit(out);
      };
    });

    auto* solve = sub->add_subcommand("solve", "Minimal-x nonnegative solution of ax+by=n");
    solve->add_option("--a", fr.a, "first coin")->required();
    solve->add_option("--b", fr.b, "second coin")->required();
    solve->add_option("--n", fr.n, "target value")->required();
    solve->callback([&] {
      action = [&] {
        const partineq::LinearSolution sol = partineq::solve_sylvester(
            partineq::parse_int(fr.a), partineq::parse_int(fr.b), partineq::parse_int(fr.n));
        json out;
        out["x"] = sol.x.get_str();
        out["y"] = sol.y.get_str();
        emit(out);
      };
    });

    auto* refined = sub->add_subcommand("refined", "Solution with x in the window [bh, b(h+1))");
    refined->add_option("--a", fr.a, "first coin")->required();
    refined->add_option("--b", fr.b, "second coin")->required();
    refined->add_option("--n", fr.n, "target value")->required();
    refined->add_option("--h", fr.h, "window index")->required();
    refined->callback([&] {
      action = [&] {
        const partineq::LinearSolution sol = partineq::solve_refined(
            partineq::parse_int(fr.a), partineq::parse_int(fr.b), partineq::parse_int(fr.n),
            partineq::parse_int(fr.h));
        json out;
        out["x"] = sol.x.get_str();
        out["y"] = sol.y.get_str();
        emit(out);
      };
    });
  }

  // ---- bounds ---------------------------------------------------------
  struct {
    std::string name, args;
  } bnd;
  {
    auto* sub = app.add_subcommand("bounds", "Evaluate a named threshold constant");
    sub->add_option("--name", bnd.name,
                    "constant name: t1_bound, t3_bound, F_st, F_s, kappa_s, A, B or alt_kt_bound")
        ->required();
    sub->add_option("--args", bnd.args, "constant arguments, comma-separated")->required();
    sub->callback([&] {
      action = [&] {
        const std::vector<long> args = parse_long_list(bnd.args, "--args");
        const std::string value = partineq::bounds::evaluate(bnd.name, args);
        json out;
        out["name"] = bnd.name;
        out["args"] = args;
        out["value"] = value;
        emit(out);
      };
    });
  }

  // ---- lemma-check ----------------------------------------------------
  struct {
    std::string lemma = "comb";
    long t_max = 5, entry_max = 10, s_max = 12;
  } lem;
  {
    auto* sub = app.add_subcommand("lemma-check", "Scan an inequality lemma for violations");
    sub->add_option("--lemma", lem.lemma, "lemma name: comb or crucial1")
        ->required()
        ->check(CLI::IsMember({"comb", "crucial1"}));
    sub->add_option("--t-max", lem.t_max, "largest tuple arity / exponent");
    sub->add_option("--entry-max", lem.entry_max, "largest tuple entry (comb only)");
    sub->add_option("--s-max", lem.s_max, "largest offset parameter (crucial1 only)");
    sub->callback([&] {
      action = [&] {
        const partineq::lemmas::ScanResult res =
            (lem.lemma == "comb") ? partineq::lemmas::comb_scan(lem.t_max, lem.entry_max)
                                  : partineq::lemmas::crucial1_scan(lem.s_max, lem.t_max);
        json out;
        out["lemma"] = lem.lemma;
        out["checked"] = res.checked;
        if (res.first_violation)
          out["first_violation"] = *res.first_violation;
        else
          out["first_violation"] = nullptr;
        emit(out);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);                                     // prints the usage message
    return 64;
  }

  try {
    if (action) action();
  } catch (const partineq::Error& e) {
    json err;
    err["error"] = partineq::errc_name(e.code());
    err["message"] = e.what();
    emit(err);
    return e.code() == Errc::Internal ? 2 : 1;
  } catch (const std::exception& e) {
    json err;
    err["error"] = "internal";
    err["message"] = e.what();
    emit(err);
    return 2;
  }
  return 0;
}
