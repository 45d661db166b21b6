#include "afforb/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <ostream>

#include "afforb/classifier.hpp"
#include "afforb/cli/parse.hpp"
#include "afforb/farey.hpp"
#include "afforb/selfcheck.hpp"

namespace afforb::cli {

namespace {

using nlohmann::json;

json str(const Rational& q) { return q.str(); }
json str(const BigInt& n) { return n.get_str(); }

json lattice_json(const Lattice& l) {
  json rows = json::array();
  for (const auto& v : l.basis()) {
    json row = json::array();
    for (const auto& q : v) row.push_back(str(q));
    rows.push_back(std::move(row));
  }
  return rows;
}

json invariant_json(const OrbitInvariant& inv) {
  return {{"rank", std::to_string(inv.rank)},
          {"d", str(inv.d)},
          {"c", str(inv.c)},
          {"lattice", lattice_json(inv.group)}};
}

// Number of orbits whose points have the group G_x.
BigInt orbits_for_group(const Point& x, const OrbitInvariant& inv) {
  const bool split = (x.dim() == 2 && inv.rank == 2) || (x.dim() == 1 && inv.rank == 1);
  return split ? orbit_count(inv.d) : BigInt(1);
}

json map_json(const AffineUnimodularMap& m) {
  json u = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(str(m.linear()(i, j)));
    u.push_back(std::move(row));
  }
  json t = json::array();
  for (const auto& x : m.translation()) t.push_back(str(x));
  return {{"U", std::move(u)}, {"t", std::move(t)}, {"det", str(m.det())}};
}

BigInt parse_integer(const std::string& text) {
  const Rational q = Rational::parse(text);
  if (!q.is_integer()) throw ParseError("expected an integer, got '" + text + "'");
  return q.num();
}

struct Context {
  std::vector<std::string> symbol_args;
  bool text = false;
  SymbolTable symbols;

  Point point(const std::string& s) const { return parse_point(s, symbols); }
};

void print_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(),
                                         [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

int emit_error(const Error& e, int code, std::ostream& out, std::ostream& err) {
  json j = {{"kind", e.kind()}, {"detail", e.what()}};
  if (const auto* ie = dynamic_cast<const InsufficientEnclosure*>(&e)) {
    j["comparison"] = ie->comparison();
    j["interval"] = ie->interval();
  }
  out << j.dump() << "\n";
  err << "afforb: " << e.kind() << ": " << e.what() << "\n";
  return code;
}

int code_for(const Error& e) {
  const std::string& k = e.kind();
  if (k == "NotEquivalent") return kNotEquivalent;
  if (k == "InsufficientEnclosure") return kInsufficientEnclosure;
  if (k == "InternalInconsistency" || k == "Overflow") return kInternal;
  return kUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits of points of the plane and the line under x -> Ux + t, U in GL(n, Z)"};
  app.name("afforb");
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--symbol", ctx.symbol_args, "declare name=(lo,hi), repeatable")
      ->take_all()
      ->allow_extra_args(false);
  app.add_flag("--text", ctx.text, "key: value lines instead of JSON");

  std::function<json()> action;
  int result_code = kOk;

  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  std::string a, b;
  CLI::App* classify = sub("classify", "invariant (G_x, c_x) of a point");
  classify->add_option("point", a)->required();
  classify->callback([&] {
    action = [&] {
      const Point x = ctx.point(a);
      const OrbitInvariant inv = invariant(x);
      json j = invariant_json(inv);
      j["point"] = x.str();
      j["orbit_count_for_group"] = str(orbits_for_group(x, inv));
      return j;
    };
  });

  CLI::App* equiv = sub("equiv", "decide whether two points share an orbit");
  equiv->add_option("x", a)->required();
  equiv->add_option("y", b)->required();
  equiv->callback([&] {
    action = [&] {
      const Point x = ctx.point(a), y = ctx.point(b);
      const bool eq = equivalent(x, y);
      return json{{"equivalent", eq},
                  {"invariants", json::array({invariant_json(invariant(x)), invariant_json(invariant(y))})}};
    };
  });

  CLI::App* wit = sub("witness", "an explicit map taking x to y");
  wit->add_option("x", a)->required();
  wit->add_option("y", b)->required();
  wit->callback([&] {
    action = [&] {
      const Point x = ctx.point(a), y = ctx.point(b);
      const AffineUnimodularMap m = witness(x, y);
      json j = map_json(m);
      j["verified"] = apply(m, x) == y;
      if (!j["verified"].get<bool>()) throw InternalInconsistency("witness does not map x to y");
      return j;
    };
  });

  CLI::App* farey = sub("farey", "the Farey sequence of order d");
  farey->add_option("d", a)->required();
  farey->callback([&] {
    action = [&] {
      const BigInt d = parse_integer(a);
      json seq = json::array();
      for (const auto& f : farey_sequence(d)) seq.push_back(f.str());
      return json{{"d", str(d)}, {"sequence", std::move(seq)}};
    };
  });

  CLI::App* comp = sub("companion", "Farey neighbor of p/d with the smaller denominator");
  comp->add_option("x", a)->required();
  comp->callback([&] {
    action = [&] {
      const FareyFraction x(Rational::parse(a));
      return json{{"x", x.str()}, {"companion", companion(x).str()}};
    };
  });

  CLI::App* cinv = sub("companion-inverse", "p, q with companion(p/d) = q/c");
  cinv->add_option("d", a)->required();
  cinv->add_option("c", b)->required();
  cinv->callback([&] {
    action = [&] {
      const CompanionPair pq = companion_inverse(parse_integer(a), parse_integer(b));
      return json{{"p", str(pq.p)}, {"q", str(pq.q)}};
    };
  });

  CLI::App* orbits = sub("orbits", "values of c for rank-2 points with denominator d");
  orbits->add_option("d", a)->required();
  orbits->callback([&] {
    action = [&] {
      const BigInt d = parse_integer(a);
      const Census c = census(d);
      json cs = json::array();
      for (const auto& v : c.cs) cs.push_back(str(v));
      return json{{"d", str(d)}, {"count", str(c.count)}, {"cs", std::move(cs)}};
    };
  });

  CLI::App* c1 = sub("classify1d", "invariant of a point of the line");
  c1->add_option("coord", a)->required();
  c1->callback([&] {
    action = [&] {
      const Point x = ctx.point(a);
      if (x.dim() != 1) throw DimensionMismatch("classify1d takes a single coordinate");
      json j = invariant_json(classify_1d(x));
      j["point"] = x.str();
      return j;
    };
  });

  SelfcheckOptions opts;
  CLI::App* sc = sub("selfcheck", "cross-check the library against the brute-force oracles");
  sc->add_option("--max-den", opts.max_den, "denominator bound")->check(CLI::Range(1, 200));
  sc->add_option("--max-normal", opts.max_normal, "line normal bound")->check(CLI::Range(1, 40));
  sc->add_option("--simplexes", opts.simplexes, "random simplexes")->check(CLI::NonNegativeNumber);
  sc->add_option("--seed", opts.seed, "random seed");
  sc->callback([&] {
    action = [&] {
      json suites = json::array();
      long violations = 0;
      for (const auto& r : run_selfcheck(opts)) {
        violations += r.violations;
        suites.push_back({{"name", r.name},
                          {"checked", std::to_string(r.checked)},
                          {"violations", std::to_string(r.violations)},
                          {"failures", r.failures}});
      }
      if (violations != 0) result_code = kSelfcheckFailed;
      return json{{"ok", violations == 0}, {"suites", std::move(suites)}};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (const auto& s : ctx.symbol_args) ctx.symbols.add(parse_symbol(s));
    const json j = action();
    if (ctx.text) {
      print_text(j, "", out);
    } else {
      out << j.dump() << "\n";
    }
    return result_code;
  } catch (const Error& e) {
    return emit_error(e, code_for(e), out, err);
  } catch (const std::exception& e) {
    return emit_error(InternalInconsistency(e.what()), kInternal, out, err);
  }
}

}  // namespace afforb::cli
