#include "tcfw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "tcfw/errors.hpp"
#include "tcfw/fibrewise.hpp"
#include "tcfw/fixtures.hpp"
#include "tcfw/strom.hpp"

namespace tcfw {

Json to_json(const VerificationReport& r) {
  Json j;
  j["complex"] = r.subject;
  j["samples"] = r.samples;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["evaluated"] = c.evaluated;
    if (c.witness) e["witness"] = *c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const std::vector<HomologyGroup>& h) {
  Json out = Json::array();
  for (std::size_t k = 0; k < h.size(); ++k) {
    Json g;
    g["degree"] = k;
    g["rank"] = h[k].rank;
    Json torsion = Json::array();
    for (const auto& t : h[k].torsion) torsion.push_back(t.get_str());
    g["torsion"] = std::move(torsion);
    out.push_back(std::move(g));
  }
  return out;
}

Json to_json(const LowerBoundReport& r) {
  Json j;
  j["complex"] = r.complex;
  Json fields = Json::array();
  for (const auto& f : r.per_field) {
    Json e;
    e["field"] = f.field.name();
    e["betti"] = f.betti;
    e["cup_length"] = f.cup_length;
    e["zcl"] = f.zcl_tensor;
    e["zcl_tensor"] = f.zcl_tensor;
    e["zcl_product"] = f.zcl_product;
    e["pipelines_agree"] = f.zcl_tensor == f.zcl_product;
    e["tcm_lower_bound"] = f.tcm_lower_bound();
    fields.push_back(std::move(e));
  }
  j["fields"] = std::move(fields);
  j["zcl_max"] = r.zcl_max;
  j["bounds"] = {{"TCM_at_least", r.tcm_lower_bound},
                 {"TC_at_least", r.tc_lower_bound},
                 {"statement", "TCM >= " + std::to_string(r.tcm_lower_bound)}};
  return j;
}

namespace {

struct Options {
  std::string complex = "s1";
  std::vector<std::string> fields;
  std::string out;
  std::string target;
  std::string fixture;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

// Usage or input problem: exit code 2.
struct UsageError : Error {
  using Error::Error;
};

std::vector<Coefficients> parse_fields(const std::vector<std::string>& names) {
  if (names.empty()) return {Coefficients::rationals(), Coefficients::prime_field(2), Coefficients::prime_field(3)};
  std::vector<Coefficients> out;
  for (const auto& n : names) {
    Coefficients c = Coefficients::rationals();
    try {
      c = Coefficients::parse(n);
    } catch (const Error& e) {
      throw UsageError("bad --field '" + n + "': " + e.what());
    }
    if (!c.is_field()) throw UsageError("--field must be a field (q, f2, fp:<p>); integral homology is always reported");
    out.push_back(c);
  }
  return out;
}

// circle<n> -> n, otherwise nullopt
std::optional<int> circle_fixture(const std::string& name) {
  if (name.rfind("circle", 0) != 0) return std::nullopt;
  const std::string digits = name.substr(6);
  if (digits.empty() || digits.size() > 5 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("bad circle fixture '" + name + "'");
  return std::stoi(digits);
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void merge(Json& into, const Json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

struct Outcome {
  Json report;
  bool passed = true;
  std::string summary;
};

Outcome cmd_invariants(const Options& o) {
  const ComplexPtr k = resolve_complex(o.complex);
  const auto fields = parse_fields(o.fields);
  Outcome out;
  out.report = header("invariants");
  merge(out.report, to_json(tc_lower_bound_report(*k, fields)));
  out.report["vertices"] = k->vertex_count();
  out.report["dimension"] = k->dimension();
  out.report["euler_characteristic"] = k->euler_characteristic();
  out.report["integral_homology"] = to_json(integer_homology(*k));
  out.passed = true;
  for (const auto& f : out.report["fields"]) out.passed = out.passed && f["pipelines_agree"].get<bool>();
  out.summary = k->name() + ": zcl " + std::to_string(out.report["zcl_max"].get<std::size_t>()) + ", TCM >= " +
                std::to_string(out.report["bounds"]["TCM_at_least"].get<std::size_t>());
  return out;
}

Outcome from_report(const std::string& target, const VerificationReport& r, const Options& o) {
  Outcome out;
  out.report = header("verify");
  out.report["target"] = target;
  out.report["seed"] = o.seed;
  merge(out.report, to_json(r));
  out.passed = r.passed();
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
  out.summary = target + " on " + r.subject + ": " + (out.passed ? "pass" : "FAIL") + " (" +
                std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) +
                " checks, validated at " + std::to_string(r.samples) + " samples)";
  return out;
}

Outcome cmd_verify_planner(const Options& o) {
  const auto n = circle_fixture(o.fixture.empty() ? "circle12" : o.fixture);
  if (!n) throw UsageError("planner fixtures are circle<n>");
  const MotionPlanner planner = circle_planner(*n);
  const PlannerReport pr = validate_planner(planner, o.samples, o.seed);
  VerificationReport r = pr.report;
  record(r.add("size_at_least_zcl_plus_one"), pr.meets_zcl_bound(),
         "size " + std::to_string(pr.size) + " < zcl + 1 = " + std::to_string(pr.zcl + 1));
  Outcome out = from_report("planner", r, o);
  out.report["planner"] = planner.name;
  out.report["demo_fixture"] = planner.demo_fixture;
  out.report["monoidal"] = planner.monoidal;
  out.report["size"] = pr.size;
  out.report["zcl"] = pr.zcl;
  out.report["bound"] = "size >= zcl + 1 expected";
  return out;
}

Outcome cmd_verify_cover(const Options& o) {
  const std::string name = o.fixture.empty() ? "circle12" : o.fixture;
  CoverFixture f;
  if (auto n = circle_fixture(name))
    f = circle_cover(*n);
  else if (name == "interval_product")
    f = interval_product_cover(4);
  else if (name == "interval_split")
    f = interval_split_cover(4);
  else
    throw UsageError("cover fixtures are circle<n>, interval_product, interval_split");

  const StromStructure strom = milnor_strom_structure();
  const SimplicialComplex& k = *f.complex;
  VerificationReport r;
  r.subject = k.name();
  r.samples = o.samples;
  r.absorb(validate_cover(k, f.cover, false, o.samples, o.seed), "input.");
  const Cover plus = cover_plus_one(f.cover, strom);
  record(r.add("plus_one.size"), plus.size() == f.cover.size() + 1, std::to_string(plus.size()));
  r.absorb(validate_cover(k, plus, true, o.samples, o.seed), "plus_one.");

  Json upgrades;
  const auto probes = upgrade_probes(k, 2000, o.seed + 1);
  for (auto which : {UpgradeCase::disjoint_from_diagonal, UpgradeCase::contains_diagonal_projection}) {
    const std::string tag = which == UpgradeCase::disjoint_from_diagonal ? "case1" : "case2";
    try {
      const Cover up = pointed_upgrade(f.cover, strom, which, probes);
      record(r.add(tag + ".size"), up.size() == f.cover.size(), std::to_string(up.size()));
      r.absorb(validate_cover(k, up, true, o.samples, o.seed), tag + ".");
      upgrades[tag] = "applied";
    } catch (const Inapplicable& e) {
      upgrades[tag] = std::string("inapplicable: ") + e.what();
    }
  }
  Outcome out = from_report("cover", r, o);
  out.report["fixture"] = f.name;
  out.report["input_size"] = f.cover.size();
  out.report["plus_one_size"] = plus.size();
  out.report["upgrades"] = std::move(upgrades);
  return out;
}

Outcome cmd_verify(const Options& o) {
  const std::string& t = o.target;
  if (t == "strom") {
    const ComplexPtr k = resolve_complex(o.complex);
    return from_report(t, verify_strom(*k, milnor_strom_structure(), o.samples, o.seed), o);
  }
  if (t == "kunneth") {
    const ComplexPtr k = resolve_complex(o.complex);
    const auto fields = parse_fields(o.fields);
    std::vector<KunnethCheck> details;
    Outcome out = from_report(t, verify_kunneth(*k, fields, TensorSign::koszul, &details), o);
    Json per = Json::array();
    for (std::size_t i = 0; i < fields.size(); ++i) {
      per.push_back({{"field", fields[i].name()},
                     {"zcl_tensor", details[i].zcl_tensor},
                     {"zcl_product", details[i].zcl_product},
                     {"ring_dimension_tensor", details[i].tensor_dimension},
                     {"ring_dimension_product", details[i].product_dimension},
                     {"ideal_dimension_tensor", details[i].ideal_dimension_tensor},
                     {"ideal_dimension_product", details[i].ideal_dimension_product}});
    }
    out.report["fields"] = std::move(per);
    return out;
  }
  if (t == "planner") return cmd_verify_planner(o);
  if (t == "cover") return cmd_verify_cover(o);
  if (t == "lift") {
    const auto n = o.fixture.empty() ? std::nullopt : circle_fixture(o.fixture);
    if (!o.fixture.empty() && !n) throw UsageError("lift fixtures are circle<n>");
    const LiftFixture f = n ? circle_lift_fixture(*n) : strom_lift_fixture(resolve_complex(o.complex));
    Outcome out = from_report(t, verify_lift(f, o.samples, o.seed), o);
    out.report["fixture"] = f.name;
    return out;
  }
  if (t == "extend") {
    const auto n = o.fixture.empty() ? std::nullopt : circle_fixture(o.fixture);
    if (!o.fixture.empty() && !n) throw UsageError("extend fixtures are circle<n>");
    const ExtendFixture f = n ? circle_extend_fixture(*n) : strom_extend_fixture(resolve_complex(o.complex));
    Outcome out = from_report(t, verify_extend(f, o.samples, o.seed), o);
    out.report["fixture"] = f.name;
    return out;
  }
  throw UsageError("unknown verify target '" + t + "' (strom, planner, cover, lift, extend, kunneth)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and sampled verification for topological complexity of simplicial complexes",
               "tcfw"};
  app.require_subcommand(1);
  Options o;

  auto* inv = app.add_subcommand("invariants", "Betti numbers, cup length, zero-divisor cup length and TC bounds");
  inv->add_option("--complex", o.complex, "built-in name or path to a fixture JSON")->required();
  inv->add_option("--field", o.fields, "q, f2, fp:<p>; repeatable (default q, f2, f3)");
  inv->add_option("--out", o.out, "write the JSON report here instead of standard output");

  auto* ver = app.add_subcommand("verify", "Run a sampled verification suite");
  ver->add_option("target", o.target, "strom | planner | cover | lift | extend | kunneth")->required();
  ver->add_option("--complex", o.complex, "built-in name or path to a fixture JSON (default s1)");
  ver->add_option("--field", o.fields, "fields for kunneth; repeatable (default q, f2, f3)");
  ver->add_option("--samples", o.samples, "number of seeded samples (default 10000)");
  ver->add_option("--seed", o.seed, "sampler seed (default 0)");
  ver->add_option("--fixture", o.fixture, "circle<n>, interval_product, interval_split");
  ver->add_option("--out", o.out, "write the JSON report here instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  Outcome result;
  try {
    result = inv->parsed() ? cmd_invariants(o) : cmd_verify(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FixtureError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = result.report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write '" << o.out << "'\n";
      return 2;
    }
    file << text;
  }
  err << result.summary << "\n";
  return result.passed ? 0 : 1;
}

}  // namespace tcfw
