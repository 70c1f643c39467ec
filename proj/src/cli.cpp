#include "branecharge/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "branecharge/charges.hpp"
#include "branecharge/input.hpp"
#include "branecharge/oracle.hpp"
#include "branecharge/polytope.hpp"
#include "branecharge/variety.hpp"

namespace branecharge::cli {

using nlohmann::json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::NotReflexive:
    case Errc::NotSmooth:
    case Errc::NotComplete:
    case Errc::DimensionUnsupported:
      return kUnsupportedVariety;
    case Errc::InternalNonTermination:
    case Errc::InternalInvariant:
      return kInvariantViolation;
    default:
      return kInputError;
  }
}

std::int64_t SweepGenerator::next(std::int64_t max_coeff) {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  const auto span = static_cast<std::uint64_t>(2 * max_coeff + 1);
  return static_cast<std::int64_t>((state_ >> 33) % span) - max_coeff;
}

std::vector<std::int64_t> SweepGenerator::divisor(int num_rays, std::int64_t max_coeff) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < num_rays; ++i) out.push_back(next(max_coeff));
  return out;
}

std::vector<std::int64_t> parse_divisor_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw Error(Errc::ParseError, "--divisor: '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(Errc::ParseError, "--divisor: empty coefficient list");
  return out;
}

json class_to_json(const Fan& fan, const GradedClass& c) {
  json parts = json::array();
  for (int k = 0; k <= c.dim(); ++k) {
    json terms = json::array();
    for (const auto& [cone, coeff] : c.part(k)) {
      terms.push_back({{"cone", fan.cone(cone)}, {"coeff", format_rational(coeff)}});
    }
    parts.push_back({{"codim", k}, {"terms", terms}});
  }
  return {{"codim", parts}};
}

namespace {

constexpr const char* kFormatHelp = R"(Input formats (auto-detected; '{' starts JSON):
  JSON:   {"dim": n, "vertices": [[m_1..m_n], ...], "divisor": [a_0, ...]}
          "divisor" is optional.
  Matrix: header line "a b" (text after the two integers is ignored), then
          a rows of b integers. If a <= b the columns are the points and a is
          the dimension; otherwise the rows are the points.
Divisor coefficients a_rho are indexed by the facets of the polytope (= rays
of its normal fan) in lexicographic order of the inward facet normals.
Exit codes: 0 success, 1 input/parse error, 2 unsupported variety
(non-reflexive, non-smooth or n > 4), 3 internal invariant violation.
Set BRANECHARGE_NO_COLOR to disable colored text output.)";

struct Options {
  std::string input;
  std::string format = "text";
  std::string input_format = "auto";
  std::string divisor;
  int max_degree = -1;
  int trials = 100;
  std::uint64_t seed = 1;
  std::int64_t max_coeff = 3;
  bool dual = false;
};

struct Outcome {
  json report;
  int code = kSuccess;
  // Printed to the error stream after the report.
  std::string diagnostic;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open input file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Input {
  InputDocument doc;
  LatticePolytope polytope;
};

Input load(const Options& o) {
  const auto text = read_input(o.input);
  InputDocument doc;
  if (o.input_format == "json") {
    doc = parse_json(text);
  } else if (o.input_format == "matrix") {
    doc = parse_matrix(text);
  } else {
    doc = parse_document(text);
  }
  auto p = LatticePolytope::from_points(doc.points);
  if (o.dual) p = dual_polytope(p);
  return {std::move(doc), std::move(p)};
}

DivisorClass divisor_for(const Options& o, const InputDocument& doc, int num_rays) {
  std::vector<std::int64_t> coeffs;
  if (!o.divisor.empty()) {
    coeffs = parse_divisor_list(o.divisor);
  } else if (doc.divisor) {
    coeffs = *doc.divisor;
  } else {
    coeffs.assign(num_rays, 0);
  }
  if (static_cast<int>(coeffs.size()) != num_rays) {
    throw Error(Errc::InvalidDivisor, "divisor has " + std::to_string(coeffs.size()) + " coefficients but the fan has " +
                                          std::to_string(num_rays) + " rays (one per facet, lexicographic normal order)");
  }
  return DivisorClass::from_integers(coeffs);
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(format_rational(q));
  return a;
}

json check_json(const OracleCheck& c) {
  json j = {{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}, {"skipped", c.skipped}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

OracleCheck exact(std::string name, const Rational& expected, const Rational& got) {
  return {std::move(name), format_rational(expected), format_rational(got), expected == got, false, {}};
}

OracleCheck flag(std::string name, bool ok) {
  return {std::move(name), "true", ok ? "true" : "false", ok, false, {}};
}

json header(const char* command, const LatticePolytope& p, const Fan& fan) {
  return {{"command", command},
          {"dim", p.dim()},
          {"polytope_hash", p.hash()},
          {"num_rays", fan.num_rays()},
          {"rays", fan.rays()},
          {"divisor_order", "facet normals in lexicographic order"}};
}

int finish(json& report, const std::vector<OracleCheck>& checks) {
  json arr = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    arr.push_back(check_json(c));
    ok = ok && (c.pass || c.skipped);
  }
  report["checks"] = arr;
  report["all_pass"] = ok;
  return ok ? kSuccess : kInvariantViolation;
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_analyze(const Options& o) {
  auto in = load(o);
  const auto& p = in.polytope;
  const auto fan = normal_fan(p);

  json facets = json::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
  std::vector<std::size_t> cones_per_dim;
  for (int k = 0; k <= fan.dim(); ++k) cones_per_dim.push_back(fan.cones_of_dim(k).size());

  const bool reflexive = is_reflexive(p);
  const bool smooth = is_smooth(fan);
  const bool complete = is_complete(fan);
  const auto pts = lattice_points(p.halfspaces());

  json r = header("analyze", p, fan);
  r["input_format"] = in.doc.format == InputFormat::Json ? "json" : "matrix";
  r["vertices"] = p.vertices();
  r["dropped_points"] = p.dropped_points();
  r["facets"] = facets;
  r["f_vector"] = p.f_vector();
  r["lattice_points"] = pts.all.size();
  r["interior_lattice_points"] = pts.interior.size();
  r["reflexive"] = reflexive;
  r["fan"] = {{"cones_per_dim", cones_per_dim},
              {"max_cones", fan.max_cones().size()},
              {"smooth", smooth},
              {"complete", complete}};
  if (complete) r["euler_characteristic_top"] = euler_characteristic_top(fan);
  if (reflexive && smooth && complete && p.dim() <= kMaxChargeDimension) {
    const auto x = ToricVariety::from_polytope(p);
    r["fano_index"] = x.fano_index();
    r["fundamental_divisor"] = rationals(x.fundamental_divisor().coefficients());
    r["supported"] = true;
    return {r, kSuccess, {}};
  }
  // The report is still useful; the exit code tells scripts the charge
  // commands will refuse this input.
  std::string why = !reflexive            ? "NotReflexive: polytope is not reflexive"
                    : !smooth               ? "NotSmooth: normal fan has a non-unimodular cone"
                    : !complete             ? "NotComplete: normal fan is not complete"
                                            : "DimensionUnsupported: n > " + std::to_string(kMaxChargeDimension);
  r["supported"] = false;
  r["unsupported_reason"] = why;
  return {r, kUnsupportedVariety, "error: " + why};
}

Outcome cmd_chern(const Options& o) {
  auto in = load(o);
  const auto& p = in.polytope;
  const ChowRing ring(normal_fan(p));
  const int n = ring.dim();
  const int up_to = o.max_degree < 0 ? n : std::min(o.max_degree, n);
  const auto anti = ring.anticanonical();

  const auto c = ring.chern_total();
  const auto td = ring.todd_class(up_to);
  const auto walls = ring.c2_wall_sum();

  json r = header("chern", p, ring.fan());
  r["chern"] = class_to_json(ring.fan(), c);
  r["chern_degrees_anticanonical"] = rationals(ring.pairings_against(c, anti));
  r["todd_up_to"] = up_to;
  r["todd"] = class_to_json(ring.fan(), td);
  r["todd_degrees_anticanonical"] = rationals(ring.pairings_against(td, anti));
  r["c2_wall_sum"] = class_to_json(ring.fan(), walls);

  std::vector<OracleCheck> checks;
  checks.push_back(flag("c1_is_anticanonical",
                        ring.equivalent(c.component(1), ring.multiply(anti, ring.fundamental_class()))));
  if (n >= 2) checks.push_back(flag("c2_equals_wall_sum", ring.equivalent(c.component(2), walls)));
  checks.push_back(exact("top_chern_degree_is_max_cone_count",
                         Rational(static_cast<long>(euler_characteristic_top(ring.fan()))), degree(c)));
  if (up_to == n) checks.push_back(exact("todd_degree_is_one", Rational(1), degree(td)));
  const int code = finish(r, checks);
  return {r, code, {}};
}

Outcome cmd_genus(const Options& o) {
  auto in = load(o);
  if (in.polytope.dim() != 4) {
    throw Error(Errc::DimensionUnsupported,
                "genus needs a 4-dimensional polytope, got n = " + std::to_string(in.polytope.dim()));
  }
  const auto x = ToricVariety::from_polytope(in.polytope);
  const auto d = divisor_for(o, in.doc, x.fan().num_rays());
  const auto k = x.canonical();

  const auto chi = chi_cy3(x, d);
  const auto chi_l = chi_L_cy3(x);
  const auto chi_3k = chi_cy3(x, Rational(-3) * k);

  json r = header("genus", in.polytope, x.fan());
  r["divisor"] = rationals(d.coefficients());
  r["chi_cy3"] = format_rational(chi);
  r["chi_L_cy3"] = format_rational(chi_l);
  r["chi_cy3_minus_3K"] = format_rational(chi_3k);

  std::vector<OracleCheck> checks;
  checks.push_back(exact("chi_L_equals_chi_cy3_minus_3K", chi_l, chi_3k));
  checks.push_back(exact("charge_route", degree(charge_general(x, d + k)), chi));
  if (x.ring().is_nef(d)) {
    const auto oracle = evaluate_oracle(x, d);
    checks.push_back(exact("lattice_point_oracle", Rational(static_cast<long>(oracle.chi_Y)), chi));
    r["oracle"] = {{"total_points", oracle.total_points},
                   {"relative_interior_points", oracle.interior_points},
                   {"polytope_dim", oracle.polytope_dim}};
  } else {
    checks.push_back({"lattice_point_oracle", "-", format_rational(chi), false, true, "D is not nef"});
  }
  checks.push_back(exact("lattice_point_oracle_L", Rational(static_cast<long>(chi_hypersurface(x, Rational(-3) * k))),
                         chi_l));
  const int code = finish(r, checks);
  return {r, code, {}};
}

json report_json(const ToricVariety& x, const ChargeReport& rep) {
  json r = header("charge", x.polytope(), x.fan());
  r["divisor"] = rationals(rep.divisor.coefficients());
  r["charge"] = class_to_json(x.fan(), rep.charge);
  r["fano_index"] = x.fano_index();
  r["fundamental_divisor"] = rationals(x.fundamental_divisor().coefficients());
  r["degrees"] = rationals(rep.degrees);
  r["degrees_anticanonical"] = rationals(rep.degrees_anticanonical);
  if (rep.genus) r["genus"] = format_rational(*rep.genus);
  return r;
}

Outcome cmd_charge(const Options& o) {
  auto in = load(o);
  const auto x = ToricVariety::from_polytope(in.polytope);
  const auto d = divisor_for(o, in.doc, x.fan().num_rays());
  const auto& ring = x.ring();
  const auto rep = verify_grr(x, d);

  json r = report_json(x, rep);
  std::vector<OracleCheck> checks = rep.checks;
  if (x.dim() == 2) {
    r["formula"] = {{"name", "surface"}, {"class", class_to_json(x.fan(), charge_surface(x, d))}};
  } else if (x.dim() == 3) {
    const auto special = charge_dim3(x, d);
    const auto brane_l = charge_L_dim3(x);
    r["formula"] = {{"name", "dim3"}, {"class", class_to_json(x.fan(), special)}};
    r["charge_L"] = class_to_json(x.fan(), brane_l);
    r["charge_L_degrees"] = rationals(ring.pairings_against(brane_l, x.fundamental_divisor()));
    checks.push_back(flag("charge_L_equals_dim3_at_minus_2K",
                          ring.equivalent(brane_l, charge_dim3(x, Rational(-2) * x.canonical()))));
  }
  const int code = finish(r, checks);
  return {r, code, {}};
}

Outcome cmd_verify(const Options& o) {
  auto in = load(o);
  const auto x = ToricVariety::from_polytope(in.polytope);
  if (o.trials < 0) throw Error(Errc::ParseError, "--trials must be non-negative");
  if (o.max_coeff < 0) throw Error(Errc::ParseError, "--max-coeff must be non-negative");

  SweepGenerator gen(o.seed);
  json results = json::array();
  int passed = 0;
  int failed = 0;
  int oracle_runs = 0;
  for (int t = 0; t < o.trials; ++t) {
    const auto coeffs = gen.divisor(x.fan().num_rays(), o.max_coeff);
    const auto rep = verify_grr(x, DivisorClass::from_integers(coeffs));
    json failures = json::array();
    for (const auto& c : rep.checks) {
      if (!c.pass && !c.skipped) failures.push_back(c.name);
      if (c.name == "lattice_point_oracle" && !c.skipped) ++oracle_runs;
    }
    const bool ok = rep.all_pass();
    ok ? ++passed : ++failed;
    results.push_back({{"divisor", coeffs},
                       {"pass", ok},
                       {"charge_degree", format_rational(degree(rep.charge))},
                       {"failed_checks", failures}});
  }

  json r = header("verify", x.polytope(), x.fan());
  r["trials"] = o.trials;
  r["seed"] = o.seed;
  r["max_coeff"] = o.max_coeff;
  r["passed"] = passed;
  r["failed"] = failed;
  r["oracle_evaluations"] = oracle_runs;
  r["results"] = results;
  std::vector<OracleCheck> checks;
  checks.push_back(exact("sweep_failures", Rational(0), Rational(failed)));
  if (x.dim() == 4) checks.push_back(exact("chi_L_equals_chi_cy3_minus_3K", chi_L_cy3(x),
                                           chi_cy3(x, Rational(-3) * x.canonical())));
  const int code = finish(r, checks);
  return {r, code, {}};
}

// ---------------------------------------------------------------------------
// Text rendering

struct Style {
  bool color = false;
  std::string verdict(bool pass, bool skipped = false) const {
    if (skipped) return color ? "\033[33mSKIP\033[0m" : "SKIP";
    if (!color) return pass ? "PASS" : "FAIL";
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
  }
};

std::string vec(const json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].is_string() ? a[i].get<std::string>() : a[i].dump();
  }
  return s + ")";
}

void render_class(std::ostream& out, const json& cls, const json* degrees, const char* against) {
  for (const auto& part : cls["codim"]) {
    const int k = part["codim"];
    if (part["terms"].empty() && k == 0) continue;
    out << "  codim " << k << ":";
    if (degrees) out << "  deg vs " << against << "^" << (static_cast<int>(degrees->size()) - 1 - k) << " = "
                     << (*degrees)[k].get<std::string>() << " ;";
    if (part["terms"].empty()) out << " 0";
    for (const auto& t : part["terms"]) out << " " << t["coeff"].get<std::string>() << "*V" << vec(t["cone"]);
    out << "\n";
  }
}

void render_checks(std::ostream& out, const json& r, const Style& style) {
  for (const auto& c : r["checks"]) {
    out << "  [" << style.verdict(c["pass"], c["skipped"]) << "] " << c["name"].get<std::string>()
        << "  expected=" << c["expected"].get<std::string>() << " got=" << c["got"].get<std::string>();
    if (c.contains("note")) out << "  (" << c["note"].get<std::string>() << ")";
    out << "\n";
  }
}

void render_header(std::ostream& out, const json& r) {
  out << r["command"].get<std::string>() << ": n=" << r["dim"] << " rays=" << r["num_rays"]
      << " hash=" << r["polytope_hash"].get<std::string>() << "\n";
  out << "rays (divisor coefficient order):";
  for (std::size_t i = 0; i < r["rays"].size(); ++i) out << " [" << i << "]" << vec(r["rays"][i]);
  out << "\n";
}

void render_text(std::ostream& out, const std::string& command, const json& r, const Style& style) {
  render_header(out, r);
  if (command == "analyze") {
    out << "vertices=" << r["vertices"].size() << " dropped_points=" << r["dropped_points"].size() << "\n";
    out << "facets:\n";
    for (std::size_t i = 0; i < r["facets"].size(); ++i) {
      out << "  [" << i << "] normal " << vec(r["facets"][i]["normal"]) << " offset " << r["facets"][i]["offset"]
          << "\n";
    }
    out << "f-vector " << vec(r["f_vector"]) << "  lattice points " << r["lattice_points"] << " (interior "
        << r["interior_lattice_points"] << ")\n";
    out << "reflexive=" << r["reflexive"] << " smooth=" << r["fan"]["smooth"] << " complete=" << r["fan"]["complete"]
        << " rays=" << r["num_rays"] << " max_cones=" << r["fan"]["max_cones"] << "\n";
    if (r.contains("fano_index")) out << "fano_index=" << r["fano_index"] << "\n";
    return;
  }
  if (command == "chern") {
    out << "total Chern class c(X):\n";
    render_class(out, r["chern"], &r["chern_degrees_anticanonical"], "(-K)");
    out << "Todd class up to codim " << r["todd_up_to"] << ":\n";
    render_class(out, r["todd"], &r["todd_degrees_anticanonical"], "(-K)");
    out << "c2 as the sum over codim-2 faces:\n";
    render_class(out, r["c2_wall_sum"], nullptr, "");
  } else if (command == "genus") {
    out << "divisor " << vec(r["divisor"]) << "\n";
    out << "chi(Y, E) = " << r["chi_cy3"].get<std::string>() << "\n";
    out << "chi(Y, L) = " << r["chi_L_cy3"].get<std::string>() << "   chi_cy3(-3K) = "
        << r["chi_cy3_minus_3K"].get<std::string>() << "\n";
  } else if (command == "charge") {
    out << "divisor " << vec(r["divisor"]) << "   H = -K/" << r["fano_index"] << " = "
        << vec(r["fundamental_divisor"]) << "\n";
    out << "charge i_*Q(F):\n";
    render_class(out, r["charge"], &r["degrees"], "H");
    out << "degrees (codim 1..n):";
    for (std::size_t k = 1; k < r["degrees"].size(); ++k) out << " " << r["degrees"][k].get<std::string>();
    out << "\n";
    if (r.contains("charge_L")) {
      out << "charge of the brane of -2K:";
      for (std::size_t k = 1; k < r["charge_L_degrees"].size(); ++k)
        out << " " << r["charge_L_degrees"][k].get<std::string>();
      out << "\n";
    }
    if (r.contains("genus")) out << "chi(Y, O_Y(D)) = " << r["genus"].get<std::string>() << "\n";
  } else if (command == "verify") {
    out << "trials=" << r["trials"] << " seed=" << r["seed"] << " max_coeff=" << r["max_coeff"]
        << " passed=" << r["passed"] << " failed=" << r["failed"]
        << " oracle_evaluations=" << r["oracle_evaluations"] << "\n";
    for (const auto& t : r["results"]) {
      if (!t["pass"].get<bool>()) out << "  failing divisor " << vec(t["divisor"]) << " " << t["failed_checks"] << "\n";
    }
  }
  out << "checks:\n";
  render_checks(out, r, style);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact D-brane charges and arithmetic genera on anticanonical hypersurfaces of smooth toric Fano varieties",
               "branecharge"};
  app.footer(kFormatHelp);
  app.require_subcommand(1);

  Options o;
  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("input", o.input, "polytope file (JSON or matrix; '-' for stdin)")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--input-format", o.input_format, "input format")->check(CLI::IsMember({"auto", "json", "matrix"}));
    sub->add_flag("--dual", o.dual, "use the polar dual of the input (input = polytope of ray generators)");
  };
  auto* analyze = app.add_subcommand("analyze", "reflexivity, smoothness, completeness, f-vector, fan summary");
  auto* chern = app.add_subcommand("chern", "Chern classes, Todd class and c2 as a sum over codim-2 faces");
  auto* genus = app.add_subcommand("genus", "arithmetic genus on the Calabi-Yau threefold (n = 4)");
  auto* charge = app.add_subcommand("charge", "charge of the brane defined by a divisor");
  auto* verify = app.add_subcommand("verify", "exact identity checks over a seeded random divisor sweep");
  for (auto* sub : {analyze, chern, genus, charge, verify}) add_common(sub);
  for (auto* sub : {genus, charge}) {
    sub->add_option("--divisor", o.divisor, "comma-separated integer coefficients in facet order");
  }
  chern->add_option("--max-degree", o.max_degree, "truncation codimension of the Todd class (default n)");
  verify->add_option("--trials", o.trials, "number of random divisors");
  verify->add_option("--seed", o.seed, "64-bit seed of the linear congruential generator");
  verify->add_option("--max-coeff", o.max_coeff, "coefficients are drawn from [-c, c]");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kInputError;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  Outcome result;
  try {
    if (command == "analyze") {
      result = cmd_analyze(o);
    } else if (command == "chern") {
      result = cmd_chern(o);
    } else if (command == "genus") {
      result = cmd_genus(o);
    } else if (command == "charge") {
      result = cmd_charge(o);
    } else {
      result = cmd_verify(o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }

  if (o.format == "json") {
    out << result.report.dump(2) << "\n";
  } else {
    Style style;
    style.color = std::getenv("BRANECHARGE_NO_COLOR") == nullptr && &out == &std::cout && isatty(fileno(stdout));
    render_text(out, command, result.report, style);
  }
  if (!result.diagnostic.empty()) err << result.diagnostic << "\n";
  return result.code;
}

}  // namespace branecharge::cli
