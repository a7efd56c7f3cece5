// conjspace: command-line front end. JSON in, JSON or text out.
//
// Exit codes: 0 computed and affirmative, 1 computed and negative,
// 2 hypothesis or precondition failure, 3 malformed input or invocation.

#include "conjspace/conjspace.hpp"
#include "conjspace/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace conjspace;
using json_io::json;

enum Exit { kYes = 0, kNo = 1, kPrecondition = 2, kMalformed = 3 };

struct Options {
  std::string format = "json";
  std::size_t gl_cap = kDefaultGlCap;
  long long exhaustive_box = 0;
  std::vector<std::string> inputs;
  std::size_t m = 0;
  unsigned degree = 0;
};

struct Result {
  json body;
  int code = kYes;
  std::string text;  // preferred text rendering, if any
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw json_io::MalformedInput("cannot open input file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json load(const Options& o, std::size_t index) {
  return json_io::parse_text(read_input(index < o.inputs.size() ? o.inputs[index] : std::string()));
}

// One document, or two files, or one object holding both under the given keys.
std::pair<json, json> load_pair(const Options& o, const char* first, const char* second) {
  if (o.inputs.size() >= 2) return {load(o, 0), load(o, 1)};
  const json j = load(o, 0);
  json_io::expect_keys(j, "input", {first, second});
  return {j[first], j[second]};
}

void render_text(std::ostream& os, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& item : j.items()) {
      const json& v = item.value();
      const bool nested = v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()));
      if (nested) {
        os << indent << item.key() << ":\n";
        render_text(os, v, indent + "  ");
      } else {
        os << indent << item.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << indent << "-\n";
        render_text(os, v, indent + "  ");
      } else {
        os << indent << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else {
    os << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

int verdict_code(Outcome o) {
  switch (o) {
    case Outcome::AdmitsByTheorem: return kYes;
    case Outcome::NoRingIso: return kNo;
    case Outcome::HypothesisFailed: return kPrecondition;
  }
  return kNo;
}

WallOptions wall_options(const Options& o) { return {o.exhaustive_box}; }

// Valid Wall data, or a precondition result describing the violations.
std::optional<WallData> wall_or_fail(const json& j, const Options& o, Result& r) {
  WallValidation v = json_io::validate(json_io::to_wall_input(j), wall_options(o));
  if (v.ok()) return *v.data;
  r.body = json_io::from_wall_validation(v);
  r.body["error"] = "Wall data violates the congruences";
  r.code = kPrecondition;
  return std::nullopt;
}

Result cmd_wall_check(const Options& o) {
  const WallValidation v = json_io::validate(json_io::to_wall_input(load(o, 0)), wall_options(o));
  Result r{json_io::from_wall_validation(v), v.ok() ? kYes : kNo, {}};
  if (v.ok()) r.body["zubr"] = json_io::from_zubr(zubr_coords(*v.data));
  return r;
}

Result cmd_zubr(const Options& o) {
  Result r;
  if (auto W = wall_or_fail(load(o, 0), o, r)) r.body = json_io::from_zubr(zubr_coords(*W));
  return r;
}

Result cmd_postnikov(const Options& o) {
  const json j = load(o, 0);
  json_io::expect_keys(j, "3-manifold data", {"b1", "t"}, {"torsion"});
  const std::size_t b1 = json_io::to_count(j["b1"], "b1");
  const TriFormF2 t = json_io::to_triform_f2(j["t"], b1, "t");
  const bool post = postnikov_realizable(t);
  return {{{"postnikov_realizable", post}, {"sullivan_realizable_free", sullivan_realizable_free(t)}}, post ? kYes : kNo, {}};
}

Result cmd_conjugation(const Options& o) {
  const auto [xj, mj] = load_pair(o, "X", "M");
  Result r;
  auto X = wall_or_fail(xj, o, r);
  if (!X) return r;
  const M3Data M = json_io::to_m3(mj);
  const Verdict v = decide(*X, M, o.gl_cap);
  return {json_io::from_verdict(v), verdict_code(v.outcome), {}};
}

Result cmd_mcor(const Options& o) {
  Result r;
  auto X = wall_or_fail(load(o, 0), o, r);
  if (!X) return r;
  auto res = mcor_admits(*X, o.gl_cap);
  if (!res) return {{{"error", "hypothesis failed: some square x^2 is not divisible by 2"}}, kPrecondition, {}};
  json body = {{"M", json_io::from_m3(res->first)}};
  const json verdict = json_io::from_verdict(res->second);
  for (const auto& item : verdict.items()) body[item.key()] = item.value();
  return {body, verdict_code(res->second.outcome), {}};
}

Result cmd_transfer_image(const Options& o) {
  const ZubrClass z = json_io::to_zubr(load(o, 0));
  const bool member = trans_image_member(z);
  return {{{"in_transfer_image", member}}, member ? kYes : kNo, {}};
}

Result cmd_pstar(const Options& o) {
  const ZubrClass z = json_io::to_zubr(load(o, 0));
  return {json_io::from_zubr(p_star(z)), kYes, {}};
}

Result cmd_reachable(const Options& o) {
  const auto [tj, bj] = load_pair(o, "target", "base");
  const bool ok = reachable(json_io::to_zubr(tj), json_io::to_zubr(bj));
  return {{{"reachable", ok}}, ok ? kYes : kNo, {}};
}

Result cmd_lambda_decompose(const Options& o) {
  const LambdaModule M = json_io::to_lambda_module(load(o, 0));
  return {json_io::from_decomposition(decompose(M)), kYes, {}};
}

Result cmd_hyperbolic(const Options& o) {
  const json j = load(o, 0);
  const LambdaForm F = json_io::to_lambda_form(j, {"q"});
  if (!check_skew_hermitian(F)) return {{{"error", "form is not (-1)-hermitian"}}, kPrecondition, {}};
  const F2Matrix B = eps_reduce(F);
  const HyperbolicBasis hb = hyperbolic_basis(B);
  json body = {{"eps_form", json_io::from_f2_matrix(B)}};
  const json basis = json_io::from_hyperbolic(hb);
  for (const auto& item : basis.items()) body[item.key()] = item.value();
  if (j.contains("q")) {
    const IntVector qv = json_io::to_int_vector(j["q"], "q");
    if (qv.size() != F.rank()) throw json_io::MalformedInput("q: expected one value per basis vector");
    std::vector<std::uint8_t> q;
    for (const auto& x : qv) {
      if (x != 0 && x != 1) throw json_io::MalformedInput("q: values must be 0 or 1");
      q.push_back(x == 1 ? 1 : 0);
    }
    body["arf"] = arf(q, B, hb);
  }
  return {body, kYes, {}};
}

Result cmd_qm(const Options& o) {
  json mono = json::array();
  for (const auto& u : qm_basis(o.m, o.degree)) mono.push_back(u.str());
  json body = {{"m", o.m}, {"degree", o.degree}, {"basis", mono}};
  if (o.degree == 2 || o.degree == 4 || o.degree == 6) {
    json kb = json::array();
    for (const auto& u : k_basis(o.m, o.degree)) kb.push_back(k_label(u));
    body["k_basis"] = kb;
    body["pi_pullback"] = json_io::from_f2_matrix(pi_pullback_matrix(o.m, o.degree));
    body["transfer"] = json_io::from_f2_matrix(transfer_matrix(o.m, o.degree));
    body["exact"] = transfer_exact(o.m, o.degree);
  }
  return {body, kYes, {}};
}

Result cmd_verify_tables(const Options& o) {
  const TableReport rep = verify_tables(o.m);
  return {json_io::from_table_report(rep), rep.all_passed() ? kYes : kNo, rep.text()};
}

int emit(const Options& o, const Result& r) {
  if (o.format == "text") {
    if (!r.text.empty()) std::cout << r.text;
    else render_text(std::cout, r.body, "");
  } else {
    std::cout << r.body.dump() << '\n';
  }
  return r.code;
}

int fail(const Options& o, int code, const std::string& kind, const std::string& message) {
  return emit(o, {{{"error", kind}, {"message", message}}, code, {}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and decision procedures for conjugation spaces of 6-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--gl-cap", o.gl_cap, "Largest n for exhaustive GL(n,2) search")->check(CLI::Range(0, 6));
  app.add_option("--exhaustive-box", o.exhaustive_box, "Also scan [-B,B]^m for the mod 24 congruence")
      ->check(CLI::Range(0LL, 1000LL));

  using Handler = Result (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h, int files) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (files > 0) sub->add_option("input", o.inputs, "Input JSON file(s); stdin when omitted")->expected(0, files);
    commands.emplace_back(sub, h);
    return sub;
  };
  add("wall-check", "Validate Wall data {m, mu, p1}", cmd_wall_check, 1);
  add("zubr", "Zubr coordinates of Wall data", cmd_zubr, 1);
  add("postnikov", "Realizability of a 3-manifold cup form {b1, t}", cmd_postnikov, 1);
  add("conjugation", "Decide a pair (X, M): two files or one {X, M} object", cmd_conjugation, 2);
  add("mcor", "The even-squares criterion for Wall data", cmd_mcor, 1);
  add("transfer-image", "Membership of a bordism class in the transfer image", cmd_transfer_image, 1);
  add("pstar", "Push a bordism class along p", cmd_pstar, 1);
  add("reachable", "Reachability: two files or one {target, base} object", cmd_reachable, 2);
  add("lambda-decompose", "Split a Lambda-module {rank, T}", cmd_lambda_decompose, 1);
  add("hyperbolic", "Hyperbolic basis and Arf invariant of a Lambda-form {rank, gram, q?}", cmd_hyperbolic, 1);
  CLI::App* qm = add("qm", "Cohomology of Q_m in one degree, with transfer tables", cmd_qm, 0);
  qm->add_option("--m", o.m, "Rank m")->required()->check(CLI::Range(1, 12));
  qm->add_option("--degree", o.degree, "Degree")->required()->check(CLI::Range(0, 12));
  CLI::App* vt = add("verify-tables", "Recompute the bordism tables for rank m", cmd_verify_tables, 0);
  vt->add_option("--m", o.m, "Rank m")->required()->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) return emit(o, handler(o));
  } catch (const json_io::MalformedInput& e) {
    return fail(o, kMalformed, "malformed input", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(o, kMalformed, "malformed input", e.what());
  } catch (const std::domain_error& e) {
    return fail(o, kPrecondition, "precondition failed", e.what());
  } catch (const std::length_error& e) {
    return fail(o, kPrecondition, "size limit exceeded", e.what());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return kMalformed;
}
