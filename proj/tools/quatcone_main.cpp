#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "quatcone/json_io.hpp"
#include "quatcone/oracle.hpp"
#include "quatcone/sampling.hpp"

namespace {

using namespace quatcone;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string input;
  std::string output;
  std::string orientation = "+";
  std::string relative_to;
  bool from_generator = false;
  uint64_t seed = 1;
  int trials = 200;
};

json load_input(const std::string& path) {
  if (path.empty()) fail(Errc::Parse, "an --input file is required");
  std::ifstream in(path);
  if (!in) fail(Errc::Parse, "cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::Parse, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

void emit(const json& doc, const Options& opt) {
  std::string text = doc.dump(2) + "\n";
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) fail(Errc::Parse, "cannot open output file: " + opt.output);
  out << text;
}

Orientation parse_orientation(const std::string& s) {
  if (s == "+") return Orientation{+1};
  if (s == "-") return Orientation{-1};
  fail(Errc::Parse, "orientation must be + or -");
}

ProblemDoc load_problem(const Options& opt, json* raw = nullptr) {
  json j = load_input(opt.input);
  if (raw) *raw = j;
  ProblemDoc doc = problem_from_json(j);
  if (opt.orientation == "-") doc.orientation.s = -1;
  return doc;
}

const QuatElement& require_element(const ProblemDoc& doc) {
  if (!doc.element) fail(Errc::Parse, "this command needs an \"element\" in the input document");
  return *doc.element;
}

json problem_header(const ProblemDoc& doc) {
  json j;
  j["field"] = field_to_json(doc.ordering);
  j["algebra"] = algebra_to_json(doc.algebra);
  j["involution"] = involution_to_json(doc.involution);
  if (doc.orientation.s < 0) j["orientation"] = "-";
  return j;
}

int cmd_classify(const Options& opt) {
  ProblemDoc doc = load_problem(opt);
  Classification cls = classify(doc.algebra, doc.involution);
  json basis = json::array();
  for (const auto& e : cls.sym_basis) basis.push_back(element_to_json(e));
  json out{{"kind", involution_kind_name(cls.kind)},
           {"sym_basis", basis},
           {"case", case_tag_name(case_of(doc.algebra, doc.involution, doc.ordering))}};
  emit(out, opt);
  return kExitOk;
}

int cmd_nil(const Options& opt) {
  ProblemDoc doc = load_problem(opt);
  bool nil = is_nil_ordering(doc.algebra, doc.involution, doc.ordering);
  emit(json{{"nil", nil}}, opt);
  return nil ? kExitNegative : kExitOk;
}

int cmd_sign(const Options& opt) {
  ProblemDoc doc = load_problem(opt);
  Context ctx(doc.algebra, doc.involution, doc.ordering, doc.orientation);
  int s = ctx.signature(require_element(doc));
  emit(json{{"signature", s}}, opt);
  return kExitOk;
}

int cmd_member(const Options& opt) {
  ProblemDoc doc = load_problem(opt);
  Context ctx(doc.algebra, doc.involution, doc.ordering, doc.orientation);
  ConeVerdict v = member(ctx, require_element(doc));
  emit(json{{"verdict", cone_verdict_name(v)}}, opt);
  return (v == ConeVerdict::PlusCone || v == ConeVerdict::Zero) ? kExitOk : kExitNegative;
}

int cmd_certify(const Options& opt) {
  ProblemDoc doc = load_problem(opt);
  Context ctx(doc.algebra, doc.involution, doc.ordering, doc.orientation);
  const QuatElement& d = require_element(doc);
  Certificate cert;
  if (!opt.relative_to.empty()) {
    json u = json::parse(opt.relative_to, nullptr, false);
    if (u.is_discarded()) fail(Errc::Parse, "--relative-to needs a JSON element array");
    cert = certify_relative(ctx, d, element_from_json(u, doc.algebra));
  } else {
    cert = certify_from_generator(ctx, d);
  }
  json out = problem_header(doc);
  out["certificate"] = certificate_to_json(cert);
  emit(out, opt);
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  json j = load_input(opt.input);
  reject_unknown_keys(j, {"field", "algebra", "involution", "orientation", "certificate"},
                      "verify input");
  if (!j.contains("certificate")) fail(Errc::Parse, "verify needs a \"certificate\" block");
  json problem = j;
  problem.erase("certificate");
  ProblemDoc doc = problem_from_json(problem);
  Certificate cert = certificate_from_json(j.at("certificate"), doc.algebra);
  std::string reason;
  bool ok = verify_certificate(doc.algebra, doc.involution, doc.ordering, cert, &reason);
  json out{{"ok", ok}};
  if (!ok) out["reason"] = reason;
  emit(out, opt);
  return ok ? kExitOk : kExitNegative;
}

int cmd_hilbert(const Options& opt) {
  ProblemDoc doc = load_problem(opt);
  if (doc.ordering.field.kind != FieldKind::Rational ||
      doc.algebra.center() != CenterKind::BaseField)
    fail(Errc::Unsupported, "local symbols are computed for first-kind algebras over Q");
  const mpq_class &a = doc.algebra.a().p(), &b = doc.algebra.b().p();
  json symbols;
  for (const Place& v : ramified_candidate_places(a, b)) {
    std::string key = v.infinite ? "infinity" : v.p.get_str();
    symbols[key] = hilbert_symbol(a, b, v);
  }
  json out{{"symbols", symbols}, {"division", is_division_over_rationals(a, b)}};
  emit(out, opt);
  return kExitOk;
}

struct SelftestConfig {
  std::string name;
  QuaternionAlgebra algebra;
  Involution involution;
};

std::vector<SelftestConfig> selftest_battery() {
  auto fe = [](long n) { return FieldElement::integer(n); };
  std::vector<SelftestConfig> cfg;
  QuaternionAlgebra h = QuaternionAlgebra::first_kind(fe(-1), fe(-1));
  cfg.push_back({"case1 (-1,-1)", h, Involution::symplectic()});
  QuaternionAlgebra a1 = QuaternionAlgebra::first_kind(fe(2), fe(3));
  cfg.push_back({"case2i (2,3)", a1, Involution::orthogonal(a1.basis(3))});
  QuaternionAlgebra a2 = QuaternionAlgebra::first_kind(fe(-1), fe(3));
  cfg.push_back({"case2ii (-1,3)", a2, Involution::orthogonal(a2.basis(1))});
  cfg.push_back({"case3i (2,3,-1)",
                 QuaternionAlgebra::unitary_center(fe(2), fe(3), fe(-1)), Involution::unitary()});
  cfg.push_back({"case3ii (-1,3,-1)",
                 QuaternionAlgebra::unitary_center(fe(-1), fe(3), fe(-1)), Involution::unitary()});
  cfg.push_back({"case3iii (-1,-2,-1)",
                 QuaternionAlgebra::unitary_center(fe(-1), fe(-2), fe(-1)),
                 Involution::unitary()});
  return cfg;
}

int cmd_selftest(const Options& opt) {
  json configs = json::array();
  bool all_ok = true;
  for (const SelftestConfig& cfg : selftest_battery()) {
    json entry{{"config", cfg.name}};
    std::vector<std::string> failures;
    Context ctx(cfg.algebra, cfg.involution, Ordering::rationals(),
                parse_orientation(opt.orientation));
    SplitContext oracle(ctx);
    Sampler smp(opt.seed);
    int agree = 0;
    for (int t = 0; t < opt.trials; ++t) {
      QuatElement d = smp.invertible_symmetric(ctx);
      if (ctx.signature(d) == oracle.signature(d)) ++agree;
      else failures.push_back(cfg.name + ": oracle disagreement");
    }
    entry["oracle_agreement"] = agree;
    AxiomReport axioms = check_cone_axioms(ctx, opt.seed, opt.trials);
    entry["axioms_ok"] = axioms.ok();
    for (const auto& f : axioms.failures) failures.push_back(cfg.name + ": " + f);
    if (oracle.has_table()) {
      TableReport tables = check_splitting_tables(ctx, opt.seed, std::min(opt.trials, 100));
      entry["tables_ok"] = tables.ok();
      for (const auto& f : tables.failures) failures.push_back(cfg.name + ": " + f);
    }
    int round_trips = std::min(opt.trials, 50);
    int verified = 0;
    for (int t = 0; t < round_trips; ++t) {
      QuatElement d = smp.cone_element(ctx);
      Certificate cert = certify_from_generator(ctx, d);
      if (verify_certificate(cfg.algebra, cfg.involution, ctx.ordering(), cert)) ++verified;
      else failures.push_back(cfg.name + ": certificate failed to verify");
    }
    entry["certificates_verified"] = verified;
    entry["ok"] = failures.empty();
    all_ok = all_ok && failures.empty();
    if (!failures.empty()) entry["failures"] = failures;
    configs.push_back(entry);
  }
  emit(json{{"ok", all_ok}, {"seed", opt.seed}, {"trials", opt.trials}, {"configs", configs}},
       opt);
  return all_ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact positive-cone computations on quaternion algebras with involution"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", opt.input, "input JSON document");
    if (needs_input) in->required();
    sub->add_option("--output", opt.output, "write the result here instead of stdout");
    sub->add_option("--orientation", opt.orientation, "reference orientation (+ or -)")
        ->check(CLI::IsMember({"+", "-"}));
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "involution kind, Sym basis, case tag");
  add_common(classify_cmd, true);
  CLI::App* nil_cmd = app.add_subcommand("nil", "is the ordering nil for this pair?");
  add_common(nil_cmd, true);
  CLI::App* sign_cmd = app.add_subcommand("sign", "signature of the element");
  add_common(sign_cmd, true);
  CLI::App* member_cmd = app.add_subcommand("member", "positive-cone membership verdict");
  add_common(member_cmd, true);
  CLI::App* certify_cmd = app.add_subcommand("certify", "emit a membership certificate");
  add_common(certify_cmd, true);
  certify_cmd->add_flag("--from-generator", opt.from_generator,
                        "certify against the case's designated generator (default)");
  certify_cmd->add_option("--relative-to", opt.relative_to,
                          "certify against this cone element (JSON coordinate array)");
  CLI::App* verify_cmd = app.add_subcommand("verify", "replay a certificate exactly");
  add_common(verify_cmd, true);
  CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "local symbols and division verdict");
  add_common(hilbert_cmd, true);
  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "oracle cross-checks and axiom sampling");
  add_common(selftest_cmd, false);
  selftest_cmd->add_option("--seed", opt.seed, "sampler seed");
  selftest_cmd->add_option("--trials", opt.trials, "trials per configuration")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return cmd_classify(opt);
    if (nil_cmd->parsed()) return cmd_nil(opt);
    if (sign_cmd->parsed()) return cmd_sign(opt);
    if (member_cmd->parsed()) return cmd_member(opt);
    if (certify_cmd->parsed()) return cmd_certify(opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
    if (hilbert_cmd->parsed()) return cmd_hilbert(opt);
    if (selftest_cmd->parsed()) return cmd_selftest(opt);
  } catch (const quatcone::Error& e) {
    nlohmann::json err{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    switch (e.code()) {
      case Errc::NilOrdering:
      case Errc::NotInCone:
        return kExitNegative;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", {{"code", "internal"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
