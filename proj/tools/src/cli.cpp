#include "cli.hpp"

#include "tables.hpp"

#include "qgalois/algebras.hpp"
#include "qgalois/expr.hpp"
#include "qgalois/presentation_file.hpp"
#include "qgalois/qcalc.hpp"
#include "qgalois/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <stdexcept>

namespace qgalois::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string expr;
  std::string algebra;
  std::string presentation;
  std::string format = "text";
  std::string suite;
  std::string table;
  std::string sub;
  unsigned bound = 0;
  std::uint64_t seed = SuiteOptions{}.seed;
  long k = 0;
  long i = 0;
};

bool is_tensor(const std::string& s) { return s.find("(x)") != std::string::npos || s.find("⊗") != std::string::npos; }

AlgebraPtr select_algebra(const Options& o) {
  if (!o.presentation.empty()) return load_presentation(o.presentation);
  return algebra(o.algebra);
}

int cmd_reduce(const Options& o, std::ostream& out) {
  Json j;
  std::string result;
  if (o.algebra.empty() && o.presentation.empty()) {
    Symbols sym;
    sym.alphabet = Alphabet::make({});
    if (is_tensor(o.expr)) throw ParseError("tensor input needs --algebra", o.expr.find('('));
    const NCPoly p = parse_poly(o.expr, sym);
    result = format_scalar(p.coeff(Word()));
    j["algebra"] = "scalar";
  } else {
    const AlgebraPtr A = select_algebra(o);
    j["algebra"] = A->name();
    if (is_tensor(o.expr)) {
      const TensorPoly t = reduce_tensor(parse_tensor(o.expr, A->symbols(), A->symbols()), A->rs(), A->rs());
      result = format_tensor(t, *A, *A);
    } else {
      result = A->format(A->parse(o.expr));
    }
  }
  if (o.format == "json") {
    j["input"] = o.expr;
    j["normal_form"] = result;
    out << j.dump(2) << "\n";
  } else {
    out << result << "\n";
  }
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!is_suite(o.suite)) throw CLI::ValidationError("suite", "unknown suite '" + o.suite + "'");
  const Report rep = run_suite(o.suite, SuiteOptions{o.bound, o.seed});
  if (o.format == "json") {
    Json j;
    j["suite"] = rep.suite;
    j["passed"] = rep.passed();
    j["cases"] = rep.cases();
    j["failures"] = rep.failures();
    Json checks = Json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name()},
                        {"reference", c.reference()},
                        {"passed", c.passed()},
                        {"cases", c.cases()},
                        {"failures", c.failures()},
                        {"details", c.details()}});
    j["checks"] = checks;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      out << (c.passed() ? "PASS " : "FAIL ") << c.name() << " [" << c.cases() << " cases";
      if (c.failures()) out << ", " << c.failures() << " failed";
      out << "]\n";
      for (const auto& d : c.details()) out << "    " << d << "\n";
    }
    out << rep.suite << ": " << rep.checks.size() << " checks, " << rep.cases() << " cases, " << rep.failures()
        << " failures: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? kPass : kFail;
}

int cmd_emit(const Options& o, std::ostream& out) {
  const Table t = build_table(o.table, o.algebra, o.sub);
  out << (o.format == "tex" ? table_tex(t) : table_json(t));
  return kPass;
}

int cmd_qbinom(const Options& o, std::ostream& out) {
  if (o.k < 0 || o.i < 0 || o.i > o.k) throw CLI::ValidationError("qbinom", "need 0 <= i <= k");
  const IntPoly p = qbinom(o.k, o.i);
  const std::string at = format_scalar(qbinom_at_omega(o.k, o.i));
  if (o.format == "json") {
    Json j;
    j["k"] = o.k;
    j["i"] = o.i;
    j["polynomial"] = p.to_string("q");
    j["at_omega"] = at;
    out << j.dump(2) << "\n";
  } else {
    out << p.to_string("q") << "\n" << "at q = w: " << at << "\n";
  }
  return kPass;
}

int cmd_confluence(const Options& o, std::ostream& out) {
  std::vector<AlgebraPtr> targets;
  if (!o.presentation.empty() || !o.algebra.empty()) targets.push_back(select_algebra(o));
  else
    for (const auto& n : algebra_names()) targets.push_back(algebra(n));
  bool all = true;
  Json arr = Json::array();
  for (const auto& A : targets) {
    const ResolvabilityReport r = check_resolvable(A->rs());
    all = all && r.resolvable;
    Json fails = Json::array();
    std::vector<std::string> lines;
    for (const auto& f : r.failures) {
      const std::string overlap = f.ambiguity.overlap.to_string(*A->alphabet());
      fails.push_back({{"overlap", overlap},
                       {"rules", {f.ambiguity.rule_i, f.ambiguity.rule_j}},
                       {"via_first", A->format(f.via_first)},
                       {"via_second", A->format(f.via_second)}});
      lines.push_back("  overlap " + overlap + ": " + A->format(f.via_first) + " vs " + A->format(f.via_second));
    }
    if (o.format == "json") {
      arr.push_back({{"algebra", A->name()},
                     {"rules", A->rs().rules().size()},
                     {"ambiguities", r.checked},
                     {"confluent", r.resolvable},
                     {"failures", fails}});
    } else {
      out << A->name() << ": " << (r.resolvable ? "confluent" : "NOT confluent") << " (" << A->rs().rules().size()
          << " rules, " << r.checked << " ambiguities, " << r.failures.size() << " unresolved)\n";
      for (const auto& l : lines) out << l << "\n";
    }
  }
  if (o.format == "json") out << arr.dump(2) << "\n";
  return all ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in A(SL_q(2)) at a cube root of unity and its finite quotients", "qgalois"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats = {"text", "json"};

  auto* reduce = app.add_subcommand("reduce", "Normal form of an expression (scalar field when no algebra is given)");
  reduce->add_option("expr", o.expr, "Expression; 'l (x) r' for tensors")->required();
  reduce->add_option("--algebra", o.algebra, "Built-in algebra")->check(CLI::IsMember(algebra_names()));
  reduce->add_option("--presentation", o.presentation, "Presentation file")->check(CLI::ExistingFile);
  reduce->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--bound", o.bound, "Degree bound for sampled suites");
  verify->add_option("--seed", o.seed, "Seed for the randomized properties");
  verify->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* emit = app.add_subcommand("emit-table", "Print a table as JSON or TeX");
  emit->add_option("name", o.table)->required()->check(CLI::IsMember(table_names()));
  emit->add_option("--format", o.format)->check(CLI::IsMember({"json", "tex"}));
  emit->add_option("--algebra", o.algebra, "For structure-constants: af, hplus, hminus, hpm");
  emit->add_option("--sub", o.sub, "For corep: N1 or N2");

  auto* qb = app.add_subcommand("qbinom", "Gaussian binomial [k, i]_q and its value at q = w");
  qb->add_option("k", o.k)->required();
  qb->add_option("i", o.i)->required();
  qb->add_option("--format", o.format)->check(CLI::IsMember(formats));

  auto* conf = app.add_subcommand("check-confluence", "Diamond-lemma check of a reduction system");
  conf->add_option("--algebra", o.algebra)->check(CLI::IsMember(algebra_names()));
  conf->add_option("--presentation", o.presentation)->check(CLI::ExistingFile);
  conf->add_option("--format", o.format)->check(CLI::IsMember(formats));
  for (auto* s : {reduce, conf}) s->get_option("--algebra")->excludes(s->get_option("--presentation"));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
    if (*emit && o.format == "text") o.format = "json";
    if (*reduce) return cmd_reduce(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*emit) return cmd_emit(o, out);
    if (*qb) return cmd_qbinom(o, out);
    if (*conf) return cmd_confluence(o, out);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qgalois::cli
