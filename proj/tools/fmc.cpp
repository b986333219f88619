#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fmc/constructions.hpp"
#include "fmc/corpus.hpp"
#include "fmc/errors.hpp"
#include "fmc/forms.hpp"
#include "fmc/identities.hpp"
#include "fmc/search.hpp"
#include "fmc/spec_io.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kPrecondition = 3 };

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<long long> integers(const std::string& s, const std::string& what) {
  std::vector<long long> out;
  if (s.empty()) return out;
  for (const auto& t : split(s, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.push_back(v);
    } catch (const std::exception&) {
      throw fmc::InvalidArgument("bad integer '" + t + "' in " + what);
    }
  }
  return out;
}

// "a,b;c,d" -> {{a,b},{c,d}}
std::vector<std::vector<long long>> matrix(const std::string& s, const std::string& what) {
  std::vector<std::vector<long long>> out;
  if (s.empty()) return out;
  for (const auto& row : split(s, ';')) out.push_back(integers(row, what));
  return out;
}

struct RepChoice {
  std::string rep, rho, mu, form;

  fmc::Bindings bindings() const {
    fmc::Bindings b;
    if (!rep.empty()) b = fmc::Bindings::pair(rep);
    if (!rho.empty()) b.rho = rho;
    if (!mu.empty()) b.mu = mu;
    if (!form.empty()) b.form = form;
    return b;
  }

  fmc::FmRepresentation pair(const fmc::AlgebraSpec& spec) const {
    if (!rho.empty() || !mu.empty()) {
      if (rho.empty() || mu.empty()) throw fmc::MissingInput("--rho and --mu must be given together");
      return fmc::FmRepresentation{spec.representation(rho), spec.representation(mu)};
    }
    if (!rep.empty()) return spec.fm_representation(rep);
    auto names = spec.fm_representation_names();
    if (names.size() != 1) {
      throw fmc::MissingInput(names.empty() ? "input has no representation pair NAME.rho / NAME.mu"
                                            : "input has several representation pairs; pass --rep NAME");
    }
    return spec.fm_representation(names.front());
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--rep", rep, "Representation pair stored as NAME.rho / NAME.mu");
    cmd->add_option("--rho", rho, "Representation used as rho");
    cmd->add_option("--mu", mu, "Representation used as mu");
  }
};

std::vector<fmc::CheckReport> default_checks(const fmc::AlgebraSpec& spec, const RepChoice& choice,
                                             const fmc::CheckOptions& opts) {
  std::vector<fmc::CheckReport> out;
  auto append = [&](std::vector<fmc::CheckReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  if (spec.has_product("dot") && spec.has_product("bracket")) append(fmc::check_suite(spec, "f-manifold-color", {}, opts));
  if (spec.has_product("zinbiel") && spec.has_product("prelie")) {
    append(fmc::check_suite(spec, "pre-f-manifold-color", {}, opts));
  }
  if (spec.has_product("dot") && spec.has_product("bracket")) {
    if (!choice.rep.empty() || !choice.rho.empty()) {
      append(fmc::check_suite(spec, "fm-representation", choice.bindings(), opts));
    } else {
      for (const auto& name : spec.fm_representation_names()) {
        append(fmc::check_suite(spec, "fm-representation", fmc::Bindings::pair(name), opts));
      }
    }
    if (!choice.form.empty()) {
      append(fmc::check_form(spec, choice.form, opts));
    } else {
      for (const auto& [name, form] : spec.forms) append(fmc::check_form(spec, name, opts));
    }
  }
  return out;
}

void print_precondition(const fmc::PreconditionFailed& e) {
  std::cerr << "precondition failed: " << e.what() << "\n" << fmc::emit_report(e.reports(), fmc::ReportFormat::Human);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker and constructions for graded F-manifold color algebras"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for identity checks (0 = all cores)");

  // check
  auto* check_cmd = app.add_subcommand("check", "Check identities on a spec file");
  std::string check_file, identity, suite;
  bool as_json = false;
  RepChoice check_choice;
  check_cmd->add_option("file", check_file, "Spec file, or - for stdin")->required();
  auto* id_opt = check_cmd->add_option("--identity", identity, "Single identity");
  auto* suite_opt = check_cmd->add_option("--suite", suite, "Named suite");
  id_opt->excludes(suite_opt);
  check_cmd->add_flag("--json", as_json, "JSON report");
  check_choice.add_to(check_cmd);
  check_cmd->add_option("--form", check_choice.form, "Bilinear form to use");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Run a construction and emit the resulting spec");
  std::string kind, construct_file, out_path = "-";
  bool raw = false;
  RepChoice construct_choice;
  construct_cmd->add_option("kind", kind, "commutator|symmetrize|adjoint|semidirect|dual|from-pre-f")
      ->required()
      ->check(CLI::IsMember({"commutator", "symmetrize", "adjoint", "semidirect", "dual", "from-pre-f"}));
  construct_cmd->add_option("file", construct_file, "Spec file, or - for stdin")->required();
  construct_cmd->add_option("-o,--output", out_path, "Output path, - for stdout");
  construct_cmd->add_flag("--raw", raw, "dual: skip the hypothesis check");
  construct_choice.add_to(construct_cmd);

  // search
  auto* search_cmd = app.add_subcommand("search", "Randomized search for instances passing a suite");
  std::string group_arg, bichar_arg, degrees_arg, pool_arg = "0,1,-1", search_out = "-";
  int root_order = 0;
  fmc::SearchParams params;
  search_cmd->add_option("--group", group_arg, "Cyclic orders, e.g. 2,3 (empty = trivial group)");
  search_cmd->add_option("--bichar", bichar_arg, "Exponent matrix rows separated by ';', e.g. 1 or 0,1;1,0");
  search_cmd->add_option("--root-order", root_order, "N (default: group exponent)");
  search_cmd->add_option("--dim", params.dimension, "Dimension")->required();
  search_cmd->add_option("--degrees", degrees_arg, "Degrees separated by ';', components by ','");
  search_cmd->add_option("--suite", params.target, "Target suite or identity")->required();
  search_cmd->add_option("--pool", pool_arg, "Comma-separated scalar literals");
  search_cmd->add_option("--trials", params.trials, "Number of samples")->check(CLI::PositiveNumber);
  search_cmd->add_option("--seed", params.seed, "RNG seed");
  search_cmd->add_option("-o,--output", search_out, "Output path for the JSON array of instances");

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in example algebras");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->add_subcommand("list", "List entries");
  auto* show_cmd = corpus_cmd->add_subcommand("show", "Print an entry");
  std::string show_name;
  show_cmd->add_option("name", show_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  const fmc::CheckOptions opts{threads};
  try {
    if (*check_cmd) {
      const fmc::AlgebraSpec spec = fmc::parse_spec_file(check_file);
      std::vector<fmc::CheckReport> reports;
      if (!identity.empty()) {
        reports.push_back(fmc::check(spec, fmc::parse_identity(identity), check_choice.bindings(), opts));
      } else if (!suite.empty()) {
        reports = fmc::check_suite(spec, suite, check_choice.bindings(), opts);
      } else {
        reports = default_checks(spec, check_choice, opts);
      }
      std::cout << fmc::emit_report(reports, as_json ? fmc::ReportFormat::Json : fmc::ReportFormat::Human);
      return fmc::all_passed(reports) ? kPass : kFail;
    }

    if (*construct_cmd) {
      const fmc::AlgebraSpec spec = fmc::parse_spec_file(construct_file);
      fmc::AlgebraSpec out = spec;
      if (kind == "commutator") {
        out.set_product(fmc::commutator_bracket(spec.product("prelie")));
      } else if (kind == "symmetrize") {
        auto s = fmc::symmetrize_zinbiel(spec.product("zinbiel"));
        out.set_product(std::move(s.dot));
        out.set_representation(std::move(s.frakL));
      } else if (kind == "adjoint") {
        out.set_fm_representation("adjoint", fmc::adjoint_fm_representation(spec, opts));
      } else if (kind == "semidirect") {
        out = fmc::semidirect_product(spec, construct_choice.pair(spec), opts);
      } else if (kind == "dual") {
        const auto rep = construct_choice.pair(spec);
        out.set_fm_representation("dual", raw ? fmc::dual_representation(rep)
                                              : fmc::dual_representation_checked(spec, rep, opts));
      } else {
        out = fmc::induce_from_pre_f(spec, opts).spec;
      }
      fmc::write_text(out_path, fmc::emit_spec(out));
      return kPass;
    }

    if (*search_cmd) {
      for (long long d : integers(group_arg, "--group")) params.cyclic_orders.push_back(static_cast<int>(d));
      params.exponents = matrix(bichar_arg, "--bichar");
      if (params.exponents.empty() && !params.cyclic_orders.empty()) {
        params.exponents.assign(params.cyclic_orders.size(), std::vector<long long>(params.cyclic_orders.size(), 0));
      }
      if (root_order == 0) root_order = static_cast<int>(fmc::FiniteAbelianGroup(params.cyclic_orders).exponent());
      params.root_order = root_order;
      params.degrees = matrix(degrees_arg, "--degrees");
      params.pool = split(pool_arg, ',');
      const fmc::SearchResult result = fmc::search(params);
      std::string text = "[";
      for (std::size_t i = 0; i < result.found.size(); ++i) {
        std::string spec = fmc::emit_spec(result.found[i]);
        spec.pop_back();
        text += (i ? ",\n" : "\n") + spec;
      }
      text += result.found.empty() ? "]\n" : "\n]\n";
      fmc::write_text(search_out, text);
      std::cerr << result.found.size() << " passing of " << result.distinct << " distinct candidates in "
                << result.trials << " trials\n";
      return kPass;
    }

    if (*corpus_cmd) {
      if (show_name.empty()) {
        for (const auto& e : fmc::corpus()) {
          std::cout << e.name << "  " << e.summary << "  [";
          for (std::size_t i = 0; i < e.advertised.size(); ++i) std::cout << (i ? ", " : "") << e.advertised[i];
          std::cout << "]\n";
        }
      } else {
        std::cout << fmc::corpus_entry(show_name).text;
      }
      return kPass;
    }
  } catch (const fmc::PreconditionFailed& e) {
    print_precondition(e);
    return kPrecondition;
  } catch (const fmc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kPass;
}
