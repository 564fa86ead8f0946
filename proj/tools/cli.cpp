#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "flagdeg/criteria.hpp"
#include "flagdeg/richardson.hpp"
#include "flagdeg/schubert.hpp"
#include "flagdeg/sweep.hpp"

namespace flagdeg::cli {

namespace {

int default_jobs() {
  if (const char* env = std::getenv("FLAGDEG_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

KMode parse_k_mode(const std::string& s) { return s == "k1" ? KMode::K1 : KMode::All; }

// Writes `text` to the file, or to `out` when no path is given.
int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    out.flush();
    if (!out) {
      err << "error: failed writing to standard output\n";
      return kIoFailure;
    }
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (f) f << text;
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return kIoFailure;
  }
  return kOk;
}

struct TableArgs {
  int n = 0;
  std::string format = "md";
  std::string k_mode = "all";
  int jobs = 1;
  std::optional<double> budget;
  std::string output;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  SweepOptions opts;
  opts.k_mode = parse_k_mode(a.k_mode);
  opts.jobs = a.jobs;
  opts.budget = a.budget;
  std::vector<SweepRow> rows;
  try {
    rows = sweep(a.n, opts);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kOverBudget;
  }
  std::string text;
  if (a.format == "csv")
    text = format_csv(rows);
  else if (a.format == "json")
    text = format_json(rows);
  else
    text = format_markdown(rows);
  return emit(text, a.output, out, err);
}

int cmd_check(const std::string& perm_text, const std::string& k_mode, std::ostream& out, std::ostream& err) {
  Permutation w;
  try {
    w = Permutation::parse(perm_text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  EnumerateOptions eo;
  if (parse_k_mode(k_mode) == KMode::K1) eo.restrict_k = 1;
  const auto witnesses = scan(SchubertContext(w), eo);
  const int rc = emit(criteria_report_json(w, witnesses), "", out, err);
  if (rc != kOk) return rc;
  return witnesses.empty() ? kOk : kMonomial;
}

int cmd_richardson(const CorrespondencePair& pair, std::ostream& out, std::ostream& err) {
  const auto report = correspondence_report(pair);
  const int rc = emit(to_json(pair, report) + "\n", "", out, err);
  if (rc != kOk) return rc;
  return report.holds ? kOk : kMonomial;
}

int cmd_divisors(int n, std::ostream& out, std::ostream& err) {
  const auto verdicts = divisor_classification(n);
  std::optional<RelationSet> rels;
  if (n <= 5) rels = prepare_relations(n);
  std::ostringstream os;
  bool agree = true;
  for (const auto& d : verdicts) {
    os << "i=" << d.i << " w=[" << d.w.to_string() << "] " << (d.reducible ? "Reducible" : "Irreducible");
    if (d.reducible)
      os << " case=" << d.proof_case << " witness=" << d.witness->to_string();
    else
      os << " case=middle";
    if (rels) {
      const bool mono = has_monomial(SchubertContext(d.w), *rels);
      os << " scan=" << (mono ? "monomial" : "empty");
      if (mono != d.reducible) {
        os << " MISMATCH";
        agree = false;
      }
    }
    os << "\n";
  }
  const int rc = emit(os.str(), "", out, err);
  if (rc != kOk) return rc;
  if (!agree) {
    err << "error: classification disagrees with the relation scan\n";
    return kCrossCheck;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feigin-degenerate Schubert varieties: relations, criteria, tables"};
  app.require_subcommand(1);

  std::function<int()> action;

  TableArgs table;
  table.jobs = default_jobs();
  auto* t = app.add_subcommand("table", "Sweep S_n and print the criteria table");
  t->add_option("--n", table.n, "rank")->required()->check(CLI::Range(2, 64));
  t->add_option("--format", table.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  t->add_option("--k-mode", table.k_mode, "all or k1")->check(CLI::IsMember({"all", "k1"}));
  t->add_option("--jobs", table.jobs, "worker threads (default: FLAGDEG_JOBS or 1)")->check(CLI::PositiveNumber);
  t->add_option("--budget", table.budget, "wall-clock seconds; required for n > 5")->check(CLI::PositiveNumber);
  t->add_option("-o,--output", table.output, "write to this file instead of standard output");
  t->callback([&] { action = [&] { return cmd_table(table, out, err); }; });

  std::string perm_pos, perm_opt, check_k = "all";
  auto* c = app.add_subcommand("check", "Scan one permutation and report criteria");
  c->add_option("permutation", perm_pos, "one-line notation, e.g. 2,3,1");
  c->add_option("--perm", perm_opt, "same as the positional argument");
  c->add_option("--k-mode", check_k, "all or k1")->check(CLI::IsMember({"all", "k1"}));
  c->callback([&] {
    action = [&]() -> int {
      if (perm_pos.empty() == perm_opt.empty()) {
        err << "error: give the permutation exactly once\n";
        return kBadInput;
      }
      return cmd_check(perm_pos.empty() ? perm_opt : perm_pos, check_k, out, err);
    };
  });

  auto* r = app.add_subcommand("richardson", "Verify a Richardson correspondence");
  r->require_subcommand(1);
  int l_n = 0, l_m = 0, p_i = 0;
  auto* l53 = r->add_subcommand("lemma53", "x = s_m..s_1 against (y_n, s_m..s_1 y_n)");
  l53->add_option("--n", l_n, "rank")->required();
  l53->add_option("--m", l_m, "chain length, 1 <= m <= n-1")->required();
  l53->callback([&] { action = [&] { return cmd_richardson(lemma53_pair(l_n, l_m), out, err); }; });
  auto* p55 = r->add_subcommand("prop55", "divisor w_0 s_i in S_{2i-1} against (s_{2i-1}, w_n)");
  p55->add_option("--i", p_i, "i >= 2")->required();
  p55->callback([&] { action = [&] { return cmd_richardson(prop55_pair(p_i), out, err); }; });

  int d_n = 0;
  auto* d = app.add_subcommand("divisors", "Classify the Schubert divisors of S_n");
  d->add_option("--n", d_n, "rank, n > 2")->required();
  d->callback([&] { action = [&] { return cmd_divisors(d_n, out, err); }; });

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("flagdeg");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    return action();
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace flagdeg::cli
