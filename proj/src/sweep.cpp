#include "flagdeg/sweep.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flagdeg {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_for(const SweepOptions& opts) {
  if (!opts.budget) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opts.budget));
}

std::string compact_word(const Permutation& v) {
  const auto word = reduced_word(v);
  if (word.letters.empty()) return "1";
  std::string out;
  for (int a : word.letters) out += "s" + std::to_string(a);
  return out;
}

nlohmann::ordered_json flags_json(const std::array<bool, 7>& flags, bool thm41) {
  nlohmann::ordered_json j;
  for (int c = 0; c < 7; ++c) j[std::to_string(c + 1)] = flags[static_cast<std::size_t>(c)];
  j["thm41"] = thm41;
  return j;
}

nlohmann::ordered_json term_json(const Term& t) {
  return {{"c", t.coeff}, {"A", t.a}, {"B", t.b}};
}

}  // namespace

void check_sweep_bound(int n, const SweepOptions& opts) {
  if (n < 2) throw std::domain_error("sweep: need n >= 2");
  if (n > kSweepCeiling)
    throw ResourceError("sweep: n = " + std::to_string(n) + " exceeds the hard ceiling " + std::to_string(kSweepCeiling));
  if (n > opts.max_n && !opts.budget)
    throw ResourceError("sweep: n = " + std::to_string(n) + " exceeds the default bound " + std::to_string(opts.max_n) +
                        "; pass a time budget to proceed");
}

RelationSet sweep_relations(int n, KMode mode) {
  EnumerateOptions eo;
  if (mode == KMode::K1) eo.restrict_k = 1;
  return prepare_relations(n, eo);
}

SweepRow sweep_row(const Permutation& v, const RelationSet& rels) {
  SweepRow row;
  row.v = v;
  row.one_line = v.to_bracket_string();
  row.word = compact_word(v);
  const SchubertContext ctx(v);
  row.mono = has_monomial(ctx, rels);
  if (!v.is_identity()) {
    const auto crit = evaluate_criteria(v);
    for (std::size_t c = 0; c < 7; ++c) row.flags[c] = crit[c].has_value();
  }
  row.thm41 = thm41(v).has_value();
  row.guaranteed_free = monofree_guarantee(v);

  bool any_flag = row.thm41;
  for (bool f : row.flags) any_flag = any_flag || f;
  if (any_flag && !row.mono) throw std::logic_error("sweep: criterion flag on mono-free " + row.one_line);
  if (row.guaranteed_free && row.mono)
    throw std::logic_error("sweep: guarantee " + to_string(*row.guaranteed_free) + " contradicted on " + row.one_line);
  return row;
}

std::vector<SweepRow> sweep_serial(int n, const SweepOptions& opts) {
  check_sweep_bound(n, opts);
  const auto deadline = deadline_for(opts);
  const RelationSet rels = sweep_relations(n, opts.k_mode);
  std::vector<SweepRow> rows;
  for (const auto& v : all_permutations(n)) {
    if (deadline && Clock::now() > *deadline) throw ResourceError("sweep: time budget exhausted");
    rows.push_back(sweep_row(v, rels));
  }
  return rows;
}

std::vector<SweepRow> sweep(int n, const SweepOptions& opts) {
  check_sweep_bound(n, opts);
  const auto deadline = deadline_for(opts);
  const RelationSet rels = sweep_relations(n, opts.k_mode);
  const auto perms = all_permutations(n);
  const long count = static_cast<long>(perms.size());
  std::vector<SweepRow> rows(perms.size());

  // exceptions must not leave the parallel region
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const int jobs = opts.jobs < 1 ? 1 : opts.jobs;

#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
  for (long idx = 0; idx < count; ++idx) {
    if (stop.load(std::memory_order_relaxed)) continue;
    try {
      if (deadline && Clock::now() > *deadline) throw ResourceError("sweep: time budget exhausted");
      rows[static_cast<std::size_t>(idx)] = sweep_row(perms[static_cast<std::size_t>(idx)], rels);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

SweepTotals totals(const std::vector<SweepRow>& rows) {
  SweepTotals t;
  t.rows = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    t.mono += r.mono;
    t.thm41 += r.thm41;
    for (std::size_t c = 0; c < 7; ++c) t.flags[c] += r.flags[c];
  }
  return t;
}

std::string format_markdown(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "| w one-line | w red. word | mono | (1) | (2) | (3) | (4) | (5) | (6) | (7) |\n";
  os << "|---|---|---|---|---|---|---|---|---|---|\n";
  auto mark = [](bool b) { return b ? "x" : "-"; };
  for (const auto& r : rows) {
    os << "| " << r.one_line << " | " << r.word << " | " << mark(r.mono);
    for (bool f : r.flags) os << " | " << mark(f);
    os << " |\n";
  }
  const auto t = totals(rows);
  os << "| " << t.rows << " | | " << t.mono;
  for (int f : t.flags) os << " | " << f;
  os << " |\n";
  return os.str();
}

std::string format_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "one_line,word,mono,1,2,3,4,5,6,7\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const auto& r : rows) {
    os << '"' << r.one_line << "\"," << r.word << ',' << b(r.mono);
    for (bool f : r.flags) os << ',' << b(f);
    os << '\n';
  }
  const auto t = totals(rows);
  os << "total_" << t.rows << ",," << t.mono;
  for (int f : t.flags) os << ',' << f;
  os << '\n';
  return os.str();
}

std::string format_json(const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json j;
  j["n"] = rows.empty() ? 0 : rows.front().v.n();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json rj;
    rj["perm"] = r.v.to_string();
    rj["word"] = r.word;
    rj["mono"] = r.mono;
    rj["flags"] = flags_json(r.flags, r.thm41);
    rj["guarantee"] = r.guaranteed_free ? nlohmann::ordered_json(to_string(*r.guaranteed_free)) : nullptr;
    arr.push_back(std::move(rj));
  }
  j["rows"] = std::move(arr);
  const auto t = totals(rows);
  nlohmann::ordered_json tj;
  tj["rows"] = t.rows;
  tj["mono"] = t.mono;
  for (int c = 0; c < 7; ++c) tj[std::to_string(c + 1)] = t.flags[static_cast<std::size_t>(c)];
  tj["thm41"] = t.thm41;
  j["totals"] = std::move(tj);
  return j.dump(2) + "\n";
}

std::string criteria_report_json(const Permutation& w, const std::vector<MonomialWitness>& witnesses) {
  nlohmann::ordered_json j;
  j["perm"] = w.to_string();
  j["mono"] = !witnesses.empty();

  std::array<bool, 7> flags{};
  auto crit_arr = nlohmann::ordered_json::array();
  if (!w.is_identity()) {
    const auto crit = evaluate_criteria(w);
    for (std::size_t c = 0; c < 7; ++c) {
      flags[c] = crit[c].has_value();
      if (!crit[c]) continue;
      nlohmann::ordered_json cj;
      cj["id"] = crit[c]->id;
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [name, value] : crit[c]->params) params[name] = value;
      cj["params"] = std::move(params);
      crit_arr.push_back(std::move(cj));
    }
  }
  const auto t41 = thm41(w);
  j["flags"] = flags_json(flags, t41.has_value());
  const auto g = monofree_guarantee(w);
  j["guarantee"] = g ? nlohmann::ordered_json(to_string(*g)) : nullptr;

  auto wit = nlohmann::ordered_json::array();
  for (const auto& m : witnesses)
    wit.push_back({{"k", m.meta.k}, {"J", m.meta.j}, {"L", m.meta.l}, {"term", term_json(m.term)}});
  j["witnesses"] = std::move(wit);
  j["criterion_witnesses"] = std::move(crit_arr);
  return j.dump(2) + "\n";
}

}  // namespace flagdeg
