#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagdeg/criteria.hpp"
#include "flagdeg/schubert.hpp"
#include "flagdeg/symgroup.hpp"

namespace flagdeg {

enum class KMode { All, K1 };

struct SweepOptions {
  KMode k_mode = KMode::All;
  int jobs = 1;
  // wall-clock seconds; required for n above max_n
  std::optional<double> budget;
  int max_n = 5;
};

/// Hard ceiling: n! rows times the relation count grows too fast past this.
inline constexpr int kSweepCeiling = 7;

/// n over the configured bound, or the budget ran out mid-sweep.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SweepRow {
  Permutation v;
  std::string one_line;  // "[1, 2, 3]"
  std::string word;      // "s1s2", "1" for the identity
  bool mono = false;
  std::array<bool, 7> flags{};
  bool thm41 = false;
  std::optional<Guarantee> guaranteed_free;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Throws std::domain_error for n < 2 and ResourceError past the bound.
void check_sweep_bound(int n, const SweepOptions& opts);

RelationSet sweep_relations(int n, KMode mode);

/// One row; throws std::logic_error if a criterion flag, or thm41, is set on
/// a mono-free row, or a guarantee is set on a row with a monomial.
SweepRow sweep_row(const Permutation& v, const RelationSet& rels);

/// Reference implementation: one thread, rows in lexicographic order.
std::vector<SweepRow> sweep_serial(int n, const SweepOptions& opts = {});
/// OpenMP kernel over permutations; output identical to sweep_serial.
std::vector<SweepRow> sweep(int n, const SweepOptions& opts = {});

struct SweepTotals {
  int rows = 0;
  int mono = 0;
  std::array<int, 7> flags{};
  int thm41 = 0;
};

SweepTotals totals(const std::vector<SweepRow>& rows);

std::string format_markdown(const std::vector<SweepRow>& rows);
std::string format_csv(const std::vector<SweepRow>& rows);
std::string format_json(const std::vector<SweepRow>& rows);

/// Full single-permutation report: monomial witnesses, criteria witnesses,
/// guarantee tag.  Criteria are skipped for the identity.
std::string criteria_report_json(const Permutation& w, const std::vector<MonomialWitness>& witnesses);

}  // namespace flagdeg
