#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagdeg/pluecker.hpp"
#include "flagdeg/schubert.hpp"
#include "flagdeg/symgroup.hpp"

namespace flagdeg {

/// Instantiation of one reducibility criterion (ids 1..7).
struct CriterionWitness {
  int id = 0;
  std::vector<std::pair<std::string, int>> params;

  int param(const std::string& name) const;
  std::string to_string() const;
};

// Literal predicates for each criterion at fixed parameters.  Arguments are
// 1-indexed; out-of-range values simply make the predicate false.
bool crit1_holds(const Permutation& w, int i, int j);
bool crit2_holds(const Permutation& w, int i, int l, int x);
bool crit3_holds(const Permutation& w, int j, int i);
bool crit4_holds(const Permutation& w, int i, int j);
bool crit5_holds(const Permutation& w, int i, int l);

/// First witness in lexicographic parameter order.  Throws std::domain_error for the identity.
std::optional<CriterionWitness> crit1(const Permutation& w);
std::optional<CriterionWitness> crit2(const Permutation& w);
std::optional<CriterionWitness> crit3(const Permutation& w);
std::optional<CriterionWitness> crit4(const Permutation& w);
std::optional<CriterionWitness> crit5(const Permutation& w);
std::optional<CriterionWitness> crit6(const Permutation& w);
std::optional<CriterionWitness> crit7(const Permutation& w);
std::optional<CriterionWitness> criterion(int id, const Permutation& w);

/// All seven criteria; every entry is std::nullopt for the identity.
std::array<std::optional<CriterionWitness>, 7> evaluate_criteria(const Permutation& w);

/// The relation R^1_{J,L} built in the proof of the criterion, for replay
/// against the monomial oracle.
Relation witness_relation(const Permutation& w, const CriterionWitness& witness);

struct Thm41Witness {
  int j = 0;
  int k = 0;
};

/// Gr(1)/Gr(2) classification: the first (j, k), 1 < j < k <= n, with
///   s_{j-1}..s_1 <= v_bar <= s_{k-2}..s_1  and  s_{k-1}..s_2 <= v_barbar.
std::optional<Thm41Witness> thm41(const Permutation& v);

enum class Guarantee {
  LeqC,
  CoxeterTimesSimple,
  CoxeterTimesCommuting,
  CommutingFactorization,
  RankReduction,
};

std::string to_string(Guarantee g);

/// A reason why no Plücker relation degenerates to a monomial on X_w, if one
/// of the known sufficient hypotheses verifiably holds.
std::optional<Guarantee> monofree_guarantee(const Permutation& w);

/// Splits w into factors supported on the maximal runs of consecutive letters
/// of support(w); the factors commute pairwise and multiply back to w.
std::vector<Permutation> commuting_factors(const Permutation& w);

/// For X_{c s_h}: every restricted initial relation has 0 terms, or 2 terms
/// with coefficients +1 and -1.
bool pure_difference_check(int n, int h, const RelationSet& rels);
bool pure_difference_check(int n, int h);

struct DivisorVerdict {
  int i = 0;
  bool reducible = false;
  int proof_case = 0;  // 1..4, or 0 for the irreducible middle divisor
  std::optional<CriterionWitness> witness;
  Permutation w;  // w_0 s_i
};

/// Verdict for each Schubert divisor X_{w_0 s_i}, i in [n-1].  Throws std::domain_error for n <= 2.
std::vector<DivisorVerdict> divisor_classification(int n);

}  // namespace flagdeg
