#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flagdeg/pluecker.hpp"
#include "flagdeg/symgroup.hpp"

namespace flagdeg {

/// Schubert variety X_v: knows which Plücker coordinates vanish on it.
class SchubertContext {
public:
  explicit SchubertContext(Permutation v);

  const Permutation& v() const { return v_; }
  int n() const { return v_.n(); }

  /// p_A vanishes on X_v iff A is not <= v([#A]).
  bool vanishes(std::span<const int> set) const;
  bool vanishes(const Term& t) const { return vanishes(t.a) || vanishes(t.b); }

private:
  Permutation v_;
  std::vector<bool> vanish_by_mask_;
};

/// Drops every term with a vanishing factor.
Relation restrict(const Relation& rel, const SchubertContext& ctx);

struct MonomialWitness {
  RelationMeta meta;
  Term term;  // the single surviving term of the restricted initial form
};

/// A relation together with its initial form, computed once per n.
struct PreparedRelation {
  Relation full;
  Relation initial;
};

struct RelationSet {
  int n = 0;
  std::vector<PreparedRelation> items;
};

RelationSet prepare_relations(int n, const EnumerateOptions& opts = {});

/// Some(witness) iff the initial form restricted to X_v is a single nonzero term.
std::optional<MonomialWitness> degenerates_to_monomial(const Relation& rel, const SchubertContext& ctx);
std::optional<MonomialWitness> degenerates_to_monomial(const PreparedRelation& rel, const SchubertContext& ctx);

/// All witnesses in enumeration order.  Empty means mono-free at the Plücker-relation level.
std::vector<MonomialWitness> scan(const SchubertContext& ctx, const RelationSet& rels);
std::vector<MonomialWitness> scan(const SchubertContext& ctx, const EnumerateOptions& opts = {});
/// Early-exit variant of !scan(...).empty().
bool has_monomial(const SchubertContext& ctx, const RelationSet& rels);

/// True iff every term of rel - init(rel) has a vanishing factor, for every relation.
bool ideal_unchanged_under_init(const SchubertContext& ctx, const RelationSet& rels);
bool ideal_unchanged_under_init(const SchubertContext& ctx);

/// Letter window [first, last] of a parabolic subgroup <s_first, ..., s_last>.
struct Window {
  int first = 1;
  int last = 1;
};

/// Shifts v in <s_first..s_last> down to S_{last-first+2}.
/// Throws std::domain_error if v has a letter outside the window.
Permutation rank_reduce(const Permutation& v, Window window);

}  // namespace flagdeg
