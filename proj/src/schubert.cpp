#include "flagdeg/schubert.hpp"

#include <stdexcept>

namespace flagdeg {

namespace {

unsigned set_mask(std::span<const int> set) {
  unsigned m = 0;
  for (int x : set) m |= 1u << (x - 1);
  return m;
}

}  // namespace

SchubertContext::SchubertContext(Permutation v) : v_(std::move(v)) {
  const int n = v_.n();
  if (n > 20) throw std::domain_error("SchubertContext: rank too large");
  const unsigned full = 1u << n;
  vanish_by_mask_.assign(full, false);
  std::vector<IndexSet> prefix(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) prefix[static_cast<std::size_t>(k)] = prefix_image(v_, k);
  IndexSet members;
  for (unsigned m = 1; m < full; ++m) {
    members.clear();
    for (int x = 1; x <= n; ++x)
      if (m & (1u << (x - 1))) members.push_back(x);
    vanish_by_mask_[m] = !grassmann_leq(members, prefix[members.size()]);
  }
}

bool SchubertContext::vanishes(std::span<const int> set) const {
  return vanish_by_mask_[set_mask(set)];
}

Relation restrict(const Relation& rel, const SchubertContext& ctx) {
  Relation out{rel.meta, {}};
  for (const auto& t : rel.terms)
    if (!ctx.vanishes(t)) out.terms.push_back(t);
  return out;
}

RelationSet prepare_relations(int n, const EnumerateOptions& opts) {
  RelationSet set;
  set.n = n;
  for_each_relation(n, opts, [&](Relation&& r) {
    Relation init = initial_form(r);
    set.items.push_back({std::move(r), std::move(init)});
  });
  return set;
}

std::optional<MonomialWitness> degenerates_to_monomial(const PreparedRelation& rel, const SchubertContext& ctx) {
  const Term* survivor = nullptr;
  for (const auto& t : rel.initial.terms) {
    if (ctx.vanishes(t)) continue;
    if (survivor) return std::nullopt;
    survivor = &t;
  }
  if (!survivor) return std::nullopt;
  return MonomialWitness{rel.initial.meta, *survivor};
}

std::optional<MonomialWitness> degenerates_to_monomial(const Relation& rel, const SchubertContext& ctx) {
  return degenerates_to_monomial(PreparedRelation{rel, initial_form(rel)}, ctx);
}

std::vector<MonomialWitness> scan(const SchubertContext& ctx, const RelationSet& rels) {
  if (rels.n != ctx.n()) throw std::domain_error("scan: rank mismatch");
  std::vector<MonomialWitness> out;
  for (const auto& r : rels.items)
    if (auto w = degenerates_to_monomial(r, ctx)) out.push_back(std::move(*w));
  return out;
}

std::vector<MonomialWitness> scan(const SchubertContext& ctx, const EnumerateOptions& opts) {
  return scan(ctx, prepare_relations(ctx.n(), opts));
}

bool has_monomial(const SchubertContext& ctx, const RelationSet& rels) {
  if (rels.n != ctx.n()) throw std::domain_error("has_monomial: rank mismatch");
  for (const auto& r : rels.items)
    if (degenerates_to_monomial(r, ctx)) return true;
  return false;
}

bool ideal_unchanged_under_init(const SchubertContext& ctx, const RelationSet& rels) {
  const int n = ctx.n();
  for (const auto& r : rels.items) {
    if (r.initial.size() == r.full.size()) continue;
    const int kept = r.initial.terms.front().weight(n);
    for (const auto& t : r.full.terms)
      if (t.weight(n) != kept && !ctx.vanishes(t)) return false;
  }
  return true;
}

bool ideal_unchanged_under_init(const SchubertContext& ctx) {
  return ideal_unchanged_under_init(ctx, prepare_relations(ctx.n()));
}

Permutation rank_reduce(const Permutation& v, Window window) {
  const int n = v.n();
  if (window.first < 1 || window.last < window.first || window.last > n - 1)
    throw std::domain_error("rank_reduce: invalid window");
  for (int letter : support(v))
    if (letter < window.first || letter > window.last)
      throw std::domain_error("rank_reduce: permutation not supported on window");
  const int shift = window.first - 1;
  std::vector<int> img;
  for (int a = 1; a <= window.last - window.first + 2; ++a) img.push_back(v(a + shift) - shift);
  return Permutation(std::move(img));
}

}  // namespace flagdeg
