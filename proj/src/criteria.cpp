#include "flagdeg/criteria.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace flagdeg {

namespace {

// x in w([a, b]); empty when a > b.
bool in_image(const Permutation& w, int a, int b, int x) {
  for (int p = std::max(a, 1); p <= std::min(b, w.n()); ++p)
    if (w(p) == x) return true;
  return false;
}

// x in w([i-1]) + {w(i+1)}
bool in_s(const Permutation& w, int i, int x) {
  return in_image(w, 1, i - 1, x) || w(i + 1) == x;
}

CriterionWitness make(int id, std::vector<std::pair<std::string, int>> params) {
  return CriterionWitness{id, std::move(params)};
}

void require_nonidentity(const Permutation& w) {
  if (w.is_identity()) throw std::domain_error("criteria are not defined for the identity");
}

int first_moved(const Permutation& w) {
  for (int i = 1; i <= w.n(); ++i)
    if (w(i) != i) return i;
  return 0;
}

std::vector<int> image_set(const Permutation& w, int a, int b) {
  std::vector<int> out;
  for (int p = a; p <= b; ++p) out.push_back(w(p));
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> without(std::vector<int> v, int x) {
  std::erase(v, x);
  return v;
}

// Sequence (first, rest...) with rest sorted.
IndexSeq led_by(int first, const std::vector<int>& rest, int n) {
  std::vector<int> seq{first};
  for (int x : sorted(rest))
    if (x != first) seq.push_back(x);
  return IndexSeq(std::move(seq), n);
}

Permutation chain(int from, int to, int n) {
  // s_from s_{from-1} ... s_to
  ReducedWord word;
  for (int a = from; a >= to; --a) word.letters.push_back(a);
  return word.evaluate(n);
}

}  // namespace

int CriterionWitness::param(const std::string& name) const {
  for (const auto& [k, v] : params)
    if (k == name) return v;
  throw std::out_of_range("criterion witness has no parameter " + name);
}

std::string CriterionWitness::to_string() const {
  std::string out = "(" + std::to_string(id) + ")";
  for (const auto& [k, v] : params) out += " " + k + "=" + std::to_string(v);
  return out;
}

bool crit1_holds(const Permutation& w, int i, int j) {
  const int n = w.n();
  if (i < 1 || i > n - 1 || j < 1 || j > n) return false;
  if (!(w(i) < w(i + 1))) return false;
  return i <= w(i) && j <= w(i) && i != j && !in_s(w, i, i) && !in_s(w, i, j);
}

bool crit2_holds(const Permutation& w, int i, int l, int x) {
  const int n = w.n();
  if (i < 3 || i > n - 1 || l < 1 || l > n || x < 1 || x > n) return false;
  if (!(w(i) < w(i + 1))) return false;
  return x != i - 1 && l <= w(i) && w(i + 1) <= x && w(i + 1) <= i - 1 && in_s(w, i, i - 1) &&
         in_s(w, i, x) && !in_s(w, i, l);
}

bool crit3_holds(const Permutation& w, int j, int i) {
  const int n = w.n();
  if (j < 2 || j > n - 1 || i < 1 || i > n - 1 || !(i < j)) return false;
  const Permutation inv = w.inverse();
  if (!(inv(j) < inv(j + 1))) return false;
  return in_image(w, 1, i, j) && !in_image(w, 1, i, i) && j + 1 <= w(i + 1);
}

bool crit4_holds(const Permutation& w, int i, int j) {
  const int n = w.n();
  if (i < 1 || i > n - 2 || j < 1 || j > n) return false;
  const Permutation inv = w.inverse();
  if (!(inv(i) > inv(i + 1))) return false;
  return !in_image(w, 1, i + 1, i) && !in_image(w, 1, i + 1, j) && j <= w(i + 2) &&
         in_image(w, 1, i + 1, i + 1) && i + 1 < j;
}

bool crit5_holds(const Permutation& w, int i, int l) {
  const int n = w.n();
  if (i < 2 || i > n - 1 || l < 2 || l > n || !(l > i)) return false;
  return !in_image(w, 1, i + 1, i) && in_image(w, 1, i, l) && l > w(i + 1) && i > w(i + 1);
}

std::optional<CriterionWitness> crit1(const Permutation& w) {
  require_nonidentity(w);
  for (int i = 1; i < w.n(); ++i)
    for (int j = 1; j <= w.n(); ++j)
      if (crit1_holds(w, i, j)) return make(1, {{"i", i}, {"j", j}});
  return std::nullopt;
}

std::optional<CriterionWitness> crit2(const Permutation& w) {
  require_nonidentity(w);
  for (int i = 3; i < w.n(); ++i)
    for (int l = 1; l <= w.n(); ++l)
      for (int x = 1; x <= w.n(); ++x)
        if (crit2_holds(w, i, l, x)) return make(2, {{"i", i}, {"l", l}, {"x", x}});
  return std::nullopt;
}

std::optional<CriterionWitness> crit3(const Permutation& w) {
  require_nonidentity(w);
  for (int j = 2; j < w.n(); ++j)
    for (int i = 1; i < j; ++i)
      if (crit3_holds(w, j, i)) return make(3, {{"j", j}, {"i", i}});
  return std::nullopt;
}

std::optional<CriterionWitness> crit4(const Permutation& w) {
  require_nonidentity(w);
  for (int i = 1; i <= w.n() - 2; ++i)
    for (int j = 1; j <= w.n(); ++j)
      if (crit4_holds(w, i, j)) return make(4, {{"i", i}, {"j", j}});
  return std::nullopt;
}

std::optional<CriterionWitness> crit5(const Permutation& w) {
  require_nonidentity(w);
  for (int i = 2; i < w.n(); ++i)
    for (int l = 2; l <= w.n(); ++l)
      if (crit5_holds(w, i, l)) return make(5, {{"i", i}, {"l", l}});
  return std::nullopt;
}

std::optional<CriterionWitness> crit6(const Permutation& w) {
  require_nonidentity(w);
  const int n = w.n();
  const int i = first_moved(w);
  if (!(w(i) < n)) return std::nullopt;
  for (int j = i + 1; j <= n - 1; ++j) {
    if (w(j) > w(i)) {
      // Only the minimal such j is tested.
      if (w(i) >= j) return make(6, {{"i", i}, {"j", j}});
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<CriterionWitness> crit7(const Permutation& w) {
  require_nonidentity(w);
  const int n = w.n();
  const int i = first_moved(w);
  if (w(i) != n) return std::nullopt;
  for (int j = i + 2; j <= n - 1; ++j) {
    if (w(j) > w(i + 1)) {
      if (!in_image(w, i + 1, j - 1, i)) return make(7, {{"i", i}, {"j", j}});
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<CriterionWitness> criterion(int id, const Permutation& w) {
  switch (id) {
    case 1: return crit1(w);
    case 2: return crit2(w);
    case 3: return crit3(w);
    case 4: return crit4(w);
    case 5: return crit5(w);
    case 6: return crit6(w);
    case 7: return crit7(w);
    default: throw std::out_of_range("criterion id must be in [1, 7]");
  }
}

std::array<std::optional<CriterionWitness>, 7> evaluate_criteria(const Permutation& w) {
  std::array<std::optional<CriterionWitness>, 7> out;
  if (w.is_identity()) return out;
  for (int id = 1; id <= 7; ++id) out[static_cast<std::size_t>(id - 1)] = criterion(id, w);
  return out;
}

Relation witness_relation(const Permutation& w, const CriterionWitness& wit) {
  const int n = w.n();
  switch (wit.id) {
    case 1: {
      const int i = wit.param("i"), j = wit.param("j");
      auto base = image_set(w, 1, i - 1);
      auto lset = base;
      lset.push_back(i);
      lset.push_back(w(i + 1));
      return generate_relation(led_by(j, base, n), IndexSeq(sorted(lset), n), 1);
    }
    case 2: {
      const int i = wit.param("i"), l = wit.param("l"), x = wit.param("x");
      auto s = image_set(w, 1, i - 1);
      s.push_back(w(i + 1));
      auto jset = without(s, i - 1);
      auto lset = s;
      lset.push_back(l);
      lset = without(lset, x);
      return generate_relation(led_by(x, jset, n), IndexSeq(sorted(lset), n), 1);
    }
    case 3: {
      const int j = wit.param("j"), i = wit.param("i");
      auto jset = image_set(w, 1, i);
      auto lset = jset;
      lset.push_back(i);
      lset.push_back(j + 1);
      lset = without(lset, j);
      return generate_relation(led_by(j, jset, n), IndexSeq(sorted(lset), n), 1);
    }
    case 4: {
      const int i = wit.param("i"), j = wit.param("j");
      auto top = image_set(w, 1, i + 1);
      auto jset = without(top, i + 1);
      jset.push_back(i);
      auto lset = top;
      lset.push_back(j);
      return generate_relation(led_by(i, jset, n), IndexSeq(sorted(lset), n), 1);
    }
    case 5: {
      const int i = wit.param("i"), l = wit.param("l");
      auto jset = image_set(w, 1, i);
      auto lset = without(image_set(w, 1, i + 1), l);
      lset.push_back(i);
      return generate_relation(led_by(l, jset, n), IndexSeq(sorted(lset), n), 1);
    }
    case 6: {
      const int i = wit.param("i"), j = wit.param("j");
      auto lset = image_set(Permutation::identity(n), 1, j - 1);
      lset.push_back(w(j));
      return generate_relation(led_by(w(i), image_set(w, 1, i), n), IndexSeq(sorted(lset), n), 1);
    }
    case 7: {
      const int i = wit.param("i"), j = wit.param("j");
      std::vector<int> jset;
      for (int a = 1; a <= i; ++a) jset.push_back(a);
      jset.push_back(n);
      std::vector<int> lset;
      for (int a = 1; a <= j - 1; ++a)
        if (a != i) lset.push_back(a);
      lset.push_back(w(j));
      lset.push_back(n);
      return generate_relation(led_by(i, jset, n), IndexSeq(sorted(lset), n), 1);
    }
    default: throw std::out_of_range("criterion id must be in [1, 7]");
  }
}

std::optional<Thm41Witness> thm41(const Permutation& v) {
  const int n = v.n();
  if (n < 3) return std::nullopt;
  const Permutation vbar = min_coset_rep(v, ParabolicMask::all_but(n, {1}));
  const Permutation vbarbar = min_coset_rep(v, ParabolicMask::all_but(n, {2}));
  for (int j = 2; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      if (bruhat_leq(chain(j - 1, 1, n), vbar) && bruhat_leq(vbar, chain(k - 2, 1, n)) &&
          bruhat_leq(chain(k - 1, 2, n), vbarbar))
        return Thm41Witness{j, k};
    }
  }
  return std::nullopt;
}

std::string to_string(Guarantee g) {
  switch (g) {
    case Guarantee::LeqC: return "LeqC";
    case Guarantee::CoxeterTimesSimple: return "CoxeterTimesSimple";
    case Guarantee::CoxeterTimesCommuting: return "CoxeterTimesCommuting";
    case Guarantee::CommutingFactorization: return "CommutingFactorization";
    case Guarantee::RankReduction: return "RankReduction";
  }
  return "?";
}

std::vector<Permutation> commuting_factors(const Permutation& w) {
  const int n = w.n();
  const auto letters = support(w);
  std::vector<Permutation> out;
  std::size_t a = 0;
  while (a < letters.size()) {
    std::size_t b = a;
    while (b + 1 < letters.size() && letters[b + 1] == letters[b] + 1) ++b;
    std::vector<int> img;
    for (int p = 1; p <= n; ++p)
      img.push_back(p >= letters[a] && p <= letters[b] + 1 ? w(p) : p);
    out.emplace_back(std::move(img));
    a = b + 1;
  }
  return out;
}

std::optional<Guarantee> monofree_guarantee(const Permutation& w) {
  const int n = w.n();
  if (leq_c(w)) return Guarantee::LeqC;
  const Permutation c = coxeter_c(n);
  for (int h = 1; h < n; ++h)
    if (w == c * Permutation::simple(h, n)) return Guarantee::CoxeterTimesSimple;

  // c s_{k1} ... s_{kr}, r >= 2, letters pairwise non-adjacent.
  const int letters = n - 1;
  for (unsigned mask = 1; mask < (1u << letters); ++mask) {
    if (std::popcount(mask) < 2 || (mask & (mask >> 1))) continue;
    Permutation p = c;
    for (int h = 1; h <= letters; ++h)
      if (mask & (1u << (h - 1))) p = p * Permutation::simple(h, n);
    if (p == w) return Guarantee::CoxeterTimesCommuting;
  }

  const auto factors = commuting_factors(w);
  if (factors.size() >= 2) {
    for (const auto& f : factors)
      if (!monofree_guarantee(f)) return std::nullopt;
    return Guarantee::CommutingFactorization;
  }
  const auto supp = support(w);
  if (!supp.empty() && (supp.front() > 1 || supp.back() < n - 1)) {
    if (monofree_guarantee(rank_reduce(w, Window{supp.front(), supp.back()})))
      return Guarantee::RankReduction;
  }
  return std::nullopt;
}

bool pure_difference_check(int n, int h, const RelationSet& rels) {
  if (h < 1 || h > n - 1) throw std::domain_error("pure_difference_check: h out of range");
  const SchubertContext ctx(coxeter_c(n) * Permutation::simple(h, n));
  for (const auto& r : rels.items) {
    const Relation restricted = restrict(r.initial, ctx);
    if (restricted.empty()) continue;
    if (restricted.size() != 2) return false;
    const int c0 = restricted.terms[0].coeff, c1 = restricted.terms[1].coeff;
    if (!((c0 == 1 && c1 == -1) || (c0 == -1 && c1 == 1))) return false;
  }
  return true;
}

bool pure_difference_check(int n, int h) {
  return pure_difference_check(n, h, prepare_relations(n));
}

std::vector<DivisorVerdict> divisor_classification(int n) {
  if (n <= 2) throw std::domain_error("divisor_classification: need n > 2");
  const Permutation w0 = longest_element(n);
  std::vector<DivisorVerdict> out;
  for (int i = 1; i < n; ++i) {
    DivisorVerdict d;
    d.i = i;
    d.w = w0 * Permutation::simple(i, n);
    const Permutation& w = d.w;
    if (n % 2 == 1 && 2 * i == n + 1) {
      d.reducible = false;
      out.push_back(std::move(d));
      continue;
    }
    d.reducible = true;
    if (2 * i < n) {
      d.proof_case = 1;
      if (crit1_holds(w, i, w(i))) d.witness = make(1, {{"i", i}, {"j", w(i)}});
    } else if (2 * i == n) {
      d.proof_case = 2;
      for (int j = 1; j <= i - 1 && !d.witness; ++j)
        if (crit1_holds(w, i, j)) d.witness = make(1, {{"i", i}, {"j", j}});
    } else if (2 * i >= n + 3) {
      d.proof_case = 3;
      if (crit2_holds(w, i, w(i), w(i + 1))) d.witness = make(2, {{"i", i}, {"l", w(i)}, {"x", w(i + 1)}});
    } else {
      d.proof_case = 4;
      for (int p = 1; p <= i - 1 && !d.witness; ++p)
        if (crit2_holds(w, i, w(i), w(p))) d.witness = make(2, {{"i", i}, {"l", w(i)}, {"x", w(p)}});
    }
    if (!d.witness) throw std::logic_error("divisor_classification: proof case did not instantiate");
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace flagdeg
