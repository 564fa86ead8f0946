#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagdeg/symgroup.hpp"

namespace flagdeg {

/// Sequence of pairwise distinct indices in [1..n]; order is significant.
class IndexSeq {
public:
  /// Throws std::invalid_argument on repeats or out-of-range entries.
  IndexSeq(std::vector<int> entries, int n);

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }
  IndexSet as_set() const;

  friend bool operator==(const IndexSeq&, const IndexSeq&) = default;

private:
  std::vector<int> entries_;
  int n_;
};

/// p_seq = sign * p_support.
struct NormalizedCoordinate {
  int sign = 1;
  IndexSet support;

  friend bool operator==(const NormalizedCoordinate&, const NormalizedCoordinate&) = default;
};

/// Sorts `raw`, tracking the parity of the sort.  std::nullopt (the zero
/// coordinate) when `raw` repeats an index.
std::optional<NormalizedCoordinate> normalize(std::span<const int> raw);
inline std::optional<NormalizedCoordinate> normalize(const IndexSeq& seq) {
  return normalize(seq.entries());
}

/// w_I = #{r : #I <= i_r <= n-1}.
int weight(std::span<const int> set, int n);

/// coeff * p_a * p_b with (#a, a) <= (#b, b).
struct Term {
  int coeff = 0;
  IndexSet a;
  IndexSet b;

  int weight(int n) const { return flagdeg::weight(a, n) + flagdeg::weight(b, n); }
  friend bool operator==(const Term&, const Term&) = default;
};

struct RelationMeta {
  int n = 0;
  int k = 0;
  std::vector<int> j;  // J as a sequence
  std::vector<int> l;  // L as a sequence

  friend bool operator==(const RelationMeta&, const RelationMeta&) = default;
};

/// Signed sum of degree-2 Plücker monomials.  Terms are kept sorted by
/// (a, b) with like terms combined and zeros removed.
struct Relation {
  RelationMeta meta;
  std::vector<Term> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
};

/// Sorts, combines like terms and drops zero coefficients.
void canonicalize(std::vector<Term>& terms);

/// R^k_{J,L} = p_J p_L - sum_{r_1<...<r_k} p_{J'} p_{L'} with the positional
/// exchange of (j_1..j_k) and (l_{r_1}..l_{r_k}).
/// Throws std::domain_error unless 1 <= k <= #J <= #L and J, L share n.
Relation generate_relation(const IndexSeq& j, const IndexSeq& l, int k);

/// Sub-sum of minimal total weight.
Relation initial_form(const Relation& rel);

struct EnumerateOptions {
  std::optional<int> restrict_k;    // only this k
  std::optional<int> max_set_size;  // cap on #L
};

/// Visits every nonzero R^k_{J,L} with J = (S, A\S), L = B over all
/// e <= d in [1..n-1], #A = e, #B = d, k in [1..e], S a k-subset of A;
/// order is lexicographic in (e, d, A, B, k, S).
void for_each_relation(int n, const EnumerateOptions& opts,
                       const std::function<void(Relation&&)>& visit);
std::vector<Relation> enumerate_relations(int n, const EnumerateOptions& opts = {});

/// {"k":..,"J":[..],"L":[..],"terms":[{"c":..,"A":[..],"B":[..]}]}
std::string to_json(const Relation& rel);

}  // namespace flagdeg
