#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagdeg/pluecker.hpp"
#include "flagdeg/symgroup.hpp"

namespace flagdeg {

// Index-level model of the embedding of the degenerate flag variety of rank n
// into the odd-dimensional partial flag variety SL_{2n-2}/P.

/// w_n in S_{2n-2}: w_n(2r) = r, w_n(2r-1) = n+r-1.  Throws std::domain_error for n < 2.
Permutation w_n(int n);
/// y_n in S_{2n-2}: y_n(1) = 1, y_n(2r) = r+1, y_n(2r-1) = n+r-1 (r >= 2).
Permutation y_n(int n);

/// tau_k : [k, n+k-1] -> [n]
int tau(int j, int k, int n);
/// rho_k : [n] -> [k, n+k-1], inverse of tau_k
int rho(int j, int k, int n);
/// (1, ..., k-1, rho_k(i_1), ..., rho_k(i_k)) with k = #I.
IndexSeq rho_tilde(const IndexSeq& seq);

/// Mask of W_P = <s_2, s_4, ..., s_{2n-4}> in S_{2n-2}.
ParabolicMask levi_mask(int n);

/// All K of size 2k-1 in [2n-2] with u([2k-1]) <= K <= v([2k-1]).
std::vector<IndexSet> admissible_sets(const Permutation& u, const Permutation& v, int k, int n);

struct CorrespondencePair {
  std::string label;
  int n = 0;
  Permutation x;  // in S_n
  Permutation u;  // in S_{2n-2}
  Permutation v;  // in S_{2n-2}
  // The single coordinate cut out on each side, when the pair records one.
  std::optional<IndexSet> excluded_source;
  std::optional<IndexSet> excluded_target;
};

/// Throws std::domain_error unless u <= v <= w_n and u, v are W_P-minimal.
void validate(const CorrespondencePair& pair);

struct MatchedIndex {
  IndexSet source;  // I <= x([k])
  IndexSet target;  // [k-1] + rho_k(I)
};

struct CorrespondenceTable {
  int k = 0;
  std::vector<MatchedIndex> matched;
  std::vector<IndexSet> unmatched_targets;  // admissible K with no preimage
  std::vector<IndexSet> stray_images;       // images that are not admissible
  bool ok = false;
};

struct CorrespondenceReport {
  std::vector<CorrespondenceTable> tables;
  bool holds = false;
};

CorrespondenceReport correspondence_report(const CorrespondencePair& pair);
bool verify_correspondence(const CorrespondencePair& pair);

/// x = s_m ... s_1, u = y_n, v = s~_m ... s~_1 y_n.  Requires m in [n-1].
CorrespondencePair lemma53_pair(int n, int m);
/// n = 2i-1, x = w_0 s_i, u = s~_{2i-1}, v = w_n.  Requires i >= 2.
CorrespondencePair prop55_pair(int i);

std::string to_json(const CorrespondencePair& pair, const CorrespondenceReport& report);

}  // namespace flagdeg
