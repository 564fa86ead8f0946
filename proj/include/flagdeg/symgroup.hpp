#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flagdeg {

/// Sorted, strictly increasing subset of [1..n].
using IndexSet = std::vector<int>;

/// Element of S_n in one-line notation [v(1), ..., v(n)], 1-indexed.
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a permutation of [1..n].
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Simple transposition s_i = (i, i+1) in S_n.
  static Permutation simple(int i, int n);
  /// Parses "2,3,1,4" (whitespace around entries is ignored).
  static Permutation parse(std::string_view text);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  /// Inversion count.
  int length() const;
  bool is_identity() const;
  Permutation inverse() const;

  /// "2,3,1,4"
  std::string to_string() const;
  /// "[2, 3, 1, 4]"
  std::string to_bracket_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

/// Function composition: (a * b)(x) = a(b(x)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// Letters of a word in the simple reflections, read left to right.
struct ReducedWord {
  std::vector<int> letters;

  /// Evaluates s_{a1} s_{a2} ... in S_n.
  Permutation evaluate(int n) const;
  /// "s1 s2"; empty string for the identity.
  std::string to_string() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// Indices of the simple reflections generating a parabolic subgroup W_J.
struct ParabolicMask {
  std::vector<int> generators;

  bool contains(int i) const;
  /// Mask of all of [1..n-1] except `excluded`.
  static ParabolicMask all_but(int n, std::initializer_list<int> excluded);
};

/// #{a in [1..i] : w(a) >= j}.  Throws std::domain_error if i or j is outside [1..n].
int rank_count(const Permutation& w, int i, int j);

/// Bruhat order u <= v via rank counts.  Throws std::domain_error on rank mismatch.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Componentwise <= on increasing tuples; reflexive.
bool grassmann_leq(std::span<const int> a, std::span<const int> b);

/// v(A), sorted.
IndexSet apply_to_set(const Permutation& v, std::span<const int> a);
/// v([k]), sorted.
IndexSet prefix_image(const Permutation& v, int k);

/// The unique element of v W_J increasing on every generator position of the mask.
Permutation min_coset_rep(const Permutation& v, const ParabolicMask& mask);

/// c = s_{n-1} ... s_1 = [n, 1, 2, ..., n-1].
Permutation coxeter_c(int n);
/// w_0(i) = n + 1 - i.
Permutation longest_element(int n);
/// v <= c, decided from v([d]) = [d-1] + {b}, b >= d.
bool leq_c(const Permutation& v);

/// Canonical reduced word: repeatedly strip the smallest right descent.
ReducedWord reduced_word(const Permutation& v);
/// True iff the canonical reduced word uses pairwise distinct letters.
bool distinct_letter(const Permutation& v);

/// Letters i with v([i]) != [i], i.e. the simple reflections occurring in any reduced word.
std::vector<int> support(const Permutation& v);

/// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace flagdeg
