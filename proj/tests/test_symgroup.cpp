#include <doctest.h>

#include <stdexcept>

#include "flagdeg/symgroup.hpp"
#include "support.hpp"

using namespace flagdeg;
using testkit::to_perm;
using testkit::to_vec;

TEST_CASE("permutation construction and parsing") {
  CHECK(Permutation::parse("2,3,1,4").images().size() == 4);
  CHECK(Permutation::parse(" 2, 3 ,1 ").to_string() == "2,3,1");
  CHECK(Permutation::parse("2,3,1,4").to_bracket_string() == "[2, 3, 1, 4]");
  CHECK_THROWS_AS(Permutation::parse("1,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("a"), std::invalid_argument);
}

TEST_CASE("composition, inverse and length") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& v : all_permutations(n)) {
      CHECK((v * v.inverse()).is_identity());
      CHECK(v.length() == oracle::inversions(to_vec(v)));
    }
  // (a*b)(x) = a(b(x))
  const auto s1 = Permutation::simple(1, 3), s2 = Permutation::simple(2, 3);
  CHECK((s1 * s2).to_string() == "2,3,1");
  CHECK((s2 * s1).to_string() == "3,1,2");
}

TEST_CASE("rank_count") {
  CHECK(rank_count(coxeter_c(5), 1, 5) == 1);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(rank_count(Permutation::identity(4), i, j) == std::max(0, i - j + 1));
  CHECK(rank_count(Permutation::parse("4,3,1,2"), 2, 3) == 2);
  CHECK_THROWS_AS(rank_count(Permutation::identity(3), 0, 1), std::domain_error);
  CHECK_THROWS_AS(rank_count(Permutation::identity(3), 1, 4), std::domain_error);
}

TEST_CASE("bruhat order matches the closure oracle") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& v : perms) {
      const auto below = oracle::bruhat_below(to_vec(v));
      for (const auto& u : perms) REQUIRE(bruhat_leq(u, v) == (below.count(to_vec(u)) == 1));
    }
  }
  const auto s1s2 = Permutation::parse("2,3,1");
  CHECK_FALSE(bruhat_leq(s1s2, coxeter_c(3)));
  CHECK_THROWS_AS(bruhat_leq(Permutation::identity(2), Permutation::identity(3)), std::domain_error);
}

TEST_CASE("descending chain is not below a shorter chain times anything in the odd letters") {
  // s_{k-1}..s_1 vs s_{k-2}..s_2 x, x in <s_1, s_3, ...>
  for (int n = 4; n <= 6; ++n)
    for (int k = 3; k <= n; ++k) {
      ReducedWord big, small;
      for (int a = k - 1; a >= 1; --a) big.letters.push_back(a);
      for (int a = k - 2; a >= 2; --a) small.letters.push_back(a);
      std::vector<int> odd;
      for (int a = 1; a < n; a += 2) odd.push_back(a);
      for (const auto& x : oracle::parabolic_subgroup(n, odd))
        CHECK_FALSE(bruhat_leq(big.evaluate(n), small.evaluate(n) * to_perm(x)));
    }
}

TEST_CASE("grassmann order") {
  CHECK(grassmann_leq(std::vector{1, 3}, std::vector{1, 3}));
  CHECK_FALSE(grassmann_leq(std::vector{2, 4}, std::vector{1, 4}));
  CHECK_THROWS_AS(grassmann_leq(std::vector{1}, std::vector{1, 2}), std::domain_error);
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d <= n; ++d)
      for (int b = d; b <= n; ++b) {
        IndexSet a;
        for (int x = 1; x < d; ++x) a.push_back(x);
        a.push_back(b);
        CHECK(grassmann_leq(a, prefix_image(coxeter_c(n), d)));
      }
  // Bruhat implies the order on every prefix image.
  for (int n = 2; n <= 5; ++n)
    for (const auto& u : all_permutations(n))
      for (const auto& v : all_permutations(n))
        if (bruhat_leq(u, v))
          for (int k = 1; k <= n; ++k) REQUIRE(grassmann_leq(prefix_image(u, k), prefix_image(v, k)));
}

TEST_CASE("minimal coset representatives are shortest in their coset") {
  for (int n = 2; n <= 5; ++n) {
    for (unsigned bits = 0; bits < (1u << (n - 1)); ++bits) {
      ParabolicMask mask;
      for (int i = 1; i < n; ++i)
        if (bits & (1u << (i - 1))) mask.generators.push_back(i);
      for (const auto& v : all_permutations(n))
        REQUIRE(to_vec(min_coset_rep(v, mask)) == oracle::min_coset(to_vec(v), mask.generators));
    }
  }
}

TEST_CASE("minimal coset representative examples") {
  const int n = 5;
  const auto mask = ParabolicMask::all_but(n, {1});
  for (const auto& x : oracle::parabolic_subgroup(n, mask.generators)) CHECK(min_coset_rep(to_perm(x), mask).is_identity());
  for (const auto& v : all_permutations(n)) {
    ReducedWord w;
    for (int a = v(1) - 1; a >= 1; --a) w.letters.push_back(a);
    CHECK(min_coset_rep(v, mask) == w.evaluate(n));
  }
  // c s_{k+1} and c share the quotient by every maximal parabolic except the one of s_{k+1}'s neighbours
  for (int m = 4; m <= 6; ++m)
    for (int k = 1; k + 1 <= m - 1; ++k) {
      const auto csk = coxeter_c(m) * Permutation::simple(k + 1, m);
      for (int i = 1; i <= m - 1; ++i) {
        if (i == k + 1) continue;
        const auto mi = ParabolicMask::all_but(m, {i});
        CHECK(min_coset_rep(csk, mi) == min_coset_rep(coxeter_c(m), mi));
      }
    }
}

TEST_CASE("distinguished elements") {
  CHECK(coxeter_c(4).to_string() == "4,1,2,3");
  ReducedWord c4{{3, 2, 1}};
  CHECK(c4.evaluate(4) == coxeter_c(4));
  CHECK(longest_element(4).to_string() == "4,3,2,1");
  CHECK(apply_to_set(Permutation::parse("2,3,1,4"), std::vector{1, 3}) == IndexSet{1, 2});
  CHECK(leq_c(Permutation::identity(4)));
  CHECK_FALSE(leq_c(Permutation::parse("2,3,1")));
}

TEST_CASE("leq_c agrees with bruhat comparison against c") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& v : all_permutations(n)) REQUIRE(leq_c(v) == bruhat_leq(v, coxeter_c(n)));
}

TEST_CASE("canonical reduced words") {
  CHECK(reduced_word(Permutation::identity(3)).letters.empty());
  CHECK(reduced_word(Permutation::identity(3)).to_string().empty());
  CHECK(reduced_word(Permutation::parse("2,3,1,4")).to_string() == "s1 s2");
  CHECK(reduced_word(Permutation::parse("3,4,1,2")).to_string() == "s2 s3 s1 s2");
  CHECK(reduced_word(Permutation::parse("4,3,2,1")).to_string() == "s1 s2 s3 s1 s2 s1");
  for (int n = 1; n <= 5; ++n)
    for (const auto& v : all_permutations(n)) {
      const auto w = reduced_word(v);
      CHECK(w.evaluate(n) == v);
      CHECK(static_cast<int>(w.letters.size()) == v.length());
    }
}

TEST_CASE("distinct-letter property does not depend on the reduced word") {
  CHECK(distinct_letter(Permutation::identity(4)));
  CHECK(distinct_letter(Permutation::parse("2,3,1,4")));
  CHECK_FALSE(distinct_letter(longest_element(4)));
  for (int n = 1; n <= 5; ++n)
    for (const auto& v : all_permutations(n)) {
      int distinct_words = 0;
      const auto words = oracle::reduced_words(to_vec(v));
      for (const auto& w : words) {
        REQUIRE(ReducedWord{w}.evaluate(n) == v);
        std::set<int> letters(w.begin(), w.end());
        distinct_words += letters.size() == w.size();
      }
      // all or nothing
      REQUIRE((distinct_words == 0 || distinct_words == static_cast<int>(words.size())));
      REQUIRE(distinct_letter(v) == (distinct_words > 0));
    }
}

TEST_CASE("support and enumeration order") {
  CHECK(support(Permutation::identity(4)).empty());
  CHECK(support(Permutation::parse("1,3,4,2,5")) == std::vector<int>{2, 3});
  const auto perms = all_permutations(4);
  CHECK(perms.size() == 24);
  CHECK(std::is_sorted(perms.begin(), perms.end()));
}
