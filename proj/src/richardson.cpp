#include "flagdeg/richardson.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace flagdeg {

namespace {

void subsets_of_size(int universe, int size, std::vector<IndexSet>& out) {
  IndexSet cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= universe - (size - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

Permutation w_n(int n) {
  if (n < 2) throw std::domain_error("w_n: need n >= 2");
  std::vector<int> img;
  for (int i = 1; i <= 2 * n - 2; ++i) img.push_back(i % 2 == 0 ? i / 2 : n + (i + 1) / 2 - 1);
  return Permutation(std::move(img));
}

Permutation y_n(int n) {
  if (n < 2) throw std::domain_error("y_n: need n >= 2");
  std::vector<int> img;
  for (int i = 1; i <= 2 * n - 2; ++i) {
    if (i == 1)
      img.push_back(1);
    else if (i % 2 == 0)
      img.push_back(i / 2 + 1);
    else
      img.push_back(n + (i + 1) / 2 - 1);
  }
  return Permutation(std::move(img));
}

int tau(int j, int k, int n) {
  if (k < 1 || k > n || j < k || j > n + k - 1) throw std::domain_error("tau: argument outside [k, n+k-1]");
  return j <= n ? j : j - n;
}

int rho(int j, int k, int n) {
  if (k < 1 || k > n || j < 1 || j > n) throw std::domain_error("rho: argument outside [1, n]");
  return j >= k ? j : j + n;
}

IndexSeq rho_tilde(const IndexSeq& seq) {
  const int n = seq.n();
  const int k = static_cast<int>(seq.size());
  if (k < 1 || k > n - 1) throw std::domain_error("rho_tilde: need 1 <= #I <= n-1");
  std::vector<int> out;
  for (int a = 1; a < k; ++a) out.push_back(a);
  for (int x : seq.entries()) out.push_back(rho(x, k, n));
  return IndexSeq(std::move(out), 2 * n - 2);
}

ParabolicMask levi_mask(int n) {
  ParabolicMask m;
  for (int i = 2; i <= 2 * n - 4; i += 2) m.generators.push_back(i);
  return m;
}

std::vector<IndexSet> admissible_sets(const Permutation& u, const Permutation& v, int k, int n) {
  const int big = 2 * n - 2;
  if (u.n() != big || v.n() != big) throw std::domain_error("admissible_sets: expected permutations of S_{2n-2}");
  if (k < 1 || k > n - 1) throw std::domain_error("admissible_sets: k outside [1, n-1]");
  const int size = 2 * k - 1;
  const IndexSet upper = prefix_image(v, size);
  const IndexSet lower = prefix_image(u, size);
  std::vector<IndexSet> all, out;
  subsets_of_size(big, size, all);
  for (auto& s : all)
    if (grassmann_leq(s, upper) && grassmann_leq(lower, s)) out.push_back(std::move(s));
  return out;
}

void validate(const CorrespondencePair& pair) {
  const int n = pair.n;
  if (n < 2 || pair.x.n() != n) throw std::domain_error("correspondence pair: x must lie in S_n");
  if (pair.u.n() != 2 * n - 2 || pair.v.n() != 2 * n - 2)
    throw std::domain_error("correspondence pair: u, v must lie in S_{2n-2}");
  if (!bruhat_leq(pair.u, pair.v)) throw std::domain_error("correspondence pair: u <= v fails");
  if (!bruhat_leq(pair.v, w_n(n))) throw std::domain_error("correspondence pair: v <= w_n fails");
  const auto mask = levi_mask(n);
  if (min_coset_rep(pair.u, mask) != pair.u || min_coset_rep(pair.v, mask) != pair.v)
    throw std::domain_error("correspondence pair: u, v must be minimal coset representatives mod W_P");
}

CorrespondenceReport correspondence_report(const CorrespondencePair& pair) {
  validate(pair);
  const int n = pair.n;
  CorrespondenceReport report;
  report.holds = true;
  for (int k = 1; k <= n - 1; ++k) {
    CorrespondenceTable table;
    table.k = k;
    const auto targets = admissible_sets(pair.u, pair.v, k, n);
    const std::set<IndexSet> target_set(targets.begin(), targets.end());
    std::set<IndexSet> hit;
    bool inverse_ok = true;

    const IndexSet bound = prefix_image(pair.x, k);
    std::vector<IndexSet> sources;
    subsets_of_size(n, k, sources);
    for (const auto& source : sources) {
      if (!grassmann_leq(source, bound)) continue;
      IndexSet image;
      for (int a = 1; a < k; ++a) image.push_back(a);
      for (int i : source) image.push_back(rho(i, k, n));
      std::sort(image.begin(), image.end());

      IndexSet back;
      for (int j : image)
        if (j >= k) back.push_back(tau(j, k, n));
      std::sort(back.begin(), back.end());
      if (back != source) inverse_ok = false;

      if (target_set.count(image) && hit.insert(image).second)
        table.matched.push_back({source, image});
      else
        table.stray_images.push_back(image);
    }
    for (const auto& t : targets)
      if (!hit.count(t)) table.unmatched_targets.push_back(t);
    // the recorded cut-out coordinates must be absent on both sides
    bool excluded_ok = true;
    if (pair.excluded_source && static_cast<int>(pair.excluded_source->size()) == k)
      excluded_ok = excluded_ok && !grassmann_leq(*pair.excluded_source, bound);
    if (pair.excluded_target && static_cast<int>(pair.excluded_target->size()) == 2 * k - 1)
      excluded_ok = excluded_ok && !target_set.count(*pair.excluded_target);
    table.ok = inverse_ok && excluded_ok && table.stray_images.empty() && table.unmatched_targets.empty();
    report.holds = report.holds && table.ok;
    report.tables.push_back(std::move(table));
  }
  return report;
}

bool verify_correspondence(const CorrespondencePair& pair) {
  return correspondence_report(pair).holds;
}

CorrespondencePair lemma53_pair(int n, int m) {
  if (n < 2 || m < 1 || m > n - 1) throw std::domain_error("lemma53_pair: need m in [1, n-1]");
  ReducedWord word;
  for (int a = m; a >= 1; --a) word.letters.push_back(a);
  CorrespondencePair pair;
  pair.label = "lemma53";
  pair.n = n;
  pair.x = word.evaluate(n);
  pair.u = y_n(n);
  pair.v = word.evaluate(2 * n - 2) * y_n(n);
  validate(pair);
  return pair;
}

CorrespondencePair prop55_pair(int i) {
  if (i < 2) throw std::domain_error("prop55_pair: need i >= 2");
  const int n = 2 * i - 1;
  CorrespondencePair pair;
  pair.label = "prop55";
  pair.n = n;
  pair.x = longest_element(n) * Permutation::simple(i, n);
  pair.u = Permutation::simple(2 * i - 1, 2 * n - 2);
  pair.v = w_n(n);
  IndexSet src, dst;
  for (int a = i; a <= n; ++a) src.push_back(a);
  for (int a = 1; a <= n; ++a) dst.push_back(a);
  pair.excluded_source = src;
  pair.excluded_target = dst;
  validate(pair);
  return pair;
}

std::string to_json(const CorrespondencePair& pair, const CorrespondenceReport& report) {
  nlohmann::ordered_json j;
  j["kind"] = pair.label;
  j["n"] = pair.n;
  j["x"] = pair.x.to_string();
  j["u"] = pair.u.to_string();
  j["v"] = pair.v.to_string();
  if (pair.excluded_source && pair.excluded_target)
    j["excluded"] = {{"source", *pair.excluded_source}, {"target", *pair.excluded_target}};
  else
    j["excluded"] = nullptr;
  j["holds"] = report.holds;
  auto tables = nlohmann::ordered_json::array();
  for (const auto& t : report.tables) {
    nlohmann::ordered_json tj;
    tj["k"] = t.k;
    tj["ok"] = t.ok;
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& m : t.matched) pairs.push_back({{"I", m.source}, {"K", m.target}});
    tj["pairs"] = std::move(pairs);
    tj["unmatched"] = t.unmatched_targets;
    tj["stray"] = t.stray_images;
    tables.push_back(std::move(tj));
  }
  j["tables"] = std::move(tables);
  return j.dump(2);
}

}  // namespace flagdeg
