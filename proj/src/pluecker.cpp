#include "flagdeg/pluecker.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

#include <json.hpp>

namespace flagdeg {

namespace {

// Calls visit(indices) for every k-subset of [0, m) in lexicographic order.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& visit) {
  if (k > m || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    visit(std::as_const(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t)
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

bool term_order(const Term& x, const Term& y) {
  return std::tie(x.a, x.b) < std::tie(y.a, y.b);
}

void push_product(std::vector<Term>& out, int coeff, std::span<const int> a, std::span<const int> b) {
  auto na = normalize(a);
  auto nb = normalize(b);
  if (!na || !nb) return;
  Term t{coeff * na->sign * nb->sign, std::move(na->support), std::move(nb->support)};
  if (t.b.size() < t.a.size() || (t.b.size() == t.a.size() && t.b < t.a))
    std::swap(t.a, t.b);
  out.push_back(std::move(t));
}

}  // namespace

IndexSeq::IndexSeq(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
  for (int x : entries_) {
    if (x < 1 || x > n) throw std::invalid_argument("index sequence entry out of range");
    if (seen[static_cast<std::size_t>(x)]) throw std::invalid_argument("index sequence has repeated entry");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

IndexSet IndexSeq::as_set() const {
  IndexSet s(entries_.begin(), entries_.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::optional<NormalizedCoordinate> normalize(std::span<const int> raw) {
  NormalizedCoordinate out;
  out.support.assign(raw.begin(), raw.end());
  // Insertion sort; each swap flips the sign.
  for (std::size_t i = 1; i < out.support.size(); ++i) {
    for (std::size_t j = i; j > 0 && out.support[j - 1] >= out.support[j]; --j) {
      if (out.support[j - 1] == out.support[j]) return std::nullopt;
      std::swap(out.support[j - 1], out.support[j]);
      out.sign = -out.sign;
    }
  }
  return out;
}

int weight(std::span<const int> set, int n) {
  const int k = static_cast<int>(set.size());
  return static_cast<int>(std::count_if(set.begin(), set.end(), [&](int i) { return k <= i && i <= n - 1; }));
}

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_order);
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().a == t.a && merged.back().b == t.b)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms = std::move(merged);
}

Relation generate_relation(const IndexSeq& j, const IndexSeq& l, int k) {
  if (j.n() != l.n()) throw std::domain_error("generate_relation: rank mismatch");
  if (k < 1 || static_cast<std::size_t>(k) > j.size()) throw std::domain_error("generate_relation: need 1 <= k <= #J");
  if (j.size() > l.size()) throw std::domain_error("generate_relation: need #J <= #L");

  Relation rel;
  rel.meta = RelationMeta{j.n(), k, {j.entries().begin(), j.entries().end()}, {l.entries().begin(), l.entries().end()}};
  std::vector<Term> terms;
  push_product(terms, 1, j.entries(), l.entries());

  std::vector<int> jp, lp;
  for_each_combination(static_cast<int>(l.size()), k, [&](const std::vector<int>& rs) {
    jp.assign(j.entries().begin(), j.entries().end());
    lp.assign(l.entries().begin(), l.entries().end());
    for (std::size_t b = 0; b < rs.size(); ++b) {
      const auto r = static_cast<std::size_t>(rs[b]);
      jp[b] = l[r];
      lp[r] = j[b];
    }
    push_product(terms, -1, jp, lp);
  });
  canonicalize(terms);
  rel.terms = std::move(terms);
  return rel;
}

Relation initial_form(const Relation& rel) {
  Relation out{rel.meta, {}};
  if (rel.empty()) return out;
  const int n = rel.meta.n;
  int best = rel.terms.front().weight(n);
  for (const auto& t : rel.terms) best = std::min(best, t.weight(n));
  for (const auto& t : rel.terms)
    if (t.weight(n) == best) out.terms.push_back(t);
  return out;
}

void for_each_relation(int n, const EnumerateOptions& opts, const std::function<void(Relation&&)>& visit) {
  const int dmax = opts.max_set_size ? std::min(*opts.max_set_size, n - 1) : n - 1;
  for (int e = 1; e <= dmax; ++e) {
    for (int d = e; d <= dmax; ++d) {
      for_each_combination(n, e, [&](const std::vector<int>& a_idx) {
        for_each_combination(n, d, [&](const std::vector<int>& b_idx) {
          std::vector<int> bseq;
          for (int x : b_idx) bseq.push_back(x + 1);
          const IndexSeq lseq(bseq, n);
          for (int k = 1; k <= e; ++k) {
            if (opts.restrict_k && k != *opts.restrict_k) continue;
            for_each_combination(e, k, [&](const std::vector<int>& s_idx) {
              std::vector<int> jseq;
              std::vector<bool> in_prefix(static_cast<std::size_t>(e), false);
              for (int s : s_idx) {
                jseq.push_back(a_idx[static_cast<std::size_t>(s)] + 1);
                in_prefix[static_cast<std::size_t>(s)] = true;
              }
              for (int t = 0; t < e; ++t)
                if (!in_prefix[static_cast<std::size_t>(t)]) jseq.push_back(a_idx[static_cast<std::size_t>(t)] + 1);
              Relation rel = generate_relation(IndexSeq(std::move(jseq), n), lseq, k);
              if (!rel.empty()) visit(std::move(rel));
            });
          }
        });
      });
    }
  }
}

std::vector<Relation> enumerate_relations(int n, const EnumerateOptions& opts) {
  if (n < 2) throw std::domain_error("enumerate_relations: need n >= 2");
  std::vector<Relation> out;
  for_each_relation(n, opts, [&](Relation&& r) { out.push_back(std::move(r)); });
  return out;
}

std::string to_json(const Relation& rel) {
  nlohmann::ordered_json j;
  j["k"] = rel.meta.k;
  j["J"] = rel.meta.j;
  j["L"] = rel.meta.l;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : rel.terms) {
    nlohmann::ordered_json tj;
    tj["c"] = t.coeff;
    tj["A"] = t.a;
    tj["B"] = t.b;
    terms.push_back(std::move(tj));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

}  // namespace flagdeg
