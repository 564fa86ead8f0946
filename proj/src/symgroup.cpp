#include "flagdeg/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace flagdeg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = this->n();
  if (n == 0) throw std::invalid_argument("permutation must have at least one entry");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation of [1.." + std::to_string(n) + "]");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::domain_error("rank must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::simple(int i, int n) {
  if (i < 1 || i >= n) throw std::domain_error("simple reflection index out of range");
  auto img = identity(n).images_;
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> img;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
      throw std::invalid_argument("malformed one-line permutation: '" + std::string(text) + "'");
    img.push_back(value);
    pos = comma + 1;
  }
  return Permutation(std::move(img));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::string Permutation::to_bracket_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::domain_error("rank mismatch in composition");
  std::vector<int> img(static_cast<std::size_t>(a.n()));
  for (int x = 1; x <= a.n(); ++x) img[static_cast<std::size_t>(x - 1)] = a(b(x));
  return Permutation(std::move(img));
}

Permutation ReducedWord::evaluate(int n) const {
  Permutation p = Permutation::identity(n);
  for (int a : letters) p = p * Permutation::simple(a, n);
  return p;
}

std::string ReducedWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += "s" + std::to_string(letters[i]);
  }
  return out;
}

bool ParabolicMask::contains(int i) const {
  return std::find(generators.begin(), generators.end(), i) != generators.end();
}

ParabolicMask ParabolicMask::all_but(int n, std::initializer_list<int> excluded) {
  ParabolicMask m;
  for (int i = 1; i < n; ++i)
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) m.generators.push_back(i);
  return m;
}

int rank_count(const Permutation& w, int i, int j) {
  const int n = w.n();
  if (i < 1 || i > n || j < 1 || j > n) throw std::domain_error("rank_count index out of range");
  int count = 0;
  for (int a = 1; a <= i; ++a)
    if (w(a) >= j) ++count;
  return count;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw std::domain_error("bruhat_leq: rank mismatch");
  const int n = u.n();
  // Running counts per threshold j: cu[j] = u^{i,j} after processing position i.
  std::vector<int> cu(static_cast<std::size_t>(n) + 2, 0), cv(cu);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= u(i); ++j) ++cu[static_cast<std::size_t>(j)];
    for (int j = 1; j <= v(i); ++j) ++cv[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j)
      if (cu[static_cast<std::size_t>(j)] > cv[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

bool grassmann_leq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::domain_error("grassmann_leq: unequal cardinality");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IndexSet apply_to_set(const Permutation& v, std::span<const int> a) {
  IndexSet out;
  out.reserve(a.size());
  for (int x : a) out.push_back(v(x));
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet prefix_image(const Permutation& v, int k) {
  IndexSet out(v.images().begin(), v.images().begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation min_coset_rep(const Permutation& v, const ParabolicMask& mask) {
  std::vector<int> img(v.images().begin(), v.images().end());
  const int n = v.n();
  int start = 1;
  while (start <= n) {
    int end = start;
    while (end < n && mask.contains(end)) ++end;
    std::sort(img.begin() + (start - 1), img.begin() + end);
    start = end + 1;
  }
  return Permutation(std::move(img));
}

Permutation coxeter_c(int n) {
  if (n < 1) throw std::domain_error("rank must be positive");
  std::vector<int> img{n};
  for (int i = 1; i < n; ++i) img.push_back(i);
  return Permutation(std::move(img));
}

Permutation longest_element(int n) {
  if (n < 1) throw std::domain_error("rank must be positive");
  std::vector<int> img;
  for (int i = 1; i <= n; ++i) img.push_back(n + 1 - i);
  return Permutation(std::move(img));
}

bool leq_c(const Permutation& v) {
  for (int d = 1; d < v.n(); ++d) {
    IndexSet img = prefix_image(v, d);
    for (int a = 1; a < d; ++a)
      if (img[static_cast<std::size_t>(a - 1)] != a) return false;
    if (img.back() < d) return false;
  }
  return true;
}

ReducedWord reduced_word(const Permutation& v) {
  std::vector<int> img(v.images().begin(), v.images().end());
  std::vector<int> reversed;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < img.size() && img[i] < img[i + 1]) ++i;
    if (i + 1 >= img.size()) break;
    reversed.push_back(static_cast<int>(i) + 1);
    std::swap(img[i], img[i + 1]);
  }
  return ReducedWord{{reversed.rbegin(), reversed.rend()}};
}

bool distinct_letter(const Permutation& v) {
  auto letters = reduced_word(v).letters;
  std::sort(letters.begin(), letters.end());
  return std::adjacent_find(letters.begin(), letters.end()) == letters.end();
}

std::vector<int> support(const Permutation& v) {
  std::vector<int> out;
  int prefix_max = 0;
  for (int i = 1; i < v.n(); ++i) {
    prefix_max = std::max(prefix_max, v(i));
    if (prefix_max != i) out.push_back(i);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace flagdeg
