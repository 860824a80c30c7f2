#include "hecke/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

std::vector<int> split_ints(const std::string& text, const std::string& separators) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("empty entry in '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("not an integer: '" + token + "'");
    out.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (separators.find(ch) != std::string::npos)
      flush();
    else
      token += ch;
  }
  if (!text.empty()) flush();
  return out;
}

void check_partition_of(const Partition& mu, int n) {
  if (mu.size() != n)
    throw std::invalid_argument("partition " + mu.to_string() + " is not a partition of " +
                                std::to_string(n));
}

/// Ranks of the values, 1-based: the standardization of a sequence of distinct integers.
Permutation standardize(const std::vector<int>& values) {
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out(values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    out[j] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[j]) - sorted.begin()) + 1;
  return Permutation(std::move(out));
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : oneline_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation in one-line notation: " + to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  Permutation p;
  p.oneline_ = std::move(v);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  return identity(n).times_simple(i);
}

Permutation Permutation::transposition(int n, int j, int k) {
  if (j < 1 || k < 1 || j > n || k > n) throw std::invalid_argument("transposition out of range");
  Permutation p = identity(n);
  std::swap(p.oneline_[static_cast<std::size_t>(j - 1)], p.oneline_[static_cast<std::size_t>(k - 1)]);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p = identity(n);
  std::reverse(p.oneline_.begin(), p.oneline_.end());
  return p;
}

Permutation Permutation::cycle3(int n, int a, int b, int c) {
  if (a == b || b == c || a == c) throw std::invalid_argument("cycle3: entries must be distinct");
  Permutation p = identity(n);
  p.oneline_[static_cast<std::size_t>(a - 1)] = b;
  p.oneline_[static_cast<std::size_t>(b - 1)] = c;
  p.oneline_[static_cast<std::size_t>(c - 1)] = a;
  return p;
}

Permutation Permutation::from_word(int n, const Word& word) {
  Permutation p = identity(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range in word");
    p = p.times_simple(i);
  }
  return p;
}

Permutation Permutation::parse(const std::string& text) { return Permutation(split_ints(text, ",")); }

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int i = 1; i <= size(); ++i) p.oneline_[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return p;
}

Permutation Permutation::times_simple(int i) const {
  Permutation p = *this;
  std::swap(p.oneline_[static_cast<std::size_t>(i - 1)], p.oneline_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::simple_times(int i) const {
  Permutation p = *this;
  for (int& v : p.oneline_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < oneline_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(oneline_[j]);
  }
  return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("composing permutations of different sizes");
  Permutation p = v;
  for (int i = 1; i <= v.size(); ++i) p.oneline_[static_cast<std::size_t>(i - 1)] = u(v(i));
  return p;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0 || (j > 0 && parts_[j] > parts_[j - 1]))
      throw std::invalid_argument("not a partition: " + to_string());
  }
}

Partition Partition::parse(const std::string& text) { return Partition(split_ints(text, "+,")); }

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::is_all_ones() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out += '+';
    out += std::to_string(parts_[j]);
  }
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

Word canonical_reduced_word(const Permutation& w) {
  // Peel w down to the identity by right multiplications w s_{b_1} s_{b_2} ...;
  // then w = ... s_{b_2} s_{b_1}.
  Permutation current = w;
  Word peeled;
  for (int value = 1; value <= w.size(); ++value) {
    int pos = 1;
    while (current(pos) != value) ++pos;
    for (; pos > value; --pos) {
      current = current.times_simple(pos - 1);
      peeled.push_back(pos - 1);
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

Word alt_reduced_word(const Permutation& w) {
  Word word = canonical_reduced_word(w);
  for (std::size_t j = 0; j + 1 < word.size(); ++j) {
    if (std::abs(word[j] - word[j + 1]) > 1) {
      std::swap(word[j], word[j + 1]);
      return word;
    }
  }
  for (std::size_t j = 0; j + 2 < word.size(); ++j) {
    if (word[j] == word[j + 2] && std::abs(word[j] - word[j + 1]) == 1) {
      const int a = word[j], b = word[j + 1];
      word[j] = b;
      word[j + 1] = a;
      word[j + 2] = b;
      return word;
    }
  }
  return word;
}

QPoly m_q(const Permutation& w) {
  const int n = w.size();
  int m = 0;
  while (m + 2 <= n && w(m + 1) > w(m + 2)) ++m;
  for (int j = m + 1; j < n; ++j)
    if (w(j) > w(j + 1)) return {};
  return QPoly::monomial(m % 2 == 0 ? 1 : -1, m);
}

CosetDecomposition coset_decompose(const Permutation& w, const Partition& mu) {
  check_partition_of(mu, w.size());
  CosetDecomposition out;
  std::vector<int> r(static_cast<std::size_t>(w.size()));
  int start = 0;
  for (int part : mu.parts()) {
    std::vector<int> values(w.oneline().begin() + start, w.oneline().begin() + start + part);
    out.blocks.push_back(standardize(values));
    std::sort(values.begin(), values.end());
    std::copy(values.begin(), values.end(), r.begin() + start);
    start += part;
  }
  out.r = Permutation(std::move(r));
  return out;
}

Permutation recompose(const CosetDecomposition& decomposition) {
  std::vector<int> product;
  int offset = 0;
  for (const auto& block : decomposition.blocks) {
    for (int v : block.oneline()) product.push_back(offset + v);
    offset += block.size();
  }
  return decomposition.r * Permutation(std::move(product));
}

QPoly weight_q_mu(const Permutation& w, const Partition& mu) {
  QPoly weight = 1;
  for (const auto& block : coset_decompose(w, mu).blocks) {
    weight *= m_q(block);
    if (weight.is_zero()) break;
  }
  return weight;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> perms_of_length(int n, int k) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (length(w) == k) out.push_back(std::move(w));
  return out;
}

Word t_mu_word(const Partition& mu) {
  Word word;
  int start = 0;
  for (int part : mu.parts()) {
    for (int i = start + 1; i < start + part; ++i) word.push_back(i);
    start += part;
  }
  return word;
}

Partition cycle_type(const Permutation& w) {
  std::vector<int> lengths;
  std::vector<bool> seen(static_cast<std::size_t>(w.size()) + 1, false);
  for (int i = 1; i <= w.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = w(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

std::vector<std::vector<int>> insertion_tableau(const Permutation& w) {
  std::vector<std::vector<int>> rows;
  for (int value : w.oneline()) {
    int bumped = value;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), bumped);
      if (it == row.end()) {
        row.push_back(bumped);
        bumped = 0;
        break;
      }
      std::swap(*it, bumped);
    }
    if (bumped != 0) rows.push_back({bumped});
  }
  return rows;
}

std::vector<KnuthShape> knuth_classes(int n) {
  std::map<std::vector<std::vector<int>>, std::vector<Permutation>> by_tableau;
  for (auto& w : all_permutations(n)) by_tableau[insertion_tableau(w)].push_back(std::move(w));

  std::vector<KnuthShape> out;
  for (auto& shape : partitions_of(n)) out.push_back({shape, {}});
  for (auto& [tableau, members] : by_tableau) {
    std::vector<int> row_lengths;
    for (const auto& row : tableau) row_lengths.push_back(static_cast<int>(row.size()));
    Partition shape(std::move(row_lengths));
    auto it = std::find_if(out.begin(), out.end(), [&](const KnuthShape& s) { return s.shape == shape; });
    it->classes.push_back(std::move(members));
  }
  for (auto& entry : out)
    std::sort(entry.classes.begin(), entry.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::string word_to_string(const Word& word) {
  std::string out;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (j) out += '.';
    out += std::to_string(word[j]);
  }
  return out;
}

Word parse_word(const std::string& text) { return split_ints(text, ".,"); }

}  // namespace hecke
