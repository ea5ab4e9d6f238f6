#include "ptv/permutations.hpp"

#include <algorithm>
#include <sstream>

namespace ptv {

Permutation::Permutation(Word w) : word_(std::move(w)) {
  const int n = static_cast<int>(word_.size());
  if (n == 0) throw std::invalid_argument("empty permutation word");
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("word is not a permutation of [n]");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Word w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

int Permutation::position_of(int letter) const {
  for (int i = 0; i < size(); ++i)
    if (word_[static_cast<size_t>(i)] == letter) return i + 1;
  throw std::invalid_argument("letter not present in permutation");
}

std::string Permutation::str() const {
  std::ostringstream os;
  if (size() <= 9) {
    for (int v : word_) os << v;
  } else {
    for (size_t i = 0; i < word_.size(); ++i) {
      if (i) os << ',';
      os << word_[i];
    }
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& s) {
  Word w;
  if (s.find(',') != std::string::npos) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit string");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

void AdjacencyMultiset::add(int a, int b, int mult) {
  if (a == b) throw std::invalid_argument("adjacency pair must have distinct letters");
  mult_[upair(a, b)] += mult;
  if (mult_[upair(a, b)] == 0) mult_.erase(upair(a, b));
}

int AdjacencyMultiset::multiplicity(int a, int b) const {
  auto it = mult_.find(upair(a, b));
  return it == mult_.end() ? 0 : it->second;
}

int AdjacencyMultiset::total() const {
  int t = 0;
  for (const auto& [p, m] : mult_) t += m;
  return t;
}

AdjacencyMultiset& AdjacencyMultiset::merge(const AdjacencyMultiset& other) {
  for (const auto& [p, m] : other.mult_) {
    mult_[p] += m;
    if (mult_[p] == 0) mult_.erase(p);
  }
  return *this;
}

std::string AdjacencyMultiset::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [p, m] : mult_) {
    if (!first) os << ',';
    first = false;
    os << p.first << p.second;
    if (m != 1) os << '^' << m;
  }
  os << '}';
  return os.str();
}

std::vector<Permutation> enumerate_sigma(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_sigma requires n >= 3");
  Word tail;
  for (int v = 3; v <= n; ++v) tail.push_back(v);
  std::vector<Permutation> out;
  do {
    Word w = {1, 2};
    w.insert(w.end(), tail.begin(), tail.end());
    out.emplace_back(std::move(w));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

long sigma_index(const Permutation& sigma) {
  if (!sigma.fixes_12()) throw std::invalid_argument("permutation is not in Sigma_n");
  // Lehmer code of the tail gives the lexicographic position directly.
  const Word& w = sigma.word();
  const int n = sigma.size();
  long idx = 0;
  for (int i = 2; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (w[static_cast<size_t>(j)] < w[static_cast<size_t>(i)]) ++smaller;
    long f = 1;
    for (int k = 2; k <= n - 1 - i; ++k) f *= k;  // (n-1-i)!
    idx += smaller * f;
  }
  return idx;
}

AdjacencyMultiset cyclic_adjacencies(const Permutation& sigma) {
  if (sigma.size() < 3) throw std::invalid_argument("cyclic adjacencies need length >= 3");
  AdjacencyMultiset out;
  const int n = sigma.size();
  for (int i = 1; i <= n; ++i) out.add(sigma.at(i), sigma.at(i % n + 1));
  return out;
}

AdjacencyMultiset acyclic_adjacencies(const Word& w) {
  if (w.empty()) throw std::invalid_argument("acyclic adjacencies need length >= 1");
  AdjacencyMultiset out;
  for (size_t i = 0; i + 1 < w.size(); ++i) out.add(w[i], w[i + 1]);
  return out;
}

InversionSet value_inversions(const Permutation& sigma, bool reduce) {
  if (!sigma.fixes_12()) throw std::invalid_argument("value_inversions expects Sigma_n");
  Word w;
  if (reduce) {
    for (int i = 3; i <= sigma.size(); ++i) w.push_back(sigma.at(i) - 2);
  } else {
    w = sigma.word();
  }
  InversionSet inv;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) inv.insert({w[i], w[j]});
  return inv;
}

bool weak_order_leq(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size())
    throw std::invalid_argument("weak_order_leq requires equal n");
  InversionSet a = value_inversions(sigma), b = value_inversions(tau);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Permutation insert_after_letter(const Permutation& sigma, int letter,
                                const Word& delta, int slot) {
  const int n = sigma.size();
  const int pos = sigma.position_of(letter);
  if (slot < pos || slot > n)
    throw std::invalid_argument("slot is not a gap after the given letter");
  const int k = static_cast<int>(delta.size());
  for (int v : delta)
    if (v < n + 1 || v > n + k)
      throw std::invalid_argument("delta must use the letters n+1..n+k");
  Word w;
  w.reserve(static_cast<size_t>(n + k));
  for (int i = 1; i <= slot; ++i) w.push_back(sigma.at(i));
  w.insert(w.end(), delta.begin(), delta.end());
  for (int i = slot + 1; i <= n; ++i) w.push_back(sigma.at(i));
  return Permutation(std::move(w));
}

int cyclic_descents(const Permutation& sigma) {
  const int n = sigma.size();
  int d = 0;
  for (int i = 1; i <= n; ++i)
    if (sigma.at(i) > sigma.at(i % n + 1)) ++d;
  return d;
}

}  // namespace ptv
