#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptv {

// Letters of a permutation word, 1-based values.
using Word = std::vector<int>;

// An unordered pair {a,b}, stored with a < b.
using UPair = std::pair<int, int>;

inline UPair upair(int a, int b) {
  return a < b ? UPair{a, b} : UPair{b, a};
}

// A permutation of [n] in one-line notation.  Elements of Sigma_n
// additionally have word[1]=1, word[2]=2 (1-based slots).
class Permutation {
 public:
  explicit Permutation(Word w);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  // 1-based position access.
  int at(int pos) const { return word_.at(static_cast<size_t>(pos - 1)); }
  const Word& word() const { return word_; }
  bool fixes_12() const { return word_.size() >= 2 && word_[0] == 1 && word_[1] == 2; }
  // 1-based position of a letter.
  int position_of(int letter) const;

  // Undelimited digit string for n <= 9, comma-separated otherwise.
  std::string str() const;
  static Permutation parse(const std::string& s);

  auto operator<=>(const Permutation&) const = default;

 private:
  Word word_;
};

// Multiset of unordered adjacent pairs.
class AdjacencyMultiset {
 public:
  void add(int a, int b, int mult = 1);
  int multiplicity(int a, int b) const;
  int total() const;
  const std::map<UPair, int>& entries() const { return mult_; }
  AdjacencyMultiset& merge(const AdjacencyMultiset& other);
  bool operator==(const AdjacencyMultiset&) const = default;
  std::string str() const;

 private:
  std::map<UPair, int> mult_;
};

// Value-wise inversions stored as (larger, smaller) with the larger letter
// preceding the smaller one in the word.
using InversionSet = std::set<std::pair<int, int>>;

// All (n-2)! permutations fixing 1 and 2, sorted lexicographically by word.
// This is the canonical column order used by every other module.
std::vector<Permutation> enumerate_sigma(int n);

// Index of sigma within enumerate_sigma(sigma.size()); the column index.
long sigma_index(const Permutation& sigma);

// {{s_i, s_{i+1}} : i in [n]}, index n+1 wrapping to 1.  Cardinality n.
AdjacencyMultiset cyclic_adjacencies(const Permutation& sigma);

// {{w_i, w_{i+1}} : 1 <= i <= len-1}; empty for one-letter words.
AdjacencyMultiset acyclic_adjacencies(const Word& w);

// Value-wise inversions of sigma in Sigma_n.  With reduce set they are
// computed on the sub-word sigma_3..sigma_n with letters shifted down by 2.
InversionSet value_inversions(const Permutation& sigma, bool reduce = false);

// Right weak order: inv(sigma) subset of inv(tau).
bool weak_order_leq(const Permutation& sigma, const Permutation& tau);

// Splice delta (a word on {n+1,...,n+k}) into the gap after 1-based position
// `slot`; the gap must lie strictly after the position of `letter`.
Permutation insert_after_letter(const Permutation& sigma, int letter,
                                const Word& delta, int slot);

// Number of cyclic descents (s_i > s_{i+1}, wrapping).  Parity of this count
// is the per-coordinate sign relating the plain monomial parametrization of
// the toric variety to the Pluecker-faithful one.
int cyclic_descents(const Permutation& sigma);

}  // namespace ptv
