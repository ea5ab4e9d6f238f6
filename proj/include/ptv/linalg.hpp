#pragma once

#include <map>
#include <string>
#include <vector>

#include "ptv/numeric.hpp"

namespace ptv {

// Sparse integer row: sorted (index, value) pairs, values nonzero.
struct SparseRow {
  std::vector<std::pair<int, Int>> e;

  const Int* get(int j) const;
  void set(int j, Int v);
  bool empty() const { return e.empty(); }
  int leading_index() const { return e.empty() ? -1 : e.front().first; }
  // this += c * other
  void axpy(const Int& c, const SparseRow& other);
  void negate();
  std::vector<Int> dense(int cols) const;
  static SparseRow from_dense(const std::vector<Int>& v);
};

// Sparse matrix of arbitrary-precision integers.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(static_cast<size_t>(rows)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Int& at(int r, int c) const;
  void set(int r, int c, Int v);
  const SparseRow& row(int r) const { return row_[static_cast<size_t>(r)]; }
  SparseRow& row(int r) { return row_[static_cast<size_t>(r)]; }
  long nonzeros() const;

  static ExactMatrix identity(int n);
  bool operator==(const ExactMatrix&) const = default;

  // Plain-text format: header "rows cols", then one "r c value" triple per
  // nonzero, sorted lexicographically (0-based indices).
  std::string serialize() const;
  static ExactMatrix parse(const std::string& text);

 private:
  int rows_, cols_;
  std::vector<SparseRow> row_;
};

struct HnfResult {
  ExactMatrix H;  // row-style Hermite normal form, H = U * M
  ExactMatrix U;  // unimodular transform
};

// Row HNF: pivot entries positive, entries above each pivot reduced into
// [0, pivot), pivot columns strictly increasing, zero rows last.
HnfResult hnf(const ExactMatrix& M);

struct LatticeBasis {
  std::vector<std::vector<Int>> vectors;  // linearly independent over Q
  int length = 0;                         // ambient dimension
  int rank() const { return static_cast<int>(vectors.size()); }
};

// Basis of {u in Z^cols : M u = 0}.  The basis spans the full (saturated)
// kernel lattice.
LatticeBasis integer_kernel_basis(const ExactMatrix& M);

// Rational rank; modular filter first, then exact certification.
int rank(const ExactMatrix& M);
int rank_rows(const std::vector<std::vector<Int>>& rows);

// v in Z-span of B?
bool lattice_contains(const LatticeBasis& B, const std::vector<Int>& v);

// Canonical HNF of the row lattice spanned by `rows` (zero rows dropped,
// fully reduced).  Two generating sets span the same lattice iff their
// canonical HNFs are equal.
std::vector<std::vector<Int>> lattice_hnf(const std::vector<std::vector<Int>>& rows);

struct SpanRankResult {
  int rank = 0;
  // Meaningful only when a reference kernel basis was supplied: whether the
  // span equals the full reference lattice (not just a finite-index sublattice).
  bool equals_reference = false;
  bool saturated = false;
};

SpanRankResult span_rank(const std::vector<std::vector<Int>>& vectors,
                         const LatticeBasis* reference = nullptr);

// Exact determinant (Bareiss) of a small dense matrix.
Int det_exact(std::vector<std::vector<Int>> a);

// Rank of an integer matrix modulo the fixed filter prime.
int rank_mod_p(const std::vector<std::vector<Int>>& rows, unsigned long p = kFilterPrime);

}  // namespace ptv
