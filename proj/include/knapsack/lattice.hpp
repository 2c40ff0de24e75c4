#pragma once

// Exact rational lattice arithmetic: Gram-Schmidt orthogonalization, LLL
// reduction, reducedness checks and a small enumeration oracle.

#include <cstdint>
#include <span>
#include <vector>

#include "knapsack/numeric.hpp"

namespace knapsack {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Rows f_1 ... f_m of common length d >= m, linearly independent.
class LatticeBasis {
 public:
  /// Throws InvalidInput on ragged or empty rows or m > d, and
  /// RankDeficiency on dependent rows.
  explicit LatticeBasis(Matrix rows);

  static LatticeBasis from_integers(const std::vector<std::vector<Integer>>& rows);

  const Matrix& rows() const { return rows_; }
  const Vector& row(std::size_t i) const { return rows_[i]; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return rows_.front().size(); }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  Matrix rows_;
};

struct GramSchmidtData {
  Matrix ortho;               // f_i*
  Matrix mu;                  // mu[i][j] for j < i, zero elsewhere
  std::vector<Rational> norms;  // F_i = <f_i*, f_i*>
};

Rational inner_product(std::span<const Rational> x, std::span<const Rational> y);
Rational norm_sq(std::span<const Rational> y);
Rational sup_norm(std::span<const Rational> y);

/// mu_{i,j} = <f_i, f_j*> / F_j. Throws RankDeficiency if some f_i* = 0.
GramSchmidtData gram_schmidt(const Matrix& rows);
inline GramSchmidtData gram_schmidt(const LatticeBasis& basis) { return gram_schmidt(basis.rows()); }

/// Size condition |mu_{i,j}| <= 1/2 and the Lovász condition
/// F_i >= (delta - mu_{i,i-1}^2) F_{i-1}, both checked exactly.
bool is_lll_reduced(const LatticeBasis& basis, const Rational& delta = Rational(3, 4));

struct LllStats {
  std::uint64_t swaps = 0;
  std::uint64_t size_reductions = 0;
};

/// Throws InvalidInput unless 1/4 < delta < 1.
LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta = Rational(3, 4),
                        LllStats* stats = nullptr);

/// |det| of a square basis, by exact elimination. Throws InvalidInput for
/// non-square input.
Rational lattice_determinant(const LatticeBasis& basis);

/// det^2 = Π F_i; defined for any full-row-rank basis.
Rational gram_determinant(const LatticeBasis& basis);

/// The unique T with to = T * from, solved over the rationals. Throws
/// InvalidInput if `to` is not in the row span of `from`.
Matrix change_of_basis(const LatticeBasis& from, const LatticeBasis& to);

/// Determinant of a square rational matrix.
Rational determinant(const Matrix& square);

struct ShortVector {
  std::vector<long> coefficients;
  Vector vector;
  Rational norm_sq;
};

/// Every nonzero combination with coefficients in [-bound, bound], sorted
/// by norm. Throws InvalidInput when rank > 6 or bound > 5.
std::vector<ShortVector> enumerate_short_vectors(const LatticeBasis& basis, int coeff_bound);

}  // namespace knapsack
