#include "knapsack/lattice.hpp"

#include <algorithm>
#include <string>

namespace knapsack {

LatticeBasis::LatticeBasis(Matrix rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidInput("lattice basis needs at least one row");
  const std::size_t d = rows_.front().size();
  if (d == 0) throw InvalidInput("lattice rows must be non-empty");
  for (const auto& r : rows_) {
    if (r.size() != d) throw InvalidInput("lattice rows have different lengths");
  }
  if (rows_.size() > d) throw InvalidInput("more rows than the ambient dimension");
  gram_schmidt(rows_);
}

LatticeBasis LatticeBasis::from_integers(const std::vector<std::vector<Integer>>& rows) {
  Matrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return LatticeBasis(std::move(m));
}

Rational inner_product(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) throw InvalidInput("inner_product: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return sum;
}

Rational norm_sq(std::span<const Rational> y) {
  if (y.empty()) throw InvalidInput("norm of an empty vector");
  return inner_product(y, y);
}

Rational sup_norm(std::span<const Rational> y) {
  if (y.empty()) throw InvalidInput("norm of an empty vector");
  Rational best = 0;
  for (const auto& v : y) best = std::max(best, abs_of(v));
  return best;
}

GramSchmidtData gram_schmidt(const Matrix& rows) {
  const std::size_t m = rows.size();
  GramSchmidtData g;
  g.ortho.reserve(m);
  g.mu.assign(m, Vector(m, Rational(0)));
  g.norms.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector star = rows[i];
    for (std::size_t j = 0; j < i; ++j) {
      g.mu[i][j] = inner_product(rows[i], g.ortho[j]) / g.norms[j];
      for (std::size_t c = 0; c < star.size(); ++c) star[c] -= g.mu[i][j] * g.ortho[j][c];
    }
    Rational f = inner_product(star, star);
    if (f == 0) throw RankDeficiency("basis row " + std::to_string(i + 1) + " is dependent");
    g.ortho.push_back(std::move(star));
    g.norms.push_back(std::move(f));
  }
  return g;
}

bool is_lll_reduced(const LatticeBasis& basis, const Rational& delta) {
  const GramSchmidtData g = gram_schmidt(basis);
  const Rational half(1, 2);
  for (std::size_t i = 1; i < basis.rank(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs_of(g.mu[i][j]) > half) return false;
    }
    const Rational& mu = g.mu[i][i - 1];
    if (g.norms[i] < (delta - mu * mu) * g.norms[i - 1]) return false;
  }
  return true;
}

namespace {

class LllState {
 public:
  LllState(Matrix rows, LllStats& stats)
      : f_(std::move(rows)), stats_(stats) {
    GramSchmidtData g = gram_schmidt(f_);
    mu_ = std::move(g.mu);
    F_ = std::move(g.norms);
  }

  void run(const Rational& delta) {
    const std::size_t m = f_.size();
    std::size_t k = 1;
    while (k < m) {
      red(k, k - 1);
      const Rational mu_kk = mu_[k][k - 1];
      if (F_[k] < (delta - mu_kk * mu_kk) * F_[k - 1]) {
        swap(k);
        k = std::max<std::size_t>(1, k - 1);
      } else {
        for (std::size_t l = k - 1; l-- > 0;) red(k, l);
        ++k;
      }
    }
  }

  Matrix take_rows() { return std::move(f_); }

 private:
  // Size-reduce f_k against f_l.
  void red(std::size_t k, std::size_t l) {
    if (abs_of(mu_[k][l]) <= Rational(1, 2)) return;
    const Integer r = round_half_up(mu_[k][l]);
    const Rational rq(r);
    for (std::size_t c = 0; c < f_[k].size(); ++c) f_[k][c] -= rq * f_[l][c];
    for (std::size_t j = 0; j < l; ++j) mu_[k][j] -= rq * mu_[l][j];
    mu_[k][l] -= rq;
    ++stats_.size_reductions;
  }

  // Exchange f_{k-1} and f_k and update the orthogonalization in place.
  void swap(std::size_t k) {
    const std::size_t m = f_.size();
    const Rational mu = mu_[k][k - 1];
    const Rational F = F_[k] + mu * mu * F_[k - 1];
    mu_[k][k - 1] = mu * F_[k - 1] / F;
    F_[k] = F_[k - 1] * F_[k] / F;
    F_[k - 1] = F;
    std::swap(f_[k], f_[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu_[k][j], mu_[k - 1][j]);
    for (std::size_t i = k + 1; i < m; ++i) {
      const Rational t = mu_[i][k];
      mu_[i][k] = mu_[i][k - 1] - mu * t;
      mu_[i][k - 1] = t + mu_[k][k - 1] * mu_[i][k];
    }
    ++stats_.swaps;
  }

  Matrix f_;
  Matrix mu_;
  std::vector<Rational> F_;
  LllStats& stats_;
};

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta, LllStats* stats) {
  if (delta <= Rational(1, 4) || delta >= 1) throw InvalidInput("delta must lie in (1/4, 1)");
  LllStats local;
  LllState state(basis.rows(), stats ? *stats : local);
  state.run(delta);
  return LatticeBasis(state.take_rows());
}

Rational determinant(const Matrix& square) {
  const std::size_t n = square.size();
  for (const auto& r : square) {
    if (r.size() != n) throw InvalidInput("determinant needs a square matrix");
  }
  Matrix a = square;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

Rational lattice_determinant(const LatticeBasis& basis) {
  if (basis.rank() != basis.ambient_dim()) throw InvalidInput("determinant needs a square basis");
  return abs_of(determinant(basis.rows()));
}

Rational gram_determinant(const LatticeBasis& basis) {
  Rational product = 1;
  for (const auto& f : gram_schmidt(basis).norms) product *= f;
  return product;
}

namespace {

// Solves x * A = b for the m x m matrix A by Gauss-Jordan on A^T.
Vector solve_left(const Matrix& a, const Vector& b) {
  const std::size_t m = a.size();
  Matrix aug(m, Vector(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug[r][c] = a[c][r];
    aug[r][m] = b[r];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && aug[pivot][col] == 0) ++pivot;
    if (pivot == m) throw RankDeficiency("singular Gram matrix");
    std::swap(aug[pivot], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (std::size_t c = col; c <= m; ++c) aug[col][c] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const Rational factor = aug[r][col];
      for (std::size_t c = col; c <= m; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }
  Vector x(m);
  for (std::size_t r = 0; r < m; ++r) x[r] = aug[r][m];
  return x;
}

}  // namespace

Matrix change_of_basis(const LatticeBasis& from, const LatticeBasis& to) {
  if (from.ambient_dim() != to.ambient_dim() || from.rank() != to.rank()) {
    throw InvalidInput("change_of_basis: shape mismatch");
  }
  const std::size_t m = from.rank();
  Matrix gram(m, Vector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram[i][j] = inner_product(from.row(i), from.row(j));
  }
  Matrix t;
  t.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vector rhs(m);
    for (std::size_t j = 0; j < m; ++j) rhs[j] = inner_product(to.row(i), from.row(j));
    Vector x = solve_left(gram, rhs);
    for (std::size_t c = 0; c < from.ambient_dim(); ++c) {
      Rational value = 0;
      for (std::size_t j = 0; j < m; ++j) value += x[j] * from.row(j)[c];
      if (value != to.row(i)[c]) throw InvalidInput("target row is outside the source span");
    }
    t.push_back(std::move(x));
  }
  return t;
}

std::vector<ShortVector> enumerate_short_vectors(const LatticeBasis& basis, int coeff_bound) {
  if (basis.rank() > 6) throw InvalidInput("enumeration limited to rank <= 6");
  if (coeff_bound < 1 || coeff_bound > 5) throw InvalidInput("coefficient bound must be in [1, 5]");
  const std::size_t m = basis.rank();
  const std::size_t d = basis.ambient_dim();
  std::vector<long> coeffs(m, -coeff_bound);
  std::vector<ShortVector> out;
  for (;;) {
    if (std::any_of(coeffs.begin(), coeffs.end(), [](long c) { return c != 0; })) {
      Vector v(d, Rational(0));
      for (std::size_t i = 0; i < m; ++i) {
        if (coeffs[i] == 0) continue;
        const Rational c(coeffs[i]);
        for (std::size_t k = 0; k < d; ++k) v[k] += c * basis.row(i)[k];
      }
      Rational n = norm_sq(v);
      out.push_back(ShortVector{coeffs, std::move(v), std::move(n)});
    }
    std::size_t pos = 0;
    while (pos < m && coeffs[pos] == coeff_bound) coeffs[pos++] = -coeff_bound;
    if (pos == m) break;
    ++coeffs[pos];
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ShortVector& x, const ShortVector& y) { return x.norm_sq < y.norm_sq; });
  return out;
}

}  // namespace knapsack
