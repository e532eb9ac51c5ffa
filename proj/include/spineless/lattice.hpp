#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "spineless/errors.hpp"
#include "spineless/rational.hpp"

namespace spineless {

using IntMatrix = std::vector<std::vector<long>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

// A = U^T diag(D) U with U unit upper triangular, for symmetric A.
struct LdlFactor {
  RationalMatrix upper;
  std::vector<Rational> diag;
};

inline LdlFactor ldl(const RationalMatrix& a) {
  const std::size_t r = a.size();
  LdlFactor f{RationalMatrix(r, std::vector<Rational>(r)), std::vector<Rational>(r)};
  for (std::size_t i = 0; i < r; ++i) {
    Rational d = a[i][i];
    for (std::size_t k = 0; k < i; ++k) d -= f.upper[k][i] * f.upper[k][i] * f.diag[k];
    f.diag[i] = d;
    f.upper[i][i] = Rational(1);
    if (d == Rational(0)) continue;
    for (std::size_t j = i + 1; j < r; ++j) {
      Rational s = a[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= f.upper[k][i] * f.upper[k][j] * f.diag[k];
      f.upper[i][j] = s / d;
    }
  }
  return f;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t r = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && a[pivot][col] == Rational(0)) ++pivot;
    if (pivot == r) throw InvalidInput("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = a[col][col];
    for (std::size_t j = 0; j < r; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || a[row][col] == Rational(0)) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < r; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Negative-definite integral lattice given by its Gram matrix.
class IntLattice {
 public:
  explicit IntLattice(IntMatrix gram) : gram_(std::move(gram)) {
    const std::size_t r = gram_.size();
    if (r == 0) throw InvalidInput("lattice rank must be positive");
    for (const auto& row : gram_)
      if (row.size() != r) throw InvalidInput("Gram matrix is not square");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (gram_[i][j] != gram_[j][i]) throw InvalidInput("Gram matrix is not symmetric");
    // Leading minors of G alternate in sign iff every pivot of -G is positive.
    negated_ = RationalMatrix(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) negated_[i][j] = Rational(-gram_[i][j]);
    factor_ = detail::ldl(negated_);
    Rational det(1);
    for (const auto& d : factor_.diag) {
      if (d <= Rational(0)) throw InvalidInput("Gram matrix is not negative definite");
      det *= d;
    }
    abs_det_ = det.numerator();
    RationalMatrix g(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) g[i][j] = Rational(gram_[i][j]);
    inverse_ = detail::inverse(g);
  }

  std::size_t rank() const noexcept { return gram_.size(); }
  const IntMatrix& gram() const noexcept { return gram_; }
  const mpz_class& abs_det() const noexcept { return abs_det_; }
  const RationalMatrix& inverse_gram() const noexcept { return inverse_; }
  const detail::LdlFactor& negated_ldl() const noexcept { return factor_; }

 private:
  IntMatrix gram_;
  RationalMatrix negated_;
  detail::LdlFactor factor_;
  RationalMatrix inverse_;
  mpz_class abs_det_;
};

/// Linear chain of n-1 vertices framed -2: boundary -L(n,1), |det| = n.
inline IntLattice chain_lattice(long n) {
  if (n < 2) throw InvalidInput("chain lattice needs n >= 2");
  const auto r = static_cast<std::size_t>(n - 1);
  IntMatrix g(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    g[i][i] = -2;
    if (i + 1 < r) g[i][i + 1] = g[i + 1][i] = 1;
  }
  return IntLattice(std::move(g));
}

/// Characteristic covector c0 (c0_j = c0 . e_j, c0_j = G_jj mod 2) standing
/// for its class modulo 2 G Z^r.
struct CharCoset {
  std::vector<mpz_class> representative;

  friend bool operator==(const CharCoset&, const CharCoset&) = default;
};

namespace detail {

// Lower-triangular basis (columns) of G Z^r with positive diagonal.
inline std::vector<std::vector<mpz_class>> column_hnf(const IntMatrix& gram) {
  const std::size_t r = gram.size();
  std::vector<std::vector<mpz_class>> m(r, std::vector<mpz_class>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i][j] = gram[i][j];
  // (col_a, col_b) <- (s*col_a + t*col_b, u*col_a + v*col_b)
  auto combine = [&](std::size_t a, std::size_t b, const mpz_class& s, const mpz_class& t,
                     const mpz_class& u, const mpz_class& v) {
    for (std::size_t i = 0; i < r; ++i) {
      const mpz_class x = m[i][a];
      const mpz_class y = m[i][b];
      m[i][a] = s * x + t * y;
      m[i][b] = u * x + v * y;
    }
  };
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t k = j + 1; k < r; ++k) {
      if (m[j][k] == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m[j][j].get_mpz_t(), m[j][k].get_mpz_t());
      const mpz_class u = m[j][j] / g;
      const mpz_class v = m[j][k] / g;
      // determinant s*u + t*v = 1, so the column lattice is unchanged
      combine(j, k, s, t, -v, u);
    }
    if (m[j][j] < 0)
      for (std::size_t i = 0; i < r; ++i) m[i][j] = -m[i][j];
    if (m[j][j] == 0) throw InvalidInput("Gram matrix is singular");
  }
  return m;
}

}  // namespace detail

/// |det G| class representatives of characteristic covectors modulo 2 G Z^r,
/// in lexicographic order of the box coordinates.
inline std::vector<CharCoset> char_cosets(const IntLattice& lattice) {
  const std::size_t r = lattice.rank();
  const auto hnf = detail::column_hnf(lattice.gram());
  std::vector<mpz_class> box(r);
  for (std::size_t j = 0; j < r; ++j) box[j] = hnf[j][j];
  std::vector<CharCoset> out;
  std::vector<mpz_class> x(r, 0);
  for (;;) {
    CharCoset c;
    c.representative.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
      const long parity = ((lattice.gram()[j][j] % 2) + 2) % 2;
      c.representative[j] = parity + 2 * x[j];
    }
    out.push_back(std::move(c));
    std::size_t pos = r;
    for (;;) {
      if (pos == 0) return out;
      --pos;
      if (++x[pos] < box[pos]) break;
      x[pos] = 0;
    }
  }
}

struct SearchBudget {
  std::size_t max_nodes = 1'000'000;
};

/// max over c in the coset of (c^T G^{-1} c + rank) / 4.
///
/// Writing c = c0 + 2 G z and y = z + G^{-1} c0 / 2 gives c^T G^{-1} c = -4 y^T (-G) y,
/// so the maximum is rank/4 - min_z y^T (-G) y: a closest-vector problem
/// solved exactly by Fincke-Pohst enumeration over the LDL^T factor of -G,
/// starting from the rounded point as incumbent. Every pruning bound is an
/// exact rational, so the result is certified.
inline Rational d_lower_bound(const IntLattice& lattice, const CharCoset& coset, SearchBudget budget = {}) {
  const std::size_t r = lattice.rank();
  if (coset.representative.size() != r) throw InvalidInput("coset dimension differs from lattice rank");
  const auto& ginv = lattice.inverse_gram();
  std::vector<Rational> shift(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational s;
    for (std::size_t j = 0; j < r; ++j) s += ginv[i][j] * Rational(coset.representative[j]);
    shift[i] = s / Rational(2);
  }
  const auto& f = lattice.negated_ldl();

  auto quadratic = [&](const std::vector<Rational>& y) {
    Rational total;
    for (std::size_t k = 0; k < r; ++k) {
      Rational lin = y[k];
      for (std::size_t j = k + 1; j < r; ++j) lin += f.upper[k][j] * y[j];
      total += f.diag[k] * lin * lin;
    }
    return total;
  };

  std::vector<Rational> y(r);
  for (std::size_t k = 0; k < r; ++k) {
    const Rational target = -shift[k] + Rational(1, 2);
    y[k] = Rational(target.floor()) + shift[k];
  }
  Rational best = quadratic(y);

  std::size_t nodes = 0;
  std::vector<Rational> partial(r + 1);  // partial[k] = sum of terms k..r-1
  auto descend = [&](auto&& self, std::size_t level) -> void {
    const std::size_t k = level - 1;
    Rational centre = shift[k];
    for (std::size_t j = k + 1; j < r; ++j) centre += f.upper[k][j] * y[j];
    const Rational remaining = best - partial[level];
    if (remaining < Rational(0)) return;
    const Rational w = remaining / f.diag[k];
    mpz_class radius;
    const mpz_class wf = w.floor();
    mpz_sqrt(radius.get_mpz_t(), wf.get_mpz_t());
    const mpz_class lo = (-centre - Rational(radius)).floor();
    const mpz_class hi = (-centre + Rational(radius)).ceil();
    for (mpz_class z = lo; z <= hi; ++z) {
      if (++nodes > budget.max_nodes)
        throw SearchOverflow("lattice search exceeded budget of " + std::to_string(budget.max_nodes) + " nodes");
      const Rational lin = Rational(z) + centre;
      const Rational term = f.diag[k] * lin * lin;
      partial[k] = partial[level] + term;
      if (partial[k] > best) continue;
      y[k] = Rational(z) + shift[k];
      if (k == 0) {
        if (partial[0] < best) best = partial[0];
      } else {
        self(self, k);
      }
    }
  };
  partial[r] = Rational(0);
  descend(descend, r);

  return Rational(static_cast<long>(r), 4) - best;
}

struct CosetBound {
  CharCoset coset;
  Rational value;
};

inline std::vector<CosetBound> coset_bounds(const IntLattice& lattice, SearchBudget budget = {}) {
  std::vector<CosetBound> out;
  for (auto& c : char_cosets(lattice)) {
    Rational v = d_lower_bound(lattice, c, budget);
    out.push_back({std::move(c), std::move(v)});
  }
  return out;
}

/// Plain-text Gram format: rank, then `rank` rows of integers. `#` starts a
/// comment.
inline IntLattice parse_gram(std::istream& in) {
  std::string content;
  for (std::string line; std::getline(in, line);) content += line.substr(0, line.find('#')) + '\n';
  std::istringstream tokens(content);
  long rank = 0;
  if (!(tokens >> rank) || rank <= 0) throw InvalidInput("Gram file must start with a positive rank");
  IntMatrix g(static_cast<std::size_t>(rank), std::vector<long>(static_cast<std::size_t>(rank)));
  for (auto& row : g)
    for (auto& x : row)
      if (!(tokens >> x)) throw InvalidInput("Gram file has fewer than rank*rank integers");
  std::string extra;
  if (tokens >> extra) throw InvalidInput("trailing data in Gram file: '" + extra + "'");
  return IntLattice(std::move(g));
}

}  // namespace spineless
