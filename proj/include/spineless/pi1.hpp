#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spineless/errors.hpp"

namespace spineless {

/// Letter +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

inline Word free_reduce(const Word& w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

inline Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& letter : out) letter = -letter;
  return out;
}

/// gen^exponent, gen 0-based.
inline Word power(int gen, long exponent) {
  const int letter = exponent >= 0 ? gen + 1 : -(gen + 1);
  return Word(static_cast<std::size_t>(std::labs(exponent)), letter);
}

inline Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return free_reduce(out);
}

inline Word commutator(int a, int b) { return concat({power(a, 1), power(b, 1), power(a, -1), power(b, -1)}); }

class Presentation {
 public:
  explicit Presentation(std::vector<std::string> generators) : names_(std::move(generators)) {
    if (names_.empty()) throw InvalidInput("presentation needs at least one generator");
  }

  /// Freely reduces; relators that reduce to the empty word are dropped.
  void add_relator(const Word& w) {
    for (int letter : w) {
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > names_.size())
        throw InvalidInput("relator references an undeclared generator");
    }
    Word reduced = free_reduce(w);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generators() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  /// Runs rendered as `x^2 h^-1`; the empty word renders as `1`.
  std::string format(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      const long run = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
      if (!out.empty()) out += ' ';
      out += names_[static_cast<std::size_t>(std::abs(w[i]) - 1)];
      if (run != 1) out += "^" + std::to_string(run);
      i = j;
    }
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

struct SeifertLeg {
  long order = 1;  // p
  long coeff = 0;  // p'

  friend bool operator==(const SeifertLeg&, const SeifertLeg&) = default;
};

/// S^2(e; (p,p'), (q,q'), (r,r')) describing a Brieskorn homology sphere.
struct SeifertData {
  long e = 0;
  std::array<SeifertLeg, 3> legs;

  /// Determinant of the abelianized relators x^p h^p', y^q h^q', z^r h^r',
  /// x y z h^e: e*pqr - p'qr - pq'r - pqr'. +-1 for a homology sphere.
  mpz_class determinant() const {
    const mpz_class p = legs[0].order, q = legs[1].order, r = legs[2].order;
    return mpz_class(e) * p * q * r - mpz_class(legs[0].coeff) * q * r - p * mpz_class(legs[1].coeff) * r -
           p * q * mpz_class(legs[2].coeff);
  }

  void validate() const {
    for (const auto& leg : legs)
      if (leg.order < 1) throw InvalidInput("Seifert leg orders must be positive");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (std::gcd(legs[i].order, legs[j].order) != 1) throw NotCoprime("Seifert leg orders are not pairwise coprime");
    const mpz_class d = determinant();
    if (d != 1 && d != -1) throw InvalidInput("Seifert data does not describe a homology sphere");
  }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

namespace detail {

// Inverse of a modulo m in [0, m); 0 when m == 1.
inline long mod_inverse(long a, long m) {
  if (m == 1) return 0;
  mpz_class out;
  const mpz_class aa = ((a % m) + m) % m;
  const mpz_class mm = m;
  if (mpz_invert(out.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw NotCoprime(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return out.get_si();
}

}  // namespace detail

/// Seifert invariants with 0 <= p' < p etc. and determinant exactly -1:
/// each coefficient inverts the product of the other two orders modulo its
/// own order, so p'qr + pq'r + pqr' = 1 mod pqr and e absorbs the rest.
inline SeifertData seifert_data(long p, long q, long r) {
  if (p < 1 || q < 1 || r < 1) throw InvalidInput("Brieskorn exponents must be positive");
  if (std::gcd(p, q) != 1 || std::gcd(p, r) != 1 || std::gcd(q, r) != 1)
    throw NotCoprime("(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
                     ") is not pairwise coprime");
  SeifertData s;
  s.legs = {SeifertLeg{p, detail::mod_inverse(q * r % p, p)}, SeifertLeg{q, detail::mod_inverse(p * r % q, q)},
            SeifertLeg{r, detail::mod_inverse(p * q % r, r)}};
  const mpz_class legs_sum = -s.determinant();  // e = 0 so far
  const mpz_class pqr = mpz_class(p) * q * r;
  const mpz_class e = (legs_sum - 1) / pqr;
  if (e * pqr != legs_sum - 1) throw std::logic_error("Seifert leg sum not 1 mod pqr");
  s.e = e.get_si();
  s.validate();
  return s;
}

enum Generator : int { kX = 0, kY = 1, kZ = 2, kH = 3 };

/// < x, y, z, h | [x,h], [y,h], [z,h], x^p h^p', y^q h^q', z^r h^r', x y z h^e >.
inline Presentation brieskorn_presentation(const SeifertData& s) {
  s.validate();
  Presentation pres({"x", "y", "z", "h"});
  pres.add_relator(commutator(kX, kH));
  pres.add_relator(commutator(kY, kH));
  pres.add_relator(commutator(kZ, kH));
  for (int leg = 0; leg < 3; ++leg)
    pres.add_relator(concat({power(leg, s.legs[leg].order), power(kH, s.legs[leg].coeff)}));
  pres.add_relator(concat({power(kX, 1), power(kY, 1), power(kZ, 1), power(kH, s.e)}));
  return pres;
}

struct FiberWord {
  int leg = 1;  // 1, 2, 3 for x, y, z
  long a = 0;
  long b = 0;
  Word word;
};

/// Core of the surgery on leg `leg`: g^a h^b with |b p - a p'| = 1, taking
/// the least a >= 0 and preferring b p - a p' = +1.
inline FiberWord fiber_word(const SeifertData& s, int leg) {
  if (leg < 1 || leg > 3) throw InvalidInput("leg must be 1, 2 or 3");
  const auto& [p, pp] = s.legs[static_cast<std::size_t>(leg - 1)];
  for (long a = 0; a <= p; ++a) {
    for (long sign : {1L, -1L}) {
      const long num = a * pp + sign;
      if (num % p == 0) {
        FiberWord f{leg, a, num / p, {}};
        f.word = concat({power(leg - 1, a), power(kH, f.b)});
        return f;
      }
    }
  }
  throw InvalidInput("leg (" + std::to_string(p) + "," + std::to_string(pp) + ") has gcd > 1");
}

/// Right action of each generator on the cosets 0..order-1 (coset 0 is the
/// subgroup itself).
struct CosetTable {
  std::vector<std::vector<std::size_t>> action;
};

struct CosetResult {
  enum class Outcome { Enumerated, Overflow };
  Outcome outcome = Outcome::Overflow;
  std::size_t order = 0;  // index when Enumerated
  std::size_t limit = 0;
  std::optional<CosetTable> table;

  bool enumerated() const noexcept { return outcome == Outcome::Enumerated; }
};

namespace detail {

// HLT coset enumeration with union-find coincidence processing. Columns are
// 2g (generator g) and 2g+1 (its inverse); col ^ 1 is the inverse column.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& pres, std::size_t limit)
      : cols_(2 * pres.generator_count()), limit_(limit) {
    for (const auto& r : pres.relators()) relators_.push_back(to_columns(r));
  }

  CosetResult run(const std::vector<Word>& subgroup) {
    CosetResult result;
    result.limit = limit_;
    new_coset();
    for (const auto& w : subgroup) {
      scan_and_fill(0, to_columns(free_reduce(w)));
      if (overflow_) return result;
    }
    for (std::size_t alpha = 0; alpha < parent_.size(); ++alpha) {
      if (!live(alpha)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(alpha, r);
        if (overflow_) return result;
        if (!live(alpha)) break;
      }
      if (!live(alpha)) continue;
      for (std::size_t col = 0; col < cols_; ++col) {
        if (entry(alpha, col) < 0) {
          define(alpha, col);
          if (overflow_) return result;
        }
      }
    }
    result.outcome = CosetResult::Outcome::Enumerated;
    result.table = compact();
    result.order = result.table->action.empty() ? 1 : result.table->action.front().size();
    return result;
  }

 private:
  std::vector<std::size_t> to_columns(const Word& w) const {
    std::vector<std::size_t> out;
    for (int letter : w) {
      const auto g = static_cast<std::size_t>(std::abs(letter) - 1);
      out.push_back(letter > 0 ? 2 * g : 2 * g + 1);
    }
    return out;
  }

  long& entry(std::size_t coset, std::size_t col) { return table_[coset * cols_ + col]; }

  bool live(std::size_t c) const { return parent_[c] == c; }

  std::size_t find(std::size_t c) {
    std::size_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::size_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  std::size_t new_coset() {
    const std::size_t c = parent_.size();
    parent_.push_back(c);
    table_.insert(table_.end(), cols_, -1);
    return c;
  }

  long define(std::size_t c, std::size_t col) {
    if (parent_.size() >= limit_) {
      overflow_ = true;
      return -1;
    }
    const std::size_t b = new_coset();
    entry(c, col) = static_cast<long>(b);
    entry(b, col ^ 1U) = static_cast<long>(c);
    return static_cast<long>(b);
  }

  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(std::size_t a, std::size_t b) {
    merge(a, b);
    while (!queue_.empty()) {
      const std::size_t dead = queue_.front();
      queue_.pop_front();
      for (std::size_t col = 0; col < cols_; ++col) {
        const long target = entry(dead, col);
        if (target < 0) continue;
        const auto d = static_cast<std::size_t>(target);
        entry(d, col ^ 1U) = -1;
        const std::size_t mu = find(dead);
        const std::size_t nu = find(d);
        if (entry(mu, col) >= 0) {
          merge(nu, static_cast<std::size_t>(entry(mu, col)));
        } else if (entry(nu, col ^ 1U) >= 0) {
          merge(mu, static_cast<std::size_t>(entry(nu, col ^ 1U)));
        } else {
          entry(mu, col) = static_cast<long>(nu);
          entry(nu, col ^ 1U) = static_cast<long>(mu);
        }
      }
    }
  }

  // Traces w from both ends at `start`, defining cosets until it closes.
  void scan_and_fill(std::size_t start, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = start;
    std::size_t b = start;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && entry(f, w[i]) >= 0) f = static_cast<std::size_t>(entry(f, w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, w[j - 1] ^ 1U) >= 0) b = static_cast<std::size_t>(entry(b, w[--j] ^ 1U));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = static_cast<long>(b);
        entry(b, w[i] ^ 1U) = static_cast<long>(f);
        return;
      }
      if (define(f, w[i]) < 0) return;
    }
  }

  CosetTable compact() {
    std::vector<long> index(parent_.size(), -1);
    std::size_t count = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(c)) index[c] = static_cast<long>(count++);
    CosetTable t;
    t.action.assign(cols_ / 2, std::vector<std::size_t>(count));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t g = 0; g < cols_ / 2; ++g) {
        const long target = entry(c, 2 * g);
        if (target < 0) throw std::logic_error("coset table closed with an undefined entry");
        t.action[g][static_cast<std::size_t>(index[c])] =
            static_cast<std::size_t>(index[find(static_cast<std::size_t>(target))]);
      }
    }
    return t;
  }

  std::size_t cols_;
  std::size_t limit_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<long> table_;
  std::vector<std::size_t> parent_;
  std::deque<std::size_t> queue_;
  bool overflow_ = false;
};

}  // namespace detail

inline constexpr std::size_t kDefaultCosetLimit = 100'000;

/// Index of the subgroup generated by `subgroup` (group order when empty),
/// or Overflow once more than `limit` cosets would be defined.
inline CosetResult todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup = {},
                                std::size_t limit = kDefaultCosetLimit) {
  if (limit < 1) throw InvalidInput("coset limit must be positive");
  return detail::CosetEnumerator(pres, limit).run(subgroup);
}

enum class NormalGeneration { Yes, No, Indeterminate };

inline const char* to_string(NormalGeneration g) {
  switch (g) {
    case NormalGeneration::Yes: return "true";
    case NormalGeneration::No: return "false";
    case NormalGeneration::Indeterminate: return "indeterminate";
  }
  return "?";
}

/// pi_1 of the Brieskorn sphere with the chosen singular fibre adjoined as a relator.
inline Presentation fiber_quotient(const SeifertData& s, int leg) {
  Presentation pres = brieskorn_presentation(s);
  pres.add_relator(fiber_word(s, leg).word);
  return pres;
}

inline NormalGeneration normal_generation_check(long p, long q, long r, int leg,
                                                std::size_t limit = kDefaultCosetLimit) {
  const SeifertData s = seifert_data(p, q, r);
  const CosetResult res = todd_coxeter(fiber_quotient(s, leg), {}, limit);
  if (!res.enumerated()) return NormalGeneration::Indeterminate;
  return res.order == 1 ? NormalGeneration::Yes : NormalGeneration::No;
}

/// Exponent-sum matrix: one row per relator, one column per generator.
inline std::vector<std::vector<mpz_class>> exponent_matrix(const Presentation& pres) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : pres.relators()) {
    std::vector<mpz_class> row(pres.generator_count(), 0);
    for (int letter : r) row[static_cast<std::size_t>(std::abs(letter) - 1)] += letter > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  return m;
}

/// Smith normal form diagonal (nonnegative, each dividing the next).
inline std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::vector<mpz_class> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return diag;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const mpz_class q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const mpz_class q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

/// Invariant factors of the abelianization other than 1; a 0 stands for a
/// free Z summand. Empty iff the abelianization is trivial.
inline std::vector<mpz_class> abelian_invariants(const Presentation& pres) {
  const auto diag = smith_diagonal(exponent_matrix(pres));
  std::vector<mpz_class> out;
  for (const auto& d : diag)
    if (d != 1) out.push_back(d);
  for (std::size_t k = diag.size(); k < pres.generator_count(); ++k) out.push_back(0);
  return out;
}

}  // namespace spineless
