#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "spineless/dcore.hpp"
#include "spineless/errors.hpp"
#include "spineless/rational.hpp"

namespace spineless {

/// Admissible values of d(Y, s_i) - d(Y, s_{i+1}) when a generator of H_2 of
/// a filling with square n is carried by a PL sphere.
struct AllowedDiffs {
  long n = 0;
  long i = 0;
  std::vector<Rational> options;

  bool contains(const Rational& x) const {
    return std::find(options.begin(), options.end(), x) != options.end();
  }
};

/// Three cases partitioning {0..n-1}:
///   2i <= n-2        : (n-2i-1)/n or (-n-2i-1)/n
///   n odd, 2i = n-1  : 0
///   2i >= n          : (n-2i-1)/n or (3n-2i-1)/n
inline AllowedDiffs allowed_differences(long n, long i) {
  if (n <= 1) throw Inapplicable("allowed differences need n > 1, got n=" + std::to_string(n));
  if (i < 0 || i >= n) throw InvalidInput("index " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
  AllowedDiffs out{n, i, {}};
  const long base = n - 2 * i - 1;
  if (2 * i <= n - 2) {
    out.options = {Rational(base, n), Rational(-n - 2 * i - 1, n)};
  } else if (2 * i == n - 1) {
    out.options = {Rational(0)};
  } else {
    out.options = {Rational(base, n), Rational(3 * n - 2 * i - 1, n)};
  }
  return out;
}

struct LabelCheck {
  bool pass = false;
  std::vector<long> violations;  // indices i whose difference is not allowed
};

/// Tests every i in Z/n, pairing s_{n-1} with s_0.
inline LabelCheck check_labeled(const DProfile& p) {
  const long n = p.order();
  if (n <= 1) throw Inapplicable("obstruction is not defined for n <= 1");
  LabelCheck out;
  Rational total;
  for (long i = 0; i < n; ++i) {
    const Rational diff = p[i] - p[i + 1];
    total += diff;
    if (!allowed_differences(n, i).contains(diff)) out.violations.push_back(i);
  }
  assert(total == Rational(0));
  out.pass = out.violations.empty();
  return out;
}

enum class Sign { PositiveDefinite, NegativeDefinite };

inline const char* to_string(Sign s) {
  return s == Sign::PositiveDefinite ? "positive-definite" : "negative-definite";
}

namespace detail {

inline Rational signed_value(const Rational& v, Sign s) { return s == Sign::PositiveDefinite ? v : -v; }

inline std::vector<long> units_mod(long n) {
  std::vector<long> out;
  for (long g = 1; g < n; ++g)
    if (std::gcd(g, n) == 1) out.push_back(g);
  if (n == 1) out.push_back(0);
  return out;
}

class LabelingSearch {
 public:
  LabelingSearch(const RawProfile& raw, Sign sign)
      : raw_(raw), sign_(sign), n_(raw.order()), residues_(residue_table(raw.order())) {}

  std::set<std::vector<Rational>> run() {
    if (raw_.is_cyclic()) {
      run_affine();
    } else {
      assignment_.assign(static_cast<std::size_t>(n_), kUnset);
      used_.assign(static_cast<std::size_t>(n_), false);
      extend(0);
    }
    return found_;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool residue_ok(long i, std::size_t id) const {
    return mod2(signed_value(raw_.entries()[id].value, sign_)) == residues_[static_cast<std::size_t>(i)];
  }

  void record() {
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n_));
    for (std::size_t id : assignment_) values.push_back(signed_value(raw_.entries()[id].value, sign_));
    found_.insert(std::move(values));
  }

  // l(i) = id labelled r0 + i*g.
  void run_affine() {
    const auto& labels = *raw_.cyclic_labels();
    std::vector<std::size_t> id_of(static_cast<std::size_t>(n_));
    for (std::size_t k = 0; k < labels.size(); ++k) id_of[static_cast<std::size_t>(labels[k])] = k;
    for (long r0 = 0; r0 < n_; ++r0) {
      for (long g : units_mod(n_)) {
        assignment_.assign(static_cast<std::size_t>(n_), kUnset);
        bool ok = true;
        for (long i = 0; i < n_ && ok; ++i) {
          const std::size_t id = id_of[static_cast<std::size_t>((r0 + i * g) % n_)];
          assignment_[static_cast<std::size_t>(i)] = id;
          ok = residue_ok(i, id);
        }
        for (long i = 0; i < n_ && ok; ++i) {
          const auto id = assignment_[static_cast<std::size_t>(i)];
          ok = raw_.conj()[id] == assignment_[static_cast<std::size_t>((n_ - i) % n_)];
        }
        if (ok) record();
      }
    }
  }

  // Assigns i and -i together for i = 0..floor(n/2).
  void extend(long i) {
    if (2 * i > n_) {
      record();
      return;
    }
    const long partner = (n_ - i) % n_;
    const auto& conj = raw_.conj();
    for (std::size_t id = 0; id < conj.size(); ++id) {
      if (used_[id]) continue;
      const bool self_conjugate = conj[id] == id;
      if ((partner == i) != self_conjugate) continue;
      if (!residue_ok(i, id)) continue;
      used_[id] = used_[conj[id]] = true;
      assignment_[static_cast<std::size_t>(i)] = id;
      assignment_[static_cast<std::size_t>(partner)] = conj[id];
      extend(i + 1);
      used_[id] = used_[conj[id]] = false;
    }
  }

  const RawProfile& raw_;
  Sign sign_;
  long n_;
  std::vector<Rational> residues_;
  std::vector<std::size_t> assignment_;
  std::vector<bool> used_;
  std::set<std::vector<Rational>> found_;
};

}  // namespace detail

/// All conjugation-compatible labellings s_i -> id whose (sign-adjusted)
/// values meet the mod-2 residues for order n. Cyclic raw profiles only admit
/// affine labellings i -> r0 + i*g. Returned profiles are sign-adjusted,
/// deduplicated and sorted lexicographically; empty means the branch is
/// excluded by congruences alone.
inline std::vector<DProfile> enumerate_labelings(const RawProfile& raw, Sign sign) {
  std::vector<DProfile> out;
  for (auto& values : detail::LabelingSearch(raw, sign).run()) out.emplace_back(values);
  return out;
}

struct LabelingResult {
  DProfile profile;
  LabelCheck check;
};

struct BranchResult {
  Sign sign = Sign::PositiveDefinite;
  std::vector<LabelingResult> labelings;

  bool congruence_excluded() const noexcept { return labelings.empty(); }
  bool any_pass() const {
    return std::any_of(labelings.begin(), labelings.end(), [](const auto& l) { return l.check.pass; });
  }
};

enum class Overall { Obstructed, NotObstructed, Inapplicable };

inline const char* to_string(Overall o) {
  switch (o) {
    case Overall::Obstructed: return "Obstructed";
    case Overall::NotObstructed: return "NotObstructed";
    case Overall::Inapplicable: return "Inapplicable";
  }
  return "?";
}

struct SpineVerdict {
  long n = 0;
  std::vector<BranchResult> branches;  // positive branch first
  Overall overall = Overall::Inapplicable;
};

/// Obstructed certifies that no smooth compact oriented X with the homology
/// of S^2 and this boundary has a generator of H_2 carried by a PL sphere
/// (in particular X has no S^2 spine), for either sign of the form.
inline SpineVerdict verdict(const RawProfile& raw) {
  SpineVerdict out;
  out.n = raw.order();
  if (out.n <= 1) return out;
  bool any = false;
  for (Sign sign : {Sign::PositiveDefinite, Sign::NegativeDefinite}) {
    BranchResult branch{sign, {}};
    for (auto& p : enumerate_labelings(raw, sign)) {
      LabelCheck check = check_labeled(p);
      branch.labelings.push_back({std::move(p), std::move(check)});
    }
    any = any || branch.any_pass();
    out.branches.push_back(std::move(branch));
  }
  out.overall = any ? Overall::NotObstructed : Overall::Obstructed;
  return out;
}

inline SpineVerdict verdict(const DProfile& p) { return verdict(RawProfile::from_labeled(p)); }

}  // namespace spineless
