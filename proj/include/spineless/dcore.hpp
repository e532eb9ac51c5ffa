#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spineless/errors.hpp"
#include "spineless/rational.hpp"

namespace spineless {

/// Element of Z/n labelling a spin^c structure on a boundary with H_1 = Z/n.
class SpinIndex {
 public:
  SpinIndex(long i, long n) : n_(n) {
    if (n < 1) throw InvalidInput("spin^c index order must be positive");
    i_ = ((i % n) + n) % n;
  }

  long value() const noexcept { return i_; }
  long order() const noexcept { return n_; }

  /// s_i -> s_{-i}.
  SpinIndex conjugate() const { return SpinIndex(n_ - i_, n_); }
  SpinIndex next() const { return SpinIndex(i_ + 1, n_); }

  friend bool operator==(const SpinIndex&, const SpinIndex&) = default;

 private:
  long n_;
  long i_ = 0;
};

/// Residue of d(Y, s_i) modulo 2 forced by the homology of a filling with
/// square n > 0: ((2i - n)^2 - n) / (4n), canonicalized into [0, 2).
inline Rational residue(long n, long i) {
  if (n < 1) throw InvalidInput("residue_table requires n >= 1");
  const long t = 2 * (((i % n) + n) % n) - n;
  return mod2(Rational(t * t - n, 4 * n));
}

inline std::vector<Rational> residue_table(long n) {
  if (n < 1) throw InvalidInput("residue_table requires n >= 1");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(residue(n, i));
  return out;
}

/// The labelled family {d(Y, s_i)}_{i in Z/n}.
///
/// Construction rejects any family that is not conjugation symmetric
/// (values(i) == values(-i)); nothing is repaired silently.
class DProfile {
 public:
  explicit DProfile(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidInput("profile order must be positive");
    const std::size_t n = values_.size();
    for (std::size_t i = 1; i < n; ++i) {
      if (values_[i] != values_[n - i])
        throw SymmetryViolation("profile not conjugation symmetric at i=" + std::to_string(i) +
                                ": " + values_[i].str() + " != " + values_[n - i].str());
    }
  }

  long order() const noexcept { return static_cast<long>(values_.size()); }

  /// Value at i read modulo n.
  const Rational& operator[](long i) const {
    const long n = order();
    return values_[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  const Rational& at(const SpinIndex& s) const { return (*this)[s.value()]; }

  std::span<const Rational> values() const noexcept { return values_; }

  std::vector<Rational> sorted_values() const {
    std::vector<Rational> out = values_;
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const DProfile&, const DProfile&) = default;

 private:
  std::vector<Rational> values_;
};

/// d(-Y, s) = -d(Y, s). The index is kept; legitimate because stored
/// profiles are conjugation symmetric.
inline DProfile mirror(const DProfile& p) {
  std::vector<Rational> out;
  out.reserve(p.values().size());
  for (const auto& v : p.values()) out.push_back(-v);
  return DProfile(std::move(out));
}

/// Subtracts an even integer from every value (e.g. removing d of a
/// homology-sphere summand). Odd shifts would break the mod-2 residues.
inline DProfile shift_by_even(const DProfile& p, long e) {
  if (e % 2 != 0) throw InvalidInput("shift_by_even requires an even shift, got " + std::to_string(e));
  std::vector<Rational> out;
  out.reserve(p.values().size());
  for (const auto& v : p.values()) out.push_back(v - Rational(e));
  return DProfile(std::move(out));
}

struct RawEntry {
  std::string id;
  Rational value;

  friend bool operator==(const RawEntry&, const RawEntry&) = default;
};

/// Unlabelled d-invariants: entries with opaque ids, a conjugation
/// involution on them, and optionally a Z/n torsor label per id (when the
/// spin^c set is known to be cyclic with a fixed identification).
class RawProfile {
 public:
  RawProfile(std::vector<RawEntry> entries, std::vector<std::size_t> conj,
             std::optional<std::vector<long>> cyclic = std::nullopt)
      : entries_(std::move(entries)), conj_(std::move(conj)), cyclic_(std::move(cyclic)) {
    const std::size_t n = entries_.size();
    if (n == 0) throw InvalidInput("raw profile must have at least one entry");
    if (conj_.size() != n) throw InvalidInput("conjugation map size differs from entry count");
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t k = 0; k < n; ++k) {
      if (!seen.emplace(entries_[k].id, k).second)
        throw InvalidInput("duplicate spin^c id '" + entries_[k].id + "'");
    }
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t c = conj_[k];
      if (c >= n || conj_[c] != k)
        throw InvalidInput("conjugation is not an involution at '" + entries_[k].id + "'");
      if (entries_[c].value != entries_[k].value)
        throw SymmetryViolation("conjugate ids '" + entries_[k].id + "' and '" + entries_[c].id +
                                "' carry different values");
    }
    if (cyclic_) {
      const long order = static_cast<long>(n);
      if (cyclic_->size() != n) throw InvalidInput("cyclic labels must cover every id");
      std::vector<bool> hit(n, false);
      for (long& label : *cyclic_) {
        label = ((label % order) + order) % order;
        if (hit[static_cast<std::size_t>(label)]) throw InvalidInput("cyclic labels are not a bijection onto Z/n");
        hit[static_cast<std::size_t>(label)] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if ((*cyclic_)[conj_[k]] != (order - (*cyclic_)[k]) % order)
          throw InvalidInput("cyclic labels incompatible with conjugation at '" + entries_[k].id + "'");
      }
    }
  }

  /// Wraps a labelled profile: ids "s0".."s{n-1}", cyclic labels i, conj i -> -i.
  static RawProfile from_labeled(const DProfile& p) {
    const long n = p.order();
    std::vector<RawEntry> entries;
    std::vector<std::size_t> conj;
    std::vector<long> labels;
    for (long i = 0; i < n; ++i) {
      entries.push_back({"s" + std::to_string(i), p[i]});
      conj.push_back(static_cast<std::size_t>((n - i) % n));
      labels.push_back(i);
    }
    return RawProfile(std::move(entries), std::move(conj), std::move(labels));
  }

  long order() const noexcept { return static_cast<long>(entries_.size()); }
  const std::vector<RawEntry>& entries() const noexcept { return entries_; }
  const std::vector<std::size_t>& conj() const noexcept { return conj_; }
  const std::optional<std::vector<long>>& cyclic_labels() const noexcept { return cyclic_; }
  bool is_cyclic() const noexcept { return cyclic_.has_value(); }

  std::vector<Rational> sorted_values() const {
    std::vector<Rational> out;
    for (const auto& e : entries_) out.push_back(e.value);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const RawProfile&, const RawProfile&) = default;

 private:
  std::vector<RawEntry> entries_;
  std::vector<std::size_t> conj_;
  std::optional<std::vector<long>> cyclic_;
};

}  // namespace spineless
