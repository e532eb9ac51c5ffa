#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "spineless/errors.hpp"

namespace spineless {

/// The local h-invariants V_0, V_1, ... of a knot in S^3.
///
/// Nonnegative, non-increasing, dropping by at most one per step, and zero
/// beyond the stored prefix. Storage is trimmed to the last nonzero entry
/// followed by a single zero.
class VSequence {
 public:
  /// Validates and trims. Throws MonotonicityViolation on a rise or a drop
  /// larger than one (including the implicit drop to zero after the last
  /// stored entry).
  static VSequence from_values(std::span<const long> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] < 0)
        throw InvalidInput("V_" + std::to_string(i) + " is negative (" + std::to_string(values[i]) + ")");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      const long here = values[i];
      const long next = i + 1 < values.size() ? values[i + 1] : 0;
      if (next > here)
        throw MonotonicityViolation(i, "V_" + std::to_string(i + 1) + " = " + std::to_string(next) +
                                           " exceeds V_" + std::to_string(i) + " = " + std::to_string(here));
      if (next < here - 1)
        throw MonotonicityViolation(i, "V drops by more than 1 between index " + std::to_string(i) +
                                           " and " + std::to_string(i + 1));
    }
    std::size_t keep = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != 0) keep = i + 1;
    VSequence v;
    v.values_.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(keep));
    v.values_.push_back(0);
    return v;
  }

  static VSequence from_values(std::initializer_list<long> values) {
    const std::vector<long> copy(values);
    return from_values(std::span<const long>(copy));
  }

  /// Zero-extended lookup.
  long at(std::size_t i) const noexcept { return i < values_.size() ? values_[i] : 0; }

  std::span<const long> stored() const noexcept { return values_; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const VSequence&, const VSequence&) = default;

 private:
  std::vector<long> values_{0};
};

inline VSequence v_from_values(std::span<const long> values) { return VSequence::from_values(values); }

inline long v_at(const VSequence& v, std::size_t i) noexcept { return v.at(i); }

inline VSequence v_unknot() { return VSequence{}; }

/// Right-handed trefoil: (1, 0, 0, ...).
inline VSequence v_trefoil() { return VSequence::from_values({1, 0}); }

namespace experimental {

/// Candidate closed form for T(2, 2g+1): V_i = ceil(max(g - i, 0) / 2).
/// Agrees with v_trefoil() at g = 1; not used by any verdict.
inline VSequence v_torus_two_strand(long genus) {
  if (genus < 0) throw InvalidInput("genus must be nonnegative");
  std::vector<long> values;
  for (long i = 0; i <= genus; ++i) values.push_back((genus - i + 1) / 2);
  return VSequence::from_values(std::span<const long>(values));
}

}  // namespace experimental

}  // namespace spineless
