#pragma once

#include <cstddef>
#include <vector>

#include "spineless/dcore.hpp"
#include "spineless/errors.hpp"
#include "spineless/knots.hpp"
#include "spineless/rational.hpp"

namespace spineless {

/// d(L(n,1), s_i) = ((2i - n)^2 - n) / (4n).
inline Rational lens_term(long n, long i) {
  const long t = 2 * i - n;
  return Rational(t * t - n, 4 * n);
}

inline long niwu_max(const VSequence& v, long n, long i) {
  const long a = v.at(static_cast<std::size_t>(i));
  const long b = v.at(static_cast<std::size_t>(n - i));
  return a > b ? a : b;
}

/// d-invariants of n-surgery on a knot in S^3 with local h-invariants v:
///   d(S^3_n(K), s_i) = lens_term(n, i) - 2 max(V_i, V_{n-i}),  i = 0..n-1.
inline DProfile niwu_profile(const VSequence& v, long n) {
  if (n < 1) throw InvalidInput("surgery coefficient must be positive (use mirror for negative)");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(lens_term(n, i) - Rational(2 * niwu_max(v, n, i)));
  return DProfile(std::move(out));
}

/// Inputs for the two-sided bound on surgery along a knot in a homology
/// sphere Y with d(Y) = dY and U-torsion exponent NY.
struct SurgeryBoundInput {
  Rational dY;
  long NY = 0;
  VSequence v;
  long n = 1;
  long i = 0;

  void validate() const {
    if (NY < 0) throw InvalidInput("N_Y must be nonnegative");
    if (n < 1) throw InvalidInput("surgery coefficient must be positive");
    if (i < 0 || i >= n) throw InvalidInput("spin^c index out of range");
  }
};

/// candidate - dY - lens_term(n, i) + 2 max(V_i, V_{n-i}). The bound holds iff
/// this lies in [-2 NY, 0].
inline Rational niwu_deficit(const SurgeryBoundInput& in, const Rational& candidate) {
  in.validate();
  return candidate - in.dY - lens_term(in.n, in.i) + Rational(2 * niwu_max(in.v, in.n, in.i));
}

inline bool niwu_bound_check(const SurgeryBoundInput& in, const Rational& candidate) {
  const Rational deficit = niwu_deficit(in, candidate);
  return Rational(-2 * in.NY) <= deficit && deficit <= Rational(0);
}

}  // namespace spineless
