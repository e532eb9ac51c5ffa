#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "spineless/dcore.hpp"
#include "spineless/errors.hpp"
#include "spineless/rational.hpp"
#include "spineless/surgery.hpp"

namespace spineless {

inline DProfile lens_n1_profile(long n) {
  if (n < 1) throw InvalidInput("lens space order must be positive");
  std::vector<Rational> out;
  for (long i = 0; i < n; ++i) out.push_back(lens_term(n, i));
  return DProfile(std::move(out));
}

enum class QmHomology { Z2xZ2, Z4 };

inline const char* to_string(QmHomology h) { return h == QmHomology::Z2xZ2 ? "Z/2+Z/2" : "Z/4"; }

/// Circle bundle over RP^2 with Euler number m.
struct QmDescriptor {
  long m = 0;

  QmHomology h1() const { return m % 2 == 0 ? QmHomology::Z2xZ2 : QmHomology::Z4; }
};

/// The four d-invariants {(m+2)/4, (m-2)/4, 0, 0} of Q_m.
///
/// Ids: "a" carries (m+2)/4, "b" carries (m-2)/4, "c" and "d" carry 0.
/// For m odd the nonzero values sit on the two self-conjugate structures
/// (forced by the order-4 residues) and c <-> d are conjugate. For m even all
/// four are self-conjugate. No cyclic labelling is attached.
inline RawProfile qm_profile(long m) {
  std::vector<RawEntry> entries{
      {"a", Rational(m + 2, 4)},
      {"b", Rational(m - 2, 4)},
      {"c", Rational(0)},
      {"d", Rational(0)},
  };
  std::vector<std::size_t> conj{0, 1, 2, 3};
  if (QmDescriptor{m}.h1() == QmHomology::Z4) {
    conj[2] = 3;
    conj[3] = 2;
  }
  return RawProfile(std::move(entries), std::move(conj));
}

/// Boundary M_p = Q_{-4p-3} # (-Y_p); dYp stands in for d(Y_p).
struct MpDescriptor {
  long p = 0;
  long dYp = 0;
};

/// Labelled profile of M_p. p odd:
///   (-dYp - (4p+1)/4, -dYp, -dYp - (4p+5)/4, -dYp);
/// p even swaps the roles of s_0 and s_2.
inline DProfile mp_profile(const MpDescriptor& d) {
  if (d.dYp % 2 != 0) throw InvalidInput("d(Y_p) must be even, got " + std::to_string(d.dYp));
  const Rational base(-d.dYp);
  const Rational a = base - Rational(4 * d.p + 1, 4);
  const Rational b = base - Rational(4 * d.p + 5, 4);
  if (d.p % 2 != 0) return DProfile({a, base, b, base});
  return DProfile({b, base, a, base});
}

struct QkmStructure {
  long order = 0;
  bool cyclic = false;

  friend bool operator==(const QkmStructure&, const QkmStructure&) = default;
};

/// |H^2(Q_{k,m})| = k^2, cyclic iff gcd(k, m) = 1.
inline QkmStructure qkm_structure(long k, long m) {
  if (k < 2) throw InvalidInput("Q_{k,m} requires k >= 2");
  return {k * k, std::gcd(k, m) == 1};
}

/// d-invariants of Q_{k,m}: only k = 2 (= Q_m) has a closed form.
inline RawProfile qkm_profile(long k, long m) {
  if (k < 2) throw InvalidInput("Q_{k,m} requires k >= 2");
  if (k != 2) throw Unsupported("no closed form for d-invariants of Q_{k,m} with k > 2");
  return qm_profile(m);
}

}  // namespace spineless
