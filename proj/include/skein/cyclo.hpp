#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "skein/level.hpp"

namespace skein {

/// Q(A) for A a primitive 2p-th root of unity, presented as Q[x]/Phi_{2p}(x).
/// Holds the cyclotomic polynomial and the canonical coordinates of every
/// power A^k, 0 <= k < 2p, which is all multiplication and the Galois action
/// need. Instances are immutable; obtain shared ones via `cyclotomic_field`.
class CyclotomicField {
 public:
  explicit CyclotomicField(int p);

  int p() const noexcept { return p_; }
  int order() const noexcept { return 2 * p_; }
  int degree() const noexcept { return static_cast<int>(modulus_.size()) - 1; }

  /// Phi_{2p}, coefficients from x^0 upward; monic.
  const std::vector<mpz_class>& modulus() const noexcept { return modulus_; }

  /// Canonical coordinates of A^k for any integer k.
  const std::vector<mpz_class>& power(long k) const;

 private:
  int p_;
  std::vector<mpz_class> modulus_;
  std::vector<std::vector<mpz_class>> powers_;
};

std::shared_ptr<const CyclotomicField> cyclotomic_field(int p);

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
std::vector<mpz_class> cyclotomic_polynomial(int n);

/// An exact element of Q(A), always stored in reduced canonical form, so
/// equality is coefficient equality.
class CycloNum {
 public:
  explicit CycloNum(std::shared_ptr<const CyclotomicField> field);
  CycloNum(std::shared_ptr<const CyclotomicField> field, std::vector<mpq_class> coeffs);

  static CycloNum zero(int p);
  static CycloNum one(int p);
  static CycloNum rational(int p, const mpq_class& value);
  /// A^k.
  static CycloNum root_power(int p, long k);

  int p() const noexcept { return field_->p(); }
  const CyclotomicField& field() const noexcept { return *field_; }
  const std::shared_ptr<const CyclotomicField>& field_ptr() const noexcept { return field_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator/=(const CycloNum& rhs);
  CycloNum& operator*=(const mpq_class& rhs);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend CycloNum operator*(CycloNum a, const mpq_class& b) { return a *= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  /// Throws division-by-zero-in-field for zero.
  CycloNum inverse() const;
  CycloNum pow(long e) const;

  /// Image under the field automorphism A -> A^t, gcd(t, 2p) = 1.
  CycloNum galois(long t) const;
  /// Complex conjugation A -> A^{-1}.
  CycloNum conj() const { return galois(-1); }
  /// Fixed by conjugation, i.e. real under every embedding.
  bool is_real() const { return *this == conj(); }

  /// Human-readable canonical form, e.g. "1 - A^2 + 1/2*A^3".
  std::string to_string() const;

 private:
  void require_same_field(const CycloNum& other) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<mpq_class> coeffs_;
};

/// [m] = (A^{2m} - A^{-2m}) / (A^2 - A^{-2}).
CycloNum quantum_integer(const Level& level, int m);
/// [m]! = [1][2]...[m], [0]! = 1.
CycloNum quantum_factorial(const Level& level, int m);

/// Memoized [m] and [m]! for 0 <= m <= max_m at one level.
class QuantumTable {
 public:
  QuantumTable(const Level& level, int max_m);

  int max_m() const noexcept { return static_cast<int>(integers_.size()) - 1; }
  const CycloNum& integer(int m) const;
  const CycloNum& factorial(int m) const;

 private:
  std::vector<CycloNum> integers_;
  std::vector<CycloNum> factorials_;
};

/// Selects the complex embedding A -> exp(i*pi*ell/p).
class RootSelector {
 public:
  RootSelector(int p, int ell);

  /// The embedding in which the Hermitian form is positive definite:
  /// A = (-1)^((p-1)/2) exp((p+1) pi i / (2p)) for odd p, A = exp(pi i / p)
  /// for even p.
  static RootSelector unitary(int p);
  /// All admissible ell in ascending order.
  static std::vector<RootSelector> all(int p);

  int p() const noexcept { return p_; }
  int ell() const noexcept { return ell_; }

 private:
  int p_;
  int ell_;
};

/// Rigorous sign of a real element of Q(A) under an embedding.
///
/// Exact zero is detected symbolically. Otherwise the value is enclosed by
/// MPFR intervals whose precision doubles, starting at `start_precision`
/// bits, until the enclosure excludes zero.
class RealEmbedding {
 public:
  static constexpr long kDefaultPrecision = 64;
  static constexpr long kMaxPrecision = 1L << 16;

  explicit RealEmbedding(RootSelector root, long start_precision = kDefaultPrecision);

  const RootSelector& root() const noexcept { return root_; }

  /// +1, -1, or 0 (only for exact zero). Throws not-real for inputs not
  /// fixed by conjugation, precision-exhausted if the cap is hit.
  int sign(const CycloNum& x) const;
  /// Midpoint of the starting enclosure; for display only.
  double approximate(const CycloNum& x) const;

 private:
  struct Cosines;
  RootSelector root_;
  long start_precision_;
  std::shared_ptr<const Cosines> cosines_;
};

int sign_under_embedding(const CycloNum& x, const RootSelector& root,
                         long start_precision = RealEmbedding::kDefaultPrecision);

}  // namespace skein
