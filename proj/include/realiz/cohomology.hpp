#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>

#include "realiz/partition.hpp"

namespace realiz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Basis order used for storage and printing: by weight, then lexicographically
/// decreasing within a weight.
struct ClassOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b < a;
  }
};

/// σ_λ is indexed by codimension (CodimBasis) or, writing σ^λ := σ_{λ^c},
/// by dimension (DimBasis). Converting is a coefficient-preserving reindex.
enum class BasisConvention { CodimBasis, DimBasis };

/// Sparse integer combination Σ a_λ σ_λ in H*(G(k,n)). Zero coefficients are
/// never stored; the zero class has no terms.
class CohomologyClass {
 public:
  using Terms = std::map<Partition, Integer, ClassOrder>;

  explicit CohomologyClass(GrassmannianSpec space) : space_(space) {}

  static CohomologyClass unit(GrassmannianSpec space);
  static CohomologyClass schubert(GrassmannianSpec space, const Partition& lambda,
                                  const Integer& coeff = 1);
  /// a·σ^λ = a·σ_{λ^c}.
  static CohomologyClass dual_schubert(GrassmannianSpec space, const Partition& lambda,
                                       const Integer& coeff = 1);

  const GrassmannianSpec& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const Partition& lambda) const;
  /// Coefficient of σ^λ.
  Integer dual_coefficient(const Partition& lambda) const;

  /// Adds coeff·σ_λ. Throws InvalidPartition when λ leaves the box.
  void add(const Partition& lambda, const Integer& coeff);

  bool is_homogeneous() const noexcept;
  /// Common codimension of all terms; nullopt for zero or mixed classes.
  std::optional<int> codimension() const;
  std::optional<int> dimension() const;

  CohomologyClass& operator+=(const CohomologyClass& other);
  CohomologyClass& operator-=(const CohomologyClass& other);
  CohomologyClass& operator*=(const Integer& scalar);

  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
  friend CohomologyClass operator*(const Integer& s, CohomologyClass a) { return a *= s; }
  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

 private:
  GrassmannianSpec space_;
  Terms terms_;
};

/// c·σ_p by the Pieri rule (horizontal strips of size p inside the box).
CohomologyClass pieri_multiply(const CohomologyClass& c, int p);

/// Littlewood–Richardson coefficient c^ν_{λμ}, counted as LR skew tableaux of
/// shape ν/λ and content μ. Results are memoized process-wide.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Product in H*(G(k,n)); terms outside the box are dropped.
/// Throws SpaceMismatch.
CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b);

/// Same contract as multiply, computed independently: one factor is expanded
/// through the Giambelli determinant in row classes σ_p and multiplied out
/// with Pieri only.
CohomologyClass oracle_multiply(const CohomologyClass& a, const CohomologyClass& b);

/// Coefficient of the point class σ_{(n-k)^k}.
Integer integrate(const CohomologyClass& c);

/// ∫ a·b. Throws SpaceMismatch.
Integer pair(const CohomologyClass& a, const CohomologyClass& b);

/// Image in G(n-k,n) under the duality isomorphism σ_λ ↦ σ_{λ^T}.
CohomologyClass transpose_class(const CohomologyClass& c);

/// Reindexes every key by its complement (σ_λ ↦ σ_{λ^c}); the bridge between
/// the two basis conventions.
CohomologyClass complement_class(const CohomologyClass& c);

/// σ_1^e.
CohomologyClass hyperplane_power(const GrassmannianSpec& g, int e);

}  // namespace realiz
