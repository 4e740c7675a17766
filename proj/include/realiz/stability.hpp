#pragma once

#include <vector>

#include "realiz/cohomology.hpp"

namespace realiz {

enum class Ring { Z, Q };

/// Whether a class is indexed by codimension r (σ_λ, |λ| = r) or by
/// dimension r (σ^λ, |λ| = r).
struct Convention {
  enum Kind { Codim, Dim };
  Kind kind;
  int r;

  static Convention codim(int r) { return {Codim, r}; }
  static Convention dim(int r) { return {Dim, r}; }
  friend bool operator==(const Convention&, const Convention&) = default;
};

/// Carries the coefficients on Λ(r,k,n) identically to the target, on σ_λ
/// for Codim and on σ^λ for Dim. Throws Unreachable if the target has smaller
/// k or n-k, NotHomogeneous if c is mixed, DegreeMismatch if c does not match conv.
CohomologyClass promote(const CohomologyClass& c, const GrassmannianSpec& target, const Convention& conv);

/// The class of the same subvariety in G(k+t, n+s+t):
/// λ ↦ ((n+s-k)^t, λ + s^k).
CohomologyClass subvariety_reindex(const CohomologyClass& c, int s, int t);

/// Smallest instance with the same realizability set. Over Q: (r,2r) when
/// k >= r and n-k >= r, else (k,k+r) when n-k >= r. Over Z: (r+1,2r+2) when
/// k >= r+1 and n-k >= r+1. Otherwise g itself. The two conventions share the
/// same hypotheses.
GrassmannianSpec canonical_instance(int r, const GrassmannianSpec& g, Ring ring, const Convention& conv);

/// m·σ_λ (or m·σ^λ) with m > 1, labelled in G(r,2r) and G(r+1,2r+2).
struct ClassFamily {
  Partition lambda;
  BasisConvention basis;
  int r;

  /// True iff c = m·σ_λ (resp. m·σ^λ) with m > 1 in G(r,2r) or G(r+1,2r+2).
  bool contains(const CohomologyClass& c) const;
};

/// Classes realizable over Z in G(r+1,2r+2) but not in G(r,2r):
/// {mσ_r, mσ_{1^r}} for Codim, {mσ^r, mσ^{1^r}} for Dim, m > 1.
std::vector<ClassFamily> exceptional_set(int r, Convention::Kind kind = Convention::Codim);

}  // namespace realiz
