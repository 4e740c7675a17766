#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realiz/cohomology.hpp"
#include "realiz/kunneth.hpp"
#include "realiz/lorentzian.hpp"

namespace realiz {

/// Span map Π_i G(k_i, n_i) ⇢ G(k,N), (W_i) ↦ ΣW_i, with Σk_i = k and every
/// factor of corank N-k (W_i ranges over k_i-planes of a fixed n_i-space).
class SpanMapSpec {
 public:
  /// Throws SpecMismatch when the ranks do not add up or a corank differs.
  SpanMapSpec(GrassmannianSpec target, ProductSpec factors);
  /// Factors G(k_i, k_i + N-k) for the composition (k_1,...,k_p) of k.
  static SpanMapSpec from_composition(const GrassmannianSpec& target, const std::vector<int>& ranks);

  const GrassmannianSpec& target() const noexcept { return target_; }
  const ProductSpec& factors() const noexcept { return factors_; }
  std::string str() const;

  friend bool operator==(const SpanMapSpec&, const SpanMapSpec&) = default;

 private:
  GrassmannianSpec target_;
  ProductSpec factors_;
};

/// Coefficient of ⊗σ_{μ_i} in f*ν: ∫_{G(k,N)} ν · Π_i σ_{ρ_i}, ρ_i the
/// complement of μ_i in factor i read as a partition of G(k,N).
/// Throws SpecMismatch, DegreeMismatch.
Integer pullback_coefficient(const CohomologyClass& nu, const SpanMapSpec& span, const ProductKey& basis);

/// f*ν. Throws SpecMismatch, NotHomogeneous.
ProductClass pullback_class(const CohomologyClass& nu, const SpanMapSpec& span);

/// L_uv = ∫ f*ν · ⊗σ_{α_i} · H_u · H_v. Throws DegreeMismatch unless
/// |α| = dim ν - 2, SpecMismatch on a malformed α.
SymMatrix hodge_matrix(const CohomologyClass& nu, const SpanMapSpec& span, const ProductKey& alpha);

struct ObstructionWitness {
  SpanMapSpec span;
  /// ν is examined as subvariety_reindex(ν, s, t) inside span.target().
  int s = 0;
  int t = 0;
  ProductKey alpha;
  SymMatrix matrix;
  SignPattern signs;
  std::string reason = "not weakly Lorentzian";
};

struct SearchBudget {
  int max_factors = 3;
  /// Extra rank t and corank s of the ambient Grassmannian the class is pushed into.
  int max_rank_extension = 2;
  int max_corank_extension = 0;
  /// Multiplier tuples tried per span map.
  long max_alpha = 10'000;
};

/// First (p, t, composition, s, α) in that nesting order whose Hodge matrix
/// is not weakly Lorentzian. Compositions run lexicographically increasing;
/// α runs over degree vectors, then per-factor partitions, both
/// lexicographically decreasing.
/// Returns nullopt for mixed, zero or non-effective classes.
std::optional<ObstructionWitness> search_obstruction(const CohomologyClass& nu, const SearchBudget& budget = {});

}  // namespace realiz
