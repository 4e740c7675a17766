#pragma once

#include <optional>
#include <vector>

#include "realiz/cohomology.hpp"
#include "realiz/kunneth.hpp"

namespace realiz {

/// Parameters of the iterated incidence construction on a target G(k,n):
/// n-k >= i_1 > ... > i_s > 0 and j_1 + ... + j_s < k.
///
/// Block l is G(j_l, a_l - a_{l-1}) with a_l = n-k + j_1+...+j_l - i_l,
/// a_0 = 0, a_{s+1} = n. A block with a_l - a_{l-1} = j_l is a point and is
/// left out of the source product; its partition is empty.
class IteratedSpec {
 public:
  /// Throws InvalidSpace on violated invariants.
  IteratedSpec(GrassmannianSpec target, std::vector<int> i, std::vector<int> j);

  const GrassmannianSpec& target() const noexcept { return target_; }
  int steps() const noexcept { return static_cast<int>(i_.size()); }
  /// i_1..i_s followed by i_{s+1} = 0.
  const std::vector<int>& i() const noexcept { return i_full_; }
  /// j_1..j_{s+1}.
  const std::vector<int>& j() const noexcept { return j_; }
  /// a_0..a_{s+1}.
  const std::vector<int>& a() const noexcept { return a_; }
  /// Factor of each block; nullopt for point blocks.
  const std::vector<std::optional<GrassmannianSpec>>& blocks() const noexcept { return blocks_; }
  const ProductSpec& source() const noexcept { return source_; }
  /// dim(output) - dim(input) for every basis element.
  int dimension_shift() const noexcept;

 private:
  GrassmannianSpec target_;
  std::vector<int> i_;
  std::vector<int> i_full_;
  std::vector<int> j_;
  std::vector<int> a_;
  std::vector<std::optional<GrassmannianSpec>> blocks_;
  ProductSpec source_;
};

/// Basis tuple (λ^1,...,λ^{s+1}) ↦ σ of the concatenation of λ^l + i_l^{j_l}.
/// Throws SpecMismatch if c does not live on spec.source().
CohomologyClass iterated_class_map(const IteratedSpec& spec, const ProductClass& c);

/// Source G(j, n-k+j-i) x G(k-j, k+i-j); σ_λ ⊗ σ_μ ↦ σ_{λ+i^j, μ}.
IteratedSpec bundle_spec(const GrassmannianSpec& g, int i, int j);
CohomologyClass bundle_class_map(const GrassmannianSpec& g, int i, int j, const ProductClass& c);

/// Over P^n x P^n: x^p y^q ↦ σ_{(n+1)^p, n^{n-p}, q} in G(n+1, 2n+2).
/// Throws DegreeMismatch unless c is homogeneous of codimension m.
CohomologyClass cone_class_map(int n, int m, const ProductClass& c);
ProductSpec cone_source(int n);

/// Source Π_i P^{λ_{i-1}-λ_i} (λ_0 = n-k) of the face through σ_λ, skipping
/// point factors. Throws NotStrict unless λ padded to k parts is strictly
/// decreasing, InvalidPartition if λ leaves the box.
ProductSpec face_source(const Partition& lambda, const GrassmannianSpec& g);
/// Π x_i^{e_i} ↦ σ_{λ+e}; `exponents` has one entry per row of λ (k entries).
/// Throws ExponentOutOfRange.
Partition face_monomial(const Partition& lambda, const GrassmannianSpec& g,
                        const std::vector<int>& exponents);
CohomologyClass face_class_map(const Partition& lambda, const GrassmannianSpec& g,
                               const ProductClass& c);

}  // namespace realiz
