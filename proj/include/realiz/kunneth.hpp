#pragma once

#include <map>
#include <string>
#include <vector>

#include "realiz/cohomology.hpp"

namespace realiz {

/// Ordered product G(k_1,n_1) x ... x G(k_p,n_p), p >= 1.
class ProductSpec {
 public:
  /// Throws InvalidSpace when `factors` is empty.
  explicit ProductSpec(std::vector<GrassmannianSpec> factors);
  ProductSpec(std::initializer_list<GrassmannianSpec> factors)
      : ProductSpec(std::vector<GrassmannianSpec>(factors)) {}

  const std::vector<GrassmannianSpec>& factors() const noexcept { return factors_; }
  int size() const noexcept { return static_cast<int>(factors_.size()); }
  const GrassmannianSpec& operator[](int i) const { return factors_[i]; }
  int dim() const noexcept;
  std::vector<Partition> top_key() const;
  bool valid_key(const std::vector<Partition>& key) const;
  std::string str() const;

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;

 private:
  std::vector<GrassmannianSpec> factors_;
};

using ProductKey = std::vector<Partition>;

int key_weight(const ProductKey& key);

/// Tuples by total weight, then slot by slot in ClassOrder.
struct ProductKeyOrder {
  bool operator()(const ProductKey& a, const ProductKey& b) const;
};

/// Sparse combination of Künneth basis tuples ⊗_i σ_{λ^i}.
class ProductClass {
 public:
  using Terms = std::map<ProductKey, Integer, ProductKeyOrder>;

  explicit ProductClass(ProductSpec spec) : spec_(std::move(spec)) {}

  static ProductClass unit(const ProductSpec& spec);
  static ProductClass basis(const ProductSpec& spec, const ProductKey& key, const Integer& coeff = 1);
  /// σ_λ placed in slot `slot`, unit elsewhere.
  static ProductClass slot_class(const ProductSpec& spec, int slot, const Partition& lambda);

  const ProductSpec& spec() const noexcept { return spec_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const ProductKey& key) const;

  /// Throws InvalidPartition if a slot leaves its box, SpecMismatch on a
  /// wrong tuple length.
  void add(const ProductKey& key, const Integer& coeff);

  bool is_homogeneous() const noexcept;
  std::optional<int> codimension() const;
  std::optional<int> dimension() const;

  ProductClass& operator+=(const ProductClass& other);
  ProductClass& operator-=(const ProductClass& other);
  ProductClass& operator*=(const Integer& scalar);

  friend ProductClass operator+(ProductClass a, const ProductClass& b) { return a += b; }
  friend ProductClass operator-(ProductClass a, const ProductClass& b) { return a -= b; }
  friend ProductClass operator*(const Integer& s, ProductClass a) { return a *= s; }
  friend bool operator==(const ProductClass& a, const ProductClass& b) {
    return a.spec_ == b.spec_ && a.terms_ == b.terms_;
  }

 private:
  ProductSpec spec_;
  Terms terms_;
};

/// Slotwise product. Throws SpecMismatch.
ProductClass kunneth_multiply(const ProductClass& a, const ProductClass& b);

/// Coefficient of the tuple of top classes.
Integer integrate_product(const ProductClass& c);

/// Π_u H_u^{β_u}. Throws SpecMismatch on a wrong exponent count.
ProductClass hyperplane_monomial(const ProductSpec& spec, const std::vector<int>& exponents);

/// The single-factor class viewed as a product class over a one-factor spec.
ProductClass as_product(const CohomologyClass& c);

}  // namespace realiz
