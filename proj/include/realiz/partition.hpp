#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace realiz {

/// Largest part a Partition may carry. Defaults to 64.
int part_limit();
void set_part_limit(int limit);

/// Weakly decreasing tuple of nonnegative integers, stored without trailing
/// zeros so that (2,0,0) and (2) compare equal.
class Partition {
 public:
  Partition() = default;
  /// Throws NotAPartition if `parts` is not weakly decreasing and nonnegative,
  /// InvalidPartition if a part exceeds part_limit().
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int weight() const noexcept { return weight_; }

  /// i-th part, 0-based; zero past the stored length.
  int operator[](int i) const noexcept { return i < length() ? parts_[i] : 0; }

  /// Parts padded with zeros to exactly `k` entries (never truncates).
  std::vector<int> padded(int k) const;

  /// Text form `[a,b,c]`; the zero partition prints `[]`.
  std::string str() const;

  bool contains(const Partition& inner) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Parses `[a,b,...]`; whitespace around entries is ignored.
Partition parse_partition(std::string_view text);

/// The Grassmannian G(k,n) of k-planes in an n-dimensional space.
class GrassmannianSpec {
 public:
  /// Throws InvalidSpace unless 1 <= k <= n-1.
  GrassmannianSpec(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  int corank() const noexcept { return n_ - k_; }
  int dim() const noexcept { return k_ * (n_ - k_); }
  Partition full_box() const;
  GrassmannianSpec dual() const { return {n_ - k_, n_}; }
  std::string str() const;

  friend bool operator==(const GrassmannianSpec&, const GrassmannianSpec&) = default;
  friend auto operator<=>(const GrassmannianSpec&, const GrassmannianSpec&) = default;

 private:
  int k_;
  int n_;
};

/// Projective space P^m as G(1, m+1).
inline GrassmannianSpec projective(int m) { return {1, m + 1}; }

/// True iff λ has at most k parts and λ_1 <= n-k.
bool validate_partition(const Partition& lambda, const GrassmannianSpec& g);

Partition transpose(const Partition& lambda);

/// λ^c with λ^c_i = n-k - λ_{k+1-i}. Throws InvalidPartition outside the box.
Partition complement(const Partition& lambda, const GrassmannianSpec& g);

/// λ + s^j: adds s to the first j parts (implicit zeros included).
Partition shift(const Partition& lambda, int s, int j);

/// (v^t, λ): prepends t parts equal to v. Throws NotAPartition if v < λ_1.
Partition prepend(const Partition& lambda, int v, int t);

/// All partitions of weight r inside the k x (n-k) box, lexicographically
/// decreasing.
std::vector<Partition> enumerate_lambda(int r, const GrassmannianSpec& g);

/// Every partition in the box, by weight and then lexicographically decreasing.
std::vector<Partition> box_partitions(const GrassmannianSpec& g);

/// Grouped form (μ_1^{i_1}, ..., μ_t^{i_t}) of λ padded to k parts.
struct PartBlock {
  int value;
  int multiplicity;
};
std::vector<PartBlock> grouped_form(const Partition& lambda, int k);

}  // namespace realiz
