#include "realiz/constructions.hpp"

#include <numeric>

#include "realiz/errors.hpp"

namespace realiz {

namespace {

ProductSpec collect_factors(const std::vector<std::optional<GrassmannianSpec>>& blocks) {
  std::vector<GrassmannianSpec> factors;
  for (const auto& b : blocks)
    if (b) factors.push_back(*b);
  return ProductSpec(std::move(factors));
}

std::vector<std::optional<GrassmannianSpec>> iterated_blocks(const GrassmannianSpec& g,
                                                             const std::vector<int>& i,
                                                             const std::vector<int>& j) {
  const int n = g.n(), k = g.k();
  const int s = static_cast<int>(i.size());
  if (s < 1) throw InvalidSpace("an iterated construction needs at least one step");
  if (static_cast<int>(j.size()) != s) throw InvalidSpace("i and j must have the same length");
  if (i[0] > n - k) throw InvalidSpace("i_1 exceeds n-k");
  for (int l = 0; l < s; ++l) {
    if (i[l] <= 0 || j[l] <= 0) throw InvalidSpace("i and j entries must be positive");
    if (l > 0 && i[l] >= i[l - 1]) throw InvalidSpace("i must be strictly decreasing");
  }
  if (std::accumulate(j.begin(), j.end(), 0) >= k) throw InvalidSpace("j_1+...+j_s must be less than k");

  std::vector<std::optional<GrassmannianSpec>> blocks;
  int prev = 0, jsum = 0;
  for (int l = 0; l <= s; ++l) {
    const int jl = l < s ? j[l] : k - jsum;
    jsum += jl;
    const int al = l < s ? n - k + jsum - i[l] : n;
    const int size = al - prev;
    if (size < jl) throw InvalidSpace("block " + std::to_string(l + 1) + " is empty");
    if (size == jl)
      blocks.push_back(std::nullopt);
    else
      blocks.push_back(GrassmannianSpec(jl, size));
    prev = al;
  }
  return blocks;
}

}  // namespace

IteratedSpec::IteratedSpec(GrassmannianSpec target, std::vector<int> i, std::vector<int> j)
    : target_(target),
      i_(std::move(i)),
      blocks_(iterated_blocks(target, i_, j)),
      source_(collect_factors(blocks_)) {
  const int s = static_cast<int>(i_.size());
  i_full_ = i_;
  i_full_.push_back(0);
  j_ = std::move(j);
  j_.push_back(target_.k() - std::accumulate(j_.begin(), j_.end(), 0));
  a_.push_back(0);
  int jsum = 0;
  for (int l = 0; l < s; ++l) {
    jsum += j_[l];
    a_.push_back(target_.corank() + jsum - i_[l]);
  }
  a_.push_back(target_.n());
}

int IteratedSpec::dimension_shift() const noexcept {
  int shift = 0, jsum = j_[0];
  for (std::size_t l = 1; l < j_.size(); ++l) {
    shift += j_[l] * (a_[l] - jsum);
    jsum += j_[l];
  }
  return shift;
}

CohomologyClass iterated_class_map(const IteratedSpec& spec, const ProductClass& c) {
  if (!(c.spec() == spec.source()))
    throw SpecMismatch("class lives on " + c.spec().str() + ", construction expects " + spec.source().str());
  const GrassmannianSpec& g = spec.target();
  const int shift = spec.dimension_shift();
  CohomologyClass out(g);
  for (const auto& [key, coeff] : c.terms()) {
    std::vector<int> parts;
    std::size_t slot = 0;
    for (std::size_t l = 0; l < spec.blocks().size(); ++l) {
      Partition lambda = spec.blocks()[l] ? key[slot++] : Partition{};
      for (int x : lambda.padded(spec.j()[l])) parts.push_back(x + spec.i()[l]);
    }
    Partition mu(std::move(parts));
    const int in_dim = spec.source().dim() - key_weight(key);
    const int out_dim = g.dim() - mu.weight();
    if (out_dim - in_dim != shift) throw Error("dimension bookkeeping failed for " + mu.str());
    out.add(mu, coeff);
  }
  return out;
}

IteratedSpec bundle_spec(const GrassmannianSpec& g, int i, int j) {
  if (j <= 0 || j >= g.k()) throw InvalidSpace("bundle construction needs 0 < j < k");
  return IteratedSpec(g, {i}, {j});
}

CohomologyClass bundle_class_map(const GrassmannianSpec& g, int i, int j, const ProductClass& c) {
  return iterated_class_map(bundle_spec(g, i, j), c);
}

ProductSpec cone_source(int n) {
  if (n < 1) throw InvalidSpace("cone construction needs n >= 1");
  return ProductSpec{projective(n), projective(n)};
}

CohomologyClass cone_class_map(int n, int m, const ProductClass& c) {
  const ProductSpec source = cone_source(n);
  if (!(c.spec() == source)) throw SpecMismatch("cone construction expects " + source.str());
  GrassmannianSpec g(n + 1, 2 * n + 2);
  CohomologyClass out(g);
  if (c.is_zero()) return out;
  if (c.codimension() != m)
    throw DegreeMismatch("cone construction expects a homogeneous class of codimension " + std::to_string(m));
  for (const auto& [key, coeff] : c.terms()) {
    const int p = key[0].weight(), q = key[1].weight();
    std::vector<int> parts(p, n + 1);
    parts.insert(parts.end(), n - p, n);
    parts.push_back(q);
    out.add(Partition(std::move(parts)), coeff);
  }
  return out;
}

namespace {

std::vector<int> checked_face_base(const Partition& lambda, const GrassmannianSpec& g) {
  if (!validate_partition(lambda, g))
    throw InvalidPartition(lambda.str() + " does not fit the box of " + g.str());
  std::vector<int> base = lambda.padded(g.k());
  for (std::size_t i = 1; i < base.size(); ++i)
    if (base[i] >= base[i - 1]) throw NotStrict(lambda.str() + " is not strictly decreasing");
  return base;
}

}  // namespace

ProductSpec face_source(const Partition& lambda, const GrassmannianSpec& g) {
  std::vector<int> base = checked_face_base(lambda, g);
  std::vector<GrassmannianSpec> factors;
  int prev = g.corank();
  for (int part : base) {
    if (prev > part) factors.push_back(projective(prev - part));
    prev = part;
  }
  if (factors.empty()) throw NotStrict("face of " + lambda.str() + " is a point");
  return ProductSpec(std::move(factors));
}

Partition face_monomial(const Partition& lambda, const GrassmannianSpec& g, const std::vector<int>& exponents) {
  std::vector<int> base = checked_face_base(lambda, g);
  if (exponents.size() != base.size())
    throw ExponentOutOfRange("expected " + std::to_string(base.size()) + " exponents");
  int prev = g.corank();
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > prev - base[i])
      throw ExponentOutOfRange("exponent of x_" + std::to_string(i + 1) + " must lie in [0," +
                               std::to_string(prev - base[i]) + "]");
    prev = base[i];
    base[i] += exponents[i];
  }
  return Partition(std::move(base));
}

CohomologyClass face_class_map(const Partition& lambda, const GrassmannianSpec& g, const ProductClass& c) {
  const ProductSpec source = face_source(lambda, g);
  if (!(c.spec() == source)) throw SpecMismatch("face construction expects " + source.str());
  std::vector<int> base = lambda.padded(g.k());
  CohomologyClass out(g);
  for (const auto& [key, coeff] : c.terms()) {
    std::vector<int> exponents;
    std::size_t slot = 0;
    int prev = g.corank();
    for (int part : base) {
      exponents.push_back(prev > part ? key[slot++].weight() : 0);
      prev = part;
    }
    out.add(face_monomial(lambda, g, exponents), coeff);
  }
  return out;
}

}  // namespace realiz
