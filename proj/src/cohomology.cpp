#include "realiz/cohomology.hpp"

#include <bit>
#include <cstdint>
#include <mutex>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "realiz/errors.hpp"

namespace realiz {

CohomologyClass CohomologyClass::unit(GrassmannianSpec space) {
  return schubert(space, Partition{}, 1);
}

CohomologyClass CohomologyClass::schubert(GrassmannianSpec space, const Partition& lambda,
                                          const Integer& coeff) {
  CohomologyClass c(space);
  c.add(lambda, coeff);
  return c;
}

CohomologyClass CohomologyClass::dual_schubert(GrassmannianSpec space, const Partition& lambda,
                                               const Integer& coeff) {
  return schubert(space, complement(lambda, space), coeff);
}

Integer CohomologyClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer CohomologyClass::dual_coefficient(const Partition& lambda) const {
  if (!validate_partition(lambda, space_)) return 0;
  return coefficient(complement(lambda, space_));
}

void CohomologyClass::add(const Partition& lambda, const Integer& coeff) {
  if (!validate_partition(lambda, space_))
    throw InvalidPartition(lambda.str() + " does not fit the box of " + space_.str());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool CohomologyClass::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
}

std::optional<int> CohomologyClass::codimension() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.weight();
}

std::optional<int> CohomologyClass::dimension() const {
  auto r = codimension();
  if (!r) return std::nullopt;
  return space_.dim() - *r;
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& other) {
  if (!(space_ == other.space_)) throw SpaceMismatch("adding classes from different Grassmannians");
  for (const auto& [lambda, coeff] : other.terms_) add(lambda, coeff);
  return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& other) {
  if (!(space_ == other.space_)) throw SpaceMismatch("subtracting classes from different Grassmannians");
  for (const auto& [lambda, coeff] : other.terms_) add(lambda, -coeff);
  return *this;
}

CohomologyClass& CohomologyClass::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms_) coeff *= scalar;
  return *this;
}

// ---------------------------------------------------------------- Pieri

namespace {

void horizontal_strips(const std::vector<int>& base, int row, int remaining, int width,
                       std::vector<int>& current, std::vector<Partition>& out) {
  const int k = static_cast<int>(base.size());
  if (row == k) {
    if (remaining == 0) out.emplace_back(current);
    return;
  }
  const int cap = row == 0 ? width : base[row - 1];
  const int room = cap - base[row];
  for (int add = std::min(room, remaining); add >= 0; --add) {
    current[row] = base[row] + add;
    horizontal_strips(base, row + 1, remaining - add, width, current, out);
  }
  current[row] = base[row];
}

}  // namespace

CohomologyClass pieri_multiply(const CohomologyClass& c, int p) {
  const GrassmannianSpec& g = c.space();
  CohomologyClass out(g);
  if (p < 0) return out;
  for (const auto& [lambda, coeff] : c.terms()) {
    std::vector<int> base = lambda.padded(g.k());
    std::vector<int> current = base;
    std::vector<Partition> strips;
    horizontal_strips(base, 0, p, g.corank(), current, strips);
    for (const auto& mu : strips) out.add(mu, coeff);
  }
  return out;
}

CohomologyClass hyperplane_power(const GrassmannianSpec& g, int e) {
  CohomologyClass out = CohomologyClass::unit(g);
  for (int i = 0; i < e && !out.is_zero(); ++i) out = pieri_multiply(out, 1);
  return out;
}

// ---------------------------------------------------------------- LR rule

namespace {

/// Counts LR tableaux of shape outer/inner with the given content.
class LrCounter {
 public:
  LrCounter(const Partition& inner, const Partition& content, const Partition& outer)
      : inner_(inner.padded(outer.length())),
        outer_(outer.parts()),
        content_(content.parts()),
        used_(content.length() + 1, 0) {
    for (int r = 0; r < outer.length(); ++r)
      for (int c = outer_[r] - 1; c >= inner_[r]; --c) cells_.push_back({r, c});
    grid_.assign(outer.length(), std::vector<int>(outer.length() ? outer_[0] : 0, 0));
  }

  std::uint64_t count() { return fill(0); }

 private:
  struct Cell {
    int row;
    int col;
  };

  std::uint64_t fill(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [r, c] = cells_[idx];
    // Row weakly increasing: bounded above by the right neighbour (filled earlier).
    int hi = static_cast<int>(content_.size());
    if (c + 1 < outer_[r]) hi = std::min(hi, grid_[r][c + 1]);
    // Column strictly increasing: bounded below by the cell above, if skew.
    int lo = 1;
    if (r > 0 && c >= inner_[r - 1]) lo = grid_[r - 1][c] + 1;
    // Lattice word: entries in row r never exceed r+1.
    hi = std::min(hi, r + 1);
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (used_[v] >= content_[v - 1]) continue;
      if (v > 1 && used_[v] + 1 > used_[v - 1]) continue;
      ++used_[v];
      grid_[r][c] = v;
      total += fill(idx + 1);
      --used_[v];
    }
    grid_[r][c] = 0;
    return total;
  }

  std::vector<int> inner_;
  std::vector<int> outer_;
  std::vector<int> content_;
  std::vector<int> used_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
};

struct TripleHash {
  std::size_t operator()(const std::tuple<Partition, Partition, Partition>& t) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&](const Partition& p) {
      for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
      h = (h ^ 0xff) * 1099511628211ull;
    };
    mix(std::get<0>(t));
    mix(std::get<1>(t));
    mix(std::get<2>(t));
    return h;
  }
};

std::mutex g_lr_mutex;
std::unordered_map<std::tuple<Partition, Partition, Partition>, Integer, TripleHash> g_lr_memo;

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.weight() != lambda.weight() + mu.weight()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  if (lambda.empty()) return nu == mu ? 1 : 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  // c^ν_{λμ} = c^ν_{μλ}; key on the ordered pair.
  const bool swap = mu < lambda;
  const Partition& inner = swap ? mu : lambda;
  const Partition& content = swap ? lambda : mu;
  auto key = std::make_tuple(inner, content, nu);
  {
    std::lock_guard lock(g_lr_mutex);
    if (auto it = g_lr_memo.find(key); it != g_lr_memo.end()) return it->second;
  }
  LrCounter counter(inner, content, nu);
  Integer value(static_cast<unsigned long>(counter.count()));
  std::lock_guard lock(g_lr_mutex);
  g_lr_memo.emplace(std::move(key), value);
  return value;
}

// ---------------------------------------------------------------- products

namespace {

using BasisProduct = std::vector<std::pair<Partition, Integer>>;

struct PairKey {
  GrassmannianSpec g;
  Partition a;
  Partition b;
  bool operator==(const PairKey&) const = default;
};

struct ProductKeyHash {
  std::size_t operator()(const PairKey& key) const {
    std::size_t h = static_cast<std::size_t>(key.g.k()) * 1315423911u + static_cast<std::size_t>(key.g.n());
    for (int x : key.a.parts()) h = h * 31 + static_cast<std::size_t>(x);
    h = h * 131 + 7;
    for (int x : key.b.parts()) h = h * 31 + static_cast<std::size_t>(x);
    return h;
  }
};

std::mutex g_product_mutex;
std::unordered_map<PairKey, BasisProduct, ProductKeyHash> g_product_memo;

BasisProduct basis_product(const GrassmannianSpec& g, const Partition& a, const Partition& b) {
  PairKey key{g, b < a ? b : a, b < a ? a : b};
  {
    std::lock_guard lock(g_product_mutex);
    if (auto it = g_product_memo.find(key); it != g_product_memo.end()) return it->second;
  }
  BasisProduct out;
  for (const auto& nu : enumerate_lambda(a.weight() + b.weight(), g)) {
    if (!nu.contains(a) || !nu.contains(b)) continue;
    Integer c = lr_coefficient(a, b, nu);
    if (c != 0) out.emplace_back(nu, c);
  }
  std::lock_guard lock(g_product_mutex);
  g_product_memo.emplace(std::move(key), out);
  return out;
}

void require_same_space(const CohomologyClass& a, const CohomologyClass& b) {
  if (!(a.space() == b.space()))
    throw SpaceMismatch("classes live in " + a.space().str() + " and " + b.space().str());
}

}  // namespace

CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) {
  require_same_space(a, b);
  CohomologyClass out(a.space());
  for (const auto& [lambda, x] : a.terms())
    for (const auto& [mu, y] : b.terms())
      for (const auto& [nu, c] : basis_product(a.space(), lambda, mu)) out.add(nu, x * y * c);
  return out;
}

CohomologyClass oracle_multiply(const CohomologyClass& a, const CohomologyClass& b) {
  require_same_space(a, b);
  CohomologyClass out(a.space());
  for (const auto& [lambda, coeff] : a.terms()) {
    // σ_λ = det[σ_{λ_i + j - i}], expanded along rows; minors[S] holds
    // det(rows ℓ-|S|.., columns S) · b so each Pieri chain is shared.
    const int len = lambda.length();
    const std::uint32_t all = (len == 0) ? 0u : ((1u << len) - 1u);
    std::vector<std::optional<CohomologyClass>> minors(static_cast<std::size_t>(all) + 1);
    minors[0] = b;
    for (std::uint32_t set = 1; set <= all; ++set) {
      const int size = std::popcount(set);
      const int row = len - size;
      CohomologyClass acc(a.space());
      int position = 0;
      for (int col = 0; col < len; ++col) {
        if (!(set & (1u << col))) continue;
        const int p = lambda[row] + col - row;
        const bool negative = position % 2 == 1;
        ++position;
        if (p < 0) continue;
        CohomologyClass term = pieri_multiply(*minors[set & ~(1u << col)], p);
        if (negative)
          acc -= term;
        else
          acc += term;
      }
      minors[set] = std::move(acc);
    }
    out += coeff * *minors[all];
  }
  return out;
}

Integer integrate(const CohomologyClass& c) { return c.coefficient(c.space().full_box()); }

Integer pair(const CohomologyClass& a, const CohomologyClass& b) { return integrate(multiply(a, b)); }

CohomologyClass transpose_class(const CohomologyClass& c) {
  CohomologyClass out(c.space().dual());
  for (const auto& [lambda, coeff] : c.terms()) out.add(transpose(lambda), coeff);
  return out;
}

CohomologyClass complement_class(const CohomologyClass& c) {
  CohomologyClass out(c.space());
  for (const auto& [lambda, coeff] : c.terms()) out.add(complement(lambda, c.space()), coeff);
  return out;
}

}  // namespace realiz
