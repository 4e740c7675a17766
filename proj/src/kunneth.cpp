#include "realiz/kunneth.hpp"

#include "realiz/errors.hpp"

namespace realiz {

ProductSpec::ProductSpec(std::vector<GrassmannianSpec> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidSpace("a product needs at least one factor");
}

int ProductSpec::dim() const noexcept {
  int d = 0;
  for (const auto& g : factors_) d += g.dim();
  return d;
}

std::vector<Partition> ProductSpec::top_key() const {
  std::vector<Partition> key;
  key.reserve(factors_.size());
  for (const auto& g : factors_) key.push_back(g.full_box());
  return key;
}

bool ProductSpec::valid_key(const ProductKey& key) const {
  if (key.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < key.size(); ++i)
    if (!validate_partition(key[i], factors_[i])) return false;
  return true;
}

std::string ProductSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += factors_[i].str();
  }
  return out;
}

int key_weight(const ProductKey& key) {
  int w = 0;
  for (const auto& p : key) w += p.weight();
  return w;
}

bool ProductKeyOrder::operator()(const ProductKey& a, const ProductKey& b) const {
  const int wa = key_weight(a), wb = key_weight(b);
  if (wa != wb) return wa < wb;
  ClassOrder slot;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (slot(a[i], b[i])) return true;
    if (slot(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

ProductClass ProductClass::unit(const ProductSpec& spec) {
  return basis(spec, ProductKey(spec.size()));
}

ProductClass ProductClass::basis(const ProductSpec& spec, const ProductKey& key, const Integer& coeff) {
  ProductClass c(spec);
  c.add(key, coeff);
  return c;
}

ProductClass ProductClass::slot_class(const ProductSpec& spec, int slot, const Partition& lambda) {
  ProductKey key(spec.size());
  key.at(slot) = lambda;
  return basis(spec, key);
}

Integer ProductClass::coefficient(const ProductKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ProductClass::add(const ProductKey& key, const Integer& coeff) {
  if (static_cast<int>(key.size()) != spec_.size())
    throw SpecMismatch("tuple has " + std::to_string(key.size()) + " slots, product has " +
                       std::to_string(spec_.size()));
  for (int i = 0; i < spec_.size(); ++i)
    if (!validate_partition(key[i], spec_[i]))
      throw InvalidPartition(key[i].str() + " does not fit the box of " + spec_[i].str());
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ProductClass::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  return key_weight(terms_.begin()->first) == key_weight(terms_.rbegin()->first);
}

std::optional<int> ProductClass::codimension() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return key_weight(terms_.begin()->first);
}

std::optional<int> ProductClass::dimension() const {
  auto r = codimension();
  if (!r) return std::nullopt;
  return spec_.dim() - *r;
}

ProductClass& ProductClass::operator+=(const ProductClass& other) {
  if (!(spec_ == other.spec_)) throw SpecMismatch("adding classes on different products");
  for (const auto& [key, coeff] : other.terms_) add(key, coeff);
  return *this;
}

ProductClass& ProductClass::operator-=(const ProductClass& other) {
  if (!(spec_ == other.spec_)) throw SpecMismatch("subtracting classes on different products");
  for (const auto& [key, coeff] : other.terms_) add(key, -coeff);
  return *this;
}

ProductClass& ProductClass::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= scalar;
  return *this;
}

namespace {

void distribute(const ProductSpec& spec, const std::vector<CohomologyClass>& slots, std::size_t i,
                ProductKey& key, const Integer& coeff, ProductClass& out) {
  if (i == slots.size()) {
    out.add(key, coeff);
    return;
  }
  for (const auto& [lambda, c] : slots[i].terms()) {
    key[i] = lambda;
    distribute(spec, slots, i + 1, key, coeff * c, out);
  }
}

}  // namespace

ProductClass kunneth_multiply(const ProductClass& a, const ProductClass& b) {
  if (!(a.spec() == b.spec()))
    throw SpecMismatch("products " + a.spec().str() + " and " + b.spec().str());
  const ProductSpec& spec = a.spec();
  ProductClass out(spec);
  std::vector<CohomologyClass> slots;
  ProductKey key(spec.size());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      slots.clear();
      bool vanishes = false;
      for (int i = 0; i < spec.size() && !vanishes; ++i) {
        slots.push_back(multiply(CohomologyClass::schubert(spec[i], ka[i]),
                                 CohomologyClass::schubert(spec[i], kb[i])));
        vanishes = slots.back().is_zero();
      }
      if (!vanishes) distribute(spec, slots, 0, key, ca * cb, out);
    }
  }
  return out;
}

Integer integrate_product(const ProductClass& c) { return c.coefficient(c.spec().top_key()); }

ProductClass hyperplane_monomial(const ProductSpec& spec, const std::vector<int>& exponents) {
  if (static_cast<int>(exponents.size()) != spec.size())
    throw SpecMismatch("expected " + std::to_string(spec.size()) + " exponents");
  std::vector<CohomologyClass> slots;
  for (int i = 0; i < spec.size(); ++i) {
    slots.push_back(hyperplane_power(spec[i], exponents[i]));
    if (slots.back().is_zero()) return ProductClass(spec);
  }
  ProductClass out(spec);
  ProductKey key(spec.size());
  distribute(spec, slots, 0, key, 1, out);
  return out;
}

ProductClass as_product(const CohomologyClass& c) {
  ProductSpec spec{c.space()};
  ProductClass out(spec);
  for (const auto& [lambda, coeff] : c.terms()) out.add({lambda}, coeff);
  return out;
}

}  // namespace realiz
