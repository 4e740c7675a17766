#include "realiz/obstructions.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "realiz/errors.hpp"
#include "realiz/stability.hpp"

namespace realiz {

SpanMapSpec::SpanMapSpec(GrassmannianSpec target, ProductSpec factors)
    : target_(target), factors_(std::move(factors)) {
  int ranks = 0;
  for (const auto& f : factors_.factors()) {
    ranks += f.k();
    if (f.corank() != target_.corank())
      throw SpecMismatch("factor " + f.str() + " must have corank " + std::to_string(target_.corank()));
  }
  if (ranks != target_.k())
    throw SpecMismatch("factor ranks add up to " + std::to_string(ranks) + ", expected " +
                       std::to_string(target_.k()));
}

SpanMapSpec SpanMapSpec::from_composition(const GrassmannianSpec& target, const std::vector<int>& ranks) {
  std::vector<GrassmannianSpec> factors;
  for (int r : ranks) factors.emplace_back(r, r + target.corank());
  return SpanMapSpec(target, ProductSpec(std::move(factors)));
}

std::string SpanMapSpec::str() const { return factors_.str() + " -> " + target_.str(); }

namespace {

/// Weak compositions of `total` bounded slotwise by `caps`, lexicographically
/// decreasing.
void weak_compositions(int total, const std::vector<int>& caps, std::size_t slot, std::vector<int>& current,
                       const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
  if (stop) return;
  if (slot + 1 == caps.size()) {
    if (total <= caps[slot]) {
      current[slot] = total;
      if (!visit(current)) stop = true;
    }
    return;
  }
  for (int d = std::min(total, caps[slot]); d >= 0 && !stop; --d) {
    current[slot] = d;
    weak_compositions(total - d, caps, slot + 1, current, visit, stop);
  }
}

/// Calls visit on every basis tuple of total weight r; stops when visit returns false.
void for_each_key(const ProductSpec& spec, int r, const std::function<bool(const ProductKey&)>& visit) {
  std::vector<int> caps;
  for (const auto& f : spec.factors()) caps.push_back(f.dim());
  std::vector<int> current(caps.size());
  bool stop = false;
  weak_compositions(r, caps, 0, current, [&](const std::vector<int>& degrees) {
    std::vector<std::vector<Partition>> choices;
    for (std::size_t i = 0; i < degrees.size(); ++i) choices.push_back(enumerate_lambda(degrees[i], spec[i]));
    ProductKey key(degrees.size());
    bool go = true;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (!go) return;
      if (i == choices.size()) {
        go = visit(key);
        return;
      }
      for (const auto& p : choices[i]) {
        key[i] = p;
        rec(i + 1);
        if (!go) return;
      }
    };
    rec(0);
    return go;
  }, stop);
}

void check_span(const CohomologyClass& nu, const SpanMapSpec& span) {
  if (!(nu.space() == span.target()))
    throw SpecMismatch("class lives in " + nu.space().str() + ", span map targets " + span.target().str());
}

CohomologyClass complement_product(const SpanMapSpec& span, const ProductKey& basis) {
  const GrassmannianSpec& g = span.target();
  CohomologyClass x = CohomologyClass::unit(g);
  for (int i = 0; i < span.factors().size() && !x.is_zero(); ++i)
    x = multiply(x, CohomologyClass::schubert(g, complement(basis[i], span.factors()[i])));
  return x;
}

/// f*σ_λ for every λ of weight r, shared across callers.
using PullbackTable = std::map<Partition, ProductClass>;

const PullbackTable& pullback_table(const SpanMapSpec& span, int r) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, PullbackTable> memo;
  auto key = std::make_pair(span.str(), r);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  PullbackTable table;
  const GrassmannianSpec& g = span.target();
  for_each_key(span.factors(), r, [&](const ProductKey& basis) {
    CohomologyClass x = complement_product(span, basis);
    for (const auto& [lambda, coeff] : x.terms()) {
      Partition dual = complement(lambda, g);
      auto it = table.try_emplace(dual, span.factors()).first;
      it->second.add(basis, coeff);
    }
    return true;
  });
  std::lock_guard lock(mutex);
  return memo.emplace(std::move(key), std::move(table)).first->second;
}

}  // namespace

Integer pullback_coefficient(const CohomologyClass& nu, const SpanMapSpec& span, const ProductKey& basis) {
  check_span(nu, span);
  if (!span.factors().valid_key(basis))
    throw SpecMismatch("basis tuple does not fit " + span.factors().str());
  if (!nu.is_zero() && nu.is_homogeneous() && *nu.codimension() != key_weight(basis))
    throw DegreeMismatch("basis tuple has degree " + std::to_string(key_weight(basis)) + ", class has codimension " +
                         std::to_string(*nu.codimension()));
  CohomologyClass x = complement_product(span, basis);
  Integer total = 0;
  for (const auto& [lambda, coeff] : nu.terms()) total += coeff * x.coefficient(complement(lambda, nu.space()));
  return total;
}

ProductClass pullback_class(const CohomologyClass& nu, const SpanMapSpec& span) {
  check_span(nu, span);
  if (!nu.is_homogeneous()) throw NotHomogeneous("pullback needs a homogeneous class");
  ProductClass out(span.factors());
  if (nu.is_zero()) return out;
  const PullbackTable& table = pullback_table(span, *nu.codimension());
  for (const auto& [lambda, coeff] : nu.terms())
    if (auto it = table.find(lambda); it != table.end()) out += coeff * it->second;
  return out;
}

namespace {

/// Top-degree coefficient of σ_λ · σ_1^e in g.
Integer slot_integral(const GrassmannianSpec& g, const Partition& lambda, int e) {
  if (lambda.weight() + e != g.dim()) return 0;
  CohomologyClass c = CohomologyClass::schubert(g, lambda);
  for (int i = 0; i < e; ++i) c = pieri_multiply(c, 1);
  return integrate(c);
}

SymMatrix hodge_from_pullback(const ProductClass& pulled, const ProductKey& alpha) {
  const ProductSpec& spec = pulled.spec();
  const int p = spec.size();
  ProductClass weighted = kunneth_multiply(pulled, ProductClass::basis(spec, alpha));
  SymMatrix m(p);
  for (int u = 0; u < p; ++u)
    for (int v = u; v < p; ++v) {
      Integer total = 0;
      for (const auto& [key, coeff] : weighted.terms()) {
        Integer term = coeff;
        for (int i = 0; i < p && term != 0; ++i)
          term *= slot_integral(spec[i], key[i], (i == u) + (i == v));
        total += term;
      }
      m.set(u, v, Rational(total));
    }
  return m;
}

}  // namespace

SymMatrix hodge_matrix(const CohomologyClass& nu, const SpanMapSpec& span, const ProductKey& alpha) {
  check_span(nu, span);
  if (!span.factors().valid_key(alpha)) throw SpecMismatch("multiplier does not fit " + span.factors().str());
  if (nu.is_zero()) return SymMatrix(span.factors().size());
  if (!nu.is_homogeneous()) throw NotHomogeneous("Hodge matrix needs a homogeneous class");
  if (key_weight(alpha) + 2 != *nu.dimension())
    throw DegreeMismatch("multiplier degree must be " + std::to_string(*nu.dimension() - 2));
  return hodge_from_pullback(pullback_class(nu, span), alpha);
}

namespace {

/// Compositions of k into p positive parts, lexicographically.
void compositions(int k, int p, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (p == 1) {
    current.push_back(k);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int first = 1; first <= k - (p - 1); ++first) {
    current.push_back(first);
    compositions(k - first, p - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<ObstructionWitness> search_obstruction(const CohomologyClass& nu, const SearchBudget& budget) {
  if (nu.is_zero() || !nu.is_homogeneous()) return std::nullopt;
  for (const auto& [lambda, coeff] : nu.terms())
    if (coeff < 0) return std::nullopt;
  const int dim = *nu.dimension();
  if (dim < 2) return std::nullopt;

  for (int p = 1; p <= budget.max_factors; ++p) {
    for (int t = 0; t <= budget.max_rank_extension; ++t) {
      const int k = nu.space().k() + t;
      if (k < p) continue;
      std::vector<std::vector<int>> comps;
      std::vector<int> scratch;
      compositions(k, p, scratch, comps);
      for (const auto& ranks : comps) {
        for (int s = 0; s <= budget.max_corank_extension; ++s) {
          CohomologyClass embedded = subvariety_reindex(nu, s, t);
          SpanMapSpec span = SpanMapSpec::from_composition(embedded.space(), ranks);
          ProductClass pulled = pullback_class(embedded, span);
          std::optional<ObstructionWitness> found;
          long tried = 0;
          for_each_key(span.factors(), dim - 2, [&](const ProductKey& alpha) {
            if (tried++ >= budget.max_alpha) return false;
            SymMatrix m = hodge_from_pullback(pulled, alpha);
            if (weakly_lorentzian(m)) return true;
            found = ObstructionWitness{span, s, t, alpha, m, eigen_sign_pattern(m)};
            return false;
          });
          if (found) return found;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace realiz
