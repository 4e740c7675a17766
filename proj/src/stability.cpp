#include "realiz/stability.hpp"

#include "realiz/errors.hpp"

namespace realiz {

namespace {

void check_convention(const CohomologyClass& c, const Convention& conv) {
  if (!c.is_homogeneous()) throw NotHomogeneous("class mixes degrees");
  if (c.is_zero()) return;
  const int degree = conv.kind == Convention::Codim ? *c.codimension() : *c.dimension();
  if (degree != conv.r)
    throw DegreeMismatch(std::string(conv.kind == Convention::Codim ? "codimension" : "dimension") + " is " +
                         std::to_string(degree) + ", expected " + std::to_string(conv.r));
}

}  // namespace

CohomologyClass promote(const CohomologyClass& c, const GrassmannianSpec& target, const Convention& conv) {
  const GrassmannianSpec& g = c.space();
  if (target.k() < g.k() || target.corank() < g.corank())
    throw Unreachable(target.str() + " is not reachable from " + g.str());
  check_convention(c, conv);
  CohomologyClass out(target);
  for (const auto& [lambda, coeff] : c.terms()) {
    if (conv.kind == Convention::Codim)
      out.add(lambda, coeff);
    else
      out.add(complement(complement(lambda, g), target), coeff);
  }
  return out;
}

CohomologyClass subvariety_reindex(const CohomologyClass& c, int s, int t) {
  if (s < 0 || t < 0) throw InvalidSpace("s and t must be nonnegative");
  const GrassmannianSpec& g = c.space();
  GrassmannianSpec target(g.k() + t, g.n() + s + t);
  CohomologyClass out(target);
  for (const auto& [lambda, coeff] : c.terms())
    out.add(prepend(shift(lambda, s, g.k()), g.corank() + s, t), coeff);
  return out;
}

GrassmannianSpec canonical_instance(int r, const GrassmannianSpec& g, Ring ring, const Convention&) {
  if (r < 1) return g;
  const int k = g.k(), m = g.corank();
  if (ring == Ring::Q) {
    if (k >= r && m >= r) return {r, 2 * r};
    if (m >= r) return {k, k + r};
    return g;
  }
  if (k >= r + 1 && m >= r + 1) return {r + 1, 2 * r + 2};
  return g;
}

bool ClassFamily::contains(const CohomologyClass& c) const {
  const GrassmannianSpec& g = c.space();
  const bool labelled = (g.k() == r && g.n() == 2 * r) || (g.k() == r + 1 && g.n() == 2 * r + 2);
  if (!labelled || c.size() != 1) return false;
  const auto& [key, coeff] = *c.terms().begin();
  const Partition target = basis == BasisConvention::CodimBasis ? lambda : complement(lambda, g);
  return key == target && coeff > 1;
}

std::vector<ClassFamily> exceptional_set(int r, Convention::Kind kind) {
  if (r < 1) throw InvalidPartition("exceptional set needs r >= 1");
  const BasisConvention basis = kind == Convention::Codim ? BasisConvention::CodimBasis : BasisConvention::DimBasis;
  return {{Partition{r}, basis, r}, {Partition(std::vector<int>(r, 1)), basis, r}};
}

}  // namespace realiz
