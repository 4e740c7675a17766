#include "realiz/classification.hpp"

#include "realiz/errors.hpp"

namespace realiz {

std::string to_string(Status s) {
  switch (s) {
    case Status::RealizableZ: return "RealizableZ";
    case Status::RealizableQ: return "RealizableQ";
    case Status::NotRealizable: return "NotRealizable";
    case Status::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Ring r) { return r == Ring::Z ? "Z" : "Q"; }

namespace cite {
const char* const kEffective = "effective cone (a_lambda >= 0)";
const char* const kCoskunRobles = "Coskun-Robles Thm 1.1";
const char* const kHong = "Hong multi-rigidity";
const char* const kFundamental = "irreducibility (fundamental or point class)";
const char* const kRationalMultiple = "Schubert variety (rational multiple)";
const char* const kDivisorCurve = "divisors and curves";
const char* const kObstruction = "Hodge index obstruction";
}  // namespace cite

bool is_multi_rigid(const Partition& lambda, const GrassmannianSpec& g) {
  if (!validate_partition(lambda, g))
    throw InvalidPartition(lambda.str() + " does not fit the box of " + g.str());
  const std::vector<PartBlock> blocks = grouped_form(lambda, g.k());
  const int t = static_cast<int>(blocks.size());
  for (int j = 1; j + 1 < t; ++j)
    if (blocks[j].multiplicity < 2) return false;
  for (int j = 1; j < t; ++j)
    if (blocks[j - 1].value < blocks[j].value + 2) return false;
  if (blocks.front().value != g.corank() && blocks.front().multiplicity < 2) return false;
  if (blocks.back().value != 0 && blocks.back().multiplicity < 2) return false;
  return true;
}

RealizabilityVerdict schubert_multiple_verdict(const Integer& m, const Partition& lambda, const GrassmannianSpec& g,
                                               Ring ring) {
  if (!validate_partition(lambda, g))
    throw InvalidPartition(lambda.str() + " does not fit the box of " + g.str());
  if (m < 1) throw Error("multiplier must be positive");
  if (ring == Ring::Q) return {Status::RealizableQ, cite::kRationalMultiple, std::nullopt, ""};
  if (m == 1) return {Status::RealizableZ, cite::kCoskunRobles, std::nullopt, "Schubert variety"};
  if (lambda.empty() || lambda == g.full_box())
    return {Status::NotRealizable, cite::kFundamental, std::nullopt, ""};
  if (is_multi_rigid(lambda, g)) return {Status::NotRealizable, cite::kHong, std::nullopt, "multi rigid"};
  return {Status::RealizableZ, cite::kCoskunRobles, std::nullopt, "not multi rigid"};
}

bool log_concave_no_internal_zeros(const std::vector<Rational>& seq) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    if (seq[i] < 0) return false;
    if (seq[i] > 0) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) return false;
  for (int i = first; i <= last; ++i)
    if (seq[i] == 0) return false;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i)
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) return false;
  return true;
}

namespace {

struct Decision {
  bool realizable;
  std::string citation;
};

bool is(const std::vector<Integer>& v, std::initializer_list<int> want) {
  std::size_t i = 0;
  for (int w : want)
    if (v[i++] != w) return false;
  return true;
}

// Every table below assumes nonnegative coefficients and k <= n-k.

Decision table_2(const char* thm, const GrassmannianSpec& g, Ring ring, const Integer& a, const Integer& b) {
  const std::string base = std::string("Thm ") + thm;
  if (ring == Ring::Q) return {true, base};
  if (g.k() > 2) return {true, base + "(1)"};
  if (g.n() > 4) return {(a > 0) || is({a, b}, {0, 1}), base + "(2)"};
  return {(a > 0 && b > 0) || is({a, b}, {1, 0}) || is({a, b}, {0, 1}), base + "(3)"};
}

/// Shared shape of the dimension-3 and codimension-3 theorems for k >= 3.
Decision table_3(const char* thm, bool codim, const GrassmannianSpec& g, Ring ring, const Integer& a,
                 const Integer& b, const Integer& c) {
  const std::string base = std::string("Thm ") + thm;
  const bool hodge = b * b >= a * c;
  if (ring == Ring::Q) return {hodge, base};
  if (g.k() > 3) return {hodge, base + "(1)"};
  const std::string clause = base + (g.n() > 6 ? "(2)" : "(3)");
  if (!hodge) return {false, clause};
  if (b > 0) return {true, clause + "(i)"};
  if (g.n() > 6) {
    const bool ii = codim ? (b == 0 && c == 0 && a > 0) : (b == 0 && c == 0);
    if (ii) return {true, clause + "(ii)"};
    const bool iii = codim ? is({a, b, c}, {0, 0, 1}) : (a == 0 && b == 0 && c == 1);
    if (iii) return {true, clause + "(iii)"};
    return {false, clause};
  }
  if (is({a, b, c}, {1, 0, 0})) return {true, clause + "(ii)"};
  if (is({a, b, c}, {0, 0, 1})) return {true, clause + "(iii)"};
  return {false, clause};
}

Decision table_54(const GrassmannianSpec& g, Ring ring, const Integer& a, const Integer& b) {
  if (ring == Ring::Q) return {true, "Thm 5.4"};
  if (g.n() > 5) return {true, "Thm 5.4(1)"};
  return {(b > 0) || is({a, b}, {1, 0}), "Thm 5.4(2)"};
}

Decision table_82(const GrassmannianSpec& g, Ring ring, const Integer& a, const Integer& b, const Integer& c) {
  const bool hodge = b * b >= a * c;
  if (ring == Ring::Q) return {hodge, "Thm 8.2"};
  const std::string clause = g.n() > 6 ? "Thm 8.2(1)" : "Thm 8.2(2)";
  if (!hodge) return {false, clause};
  if (b > 0) return {true, clause};
  if (g.n() > 6) return {(c == 0) || is({a, b, c}, {0, 0, 1}), clause};
  return {is({a, b, c}, {1, 0, 0}) || is({a, b, c}, {0, 0, 1}), clause};
}

/// Shared by the four- and five-dimensional classes of G(3,6).
Decision table_g36(const char* thm, Ring ring, const Integer& a, const Integer& b, const Integer& c) {
  const std::string base = std::string("Thm ") + thm;
  if (ring == Ring::Q) return {true, base};
  if (a > 0 || c > 0) return {true, base + "(1)"};
  if (is({a, b, c}, {0, 1, 0})) return {true, base + "(2)"};
  return {false, base};
}

Integer content(const CohomologyClass& c) {
  Integer g = 0;
  for (const auto& [lambda, coeff] : c.terms()) g = gcd(g, coeff);
  return g;
}

CohomologyClass reindex_codim(const CohomologyClass& c, const GrassmannianSpec& target) {
  CohomologyClass out(target);
  for (const auto& [lambda, coeff] : c.terms()) out.add(lambda, coeff);
  return out;
}

CohomologyClass reindex_dim(const CohomologyClass& c, const GrassmannianSpec& target) {
  CohomologyClass out(target);
  for (const auto& [lambda, coeff] : c.terms()) out.add(complement(complement(lambda, c.space()), target), coeff);
  return out;
}

void append_note(std::string& notes, const std::string& step) {
  if (!notes.empty()) notes += "; ";
  notes += step;
}

/// Transpose to k <= n-k and, over Q, strip the content and apply the
/// stabilization equalities until nothing changes.
CohomologyClass reduce(CohomologyClass c, Ring ring, std::string& notes) {
  if (ring == Ring::Q) {
    Integer g = content(c);
    if (g > 1) {
      CohomologyClass scaled(c.space());
      for (const auto& [lambda, coeff] : c.terms()) scaled.add(lambda, coeff / g);
      c = std::move(scaled);
      append_note(notes, "divide by " + g.get_str());
    }
  }
  for (;;) {
    const GrassmannianSpec g = c.space();
    if (g.k() > g.corank()) {
      c = transpose_class(c);
      append_note(notes, "transpose to " + c.space().str());
      continue;
    }
    if (ring == Ring::Q) {
      const int r = *c.codimension();
      GrassmannianSpec t = canonical_instance(r, g, Ring::Q, Convention::codim(r));
      if (!(t == g)) {
        c = reindex_codim(c, t);
        append_note(notes, "codimension stabilization to " + t.str());
        continue;
      }
      const int d = *c.dimension();
      t = canonical_instance(d, g, Ring::Q, Convention::dim(d));
      if (!(t == g)) {
        c = reindex_dim(c, t);
        append_note(notes, "dimension stabilization to " + t.str());
        continue;
      }
    }
    return c;
  }
}

std::optional<Decision> decide(const CohomologyClass& c, Ring ring) {
  const GrassmannianSpec& g = c.space();
  const int k = g.k(), n = g.n();
  const int codim = *c.codimension(), dim = *c.dimension();
  auto co = [&](std::initializer_list<int> parts) { return c.coefficient(Partition(parts)); };
  auto du = [&](std::initializer_list<int> parts) { return c.dual_coefficient(Partition(parts)); };

  if (codim <= 1 || dim <= 1) return Decision{true, cite::kDivisorCurve};
  if (codim == 2) return table_2("5.2", g, ring, co({2}), co({1, 1}));
  if (dim == 2) return table_2("5.1", g, ring, du({2}), du({1, 1}));
  if (codim == 3) {
    if (k >= 3) return table_3("7.1", true, g, ring, co({3}), co({2, 1}), co({1, 1, 1}));
    if (n >= 6) return Decision{true, "Thm 7.2"};
    return table_54(g, ring, du({3}), du({2, 1}));
  }
  if (dim == 3) {
    if (k >= 3) return table_3("6.1", false, g, ring, du({3}), du({2, 1}), du({1, 1, 1}));
    return table_54(g, ring, du({3}), du({2, 1}));
  }
  if (k == 2 && ring == Ring::Q && dim < 2 * (n - 2)) {
    std::vector<Rational> seq;
    for (int i = std::max(0, dim - n + 2); i <= dim / 2; ++i) seq.emplace_back(du({dim - i, i}));
    return Decision{log_concave_no_internal_zeros(seq), "Thm 9.1"};
  }
  if (k == 2 && dim == 4 && n >= 6) return table_82(g, ring, du({4}), du({3, 1}), du({2, 2}));
  if (k == 3 && n == 6 && dim == 4) return table_g36("8.3", ring, du({3, 1}), du({2, 2}), du({2, 1, 1}));
  if (k == 3 && n == 6 && dim == 5) return table_g36("9.2", ring, co({3, 1}), co({2, 2}), co({2, 1, 1}));
  return std::nullopt;
}

}  // namespace

RealizabilityVerdict realizability(const CohomologyClass& c, Ring ring, const RealizabilityOptions& options) {
  if (c.is_zero()) throw ZeroClass("realizability of the zero class");
  if (!c.is_homogeneous()) throw NotHomogeneous("realizability needs a homogeneous class");
  for (const auto& [lambda, coeff] : c.terms())
    if (coeff < 0) return {Status::NotRealizable, cite::kEffective, std::nullopt, "negative coefficient on s" + lambda.str()};
  if (c.size() == 1) {
    const auto& [lambda, coeff] = *c.terms().begin();
    return schubert_multiple_verdict(coeff, lambda, c.space(), ring);
  }

  RealizabilityVerdict verdict;
  CohomologyClass reduced = reduce(c, ring, verdict.notes);
  if (reduced.size() == 1) {
    const auto& [lambda, coeff] = *reduced.terms().begin();
    RealizabilityVerdict single = schubert_multiple_verdict(coeff, lambda, reduced.space(), ring);
    single.notes = verdict.notes;
    return single;
  }
  if (auto d = decide(reduced, ring)) {
    verdict.status = d->realizable ? (ring == Ring::Z ? Status::RealizableZ : Status::RealizableQ)
                                   : Status::NotRealizable;
    verdict.citation = d->citation;
    return verdict;
  }
  if (options.search) {
    if (auto w = search_obstruction(c, options.budget)) {
      verdict.status = Status::NotRealizable;
      verdict.citation = cite::kObstruction;
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  verdict.status = Status::Unknown;
  return verdict;
}

}  // namespace realiz
