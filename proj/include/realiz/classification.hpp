#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realiz/cohomology.hpp"
#include "realiz/obstructions.hpp"
#include "realiz/stability.hpp"

namespace realiz {

enum class Status { RealizableZ, RealizableQ, NotRealizable, Unknown };

std::string to_string(Status s);
std::string to_string(Ring r);

struct RealizabilityVerdict {
  Status status = Status::Unknown;
  /// Result the verdict rests on; empty only for Unknown.
  std::string citation;
  std::optional<ObstructionWitness> witness;
  /// Reductions applied before the decision, e.g. "transpose to G(3,6)".
  std::string notes;

  bool realizable() const noexcept { return status == Status::RealizableZ || status == Status::RealizableQ; }
};

/// Hong's criterion on the grouped form of λ padded to k parts.
/// Throws InvalidPartition.
bool is_multi_rigid(const Partition& lambda, const GrassmannianSpec& g);

/// m·σ_λ. Over Z realizable iff m = 1 or σ_λ is not multi rigid (always
/// m = 1 only for the fundamental and point classes). Over Q always realizable.
/// Throws InvalidPartition, or Error when m < 1.
RealizabilityVerdict schubert_multiple_verdict(const Integer& m, const Partition& lambda, const GrassmannianSpec& g,
                                               Ring ring);

/// Nonzero, nonnegative, log concave, with contiguous support.
bool log_concave_no_internal_zeros(const std::vector<Rational>& seq);

struct RealizabilityOptions {
  /// Run search_obstruction on classes no theorem decides.
  bool search = false;
  SearchBudget budget;
};

/// Throws ZeroClass, NotHomogeneous.
RealizabilityVerdict realizability(const CohomologyClass& c, Ring ring, const RealizabilityOptions& options = {});

}  // namespace realiz
