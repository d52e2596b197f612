#pragma once

// Sum-freeness checks and partition certification.

#include <cstddef>
#include <span>
#include <vector>

#include "schur/core.hpp"

namespace schur {

/// Every solution of a + b = c (a <= b) inside `subset`, sorted by (a, b).
///
/// Under Kind::Weak only a < b counts; under Kind::Strong a = b is reported too,
/// with distinct = false. `subset` must be strictly ascending with elements in
/// [1, universe_bound]; violations are tagged with `id`.
[[nodiscard]] std::vector<Violation> check_subset(std::span<const Element> subset, Element universe_bound, Kind kind,
                                                  SubsetId id = {});

/// Checks every subset of a well-formed partition under `kind`.
[[nodiscard]] VerificationReport verify_partition(const Partition& p, Kind kind);

/// Certifies raw, possibly malformed, subset lists against [1, n]: reports
/// missing, duplicated and out-of-range elements as well as violations.
[[nodiscard]] VerificationReport verify_subsets(Element n, const std::vector<std::vector<Element>>& subsets,
                                                Kind kind);

/// All pairs (a, 2a) sharing a subset, sorted by (subset, a).
[[nodiscard]] std::vector<WeakPair> enumerate_weak_pairs(const Partition& p);

inline constexpr std::size_t kBruteForceLimit = 2000;

/// Triple-loop reference check used as an oracle for check_subset.
/// Throws std::length_error above kBruteForceLimit elements.
[[nodiscard]] bool brute_force_check(std::span<const Element> subset, Kind kind);

}  // namespace schur
