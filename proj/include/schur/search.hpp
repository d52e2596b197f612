#pragma once

// Exhaustive backtracking over colorings of 1, 2, 3, ... with r colors.
//
// Integers are placed in increasing order. Each subset keeps a bitset of the
// sums its members already produce, so a placement is legal iff the integer
// is not marked in the target subset. Symmetry is broken by opening subsets
// only in index order, which places 1 in subset 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur/core.hpp"

namespace schur {

/// Orders above this are never explored; a search that reaches it reports
/// exhaustive = false.
inline constexpr Element kMaxSearchOrder = 1024;

struct SearchBudget {
    std::optional<std::uint64_t> max_nodes = 1'000'000'000;
    std::optional<double> max_seconds = 300.0;
    /// Must be set to run with neither bound.
    bool allow_unbounded = false;

    [[nodiscard]] static SearchBudget unbounded() noexcept { return {std::nullopt, std::nullopt, true}; }
    /// Throws std::invalid_argument for non-positive bounds or a silent unbounded budget.
    void validate() const;
};

struct SearchResult {
    /// Lexicographically first canonical witness of the largest order reached
    /// with all r subsets in use; empty if the budget ran out before any.
    std::optional<Partition> best;
    bool exhaustive = false;
    std::uint64_t nodes_visited = 0;
    std::uint64_t witness_count_at_best_order = 0;

    [[nodiscard]] Element best_order() const noexcept { return best ? best->order() : 0; }
};

/// Raised by enumerate_all_max when the budget runs out, so an incomplete
/// enumeration is never mistaken for "none exist".
class SearchBudgetExceeded : public std::runtime_error {
public:
    SearchBudgetExceeded(std::uint64_t nodes, std::size_t found)
        : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes (" +
                             std::to_string(found) + " partitions found so far)"),
          nodes_(nodes),
          found_(found) {}

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::size_t found() const noexcept { return found_; }

private:
    std::uint64_t nodes_;
    std::size_t found_;
};

/// Largest n for which [1, n] splits into r sum-free subsets of `kind`.
[[nodiscard]] SearchResult search_max(std::size_t r, Kind kind, const SearchBudget& budget = {});

/// Every partition of [1, order] into exactly r non-empty subsets of `kind`,
/// one per relabeling class, in lexicographic order of the coloring.
[[nodiscard]] std::vector<Partition> enumerate_all_max(std::size_t r, Kind kind, Element order,
                                                       const SearchBudget& budget = {});

}  // namespace schur
