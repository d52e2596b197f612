#pragma once

// Constructions that grow a strong partition of [1, m] into larger partitions.
//
// Each construction lays down translates of a small block, one per index
// i in [1, m], and merges translates whose indices share a subset of the
// strong input. The remaining integers form one or two tail subsets that
// extend a fixed prototype periodically. Outputs list the merged subsets in
// input order, followed by the tails.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schur/core.hpp"

namespace schur {

class ConstructionError : public std::runtime_error {
public:
    enum class Reason { WeakInput, InputNotStrong, OutputInvalid, ScheduleStage };

    ConstructionError(Reason reason, std::string message, VerificationReport report = {},
                      std::optional<std::size_t> stage = std::nullopt)
        : std::runtime_error(std::move(message)), reason_(reason), report_(std::move(report)), stage_(stage) {}

    [[nodiscard]] Reason reason() const noexcept { return reason_; }
    [[nodiscard]] const VerificationReport& report() const noexcept { return report_; }
    /// 1-based chain stage at which the failure happened, when raised by run_chain.
    [[nodiscard]] std::optional<std::size_t> stage() const noexcept { return stage_; }

private:
    Reason reason_;
    VerificationReport report_;
    std::optional<std::size_t> stage_;
};

/// Weak partition of [1, 4m+2] into r+1 subsets.
///
/// Subset j is the union of {4i-1, 4i, 4i+1} over i in Q_j; the tail is
/// {1, 2, 6, 10, ..., 4m+2}. The only weak pair is (1, 2), in the tail.
[[nodiscard]] Partition extend_weak_4m2(const Partition& q);

/// Weak partition of [1, 13m+8] into r+2 subsets.
///
/// Subset j is the union of [13i-4, 13i+4] over i in Q_j. The tails are
/// {1, 2, 4} + {13t+8} and {3} + {13t+5, 13t+6, 13t+7} for t in [0, m],
/// carrying exactly the weak pairs (1,2), (2,4), (4,8) and (3,6).
[[nodiscard]] Partition extend_weak_13m8(const Partition& q);

/// Strong partition of [1, 3m+1] into r+1 subsets.
///
/// Subset j is {3i-1, 3i : i in Q_j}; the tail is {1, 4, 7, ..., 3m+1}.
[[nodiscard]] Partition extend_strong_3m1(const Partition& q);

[[nodiscard]] Partition apply_rule(Rule rule, const Partition& q);

struct ChainStage {
    Rule rule;
    Partition partition;
    VerificationReport report;
};

struct ChainResult {
    Partition seed;
    std::vector<ChainStage> stages;

    [[nodiscard]] const Partition& final() const noexcept { return stages.empty() ? seed : stages.back().partition; }
    /// Seed order followed by the order after every stage.
    [[nodiscard]] std::vector<Element> orders() const;
};

/// Applies every step of `schedule` to `seed`, verifying each output.
[[nodiscard]] ChainResult run_chain(const Partition& seed, const ChainSchedule& schedule);

/// Ratio of consecutive orders, kept as the exact pair (to, from).
struct GrowthRatio {
    Rule rule;
    Element from = 0;
    Element to = 0;
    /// For a 13m+8 step, which adds two subsets: sqrt(to / from).
    std::optional<double> per_color;

    [[nodiscard]] double value() const noexcept { return static_cast<double>(to) / static_cast<double>(from); }
};

[[nodiscard]] GrowthRatio growth_ratio(Rule rule, Element from);

/// One ratio per stage. Requires at least one stage beyond the seed.
[[nodiscard]] std::vector<GrowthRatio> growth_ratios(const ChainResult& chain);

}  // namespace schur
