#pragma once

// Domain model for partitions of the integer interval [1, n].

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schur/bitset.hpp"

namespace schur {

using Element = std::int64_t;

/// Which sum-free property a partition claims (or is checked against).
/// Strong forbids every a + b = c including a = b; Weak only forbids a != b.
enum class Kind { Strong, Weak };

[[nodiscard]] std::string_view to_string(Kind kind) noexcept;
[[nodiscard]] std::optional<Kind> parse_kind(std::string_view text) noexcept;

/// 1-based position of a subset within its partition.
struct SubsetId {
    std::size_t index = 1;

    [[nodiscard]] std::size_t offset() const noexcept { return index - 1; }
    friend auto operator<=>(const SubsetId&, const SubsetId&) = default;
};

/// Raised by make_partition when the input is not a partition of [1, n].
class PartitionError : public std::invalid_argument {
public:
    enum class Code { BadOrder, EmptySubset, OutOfRange, DuplicateInSubset, Overlap, MissingElement };

    PartitionError(Code code, std::string message, Element element = 0, SubsetId subset = {})
        : std::invalid_argument(std::move(message)), code_(code), element_(element), subset_(subset) {}

    [[nodiscard]] Code code() const noexcept { return code_; }
    [[nodiscard]] Element element() const noexcept { return element_; }
    [[nodiscard]] SubsetId subset() const noexcept { return subset_; }

private:
    Code code_;
    Element element_;
    SubsetId subset_;
};

class Partition;

/// Validates and normalizes (ascending order) a family of subsets covering [1, n].
[[nodiscard]] Partition make_partition(Element n, std::vector<std::vector<Element>> subsets, Kind kind);

/// Immutable partition of [1, n] into r non-empty subsets.
///
/// The kind is the property the partition claims; it is not checked here.
/// Each subset carries a dense membership bitset indexed by element, and an
/// owner table maps every element to its subset.
class Partition {
public:
    [[nodiscard]] Element order() const noexcept { return n_; }
    [[nodiscard]] std::size_t subset_count() const noexcept { return subsets_.size(); }
    [[nodiscard]] Kind kind() const noexcept { return kind_; }

    [[nodiscard]] const std::vector<std::vector<Element>>& subsets() const noexcept { return subsets_; }
    [[nodiscard]] std::span<const Element> subset(SubsetId id) const { return subsets_.at(id.offset()); }
    [[nodiscard]] const DenseBitset& membership(SubsetId id) const { return members_.at(id.offset()); }

    [[nodiscard]] bool contains(SubsetId id, Element x) const noexcept {
        return id.index >= 1 && id.index <= subsets_.size() && x >= 1 && x <= n_ &&
               members_[id.offset()].test(static_cast<std::size_t>(x));
    }
    /// Subset holding x; x must lie in [1, order()].
    [[nodiscard]] SubsetId owner(Element x) const { return SubsetId{owner_.at(static_cast<std::size_t>(x))}; }

    /// Same subsets with a different claimed kind.
    [[nodiscard]] Partition with_kind(Kind kind) const;

    friend bool operator==(const Partition& lhs, const Partition& rhs) noexcept {
        return lhs.n_ == rhs.n_ && lhs.kind_ == rhs.kind_ && lhs.subsets_ == rhs.subsets_;
    }

private:
    friend Partition make_partition(Element, std::vector<std::vector<Element>>, Kind);
    Partition() = default;

    Element n_ = 0;
    Kind kind_ = Kind::Weak;
    std::vector<std::vector<Element>> subsets_;
    std::vector<DenseBitset> members_;
    std::vector<std::uint32_t> owner_;
};

/// A solution of a + b = c inside one subset, with a <= b.
struct Violation {
    SubsetId subset;
    Element a = 0;
    Element b = 0;
    Element c = 0;
    bool distinct = true;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// A pair (a, 2a) sharing a subset.
struct WeakPair {
    SubsetId subset;
    Element a = 0;

    friend bool operator==(const WeakPair&, const WeakPair&) = default;
};

struct CoverageDefect {
    enum class Type { Missing, Duplicate, OutOfRange };
    Type type = Type::Missing;
    Element value = 0;

    friend bool operator==(const CoverageDefect&, const CoverageDefect&) = default;
};

struct VerificationReport {
    bool valid = true;
    Kind kind_checked = Kind::Weak;
    std::vector<Violation> violations;
    std::vector<CoverageDefect> coverage_defects;
};

/// One application of a construction rule.
enum class Rule { Strong3m1, Weak4m2, Weak13m8 };

[[nodiscard]] std::string_view to_string(Rule rule) noexcept;
[[nodiscard]] std::optional<Rule> parse_rule(std::string_view text) noexcept;
/// Kind of partition the rule produces.
[[nodiscard]] Kind output_kind(Rule rule) noexcept;
/// Order of the output for an input of order m: 3m+1, 4m+2 or 13m+8.
[[nodiscard]] Element output_order(Rule rule, Element m);
/// Subset count of the output for an input with r subsets: r+1 or r+2.
[[nodiscard]] std::size_t output_subset_count(Rule rule, std::size_t r) noexcept;

/// Sequence of rules; weak-producing rules may only appear last.
class ChainSchedule {
public:
    /// Throws std::invalid_argument if a step follows a weak-producing step.
    explicit ChainSchedule(std::vector<Rule> steps);

    /// Comma-separated rule names, e.g. "3m1,3m1,4m2". Repetition as "3m1*5" is accepted.
    [[nodiscard]] static ChainSchedule parse(std::string_view text);

    [[nodiscard]] const std::vector<Rule>& steps() const noexcept { return steps_; }

private:
    std::vector<Rule> steps_;
};

}  // namespace schur
