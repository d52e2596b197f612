#include "schur/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <string>

namespace schur {

std::string_view to_string(Kind kind) noexcept {
    return kind == Kind::Strong ? "strong" : "weak";
}

std::optional<Kind> parse_kind(std::string_view text) noexcept {
    if (text == "strong") {
        return Kind::Strong;
    }
    if (text == "weak") {
        return Kind::Weak;
    }
    return std::nullopt;
}

Partition make_partition(Element n, std::vector<std::vector<Element>> subsets, Kind kind) {
    using Code = PartitionError::Code;
    if (n < 1) {
        throw PartitionError(Code::BadOrder, "partition order must be positive, got " + std::to_string(n), n);
    }
    if (subsets.size() >= std::numeric_limits<std::uint32_t>::max()) {
        throw PartitionError(Code::BadOrder, "too many subsets");
    }

    const auto un = static_cast<std::size_t>(n);
    std::vector<std::uint32_t> owner(un + 1, 0);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        const SubsetId id{j + 1};
        auto& subset = subsets[j];
        if (subset.empty()) {
            throw PartitionError(Code::EmptySubset, "subset " + std::to_string(id.index) + " is empty", 0, id);
        }
        for (Element x : subset) {
            if (x < 1 || x > n) {
                throw PartitionError(Code::OutOfRange,
                                     "element " + std::to_string(x) + " in subset " + std::to_string(id.index) +
                                         " outside [1," + std::to_string(n) + "]",
                                     x, id);
            }
        }
        std::sort(subset.begin(), subset.end());
        for (Element x : subset) {
            auto& slot = owner[static_cast<std::size_t>(x)];
            if (slot == id.index) {
                throw PartitionError(Code::DuplicateInSubset,
                                     "element " + std::to_string(x) + " repeated in subset " +
                                         std::to_string(id.index),
                                     x, id);
            }
            if (slot != 0) {
                throw PartitionError(Code::Overlap,
                                     "element " + std::to_string(x) + " appears in subsets " + std::to_string(slot) +
                                         " and " + std::to_string(id.index),
                                     x, id);
            }
            slot = static_cast<std::uint32_t>(id.index);
        }
    }
    for (std::size_t x = 1; x <= un; ++x) {
        if (owner[x] == 0) {
            throw PartitionError(Code::MissingElement,
                                 "element " + std::to_string(x) + " of [1," + std::to_string(n) +
                                     "] is not covered by any subset",
                                 static_cast<Element>(x));
        }
    }

    Partition p;
    p.n_ = n;
    p.kind_ = kind;
    p.members_.reserve(subsets.size());
    for (const auto& subset : subsets) {
        DenseBitset bits(un + 1);
        for (Element x : subset) {
            bits.set(static_cast<std::size_t>(x));
        }
        p.members_.push_back(std::move(bits));
    }
    p.subsets_ = std::move(subsets);
    p.owner_ = std::move(owner);
    return p;
}

Partition Partition::with_kind(Kind kind) const {
    Partition copy = *this;
    copy.kind_ = kind;
    return copy;
}

std::string_view to_string(Rule rule) noexcept {
    switch (rule) {
        case Rule::Strong3m1:
            return "3m1";
        case Rule::Weak4m2:
            return "4m2";
        case Rule::Weak13m8:
            return "13m8";
    }
    return "?";
}

std::optional<Rule> parse_rule(std::string_view text) noexcept {
    if (text == "3m1") {
        return Rule::Strong3m1;
    }
    if (text == "4m2") {
        return Rule::Weak4m2;
    }
    if (text == "13m8") {
        return Rule::Weak13m8;
    }
    return std::nullopt;
}

Kind output_kind(Rule rule) noexcept {
    return rule == Rule::Strong3m1 ? Kind::Strong : Kind::Weak;
}

Element output_order(Rule rule, Element m) {
    if (m < 1) {
        throw std::invalid_argument("input order must be positive");
    }
    const auto [mul, add] = [rule]() -> std::pair<Element, Element> {
        switch (rule) {
            case Rule::Strong3m1:
                return {3, 1};
            case Rule::Weak4m2:
                return {4, 2};
            case Rule::Weak13m8:
                return {13, 8};
        }
        return {0, 0};
    }();
    if (m > (std::numeric_limits<Element>::max() - add) / mul) {
        throw std::overflow_error("output order overflows");
    }
    return mul * m + add;
}

std::size_t output_subset_count(Rule rule, std::size_t r) noexcept {
    return rule == Rule::Weak13m8 ? r + 2 : r + 1;
}

ChainSchedule::ChainSchedule(std::vector<Rule> steps) : steps_(std::move(steps)) {
    for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
        if (output_kind(steps_[i]) == Kind::Weak) {
            throw std::invalid_argument("step " + std::to_string(i + 1) + " (" + std::string(to_string(steps_[i])) +
                                        ") produces a weak partition and must be the last step");
        }
    }
}

ChainSchedule ChainSchedule::parse(std::string_view text) {
    std::vector<Rule> steps;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view token = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        std::size_t repeat = 1;
        if (const auto star = token.find('*'); star != std::string_view::npos) {
            const std::string_view count = token.substr(star + 1);
            const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), repeat);
            if (ec != std::errc{} || ptr != count.data() + count.size() || repeat == 0) {
                throw std::invalid_argument("bad repeat count in schedule step '" + std::string(token) + "'");
            }
            token = token.substr(0, star);
        }
        const auto rule = parse_rule(token);
        if (!rule) {
            throw std::invalid_argument("unknown rule '" + std::string(token) + "' (expected 3m1, 4m2 or 13m8)");
        }
        steps.insert(steps.end(), repeat, *rule);
    }
    if (steps.empty()) {
        throw std::invalid_argument("empty schedule");
    }
    return ChainSchedule(std::move(steps));
}

}  // namespace schur
