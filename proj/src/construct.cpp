#include "schur/construct.hpp"

#include <cmath>
#include <string>

#include "schur/verify.hpp"

namespace schur {
namespace {

void require_strong(const Partition& q, Rule rule) {
    const std::string name(to_string(rule));
    if (q.kind() != Kind::Strong) {
        throw ConstructionError(ConstructionError::Reason::WeakInput,
                                "rule " + name + " needs a strong partition; input claims kind weak");
    }
    auto report = verify_partition(q, Kind::Strong);
    if (!report.valid) {
        const auto& v = report.violations.front();
        throw ConstructionError(ConstructionError::Reason::InputNotStrong,
                                "rule " + name + " input is not strongly sum-free: " + std::to_string(v.a) + " + " +
                                    std::to_string(v.b) + " = " + std::to_string(v.c) + " in subset " +
                                    std::to_string(v.subset.index),
                                std::move(report));
    }
}

// Unions of the translates {block_lo + step*i, ..., block_hi + step*i} over
// each subset of q, in input order.
std::vector<std::vector<Element>> merged_translates(const Partition& q, Element step, Element block_lo,
                                                    Element block_hi) {
    std::vector<std::vector<Element>> out;
    out.reserve(q.subset_count() + 2);
    for (const auto& indices : q.subsets()) {
        std::vector<Element> merged;
        merged.reserve(indices.size() * static_cast<std::size_t>(block_hi - block_lo + 1));
        for (Element i : indices) {
            for (Element x = step * i + block_lo; x <= step * i + block_hi; ++x) {
                merged.push_back(x);
            }
        }
        out.push_back(std::move(merged));
    }
    return out;
}

Partition finish(Rule rule, Element order, std::vector<std::vector<Element>> subsets) {
    const Kind kind = output_kind(rule);
    Partition p = make_partition(order, std::move(subsets), kind);
    auto report = verify_partition(p, kind);
    if (!report.valid) {
        throw ConstructionError(ConstructionError::Reason::OutputInvalid,
                                "rule " + std::string(to_string(rule)) + " produced an invalid " +
                                    std::string(to_string(kind)) + " partition of [1," + std::to_string(order) + "]",
                                std::move(report));
    }
    return p;
}

}  // namespace

Partition extend_weak_4m2(const Partition& q) {
    require_strong(q, Rule::Weak4m2);
    const Element m = q.order();
    auto subsets = merged_translates(q, 4, -1, 1);

    std::vector<Element> tail{1, 2};
    for (Element t = 1; t <= m; ++t) {
        tail.push_back(4 * t + 2);
    }
    subsets.push_back(std::move(tail));
    return finish(Rule::Weak4m2, output_order(Rule::Weak4m2, m), std::move(subsets));
}

Partition extend_weak_13m8(const Partition& q) {
    require_strong(q, Rule::Weak13m8);
    const Element m = q.order();
    auto subsets = merged_translates(q, 13, -4, 4);

    std::vector<Element> powers{1, 2, 4};
    std::vector<Element> triples{3};
    for (Element t = 0; t <= m; ++t) {
        powers.push_back(13 * t + 8);
        triples.insert(triples.end(), {13 * t + 5, 13 * t + 6, 13 * t + 7});
    }
    subsets.push_back(std::move(powers));
    subsets.push_back(std::move(triples));
    return finish(Rule::Weak13m8, output_order(Rule::Weak13m8, m), std::move(subsets));
}

Partition extend_strong_3m1(const Partition& q) {
    require_strong(q, Rule::Strong3m1);
    const Element m = q.order();
    auto subsets = merged_translates(q, 3, -1, 0);

    std::vector<Element> tail;
    for (Element t = 0; t <= m; ++t) {
        tail.push_back(3 * t + 1);
    }
    subsets.push_back(std::move(tail));
    return finish(Rule::Strong3m1, output_order(Rule::Strong3m1, m), std::move(subsets));
}

Partition apply_rule(Rule rule, const Partition& q) {
    switch (rule) {
        case Rule::Strong3m1:
            return extend_strong_3m1(q);
        case Rule::Weak4m2:
            return extend_weak_4m2(q);
        case Rule::Weak13m8:
            return extend_weak_13m8(q);
    }
    throw std::invalid_argument("unknown rule");
}

std::vector<Element> ChainResult::orders() const {
    std::vector<Element> out{seed.order()};
    for (const auto& stage : stages) {
        out.push_back(stage.partition.order());
    }
    return out;
}

ChainResult run_chain(const Partition& seed, const ChainSchedule& schedule) {
    ChainResult result{seed, {}};
    const Partition* current = &result.seed;
    result.stages.reserve(schedule.steps().size());
    for (std::size_t i = 0; i < schedule.steps().size(); ++i) {
        const Rule rule = schedule.steps()[i];
        const std::size_t stage = i + 1;
        try {
            Partition next = apply_rule(rule, *current);
            auto report = verify_partition(next, output_kind(rule));
            if (!report.valid) {
                throw ConstructionError(ConstructionError::Reason::OutputInvalid, "stage output failed verification",
                                        std::move(report));
            }
            result.stages.push_back({rule, std::move(next), std::move(report)});
        } catch (const ConstructionError& e) {
            throw ConstructionError(ConstructionError::Reason::ScheduleStage,
                                    "chain stage " + std::to_string(stage) + " (" + std::string(to_string(rule)) +
                                        "): " + e.what(),
                                    e.report(), stage);
        }
        current = &result.stages.back().partition;
    }
    return result;
}

GrowthRatio growth_ratio(Rule rule, Element from) {
    GrowthRatio ratio{rule, from, output_order(rule, from), std::nullopt};
    if (rule == Rule::Weak13m8) {
        ratio.per_color = std::sqrt(ratio.value());
    }
    return ratio;
}

std::vector<GrowthRatio> growth_ratios(const ChainResult& chain) {
    if (chain.stages.empty()) {
        throw std::invalid_argument("growth ratios need at least one construction stage");
    }
    std::vector<GrowthRatio> out;
    Element from = chain.seed.order();
    for (const auto& stage : chain.stages) {
        GrowthRatio ratio{stage.rule, from, stage.partition.order(), std::nullopt};
        if (stage.rule == Rule::Weak13m8) {
            ratio.per_color = std::sqrt(ratio.value());
        }
        out.push_back(ratio);
        from = stage.partition.order();
    }
    return out;
}

}  // namespace schur
