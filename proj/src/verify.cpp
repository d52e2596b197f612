#include "schur/verify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace schur {
namespace {

// For each a in the subset, the word-wise AND of the membership mask with the
// mask shifted up by a yields every c = a + b with b also present. Scanning
// only c >= 2a gives each unordered solution once with a <= b.
void collect_violations(std::span<const Element> sorted, const DenseBitset& members, Kind kind, SubsetId id,
                        std::vector<Violation>& out) {
    if (sorted.empty()) {
        return;
    }
    const auto top = static_cast<std::size_t>(sorted.back());
    const std::size_t last_word = top / DenseBitset::kWordBits;
    for (Element a : sorted) {
        const auto ua = static_cast<std::size_t>(a);
        const std::size_t start = kind == Kind::Strong ? 2 * ua : 2 * ua + 1;
        if (start > top) {
            break;
        }
        for (std::size_t w = start / DenseBitset::kWordBits; w <= last_word; ++w) {
            DenseBitset::Word hits = members.word(w) & members.shifted_word(w, ua);
            if (w == start / DenseBitset::kWordBits) {
                hits &= ~DenseBitset::Word{0} << (start % DenseBitset::kWordBits);
            }
            while (hits != 0) {
                const auto c = static_cast<Element>(w * DenseBitset::kWordBits +
                                                    static_cast<std::size_t>(std::countr_zero(hits)));
                hits &= hits - 1;
                out.push_back(Violation{id, a, c - a, c, c - a != a});
            }
        }
    }
}

}  // namespace

std::vector<Violation> check_subset(std::span<const Element> subset, Element universe_bound, Kind kind,
                                    SubsetId id) {
    if (universe_bound < 1) {
        throw std::invalid_argument("universe bound must be positive");
    }
    DenseBitset members(static_cast<std::size_t>(universe_bound) + 1);
    Element previous = 0;
    for (Element x : subset) {
        if (x <= previous || x > universe_bound) {
            throw std::invalid_argument("subset must be strictly ascending within [1," +
                                        std::to_string(universe_bound) + "], offending element " +
                                        std::to_string(x));
        }
        members.set(static_cast<std::size_t>(x));
        previous = x;
    }
    std::vector<Violation> out;
    collect_violations(subset, members, kind, id, out);
    return out;
}

VerificationReport verify_partition(const Partition& p, Kind kind) {
    VerificationReport report;
    report.kind_checked = kind;
    for (std::size_t j = 0; j < p.subset_count(); ++j) {
        const SubsetId id{j + 1};
        collect_violations(p.subset(id), p.membership(id), kind, id, report.violations);
    }
    report.valid = report.violations.empty();
    return report;
}

VerificationReport verify_subsets(Element n, const std::vector<std::vector<Element>>& subsets, Kind kind) {
    VerificationReport report;
    report.kind_checked = kind;
    if (n < 1) {
        throw std::invalid_argument("partition order must be positive");
    }
    const auto un = static_cast<std::size_t>(n);

    std::vector<std::uint32_t> seen(un + 1, 0);
    std::vector<Element> out_of_range;
    for (const auto& subset : subsets) {
        for (Element x : subset) {
            if (x < 1 || x > n) {
                out_of_range.push_back(x);
            } else {
                ++seen[static_cast<std::size_t>(x)];
            }
        }
    }
    std::sort(out_of_range.begin(), out_of_range.end());
    out_of_range.erase(std::unique(out_of_range.begin(), out_of_range.end()), out_of_range.end());
    for (Element x : out_of_range) {
        report.coverage_defects.push_back({CoverageDefect::Type::OutOfRange, x});
    }
    for (std::size_t x = 1; x <= un; ++x) {
        if (seen[x] == 0) {
            report.coverage_defects.push_back({CoverageDefect::Type::Missing, static_cast<Element>(x)});
        } else if (seen[x] > 1) {
            report.coverage_defects.push_back({CoverageDefect::Type::Duplicate, static_cast<Element>(x)});
        }
    }

    for (std::size_t j = 0; j < subsets.size(); ++j) {
        std::vector<Element> sorted;
        sorted.reserve(subsets[j].size());
        std::copy_if(subsets[j].begin(), subsets[j].end(), std::back_inserter(sorted),
                     [n](Element x) { return x >= 1 && x <= n; });
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        DenseBitset members(un + 1);
        for (Element x : sorted) {
            members.set(static_cast<std::size_t>(x));
        }
        collect_violations(sorted, members, kind, SubsetId{j + 1}, report.violations);
    }
    report.valid = report.violations.empty() && report.coverage_defects.empty();
    return report;
}

std::vector<WeakPair> enumerate_weak_pairs(const Partition& p) {
    std::vector<WeakPair> pairs;
    for (std::size_t j = 0; j < p.subset_count(); ++j) {
        const SubsetId id{j + 1};
        for (Element a : p.subset(id)) {
            if (2 * a > p.order()) {
                break;
            }
            if (p.contains(id, 2 * a)) {
                pairs.push_back({id, a});
            }
        }
    }
    return pairs;
}

bool brute_force_check(std::span<const Element> subset, Kind kind) {
    if (subset.size() > kBruteForceLimit) {
        throw std::length_error("brute_force_check limited to " + std::to_string(kBruteForceLimit) + " elements");
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = 0; j < subset.size(); ++j) {
            if (kind == Kind::Weak && subset[i] == subset[j]) {
                continue;
            }
            for (std::size_t k = 0; k < subset.size(); ++k) {
                if (subset[i] + subset[j] == subset[k]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace schur
