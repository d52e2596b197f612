#include "schur/search.hpp"

#include <algorithm>
#include <chrono>
#include <span>
#include <string>

namespace schur {

void SearchBudget::validate() const {
    if (max_nodes && *max_nodes == 0) {
        throw std::invalid_argument("max_nodes must be positive");
    }
    if (max_seconds && !(*max_seconds > 0.0)) {
        throw std::invalid_argument("max_seconds must be positive");
    }
    if (!max_nodes && !max_seconds && !allow_unbounded) {
        throw std::invalid_argument("search budget has no finite bound");
    }
}

namespace {

class Searcher {
public:
    enum class Mode { Maximize, Enumerate };

    Searcher(std::size_t r, Kind kind, const SearchBudget& budget, Mode mode, Element target)
        : r_(r),
          kind_(kind),
          budget_(budget),
          mode_(mode),
          target_(target),
          limit_(mode == Mode::Maximize ? kMaxSearchOrder : target),
          color_(static_cast<std::size_t>(limit_) + 1, 0),
          start_(std::chrono::steady_clock::now()) {
        const auto bits = static_cast<std::size_t>(limit_) + 1;
        members_.assign(r, DenseBitset(bits));
        forbidden_.assign(r, DenseBitset(bits));
        words_ = forbidden_.front().word_count();
        saved_.resize((static_cast<std::size_t>(limit_) + 1) * words_);
    }

    // Returns true when the whole tree was explored.
    bool run() {
        // Integer 1 always opens subset 0.
        ++nodes_;
        place(1, 0);
        used_ = 1;
        record(1);
        bool complete = descend(1);
        unplace(1, 0);
        return complete && !stopped_;
    }

    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }
    [[nodiscard]] bool hit_limit() const noexcept { return hit_limit_; }
    [[nodiscard]] Element best_order() const noexcept { return best_order_; }
    [[nodiscard]] std::uint64_t best_count() const noexcept { return best_count_; }
    [[nodiscard]] const std::vector<std::uint32_t>& best_coloring() const noexcept { return best_coloring_; }
    [[nodiscard]] const std::vector<std::vector<std::uint32_t>>& found() const noexcept { return found_; }

private:
    // All of [1, n] is colored; try to extend with n + 1.
    bool descend(Element n) {
        if (n == limit_) {
            if (mode_ == Mode::Maximize) {
                hit_limit_ = true;
            }
            return true;
        }
        const Element x = n + 1;
        const std::size_t open = used_;
        if (mode_ == Mode::Enumerate && static_cast<Element>(r_ - open) > target_ - n) {
            return true;
        }
        const std::size_t max_color = std::min(open, r_ - 1);
        for (std::size_t j = 0; j <= max_color; ++j) {
            if (forbidden_[j].test(static_cast<std::size_t>(x))) {
                continue;
            }
            if (out_of_budget()) {
                stopped_ = true;
                return false;
            }
            ++nodes_;
            place(x, j);
            if (j == open) {
                ++used_;
            }
            record(x);
            const bool complete = descend(x);
            if (j == open) {
                --used_;
            }
            unplace(x, j);
            if (!complete) {
                return false;
            }
        }
        return true;
    }

    void place(Element x, std::size_t j) {
        const auto ux = static_cast<std::size_t>(x);
        auto& forbid = forbidden_[j];
        std::copy(forbid.words().begin(), forbid.words().end(), saved_.begin() + static_cast<std::ptrdiff_t>(ux * words_));
        forbid.or_shifted(members_[j], ux);
        if (kind_ == Kind::Strong && 2 * ux < forbid.size()) {
            forbid.set(2 * ux);
        }
        members_[j].set(ux);
        color_[ux] = static_cast<std::uint32_t>(j);
    }

    void unplace(Element x, std::size_t j) {
        const auto ux = static_cast<std::size_t>(x);
        members_[j].reset(ux);
        forbidden_[j].assign_words(std::span<const DenseBitset::Word>(saved_).subspan(ux * words_, words_));
    }

    void record(Element n) {
        if (used_ != r_) {
            return;
        }
        if (mode_ == Mode::Enumerate) {
            if (n == target_) {
                found_.emplace_back(color_.begin() + 1, color_.begin() + 1 + static_cast<std::ptrdiff_t>(n));
            }
            return;
        }
        if (n > best_order_) {
            best_order_ = n;
            best_count_ = 1;
            best_coloring_.assign(color_.begin() + 1, color_.begin() + 1 + static_cast<std::ptrdiff_t>(n));
        } else if (n == best_order_) {
            ++best_count_;
        }
    }

    bool out_of_budget() {
        if (budget_.max_nodes && nodes_ >= *budget_.max_nodes) {
            return true;
        }
        if (budget_.max_seconds && (nodes_ & 0xFFF) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > *budget_.max_seconds) {
                return true;
            }
        }
        return false;
    }

    std::size_t r_;
    Kind kind_;
    SearchBudget budget_;
    Mode mode_;
    Element target_;
    Element limit_;

    std::vector<DenseBitset> members_;
    std::vector<DenseBitset> forbidden_;
    std::size_t words_ = 0;
    std::vector<DenseBitset::Word> saved_;
    std::vector<std::uint32_t> color_;
    std::size_t used_ = 0;

    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    bool hit_limit_ = false;
    Element best_order_ = 0;
    std::uint64_t best_count_ = 0;
    std::vector<std::uint32_t> best_coloring_;
    std::vector<std::vector<std::uint32_t>> found_;
    std::chrono::steady_clock::time_point start_;
};

Partition to_partition(const std::vector<std::uint32_t>& coloring, std::size_t r, Kind kind) {
    std::vector<std::vector<Element>> subsets(r);
    for (std::size_t i = 0; i < coloring.size(); ++i) {
        subsets[coloring[i]].push_back(static_cast<Element>(i + 1));
    }
    return make_partition(static_cast<Element>(coloring.size()), std::move(subsets), kind);
}

}  // namespace

SearchResult search_max(std::size_t r, Kind kind, const SearchBudget& budget) {
    if (r < 1) {
        throw std::invalid_argument("search needs at least one subset");
    }
    budget.validate();
    Searcher searcher(r, kind, budget, Searcher::Mode::Maximize, 0);
    const bool complete = searcher.run();

    SearchResult result;
    result.exhaustive = complete && !searcher.hit_limit();
    result.nodes_visited = searcher.nodes();
    result.witness_count_at_best_order = searcher.best_count();
    if (searcher.best_order() > 0) {
        result.best = to_partition(searcher.best_coloring(), r, kind);
    }
    return result;
}

std::vector<Partition> enumerate_all_max(std::size_t r, Kind kind, Element order, const SearchBudget& budget) {
    if (r < 1) {
        throw std::invalid_argument("search needs at least one subset");
    }
    if (order < 1) {
        throw std::invalid_argument("order must be positive");
    }
    budget.validate();
    std::vector<Partition> out;
    if (static_cast<std::size_t>(order) < r) {
        return out;
    }
    Searcher searcher(r, kind, budget, Searcher::Mode::Enumerate, order);
    if (!searcher.run()) {
        throw SearchBudgetExceeded(searcher.nodes(), searcher.found().size());
    }
    out.reserve(searcher.found().size());
    for (const auto& coloring : searcher.found()) {
        out.push_back(to_partition(coloring, r, kind));
    }
    return out;
}

}  // namespace schur
