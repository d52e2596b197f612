#include "schur/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "schur/io.hpp"
#include "schur/search.hpp"
#include "schur/verify.hpp"

namespace schur::cli {
namespace {

namespace fs = std::filesystem;

std::string defect_name(CoverageDefect::Type type) {
    switch (type) {
        case CoverageDefect::Type::Missing:
            return "missing";
        case CoverageDefect::Type::Duplicate:
            return "duplicate";
        case CoverageDefect::Type::OutOfRange:
            return "out-of-range";
    }
    return "defect";
}

// Headerless files carry no kind claim; construction inputs are strong by
// intent, so the claim is taken from the rule and then verified.
Partition load_seed(const fs::path& path) {
    auto doc = parse_document(read_text_file(path));
    if (doc.headerless) {
        doc.kind = Kind::Strong;
    }
    return to_partition(doc);
}

void emit(const fs::path& target, const std::string& text, std::ostream& out) {
    if (target.empty()) {
        out << text;
    } else {
        write_text_file(target, text);
    }
}

int cmd_verify(const fs::path& file, const std::string& kind_flag, std::ostream& out) {
    const auto doc = parse_document(read_text_file(file));
    const Kind kind = kind_flag.empty() ? doc.kind : *parse_kind(kind_flag);
    const auto report = verify_subsets(doc.n, doc.body, kind);
    out << describe(report, doc.n, doc.body.size());
    return report.valid ? kOk : kInvalid;
}

int cmd_construct(const std::string& rule_name, const fs::path& seed_file, const fs::path& output,
                  std::ostream& out, std::ostream& err) {
    const Rule rule = *parse_rule(rule_name);
    const Partition seed = load_seed(seed_file);
    try {
        const Partition result = apply_rule(rule, seed);
        emit(output, format_partition(result), out);
        if (!output.empty()) {
            out << "wrote " << to_string(result.kind()) << " partition of [1," << result.order() << "] into "
                << result.subset_count() << " subsets to " << output.string() << '\n';
        }
        return kOk;
    } catch (const ConstructionError& e) {
        err << "construct: " << e.what() << '\n';
        if (!e.report().violations.empty()) {
            err << describe(e.report(), seed.order(), seed.subset_count());
        }
        return kInvalid;
    }
}

int cmd_chain(const fs::path& seed_file, const std::string& schedule_text, const fs::path& dir, std::ostream& out,
              std::ostream& err) {
    const auto schedule = ChainSchedule::parse(schedule_text);
    const Partition seed = load_seed(seed_file);
    ChainResult chain{seed, {}};
    try {
        chain = run_chain(seed, schedule);
    } catch (const ConstructionError& e) {
        err << "chain: " << e.what() << '\n';
        return kInvalid;
    }

    if (!dir.empty()) {
        fs::create_directories(dir);
    }
    for (std::size_t i = 0; i <= chain.stages.size(); ++i) {
        const Partition& p = i == 0 ? chain.seed : chain.stages[i - 1].partition;
        const std::string label = i == 0 ? "seed" : std::string(to_string(chain.stages[i - 1].rule));
        if (dir.empty()) {
            out << "# stage " << i << ' ' << label << '\n' << format_partition(p);
        } else {
            char name[64];
            std::snprintf(name, sizeof name, "stage%02zu-%s.txt", i, label.c_str());
            write_text_file(dir / name, format_partition(p));
        }
    }
    if (!chain.stages.empty()) {
        out << ratio_table(growth_ratios(chain));
    }
    return kOk;
}

int cmd_search(std::size_t colors, const std::string& kind_flag, std::optional<std::uint64_t> max_nodes,
               std::optional<double> max_seconds, bool unbounded, const fs::path& output, std::ostream& out) {
    SearchBudget budget;
    if (unbounded) {
        budget = SearchBudget::unbounded();
    }
    if (max_nodes) {
        budget.max_nodes = max_nodes;
    }
    if (max_seconds) {
        budget.max_seconds = max_seconds;
    }
    const auto result = search_max(colors, *parse_kind(kind_flag), budget);
    std::ostringstream text;
    text << "# colors " << colors << " kind " << kind_flag << '\n'
         << "# best order " << result.best_order() << '\n'
         << "# exhaustive " << (result.exhaustive ? "true" : "false") << '\n'
         << "# nodes " << result.nodes_visited << '\n'
         << "# witnesses at best order " << result.witness_count_at_best_order << '\n';
    if (result.best) {
        text << format_partition(*result.best);
    }
    emit(output, text.str(), out);
    return kOk;
}

int cmd_pairs(const fs::path& file, std::ostream& out) {
    const Partition p = parse_partition(read_text_file(file));
    const auto pairs = enumerate_weak_pairs(p);
    for (const auto& pair : pairs) {
        out << "subset " << pair.subset.index << ": (" << pair.a << ", " << 2 * pair.a << ")\n";
    }
    out << pairs.size() << " weak pair" << (pairs.size() == 1 ? "" : "s") << '\n';
    return kOk;
}

int cmd_stats(const std::vector<fs::path>& files, std::ostream& out) {
    std::optional<Element> previous;
    for (const auto& file : files) {
        const Partition p = parse_partition(read_text_file(file));
        out << file.string() << ": " << to_string(p.kind()) << " r=" << p.subset_count() << " n=" << p.order()
            << " sizes=";
        for (std::size_t j = 0; j < p.subset_count(); ++j) {
            out << (j == 0 ? "" : ",") << p.subsets()[j].size();
        }
        if (previous) {
            out << " ratio=" << std::fixed << std::setprecision(6)
                << static_cast<double>(p.order()) / static_cast<double>(*previous) << std::defaultfloat;
        }
        out << '\n';
        previous = p.order();
    }
    return kOk;
}

}  // namespace

std::string describe(const VerificationReport& report, Element n, std::size_t r) {
    std::ostringstream out;
    out << (report.valid ? "valid " : "invalid ") << to_string(report.kind_checked) << " partition of [1," << n
        << "] into " << r << " subsets";
    if (!report.valid) {
        out << ": " << report.violations.size() << " violation" << (report.violations.size() == 1 ? "" : "s")
            << ", " << report.coverage_defects.size() << " coverage defect"
            << (report.coverage_defects.size() == 1 ? "" : "s");
    }
    out << '\n';
    for (const auto& v : report.violations) {
        out << "violation subset " << v.subset.index << ": " << v.a << " + " << v.b << " = " << v.c << '\n';
    }
    for (const auto& d : report.coverage_defects) {
        out << defect_name(d.type) << ' ' << d.value << '\n';
    }
    return std::move(out).str();
}

std::string ratio_table(const std::vector<GrowthRatio>& ratios) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "stage" << std::setw(6) << "rule" << std::right << std::setw(12) << "from"
        << std::setw(12) << "to" << std::setw(12) << "ratio" << std::setw(12) << "per-color" << '\n';
    out << std::fixed << std::setprecision(6);
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        const auto& ratio = ratios[i];
        out << std::left << std::setw(6) << i + 1 << std::setw(6) << to_string(ratio.rule) << std::right
            << std::setw(12) << ratio.from << std::setw(12) << ratio.to << std::setw(12) << ratio.value();
        if (ratio.per_color) {
            out << std::setw(12) << *ratio.per_color;
        } else {
            out << std::setw(12) << "-";
        }
        out << '\n';
    }
    return std::move(out).str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and search Schur-type partitions of [1, n]", "schur"};
    app.require_subcommand(1, 1);

    const std::vector<std::string> kinds{"strong", "weak"};

    fs::path verify_file;
    std::string verify_kind;
    auto* verify = app.add_subcommand("verify", "Certify a partition file (exit 0 valid, 1 invalid)");
    verify->add_option("file", verify_file, "Partition file")->required()->check(CLI::ExistingFile);
    verify->add_option("--kind", verify_kind, "Property to check; defaults to the file's claimed kind")
        ->check(CLI::IsMember(kinds));

    std::string construct_rule;
    fs::path construct_seed;
    fs::path construct_out;
    auto* construct = app.add_subcommand("construct", "Apply one construction rule to a strong seed");
    construct->add_option("--rule", construct_rule, "3m1, 4m2 or 13m8")
        ->required()
        ->check(CLI::IsMember({"3m1", "4m2", "13m8"}));
    construct->add_option("seed", construct_seed, "Strong seed partition file")
        ->required()
        ->check(CLI::ExistingFile);
    construct->add_option("-o,--output", construct_out, "Output file (default: standard output)");

    fs::path chain_seed;
    std::string chain_schedule;
    fs::path chain_dir;
    auto* chain = app.add_subcommand("chain", "Apply a schedule of rules, verifying every stage");
    chain->add_option("seed", chain_seed, "Strong seed partition file")->required()->check(CLI::ExistingFile);
    chain->add_option("--schedule", chain_schedule, "Comma-separated rules, e.g. 3m1*5,4m2")->required();
    chain->add_option("-o,--output-dir", chain_dir, "Directory for stage files (default: standard output)");

    std::size_t search_colors = 0;
    std::string search_kind;
    std::optional<std::uint64_t> search_nodes;
    std::optional<double> search_seconds;
    bool search_unbounded = false;
    fs::path search_out;
    auto* search = app.add_subcommand("search", "Backtracking search for the largest partition");
    search->add_option("--colors", search_colors, "Number of subsets r")->required()->check(CLI::PositiveNumber);
    search->add_option("--kind", search_kind, "strong or weak")->required()->check(CLI::IsMember(kinds));
    search->add_option("--max-nodes", search_nodes, "Node budget (default 1e9)")->check(CLI::PositiveNumber);
    search->add_option("--max-seconds", search_seconds, "Time budget (default 300)")->check(CLI::PositiveNumber);
    search->add_flag("--unbounded", search_unbounded, "Drop the default budget; explicit bounds still apply");
    search->add_option("-o,--output", search_out, "Output file (default: standard output)");

    fs::path pairs_file;
    auto* pairs = app.add_subcommand("pairs", "List weak pairs (a, 2a) sharing a subset");
    pairs->add_option("file", pairs_file, "Partition file")->required()->check(CLI::ExistingFile);

    std::vector<fs::path> stats_files;
    auto* stats = app.add_subcommand("stats", "Orders, subset sizes and ratios between consecutive files");
    stats->add_option("files", stats_files, "Partition files")->required()->check(CLI::ExistingFile);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*verify) {
            return cmd_verify(verify_file, verify_kind, out);
        }
        if (*construct) {
            return cmd_construct(construct_rule, construct_seed, construct_out, out, err);
        }
        if (*chain) {
            return cmd_chain(chain_seed, chain_schedule, chain_dir, out, err);
        }
        if (*search) {
            return cmd_search(search_colors, search_kind, search_nodes, search_seconds, search_unbounded, search_out,
                              out);
        }
        if (*pairs) {
            return cmd_pairs(pairs_file, out);
        }
        if (*stats) {
            return cmd_stats(stats_files, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace schur::cli
