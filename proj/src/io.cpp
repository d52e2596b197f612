#include "schur/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace schur {
namespace {

struct Token {
    std::string_view text;
    std::size_t column = 0;
};

std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            tokens.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return tokens;
}

template <typename Int>
Int parse_integer(const Token& token, std::size_t line, std::string_view what) {
    const bool digits = !token.text.empty() &&
                        std::all_of(token.text.begin(), token.text.end(), [](char c) { return c >= '0' && c <= '9'; });
    Int value{};
    if (digits) {
        const auto [ptr, ec] = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);
        if (ec == std::errc{} && ptr == token.text.data() + token.text.size()) {
            return value;
        }
    }
    throw ParseError(line, token.column, "malformed " + std::string(what) + " '" + std::string(token.text) + "'");
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Non-blank, non-comment lines with a trailing CR stripped.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        lines.push_back({number, line});
    }
    return lines;
}

}  // namespace

PartitionDocument parse_document(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) {
        throw ParseError(1, 1, "no partition data");
    }

    PartitionDocument doc;
    std::size_t body_start = 0;
    const auto first = split_tokens(lines.front().text);
    if (first.front().text == "schur") {
        const std::size_t ln = lines.front().number;
        if (first.size() != 5) {
            throw ParseError(ln, first.front().column, "header must read 'schur v1 <kind> <r> <n>'");
        }
        if (first[1].text != "v1") {
            throw ParseError(ln, first[1].column, "unsupported format version '" + std::string(first[1].text) + "'");
        }
        const auto kind = parse_kind(first[2].text);
        if (!kind) {
            throw ParseError(ln, first[2].column, "kind must be 'strong' or 'weak'");
        }
        doc.kind = *kind;
        doc.r = parse_integer<std::size_t>(first[3], ln, "subset count");
        doc.n = parse_integer<Element>(first[4], ln, "order");
        if (doc.r == 0 || doc.n == 0) {
            throw ParseError(ln, doc.r == 0 ? first[3].column : first[4].column, "subset count and order must be positive");
        }
        body_start = 1;
    } else {
        doc.headerless = true;
    }

    Element largest = 0;
    for (std::size_t li = body_start; li < lines.size(); ++li) {
        const auto& line = lines[li];
        std::vector<Element> subset;
        Element previous = 0;
        for (const auto& token : split_tokens(line.text)) {
            const auto x = parse_integer<Element>(token, line.number, "integer");
            if (x == 0) {
                throw ParseError(line.number, token.column, "elements must be at least 1");
            }
            if (!doc.headerless) {
                if (x > doc.n) {
                    throw ParseError(line.number, token.column,
                                     "element " + std::to_string(x) + " exceeds header order " + std::to_string(doc.n));
                }
                if (x == previous) {
                    throw ParseError(line.number, token.column, "duplicate element " + std::to_string(x));
                }
                if (x < previous) {
                    throw ParseError(line.number, token.column, "elements must be ascending");
                }
            }
            previous = x;
            largest = std::max(largest, x);
            subset.push_back(x);
        }
        doc.body.push_back(std::move(subset));
        doc.body_lines.push_back(line.number);
    }

    if (doc.headerless) {
        doc.r = doc.body.size();
        doc.n = largest;
    } else {
        const std::size_t last_line = lines.back().number;
        if (doc.body.size() != doc.r) {
            throw ParseError(last_line, 1,
                             "header declares " + std::to_string(doc.r) + " subsets but body has " +
                                 std::to_string(doc.body.size()));
        }
        if (largest != doc.n) {
            throw ParseError(last_line, 1,
                             "header declares order " + std::to_string(doc.n) + " but largest element is " +
                                 std::to_string(largest));
        }
    }
    return doc;
}

Partition to_partition(const PartitionDocument& doc) {
    // Source line of each element's first occurrence; 0 = not seen.
    std::vector<std::size_t> first_seen(static_cast<std::size_t>(doc.n) + 1, 0);
    for (std::size_t j = 0; j < doc.body.size(); ++j) {
        for (Element x : doc.body[j]) {
            if (x < 1 || x > doc.n) {
                throw ParseError(doc.body_lines[j], 1, "element " + std::to_string(x) + " outside [1," + std::to_string(doc.n) + "]");
            }
            auto& seen = first_seen[static_cast<std::size_t>(x)];
            if (seen != 0) {
                throw ParseError(doc.body_lines[j], 1,
                                 "duplicate element " + std::to_string(x) + " (first seen on line " +
                                     std::to_string(seen) + ")");
            }
            seen = doc.body_lines[j];
        }
    }
    for (Element x = 1; x <= doc.n; ++x) {
        if (first_seen[static_cast<std::size_t>(x)] == 0) {
            throw ParseError(doc.body_lines.empty() ? 1 : doc.body_lines.back(), 1,
                             "gap in coverage: element " + std::to_string(x) + " missing");
        }
    }
    return make_partition(doc.n, doc.body, doc.kind);
}

Partition parse_partition(std::string_view text) {
    return to_partition(parse_document(text));
}

std::string format_partition(const Partition& p) {
    std::ostringstream out;
    out << "schur v" << kFormatVersion << ' ' << to_string(p.kind()) << ' ' << p.subset_count() << ' ' << p.order()
        << '\n';
    for (const auto& subset : p.subsets()) {
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (i != 0) {
                out << ' ';
            }
            out << subset[i];
        }
        out << '\n';
    }
    return std::move(out).str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("error writing " + path.string());
    }
}

}  // namespace schur
