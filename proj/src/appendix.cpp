#include "cuniform/appendix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cuniform/io.hpp"

namespace cuniform {

namespace detail {
extern const std::string_view kAppendixN2;
extern const std::string_view kAppendixN3;
extern const std::string_view kAppendixN4;
extern const std::string_view kAppendixN5;
}  // namespace detail

std::string_view appendix_fixture(unsigned n) {
    switch (n) {
        case 2: return detail::kAppendixN2;
        case 3: return detail::kAppendixN3;
        case 4: return detail::kAppendixN4;
        case 5: return detail::kAppendixN5;
        default: throw std::invalid_argument("appendix data exists only for n = 2..5");
    }
}

std::vector<AppendixEntry> parse_appendix(std::string_view text) {
    std::vector<AppendixEntry> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("appendix line " + std::to_string(line_no) +
                                        ": missing ':'");
        }
        std::istringstream head(line.substr(0, colon));
        std::string c, a, b;
        if (!(head >> c >> a >> b)) {
            throw std::invalid_argument("appendix line " + std::to_string(line_no) +
                                        ": expected 'c a b'");
        }
        AppendixEntry entry;
        entry.c = static_cast<Element>(parse_hex(c));
        entry.a = static_cast<Element>(parse_hex(a));
        entry.b = static_cast<Element>(parse_hex(b));
        std::istringstream tail(line.substr(colon + 1));
        std::string pair;
        while (tail >> pair) {
            const auto comma = pair.find(',');
            if (comma == std::string::npos || pair.find(',', comma + 1) != std::string::npos) {
                throw std::invalid_argument("appendix line " + std::to_string(line_no) +
                                            ": bad pair '" + pair + "'");
            }
            entry.solutions.push_back(
                {static_cast<Element>(parse_hex(std::string_view(pair).substr(0, comma))),
                 static_cast<Element>(parse_hex(std::string_view(pair).substr(comma + 1)))});
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::string render_appendix(std::vector<AppendixEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
        return std::tie(l.c, l.a, l.b) < std::tie(r.c, r.a, r.b);
    });
    std::ostringstream out;
    for (auto& e : entries) {
        std::sort(e.solutions.begin(), e.solutions.end());
        out << hex(e.c) << ' ' << hex(e.a) << ' ' << hex(e.b) << ':';
        for (const auto& s : e.solutions) out << ' ' << hex(s.x) << ',' << hex(s.y);
        out << '\n';
    }
    return out.str();
}

std::vector<AppendixEntry> compute_appendix(const Field& field, unsigned workers) {
    const FunctionTable g = swapped_inverse(field);
    auto multipliers = scan_multipliers(TableKind::Bct, field);
    multipliers.erase(std::remove(multipliers.begin(), multipliers.end(), Element{1}),
                      multipliers.end());

    std::vector<std::vector<AppendixEntry>> per_c(multipliers.size());
    std::vector<std::uint32_t> per_c_max(multipliers.size(), 0);
    for_each_table(g, TableKind::Bct, multipliers, workers,
                   [&](std::size_t i, const UniformityTable& t) {
                       std::uint32_t best = 0;
                       for (Element a = 1; a < t.side(); ++a) {
                           for (Element b = 0; b < t.side(); ++b) best = std::max(best, t(a, b));
                       }
                       per_c_max[i] = best;
                       for (Element a = 1; a < t.side(); ++a) {
                           for (Element b = 0; b < t.side(); ++b) {
                               if (t(a, b) == best) per_c[i].push_back({t.c(), a, b, {}});
                           }
                       }
                   });
    const std::uint32_t best = *std::max_element(per_c_max.begin(), per_c_max.end());
    std::vector<AppendixEntry> out;
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        if (per_c_max[i] != best) continue;
        for (auto& e : per_c[i]) {
            e.solutions = enumerate_bct_solutions(g, e.c, e.a, e.b);
            out.push_back(std::move(e));
        }
    }
    return out;
}

AppendixCheck check_appendix(unsigned n, unsigned workers) {
    const Field field(n);
    AppendixCheck check;
    check.expected = render_appendix(parse_appendix(appendix_fixture(n)));
    const auto computed = compute_appendix(field, workers);
    for (const auto& e : computed) {
        check.max_entry = std::max(check.max_entry, static_cast<std::uint32_t>(e.solutions.size()));
    }
    check.actual = render_appendix(computed);
    check.pass = check.expected == check.actual;
    if (!check.pass) {
        check.diff = unified_diff(check.expected, check.actual,
                                  "fixture/n" + std::to_string(n), "computed/n" + std::to_string(n));
    }
    return check;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        lines.emplace_back(text.substr(pos, end - pos));
        pos = end + 1;
    }
    return lines;
}

}  // namespace

std::string unified_diff(std::string_view from, std::string_view to,
                         std::string_view from_name, std::string_view to_name) {
    const auto a = split_lines(from);
    const auto b = split_lines(to);
    // LCS table over suffixes.
    std::vector<std::vector<std::uint32_t>> lcs(a.size() + 1,
                                                std::vector<std::uint32_t>(b.size() + 1, 0));
    for (std::size_t i = a.size(); i-- > 0;) {
        for (std::size_t j = b.size(); j-- > 0;) {
            lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                                     : std::max(lcs[i + 1][j], lcs[i][j + 1]);
        }
    }
    std::ostringstream out;
    out << "--- " << from_name << '\n' << "+++ " << to_name << '\n';
    out << "@@ -1," << a.size() << " +1," << b.size() << " @@\n";
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (i < a.size() && j < b.size() && a[i] == b[j]) {
            out << ' ' << a[i++] << '\n';
            ++j;
        } else if (i < a.size() && (j == b.size() || lcs[i + 1][j] >= lcs[i][j + 1])) {
            out << '-' << a[i++] << '\n';
        } else {
            out << '+' << b[j++] << '\n';
        }
    }
    return out.str();
}

}  // namespace cuniform
