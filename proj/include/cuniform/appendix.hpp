#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cuniform/tables.hpp"

namespace cuniform {

// Golden c-BCT extremal data for the swapped inverse, n = 2..5, under the
// default moduli x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1.

struct AppendixEntry {
    Element c = 0;
    Element a = 0;
    Element b = 0;
    std::vector<BctSolution> solutions;

    friend bool operator==(const AppendixEntry&, const AppendixEntry&) = default;
};

// Embedded fixture text; throws std::invalid_argument for n outside 2..5.
std::string_view appendix_fixture(unsigned n);

// Lines "c a b: x,y x,y ..." in hex; '#' comments and blank lines skipped.
std::vector<AppendixEntry> parse_appendix(std::string_view text);

// Entries sorted by (c, a, b), solutions sorted, one line each.
std::string render_appendix(std::vector<AppendixEntry> entries);

// Every (c, a, b) with c not in {0, 1} and a != 0 whose c-BCT entry equals the
// largest such entry, with its solution set.
std::vector<AppendixEntry> compute_appendix(const Field& field,
                                            unsigned workers = default_workers());

struct AppendixCheck {
    bool pass = false;
    std::uint32_t max_entry = 0;
    std::string expected;  // canonical fixture
    std::string actual;    // canonical recomputation
    std::string diff;      // unified diff, empty on pass
};

AppendixCheck check_appendix(unsigned n, unsigned workers = default_workers());

// Line-based unified diff with a single hunk.
std::string unified_diff(std::string_view from, std::string_view to,
                         std::string_view from_name, std::string_view to_name);

}  // namespace cuniform
