#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cuniform/function_table.hpp"

namespace cuniform {

enum class TableKind { Ddt, Bct };

const char* to_string(TableKind kind) noexcept;

/// A 2^n x 2^n grid of solution counts for a fixed multiplier c,
/// indexed (a, b).
class UniformityTable {
public:
    UniformityTable(TableKind kind, unsigned n, Element c);
    UniformityTable(TableKind kind, unsigned n, Element c, std::vector<std::uint32_t> counts);

    TableKind kind() const noexcept { return kind_; }
    unsigned degree() const noexcept { return n_; }
    Element c() const noexcept { return c_; }
    std::uint32_t side() const noexcept { return 1u << n_; }

    std::uint32_t operator()(Element a, Element b) const noexcept {
        return counts_[(static_cast<std::size_t>(a) << n_) | b];
    }
    std::uint32_t& at(Element a, Element b) noexcept {
        return counts_[(static_cast<std::size_t>(a) << n_) | b];
    }
    const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

    friend bool operator==(const UniformityTable&, const UniformityTable&) = default;

private:
    TableKind kind_;
    unsigned n_;
    Element c_;
    std::vector<std::uint32_t> counts_;
};

struct UniformityReport {
    TableKind kind = TableKind::Ddt;
    Element c = 0;
    // delta for DDT, beta for BCT.
    std::uint32_t value = 0;
    // Every admissible (a, b) attaining `value`, lexicographic.
    std::vector<std::pair<Element, Element>> argmax;
    // entry value -> number of admissible (a, b) with that value.
    std::map<std::uint32_t, std::uint64_t> histogram;

    friend bool operator==(const UniformityReport&, const UniformityReport&) = default;
};

// Whether (a, b) takes part in the uniformity maximum for this table.
// DDT: all (a, b), except a = 0 when c = 1. BCT: a and b both nonzero.
bool admissible(TableKind kind, Element c, Element a, Element b) noexcept;

// Entries |{x : F(x+a) + c F(x) = b}|, one pass over (a, x).
UniformityTable c_ddt(const FunctionTable& f, Element c);

// Entries |{(x, g) : F(x+g) + c F(x) = b, F(x+g+a) + c^-1 F(x+a) = b}|.
// Throws std::invalid_argument for c = 0.
UniformityTable c_bct(const FunctionTable& f, Element c);

// Entries |{x : F^-1(c^-1 F(x+a) + b) + F^-1(c F(x) + b) = a}|.
// Throws std::invalid_argument for c = 0 or a non-permutation.
UniformityTable c_bct_via_inverse(const FunctionTable& f, Element c);

UniformityReport summarize(const UniformityTable& table);
UniformityReport c_diff_uniformity(const FunctionTable& f, Element c);
UniformityReport c_boomerang_uniformity(const FunctionTable& f, Element c);

// Sorted x with F(x+a) + c F(x) = b.
std::vector<Element> enumerate_ddt_solutions(const FunctionTable& f, Element c, Element a,
                                             Element b);

struct BctSolution {
    Element x;
    Element y;  // x + gamma

    Element gamma() const noexcept { return x ^ y; }
    friend auto operator<=>(const BctSolution&, const BctSolution&) = default;
};

// Solutions of the c-boomerang system as (x, x + gamma), lexicographic.
std::vector<BctSolution> enumerate_bct_solutions(const FunctionTable& f, Element c, Element a,
                                                 Element b);

// Multipliers covered by a sweep: c != 0, 1 for DDT, c != 0 for BCT.
std::vector<Element> scan_multipliers(TableKind kind, const Field& field);

unsigned default_workers() noexcept;

// One report per multiplier in ascending c. Each worker owns its grid; the
// result does not depend on `workers`.
std::vector<UniformityReport> scan_all_c(const FunctionTable& f, TableKind kind,
                                         unsigned workers = default_workers());
std::vector<UniformityReport> scan(const FunctionTable& f, TableKind kind,
                                   const std::vector<Element>& multipliers,
                                   unsigned workers = default_workers());

// Runs `job(c, table)` for every multiplier, concurrently, with each table
// computed by the matching kernel. Jobs for distinct c may run in parallel.
template <typename Job>
void for_each_table(const FunctionTable& f, TableKind kind,
                    const std::vector<Element>& multipliers, unsigned workers, Job&& job);

}  // namespace cuniform

#include "cuniform/detail/parallel.hpp"
