#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuniform/tables.hpp"

namespace cuniform {

// Analytic results about G, the inverse function with outputs at 0 and 1
// exchanged, each paired with a brute-force confirmation.

struct Witness {
    Element c = 0;
    Element a = 0;
    Element b = 0;
    std::string condition;
    std::uint32_t confirmed_count = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct WitnessReport {
    std::string kind;
    unsigned n = 0;
    std::uint32_t modulus = 0;
    std::vector<Witness> witnesses;
    std::uint32_t predicted = 0;
    bool pass = false;
    // Triples attaining `predicted` that no condition accounts for.
    std::vector<Witness> unexplained;
    std::map<std::string, std::int64_t> metrics;
};

// ---------------------------------------------------------------------------
// c-DDT

/// Closed-form c-DDT entries of G for c not in {0, 1}.
///
/// For a = 0 the entry is 1 since (1+c)G is a bijection. Otherwise each of the
/// special inputs 0, 1, a, a+1 contributes 1 when its value matches b, and the
/// remaining inputs solve b x^2 + (ab+c+1) x + ac = 0. That polynomial is
/// linear when b = 0, has the single root sqrt(ac/b) when ab+c+1 = 0, and
/// otherwise has 2 or 0 roots according to Tr(abc/(ab+c+1)^2). Roots that land
/// on a special input are discarded, since the polynomial was obtained by
/// clearing denominators that vanish there.
class AnalyticDdt {
public:
    explicit AnalyticDdt(const Field& field);

    // Throws std::invalid_argument for c in {0, 1}.
    std::uint32_t entry(Element c, Element a, Element b) const;

    const Field& field() const noexcept { return field_; }

private:
    Element g(Element x) const noexcept { return swapped_[x]; }
    Element inv(Element x) const noexcept { return inverse_[x]; }

    Field field_;
    std::vector<Element> inverse_;
    std::vector<Element> swapped_;
};

std::uint32_t analytic_ddt_entry(const Field& field, Element c, Element a, Element b);

// Triples from the two attainment conditions for entry 4:
//   (i)  Tr(a/(a+1)) = 0,     b = 1/(a+1), c = 1/(a^2+a)
//   (ii) Tr(a/(a+1)^2) = 0,   b = 1/a^2,   c = (a+1)/a^2
// a ranges over F \ {0, 1}; triples with c = 1 are skipped.
std::vector<Witness> ddt4_condition_triples(const Field& field);

// Confirms every condition triple against the brute-force table, then scans
// all c not in {0, 1} and compares the full set of entry-4 triples with the
// condition set. The equality is part of `pass` only for n >= 5; for n = 4 it
// is reported in metrics["iff_holds"]. Requires n >= 4.
WitnessReport ddt4_witnesses(const Field& field, unsigned workers = default_workers());

// ---------------------------------------------------------------------------
// c-BCT

enum class Bct5Construction { Mod3, Mod3Dual, Mod4A, Mod4B, Mod5, Mod5Dual };

struct Bct5Family {
    Bct5Construction construction;
    std::string name;
    unsigned divisor;                  // applies when divisor | n
    std::vector<Element> polynomial;   // GF(2) coefficients, low degree first
};

// The explicit constructions of c-BCT entry 5, keyed by divisibility of n.
const std::vector<Bct5Family>& bct5_families();

// Triple (c, a, b) built by `family` from a root c of its polynomial.
Witness bct5_triple(const Field& field, const Bct5Family& family, Element c);

// Requires n >= 4. Empty (and passing) when no family applies.
WitnessReport bct5_witnesses(const Field& field, unsigned workers = default_workers());

struct BctBoundSweep {
    std::vector<UniformityReport> per_c;  // c not in {0, 1}, ascending
    std::uint32_t max_nonzero = 0;        // over a, b != 0
    std::uint32_t max_any = 0;            // over every (a, b)
};

BctBoundSweep bct_bound_sweep(const FunctionTable& g, unsigned workers = default_workers());

/// Case polynomials of the c-boomerang system of G for a not in {0, 1}.
/// e[i] is E_i(a, b, c) for i < 10; E_10 is a quadratic in x together with a
/// linear relation in (x, gamma).
struct CaseResiduals {
    Element c = 0;
    Element a = 0;
    Element b = 0;
    std::array<Element, 10> e{};
    // E_10 = q2 x^2 + q1 x + q0
    Element q2 = 0, q1 = 0, q0 = 0;
    // E'_10 = l0 + lx x + lg gamma
    Element l0 = 0, lx = 0, lg = 0;

    Element e10(const Field& field, Element x) const noexcept;
    Element e10_prime(const Field& field, Element x, Element gamma) const noexcept;
};

CaseResiduals bct_case_residuals(const Field& field, Element c, Element a, Element b);

// E_i with c replaced by 1/c pairs up as 0<->1, 2<->8, 3<->9, 4<->6, 5<->7.
int dual_residual_index(int i);

/// Structural class of a solution (x, gamma).
///
/// `pattern` is the 1-based position in the ordered list of (x, gamma) shapes
/// for a not in {0, 1}: (0,0), (1,1), (0,1), (1,0), (0,a), (a,0), (0,a+1),
/// (a+1,0), (1,a), (a,1), (1,a+1), (a+1,1), (a,a), (a+1,a+1), (a,a+1),
/// (a+1,a), (x,x), (x,x+1), (0,g), (1,g), (a,g), (a+1,g), (x,x+a),
/// (x,x+a+1), generic; 0 means a is 0 or 1. `label` is the residual index i
/// whose E_i must vanish for that class, when one exists.
struct BctCase {
    int pattern = 0;
    std::optional<int> label;
};

inline constexpr int kBctPatternCount = 26;

// Throws std::invalid_argument unless (x, gamma) solves the system of G.
BctCase classify_bct_solution(const FunctionTable& g, Element c, Element a, Element b,
                              Element x, Element gamma);

std::string bct_case_name(const BctCase& cls);

// ---------------------------------------------------------------------------
// c = 1, gcd identity, conjecture evidence

// 10 if n = 0 mod 6, 8 if n = 3 mod 6, else 6. Requires n >= 3.
std::uint32_t c1_boomerang_expected(unsigned n);
WitnessReport check_c1(const Field& field);

// gcd(2^k+1, 2^n-1) == (2^gcd(2k,n) - 1) / (2^gcd(k,n) - 1), 1 <= k <= n <= 62.
bool gcd_lemma_check(unsigned k, unsigned n);
// All 1 <= k <= n <= n_max.
WitnessReport gcd_lemma_report(unsigned n_max);

// Multipliers c not in {0, 1} with c-boomerang uniformity 5. Requires n >= 4.
WitnessReport conjecture_scan(const Field& field, unsigned workers = default_workers());

}  // namespace cuniform
