#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuniform {

// Polynomial-basis element of GF(2^n): bit i is the coefficient of alpha^i.
using Element = std::uint32_t;

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 24;

// Raised by Field::inv on a zero argument.
class ZeroInverseError : public std::domain_error {
public:
    ZeroInverseError() : std::domain_error("inverse of zero is undefined") {}
};

// Low-weight irreducible modulus used when none is given. The returned value
// includes the leading x^n term (e.g. 0x25 for x^5+x^2+1).
std::uint32_t default_modulus(unsigned n);

// True iff `poly` (full bit pattern, leading term included) is irreducible
// over GF(2). Trial division by every polynomial of degree <= deg/2.
bool is_irreducible(std::uint64_t poly);

// Carry-less product of two polynomials over GF(2).
std::uint64_t clmul(std::uint64_t u, std::uint64_t v);

// Remainder of `poly` modulo `modulus`.
std::uint64_t poly_mod(std::uint64_t poly, std::uint64_t modulus);

/// Binary field GF(2^n) in polynomial basis.
///
/// A Field is a cheap-to-copy value: for n <= 16 it shares a set of
/// exponent/logarithm tables that accelerate `mul`; larger fields fall back to
/// shift-and-reduce multiplication. Both paths give identical results.
class Field {
public:
    // Throws std::invalid_argument if n is out of range, the modulus does not
    // have degree n, or it is reducible.
    explicit Field(unsigned n, std::optional<std::uint32_t> modulus = std::nullopt);

    unsigned degree() const noexcept { return n_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t size() const noexcept { return 1u << n_; }
    Element mask() const noexcept { return size() - 1; }
    bool contains(Element u) const noexcept { return u < size(); }

    Element add(Element u, Element v) const noexcept { return u ^ v; }
    Element mul(Element u, Element v) const noexcept;
    Element square(Element u) const noexcept { return mul(u, u); }
    // Reference multiplication (no tables); used to cross-check the fast path.
    Element mul_reduce(Element u, Element v) const noexcept;

    // pow(0, 0) = 1.
    Element pow(Element u, std::uint64_t e) const noexcept;
    // u^(2^n - 2). Throws ZeroInverseError for u = 0.
    Element inv(Element u) const;
    Element div(Element u, Element v) const { return mul(u, inv(v)); }
    // Unique square root u^(2^(n-1)).
    Element sqrt(Element u) const noexcept;

    // Absolute trace to GF(2).
    int trace(Element u) const noexcept;
    // Tr(u) as the sum of the n Frobenius conjugates; slow, for checking.
    int trace_by_conjugates(Element u) const noexcept;

    // Roots of x^2 + a x + b, sorted ascending.
    std::vector<Element> solve_quadratic(Element a, Element b) const;

    // Some y with y^2 + y = u when Tr(u) = 0 (the other is y + 1).
    std::optional<Element> hilbert90_preimage(Element u) const;

    // All u with sum_i coeffs[i] u^i = 0 by exhaustive evaluation.
    // coeffs[i] is the coefficient of u^i.
    std::vector<Element> find_roots(std::span<const Element> coeffs) const;
    Element evaluate(std::span<const Element> coeffs, Element u) const noexcept;

    // Human-readable "a^3+a+1" form; "0" for zero.
    std::string pretty(Element u, char symbol = 'a') const;

    friend bool operator==(const Field& l, const Field& r) noexcept {
        return l.n_ == r.n_ && l.modulus_ == r.modulus_;
    }

private:
    struct LogTables;

    // Solves the GF(2)-linear system M y = rhs where column j of M is the
    // image of alpha^j under y -> y^2 + y. Returns one solution if consistent.
    std::optional<Element> solve_artin_schreier(Element rhs) const;

    unsigned n_;
    std::uint32_t modulus_;
    Element trace_mask_ = 0;
    // Columns of y -> y^2 + y on the polynomial basis.
    std::vector<Element> as_columns_;
    std::shared_ptr<const LogTables> tables_;
};

}  // namespace cuniform
