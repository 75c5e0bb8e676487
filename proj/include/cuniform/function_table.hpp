#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuniform/field.hpp"

namespace cuniform {

/// An (n,n)-function stored as its full lookup table, index u -> F(u).
class FunctionTable {
public:
    // Throws std::invalid_argument unless values has 2^n entries, each < 2^n.
    FunctionTable(Field field, std::vector<Element> values);

    const Field& field() const noexcept { return field_; }
    std::uint32_t size() const noexcept { return field_.size(); }
    Element operator()(Element u) const noexcept { return values_[u]; }
    std::span<const Element> values() const noexcept { return values_; }

    bool is_permutation() const;
    // Compositional inverse; throws std::invalid_argument if not a permutation.
    FunctionTable inverse() const;

    friend bool operator==(const FunctionTable& l, const FunctionTable& r) {
        return l.field_ == r.field_ && l.values_ == r.values_;
    }

private:
    Field field_;
    std::vector<Element> values_;
};

// x -> x^(2^n-2), so 0 -> 0.
FunctionTable inverse_map(const Field& field);

// x -> x^e with pow(0,0) = 1.
FunctionTable power_map(const Field& field, std::uint64_t e);

// Exchanges the outputs at x0 and x1 by table transposition.
// Throws std::invalid_argument when x0 == x1 or either is out of range.
FunctionTable swap_outputs(const FunctionTable& f, Element x0, Element x1);

// Same swap evaluated through F(x) + ((x+x0)^(2^n-1) + (x+x1)^(2^n-1))(y0+y1),
// y_i = F(x_i), with 0^(2^n-1) = 0.
FunctionTable swap_outputs_closed_form(const FunctionTable& f, Element x0, Element x1);

// The inverse with the outputs at 0 and 1 exchanged.
FunctionTable swapped_inverse(const Field& field);

// x^(2^n-2) + x^(2^n-1) + (x+1)^(2^n-1), evaluated directly.
Element swapped_inverse_formula(const Field& field, Element x);

class SboxParseError : public std::runtime_error {
public:
    enum class Kind { LineCount, Malformed, OutOfRange };

    SboxParseError(Kind kind, std::size_t line, const std::string& what)
        : std::runtime_error(what), kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    // 1-based; 0 for whole-file errors.
    std::size_t line() const noexcept { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

// One hex value per LF-terminated line, no header, index order.
FunctionTable parse_sbox(const Field& field, std::string_view text);
std::string format_sbox(const FunctionTable& f);

}  // namespace cuniform
