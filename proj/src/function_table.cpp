#include "cuniform/function_table.hpp"

#include <charconv>
#include <sstream>

namespace cuniform {

FunctionTable::FunctionTable(Field field, std::vector<Element> values)
    : field_(std::move(field)), values_(std::move(values)) {
    if (values_.size() != field_.size()) {
        throw std::invalid_argument("function table needs " + std::to_string(field_.size()) +
                                    " entries, got " + std::to_string(values_.size()));
    }
    for (auto v : values_) {
        if (!field_.contains(v)) throw std::invalid_argument("function value out of range");
    }
}

bool FunctionTable::is_permutation() const {
    std::vector<bool> seen(size(), false);
    for (auto v : values_) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

FunctionTable FunctionTable::inverse() const {
    if (!is_permutation()) throw std::invalid_argument("function is not a permutation");
    std::vector<Element> inv(size());
    for (Element u = 0; u < size(); ++u) inv[values_[u]] = u;
    return FunctionTable(field_, std::move(inv));
}

FunctionTable inverse_map(const Field& field) {
    return power_map(field, static_cast<std::uint64_t>(field.size()) - 2);
}

FunctionTable power_map(const Field& field, std::uint64_t e) {
    std::vector<Element> values(field.size());
    for (Element u = 0; u < field.size(); ++u) values[u] = field.pow(u, e);
    return FunctionTable(field, std::move(values));
}

namespace {

void check_swap_points(const FunctionTable& f, Element x0, Element x1) {
    if (!f.field().contains(x0) || !f.field().contains(x1)) {
        throw std::invalid_argument("swap point out of range");
    }
    if (x0 == x1) throw std::invalid_argument("swap points must differ");
}

// u^(2^n-1): 1 for u != 0, and 0 at 0.
Element nonzero_indicator(const Field& field, Element u) {
    return u == 0 ? 0 : field.pow(u, static_cast<std::uint64_t>(field.size()) - 1);
}

}  // namespace

FunctionTable swap_outputs(const FunctionTable& f, Element x0, Element x1) {
    check_swap_points(f, x0, x1);
    std::vector<Element> values(f.values().begin(), f.values().end());
    std::swap(values[x0], values[x1]);
    return FunctionTable(f.field(), std::move(values));
}

FunctionTable swap_outputs_closed_form(const FunctionTable& f, Element x0, Element x1) {
    check_swap_points(f, x0, x1);
    const Field& k = f.field();
    const Element dy = f(x0) ^ f(x1);
    std::vector<Element> values(k.size());
    for (Element x = 0; x < k.size(); ++x) {
        const Element sel = nonzero_indicator(k, x ^ x0) ^ nonzero_indicator(k, x ^ x1);
        values[x] = f(x) ^ k.mul(sel, dy);
    }
    return FunctionTable(k, std::move(values));
}

FunctionTable swapped_inverse(const Field& field) {
    return swap_outputs(inverse_map(field), 0, 1);
}

Element swapped_inverse_formula(const Field& field, Element x) {
    const std::uint64_t q = field.size();
    const Element inv = x == 0 ? 0 : field.pow(x, q - 2);
    return inv ^ nonzero_indicator(field, x) ^ nonzero_indicator(field, x ^ 1);
}

FunctionTable parse_sbox(const Field& field, std::string_view text) {
    std::vector<Element> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::string_view digits = line;
        if (digits.starts_with("0x") || digits.starts_with("0X")) digits.remove_prefix(2);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
            if (ec == std::errc::result_out_of_range) {
                throw SboxParseError(SboxParseError::Kind::OutOfRange, line_no,
                                     "line " + std::to_string(line_no) + ": value out of range");
            }
            throw SboxParseError(SboxParseError::Kind::Malformed, line_no,
                                 "line " + std::to_string(line_no) + ": malformed hex '" +
                                     std::string(line) + "'");
        }
        if (value >= field.size()) {
            throw SboxParseError(SboxParseError::Kind::OutOfRange, line_no,
                                 "line " + std::to_string(line_no) + ": value 0x" +
                                     std::string(digits) + " >= 2^" +
                                     std::to_string(field.degree()));
        }
        values.push_back(static_cast<Element>(value));
    }
    if (values.size() != field.size()) {
        throw SboxParseError(SboxParseError::Kind::LineCount, 0,
                             "expected " + std::to_string(field.size()) + " lines, got " +
                                 std::to_string(values.size()));
    }
    return FunctionTable(field, std::move(values));
}

std::string format_sbox(const FunctionTable& f) {
    std::ostringstream out;
    out << std::hex;
    for (auto v : f.values()) out << v << '\n';
    return out.str();
}

}  // namespace cuniform
