#include "cuniform/field.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace cuniform {

namespace {

constexpr unsigned kTableLimit = 16;

// x^n + low-weight tail, one per degree. 2..5 are the classical primitive
// choices; the rest are standard trinomials/pentanomials.
constexpr std::array<std::uint32_t, kMaxDegree + 1> kDefaultModuli = {
    0, 0,
    0x7,        // 2: x^2+x+1
    0xb,        // 3: x^3+x+1
    0x13,       // 4: x^4+x+1
    0x25,       // 5: x^5+x^2+1
    0x43,       // 6: x^6+x+1
    0x83,       // 7: x^7+x+1
    0x11b,      // 8: x^8+x^4+x^3+x+1
    0x211,      // 9: x^9+x^4+1
    0x409,      // 10: x^10+x^3+1
    0x805,      // 11: x^11+x^2+1
    0x1009,     // 12: x^12+x^3+1
    0x201b,     // 13: x^13+x^4+x^3+x+1
    0x4021,     // 14: x^14+x^5+1
    0x8003,     // 15: x^15+x+1
    0x1002b,    // 16: x^16+x^5+x^3+x+1
    0x20009,    // 17: x^17+x^3+1
    0x40009,    // 18: x^18+x^3+1
    0x80027,    // 19: x^19+x^5+x^2+x+1
    0x100009,   // 20: x^20+x^3+1
    0x200005,   // 21: x^21+x^2+1
    0x400003,   // 22: x^22+x+1
    0x800021,   // 23: x^23+x^5+1
    0x100001b,  // 24: x^24+x^4+x^3+x+1
};

int poly_degree(std::uint64_t p) {
    return p == 0 ? -1 : static_cast<int>(std::bit_width(p)) - 1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

std::uint32_t default_modulus(unsigned n) {
    if (n < kMinDegree || n > kMaxDegree) {
        throw std::invalid_argument("no default modulus for degree " + std::to_string(n));
    }
    return kDefaultModuli[n];
}

std::uint64_t clmul(std::uint64_t u, std::uint64_t v) {
    std::uint64_t r = 0;
    while (v) {
        if (v & 1) r ^= u;
        v >>= 1;
        u <<= 1;
    }
    return r;
}

std::uint64_t poly_mod(std::uint64_t poly, std::uint64_t modulus) {
    const int dm = poly_degree(modulus);
    if (dm < 0) throw std::invalid_argument("poly_mod: zero modulus");
    for (int d = poly_degree(poly); d >= dm; d = poly_degree(poly)) {
        poly ^= modulus << (d - dm);
    }
    return poly;
}

bool is_irreducible(std::uint64_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    for (std::uint64_t q = 2; poly_degree(q) <= d / 2; ++q) {
        if (poly_mod(poly, q) == 0) return false;
    }
    return true;
}

struct Field::LogTables {
    std::vector<Element> exp;  // length 2(2^n - 1)
    std::vector<std::uint32_t> log;
};

Field::Field(unsigned n, std::optional<std::uint32_t> modulus)
    : n_(n), modulus_(0) {
    if (n < kMinDegree || n > kMaxDegree) {
        throw std::invalid_argument("field degree must be in [" + std::to_string(kMinDegree) +
                                    ", " + std::to_string(kMaxDegree) + "], got " +
                                    std::to_string(n));
    }
    modulus_ = modulus.value_or(default_modulus(n));
    if (poly_degree(modulus_) != static_cast<int>(n)) {
        throw std::invalid_argument("modulus must have degree " + std::to_string(n));
    }
    if (!is_irreducible(modulus_)) {
        throw std::invalid_argument("modulus is reducible over GF(2)");
    }

    for (unsigned i = 0; i < n_; ++i) {
        if (trace_by_conjugates(Element{1} << i)) trace_mask_ |= Element{1} << i;
    }
    as_columns_.resize(n_);
    for (unsigned j = 0; j < n_; ++j) {
        const Element e = Element{1} << j;
        as_columns_[j] = mul_reduce(e, e) ^ e;
    }

    if (n_ <= kTableLimit) {
        const std::uint32_t order = size() - 1;
        const auto factors = prime_factors(order);
        Element gen = 0;
        for (Element g = 2; g < size() && gen == 0; ++g) {
            bool primitive = true;
            for (auto p : factors) {
                if (pow(g, order / p) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) gen = g;
        }
        auto t = std::make_shared<LogTables>();
        t->exp.resize(2 * static_cast<std::size_t>(order));
        t->log.assign(size(), 0);
        Element v = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            t->exp[i] = v;
            t->exp[i + order] = v;
            t->log[v] = i;
            v = mul_reduce(v, gen);
        }
        tables_ = std::move(t);
    }
}

Element Field::mul_reduce(Element u, Element v) const noexcept {
    std::uint32_t r = 0;
    std::uint32_t a = u;
    const std::uint32_t top = size();
    while (v) {
        if (v & 1) r ^= a;
        v >>= 1;
        a <<= 1;
        if (a & top) a ^= modulus_;
    }
    return r;
}

Element Field::mul(Element u, Element v) const noexcept {
    if (tables_) {
        if (u == 0 || v == 0) return 0;
        return tables_->exp[tables_->log[u] + tables_->log[v]];
    }
    return mul_reduce(u, v);
}

Element Field::pow(Element u, std::uint64_t e) const noexcept {
    Element result = 1;
    Element base = u;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Element Field::inv(Element u) const {
    if (u == 0) throw ZeroInverseError();
    return pow(u, static_cast<std::uint64_t>(size()) - 2);
}

Element Field::sqrt(Element u) const noexcept {
    return pow(u, std::uint64_t{1} << (n_ - 1));
}

int Field::trace(Element u) const noexcept {
    return std::popcount(u & trace_mask_) & 1;
}

int Field::trace_by_conjugates(Element u) const noexcept {
    Element sum = 0;
    Element conj = u;
    for (unsigned i = 0; i < n_; ++i) {
        sum ^= conj;
        conj = mul_reduce(conj, conj);
    }
    return static_cast<int>(sum & 1);
}

std::optional<Element> Field::solve_artin_schreier(Element rhs) const {
    // Augmented rows: bits [0, n) hold the row of M, bit n the rhs.
    std::vector<std::uint64_t> rows(n_, 0);
    for (unsigned i = 0; i < n_; ++i) {
        std::uint64_t row = 0;
        for (unsigned j = 0; j < n_; ++j) {
            if ((as_columns_[j] >> i) & 1) row |= std::uint64_t{1} << j;
        }
        if ((rhs >> i) & 1) row |= std::uint64_t{1} << n_;
        rows[i] = row;
    }
    std::vector<int> pivot_col;
    unsigned r = 0;
    for (unsigned col = 0; col < n_ && r < n_; ++col) {
        unsigned p = r;
        while (p < n_ && !((rows[p] >> col) & 1)) ++p;
        if (p == n_) continue;
        std::swap(rows[p], rows[r]);
        for (unsigned i = 0; i < n_; ++i) {
            if (i != r && ((rows[i] >> col) & 1)) rows[i] ^= rows[r];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++r;
    }
    for (unsigned i = r; i < n_; ++i) {
        if ((rows[i] >> n_) & 1) return std::nullopt;
    }
    // Free variables set to zero.
    Element y = 0;
    for (unsigned i = 0; i < r; ++i) {
        if ((rows[i] >> n_) & 1) y |= Element{1} << pivot_col[i];
    }
    return y;
}

std::vector<Element> Field::solve_quadratic(Element a, Element b) const {
    if (a == 0) return {sqrt(b)};
    // x = a y turns x^2 + a x + b into y^2 + y = b / a^2.
    const Element ainv = inv(a);
    const auto y = solve_artin_schreier(mul(b, mul(ainv, ainv)));
    if (!y) return {};
    std::vector<Element> roots{mul(a, *y), mul(a, *y ^ 1)};
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<Element> Field::hilbert90_preimage(Element u) const {
    return solve_artin_schreier(u);
}

Element Field::evaluate(std::span<const Element> coeffs, Element u) const noexcept {
    Element acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = mul(acc, u) ^ *it;
    return acc;
}

std::vector<Element> Field::find_roots(std::span<const Element> coeffs) const {
    std::vector<Element> roots;
    for (Element u = 0; u < size(); ++u) {
        if (evaluate(coeffs, u) == 0) roots.push_back(u);
    }
    return roots;
}

std::string Field::pretty(Element u, char symbol) const {
    if (u == 0) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
        if (!((u >> i) & 1)) continue;
        if (!first) out << '+';
        first = false;
        if (i == 0) {
            out << '1';
        } else if (i == 1) {
            out << symbol;
        } else {
            out << symbol << '^' << i;
        }
    }
    return out.str();
}

}  // namespace cuniform
