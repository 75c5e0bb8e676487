#include "cuniform/tables.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace cuniform {

const char* to_string(TableKind kind) noexcept {
    return kind == TableKind::Ddt ? "ddt" : "bct";
}

UniformityTable::UniformityTable(TableKind kind, unsigned n, Element c)
    : kind_(kind), n_(n), c_(c), counts_(std::size_t{1} << (2 * n), 0) {}

UniformityTable::UniformityTable(TableKind kind, unsigned n, Element c,
                                 std::vector<std::uint32_t> counts)
    : kind_(kind), n_(n), c_(c), counts_(std::move(counts)) {
    if (counts_.size() != (std::size_t{1} << (2 * n))) {
        throw std::invalid_argument("uniformity table needs 2^(2n) counts");
    }
}

bool admissible(TableKind kind, Element c, Element a, Element b) noexcept {
    if (kind == TableKind::Bct) return a != 0 && b != 0;
    return a != 0 || c != 1;
}

namespace {

std::vector<Element> scaled(const FunctionTable& f, Element c) {
    const Field& k = f.field();
    std::vector<Element> out(f.size());
    for (Element x = 0; x < f.size(); ++x) out[x] = k.mul(c, f(x));
    return out;
}

void require_nonzero_c(Element c) {
    if (c == 0) throw std::invalid_argument("c-BCT is undefined for c = 0");
}

}  // namespace

UniformityTable c_ddt(const FunctionTable& f, Element c) {
    const Field& k = f.field();
    if (!k.contains(c)) throw std::invalid_argument("multiplier out of range");
    const unsigned n = k.degree();
    const std::uint32_t size = k.size();
    const auto cf = scaled(f, c);
    const auto values = f.values();
    UniformityTable table(TableKind::Ddt, n, c);
    for (Element a = 0; a < size; ++a) {
        for (Element x = 0; x < size; ++x) ++table.at(a, values[x ^ a] ^ cf[x]);
    }
    return table;
}

UniformityTable c_bct(const FunctionTable& f, Element c) {
    const Field& k = f.field();
    require_nonzero_c(c);
    if (!k.contains(c)) throw std::invalid_argument("multiplier out of range");
    const unsigned n = k.degree();
    const std::uint32_t size = k.size();
    const auto cf = scaled(f, c);
    const auto cinv_f = scaled(f, k.inv(c));
    const auto values = f.values();

    UniformityTable table(TableKind::Bct, n, c);
    std::vector<Element> t1(size), t2(size);
    // t2 bucketed by value: members of bucket v are order[start[v] .. start[v+1]).
    std::vector<std::uint32_t> start(size + 1), order(size), fill(size);
    for (Element g = 0; g < size; ++g) {
        for (Element x = 0; x < size; ++x) {
            t1[x] = values[x ^ g] ^ cf[x];
            t2[x] = values[x ^ g] ^ cinv_f[x];
        }
        std::fill(start.begin(), start.end(), 0);
        for (Element u = 0; u < size; ++u) ++start[t2[u] + 1];
        for (std::uint32_t v = 0; v < size; ++v) start[v + 1] += start[v];
        std::copy(start.begin(), start.end() - 1, fill.begin());
        for (Element u = 0; u < size; ++u) order[fill[t2[u]]++] = u;
        // Pairs (x, a) with t1[x] == t2[x + a] are exactly x paired with
        // every u in bucket t1[x], a = x + u.
        for (Element x = 0; x < size; ++x) {
            const Element b = t1[x];
            for (std::uint32_t i = start[b]; i < start[b + 1]; ++i) ++table.at(x ^ order[i], b);
        }
    }
    return table;
}

UniformityTable c_bct_via_inverse(const FunctionTable& f, Element c) {
    const Field& k = f.field();
    require_nonzero_c(c);
    if (!k.contains(c)) throw std::invalid_argument("multiplier out of range");
    const FunctionTable finv = f.inverse();
    const std::uint32_t size = k.size();
    const auto cf = scaled(f, c);
    const auto cinv_f = scaled(f, k.inv(c));
    UniformityTable table(TableKind::Bct, k.degree(), c);
    for (Element a = 0; a < size; ++a) {
        for (Element b = 0; b < size; ++b) {
            std::uint32_t count = 0;
            for (Element x = 0; x < size; ++x) {
                if ((finv(cinv_f[x ^ a] ^ b) ^ finv(cf[x] ^ b)) == a) ++count;
            }
            table.at(a, b) = count;
        }
    }
    return table;
}

UniformityReport summarize(const UniformityTable& table) {
    UniformityReport report;
    report.kind = table.kind();
    report.c = table.c();
    const std::uint32_t size = table.side();
    for (Element a = 0; a < size; ++a) {
        for (Element b = 0; b < size; ++b) {
            if (!admissible(table.kind(), table.c(), a, b)) continue;
            const std::uint32_t v = table(a, b);
            ++report.histogram[v];
            if (v > report.value) {
                report.value = v;
                report.argmax.clear();
            }
            if (v == report.value) report.argmax.emplace_back(a, b);
        }
    }
    return report;
}

UniformityReport c_diff_uniformity(const FunctionTable& f, Element c) {
    return summarize(c_ddt(f, c));
}

UniformityReport c_boomerang_uniformity(const FunctionTable& f, Element c) {
    return summarize(c_bct(f, c));
}

std::vector<Element> enumerate_ddt_solutions(const FunctionTable& f, Element c, Element a,
                                             Element b) {
    const Field& k = f.field();
    std::vector<Element> out;
    for (Element x = 0; x < f.size(); ++x) {
        if ((f(x ^ a) ^ k.mul(c, f(x))) == b) out.push_back(x);
    }
    return out;
}

std::vector<BctSolution> enumerate_bct_solutions(const FunctionTable& f, Element c, Element a,
                                                 Element b) {
    const Field& k = f.field();
    require_nonzero_c(c);
    const Element cinv = k.inv(c);
    std::vector<BctSolution> out;
    for (Element x = 0; x < f.size(); ++x) {
        const Element cfx = k.mul(c, f(x));
        const Element cinv_fxa = k.mul(cinv, f(x ^ a));
        for (Element g = 0; g < f.size(); ++g) {
            if ((f(x ^ g) ^ cfx) == b && (f(x ^ g ^ a) ^ cinv_fxa) == b) {
                out.push_back({x, x ^ g});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> scan_multipliers(TableKind kind, const Field& field) {
    std::vector<Element> out;
    for (Element c = 1; c < field.size(); ++c) {
        if (kind == TableKind::Ddt && c == 1) continue;
        out.push_back(c);
    }
    return out;
}

unsigned default_workers() noexcept {
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<UniformityReport> scan(const FunctionTable& f, TableKind kind,
                                   const std::vector<Element>& multipliers, unsigned workers) {
    std::vector<UniformityReport> reports(multipliers.size());
    for_each_table(f, kind, multipliers, workers,
                   [&](std::size_t i, const UniformityTable& t) { reports[i] = summarize(t); });
    return reports;
}

std::vector<UniformityReport> scan_all_c(const FunctionTable& f, TableKind kind,
                                         unsigned workers) {
    return scan(f, kind, scan_multipliers(kind, f.field()), workers);
}

}  // namespace cuniform
