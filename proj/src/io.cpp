#include "cuniform/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cuniform {

std::string hex(std::uint64_t v) {
    char buf[17];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
    return std::string(buf, ptr);
}

std::uint64_t parse_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("invalid hex value '" + std::string(text) + "'");
    }
    return v;
}

std::string table_to_csv(const UniformityTable& table, bool dense) {
    std::ostringstream out;
    out << "a,b,count\n";
    for (Element a = 0; a < table.side(); ++a) {
        for (Element b = 0; b < table.side(); ++b) {
            const auto v = table(a, b);
            if (v == 0 && !dense) continue;
            out << hex(a) << ',' << hex(b) << ',' << v << '\n';
        }
    }
    return out.str();
}

UniformityTable table_from_csv(std::string_view csv, TableKind kind, unsigned n, Element c) {
    UniformityTable table(kind, n, c);
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line) || line != "a,b,count") {
        throw std::invalid_argument("CSV table must start with header a,b,count");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto p1 = line.find(',');
        const auto p2 = line.find(',', p1 == std::string::npos ? p1 : p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos) {
            throw std::invalid_argument("malformed CSV row '" + line + "'");
        }
        const auto a = parse_hex(std::string_view(line).substr(0, p1));
        const auto b = parse_hex(std::string_view(line).substr(p1 + 1, p2 - p1 - 1));
        const auto count = std::stoul(line.substr(p2 + 1));
        if (a >= table.side() || b >= table.side()) {
            throw std::invalid_argument("CSV row out of range '" + line + "'");
        }
        table.at(static_cast<Element>(a), static_cast<Element>(b)) =
            static_cast<std::uint32_t>(count);
    }
    return table;
}

nlohmann::json report_to_json(const UniformityReport& report) {
    nlohmann::json argmax = nlohmann::json::array();
    for (const auto& [a, b] : report.argmax) argmax.push_back({hex(a), hex(b)});
    nlohmann::json histogram = nlohmann::json::object();
    for (const auto& [value, count] : report.histogram) histogram[std::to_string(value)] = count;
    return {
        {"kind", to_string(report.kind)},
        {"c", hex(report.c)},
        {"delta_or_beta", report.value},
        {"argmax", argmax},
        {"histogram", histogram},
    };
}

nlohmann::json table_to_json(const UniformityTable& table, const Field& field, bool dense) {
    const auto report = summarize(table);
    nlohmann::json entries = nlohmann::json::array();
    for (Element a = 0; a < table.side(); ++a) {
        for (Element b = 0; b < table.side(); ++b) {
            const auto v = table(a, b);
            if (v == 0 && !dense) continue;
            entries.push_back({hex(a), hex(b), v});
        }
    }
    nlohmann::json argmax = nlohmann::json::array();
    for (const auto& [a, b] : report.argmax) argmax.push_back({hex(a), hex(b)});
    return {
        {"kind", to_string(table.kind())},
        {"n", table.degree()},
        {"modulus", hex(field.modulus())},
        {"c", hex(table.c())},
        {"entries", entries},
        {"delta_or_beta", report.value},
        {"argmax", argmax},
    };
}

UniformityTable table_from_json(const nlohmann::json& j) {
    const std::string kind_name = j.at("kind").get<std::string>();
    TableKind kind;
    if (kind_name == "ddt") {
        kind = TableKind::Ddt;
    } else if (kind_name == "bct") {
        kind = TableKind::Bct;
    } else {
        throw std::invalid_argument("unknown table kind '" + kind_name + "'");
    }
    const unsigned n = j.at("n").get<unsigned>();
    const auto c = static_cast<Element>(parse_hex(j.at("c").get<std::string>()));
    UniformityTable table(kind, n, c);
    for (const auto& row : j.at("entries")) {
        const auto a = parse_hex(row.at(0).get<std::string>());
        const auto b = parse_hex(row.at(1).get<std::string>());
        if (a >= table.side() || b >= table.side()) {
            throw std::invalid_argument("JSON entry out of range");
        }
        table.at(static_cast<Element>(a), static_cast<Element>(b)) =
            row.at(2).get<std::uint32_t>();
    }
    return table;
}

nlohmann::json witness_report_to_json(const WitnessReport& report) {
    auto witnesses_json = [](const std::vector<Witness>& list) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& w : list) {
            arr.push_back({
                {"c", hex(w.c)},
                {"a", hex(w.a)},
                {"b", hex(w.b)},
                {"condition", w.condition},
                {"confirmed_count", w.confirmed_count},
            });
        }
        return arr;
    };
    nlohmann::json j = {
        {"kind", report.kind},
        {"n", report.n},
        {"modulus", hex(report.modulus)},
        {"witnesses", witnesses_json(report.witnesses)},
        {"predicted", report.predicted},
        {"pass", report.pass},
    };
    if (!report.unexplained.empty()) j["unexplained"] = witnesses_json(report.unexplained);
    if (!report.metrics.empty()) j["metrics"] = report.metrics;
    return j;
}

}  // namespace cuniform
