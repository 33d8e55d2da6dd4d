#pragma once

// JSON views of census tables and ingestion of external F-value files.
// External values may arrive as plain "k value" lines, as a JSON object
// mapping k to a value, or as a table previously emitted by to_json (its
// rows feed back through their F fields).

#include "cubecensus/census.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>

namespace cubecensus {

// Counts are serialized as decimal strings; they do not fit in double and
// JSON numbers would mangle them.
inline nlohmann::json to_json(const CensusTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json row;
        row["k"] = r.k;
        row["A"] = r.A.str();
        row["H"] = r.H ? nlohmann::json(r.H->str()) : nlohmann::json(nullptr);
        row["F"] = r.F ? nlohmann::json(r.F->str()) : nlohmann::json(nullptr);
        row["regime"] = regime_name(r.regime);
        row["provenance"] = r.provenance;
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n", t.n}, {"rows", std::move(rows)}};
}

inline Integer integer_from_json(const nlohmann::json& v) {
    if (v.is_string()) return Integer(v.get<std::string>());
    if (v.is_number_integer()) return Integer(v.get<long long>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

inline std::map<int, Integer> read_external_values(const std::string& text) {
    std::map<int, Integer> out;
    // try JSON first
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (!j.is_discarded()) {
        if (j.is_object() && j.contains("rows")) {
            for (const auto& row : j.at("rows")) {
                if (row.contains("F") && !row.at("F").is_null())
                    out[row.at("k").get<int>()] = integer_from_json(row.at("F"));
            }
            return out;
        }
        if (j.is_object()) {
            for (auto it = j.begin(); it != j.end(); ++it) out[std::stoi(it.key())] = integer_from_json(it.value());
            return out;
        }
        throw std::invalid_argument("external values: unsupported JSON shape");
    }
    // plain text: "k value" per line
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int k;
        std::string value;
        if (ls >> k >> value) out[k] = Integer(value);
    }
    return out;
}

}  // namespace cubecensus
