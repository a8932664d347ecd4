#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "kring/based_ring.hpp"
#include "kring/error.hpp"

namespace kring {

using ojson = nlohmann::ordered_json;

/// Canonical ring serialization: fixed field order rank, labels, unit,
/// dual, N with N[i][j][k] nesting. Round-trips bit-exactly.
inline ojson ring_to_json(const BasedRing& r) {
    ojson j;
    j["rank"] = r.rank();
    j["labels"] = r.labels();
    j["unit"] = r.unit();
    j["dual"] = r.duals();
    ojson n = ojson::array();
    for (int i = 0; i < r.rank(); ++i) {
        ojson ni = ojson::array();
        for (int jj = 0; jj < r.rank(); ++jj) {
            ojson nij = ojson::array();
            for (int k = 0; k < r.rank(); ++k) nij.push_back(r.N(i, jj, k));
            ni.push_back(std::move(nij));
        }
        n.push_back(std::move(ni));
    }
    j["N"] = std::move(n);
    return j;
}

inline BasedRing ring_from_json(const ojson& j) {
    auto need = [&](const char* key) -> const ojson& {
        if (!j.is_object() || !j.contains(key))
            throw InvalidInput(std::string("ring JSON: missing field '") + key + "'");
        return j.at(key);
    };
    const ojson& jrank = need("rank");
    if (!jrank.is_number_integer() || jrank.get<int64_t>() < 1)
        throw InvalidInput("ring JSON: 'rank' must be a positive integer");
    int rank = static_cast<int>(jrank.get<int64_t>());

    const ojson& jlabels = need("labels");
    if (!jlabels.is_array() || static_cast<int>(jlabels.size()) != rank)
        throw InvalidInput("ring JSON: 'labels' must be an array of length rank");
    std::vector<std::string> labels;
    for (const auto& l : jlabels) {
        if (!l.is_string()) throw InvalidInput("ring JSON: labels must be strings");
        labels.push_back(l.get<std::string>());
    }

    const ojson& junit = need("unit");
    if (!junit.is_number_integer())
        throw InvalidInput("ring JSON: 'unit' must be an integer index");
    int unit = static_cast<int>(junit.get<int64_t>());
    if (unit < 0 || unit >= rank) throw InvalidInput("ring JSON: 'unit' out of range");

    const ojson& jdual = need("dual");
    if (!jdual.is_array() || static_cast<int>(jdual.size()) != rank)
        throw InvalidInput("ring JSON: 'dual' must be an array of length rank");
    std::vector<int> dual;
    for (const auto& d : jdual) {
        if (!d.is_number_integer())
            throw InvalidInput("ring JSON: dual entries must be integers");
        int64_t v = d.get<int64_t>();
        if (v < 0 || v >= rank) throw InvalidInput("ring JSON: dual index out of range");
        dual.push_back(static_cast<int>(v));
    }

    const ojson& jn = need("N");
    if (!jn.is_array() || static_cast<int>(jn.size()) != rank)
        throw InvalidInput("ring JSON: 'N' must be a rank x rank x rank tensor");
    std::vector<int64_t> n;
    n.reserve(static_cast<size_t>(rank) * rank * rank);
    for (const auto& ni : jn) {
        if (!ni.is_array() || static_cast<int>(ni.size()) != rank)
            throw InvalidInput("ring JSON: 'N' must be a rank x rank x rank tensor");
        for (const auto& nij : ni) {
            if (!nij.is_array() || static_cast<int>(nij.size()) != rank)
                throw InvalidInput("ring JSON: 'N' must be a rank x rank x rank tensor");
            for (const auto& e : nij) {
                if (!e.is_number_integer())
                    throw InvalidInput("ring JSON: structure constants must be integers");
                int64_t v = e.get<int64_t>();
                if (v < 0)
                    throw InvalidInput("ring JSON: structure constants must be nonnegative");
                n.push_back(v);
            }
        }
    }
    return BasedRing(std::move(labels), unit, std::move(dual), std::move(n));
}

/// Parse ring JSON text; parse errors carry the byte offset reported by
/// the JSON parser.
inline BasedRing parse_ring(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("ring JSON parse error at byte ") +
                           std::to_string(e.byte) + ": " + e.what());
    }
    return ring_from_json(j);
}

inline std::string ring_to_json_string(const BasedRing& r) {
    return ring_to_json(r).dump(2) + "\n";
}

}
