#include "lrc/json_io.hpp"

#include <string>

namespace lrc {

namespace {

// 1-based on the wire, 0-based in memory.
json coords_out(const CoordSet& s) {
    json arr = json::array();
    for (int c : s) arr.push_back(c + 1);
    return arr;
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ShapeError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

int require_int(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer()) {
        throw ShapeError(std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<int>();
}

Symbol symbol_in(const json& v, int q, const char* what) {
    if (!v.is_number_integer()) {
        throw ShapeError(std::string(what) + " must be an integer");
    }
    const long long raw = v.get<long long>();
    if (raw < 0 || raw >= q) {
        throw ShapeError(std::string(what) + " " + std::to_string(raw) +
                         " out of range for q = " + std::to_string(q));
    }
    return static_cast<Symbol>(raw);
}

std::vector<Word> words_in(const json& j, int q, int n) {
    const json& arr = require(j, "codewords");
    if (!arr.is_array() || arr.empty()) {
        throw ShapeError("\"codewords\" must be a non-empty array");
    }
    std::vector<Word> words;
    words.reserve(arr.size());
    for (const json& row : arr) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw ShapeError("each codeword must be an array of n = " +
                             std::to_string(n) + " symbols");
        }
        Word w;
        w.reserve(n);
        for (const json& v : row) w.push_back(symbol_in(v, q, "symbol"));
        words.push_back(std::move(w));
    }
    return words;
}

}  // namespace

json codebook_to_json(const Codebook& c) {
    json j;
    j["q"] = c.q();
    j["n"] = c.n();
    json rows = json::array();
    for (const Word& w : c.words()) {
        json row = json::array();
        for (Symbol s : w) row.push_back(s);
        rows.push_back(std::move(row));
    }
    j["codewords"] = std::move(rows);
    return j;
}

Codebook codebook_from_json(const json& j, const Limits& limits) {
    const int q = require_int(j, "q");
    const int n = require_int(j, "n");
    if (q < 2 || n < 1) {
        throw ShapeError("need q >= 2 and n >= 1");
    }
    return Codebook(q, words_in(j, q, n), limits);
}

json systematic_to_json(const SystematicCode& c) {
    json j;
    j["q"] = c.q();
    j["n"] = c.n();
    j["k"] = c.k();
    json rows = json::array();
    for (const Word& w : c.base().words()) {
        json row = json::array();
        for (Symbol s : w) row.push_back(s);
        rows.push_back(std::move(row));
    }
    j["codewords"] = std::move(rows);
    return j;
}

SystematicCode systematic_from_json(const json& j, const Limits& limits) {
    return SystematicCode(codebook_from_json(j, limits), require_int(j, "k"));
}

json locality_profile_to_json(const LocalityProfile& profile) {
    json arr = json::array();
    for (const LocalityEntry& entry : profile) {
        json row;
        row["i"] = entry.coordinate + 1;
        row["locality"] = entry.locality ? json(*entry.locality) : json(nullptr);
        row["witness"] = entry.witness ? coords_out(*entry.witness) : json(nullptr);
        arr.push_back(std::move(row));
    }
    return arr;
}

LocalityProfile locality_profile_from_json(const json& j) {
    if (!j.is_array()) throw ShapeError("locality profile must be an array");
    LocalityProfile profile;
    for (const json& row : j) {
        LocalityEntry entry;
        entry.coordinate = require_int(row, "i") - 1;
        const json& locality = require(row, "locality");
        const json& witness = require(row, "witness");
        if (!locality.is_null()) {
            entry.locality = locality.get<int>();
            if (!witness.is_array()) {
                throw ShapeError("witness must accompany a non-null locality");
            }
            CoordSet w;
            for (const json& v : witness) w.push_back(v.get<int>() - 1);
            entry.witness = std::move(w);
        }
        profile.push_back(std::move(entry));
    }
    return profile;
}

json trace_to_json(const SubcodeTrace& trace) {
    json j;
    json steps = json::array();
    for (const SubcodeStep& step : trace.steps) {
        json s;
        s["i"] = step.i + 1;
        s["S"] = coords_out(step.S);
        s["T"] = coords_out(step.T);
        json sigma = json::array();
        for (Symbol v : step.sigma) sigma.push_back(v);
        s["sigma"] = std::move(sigma);
        s["size_after"] = step.size_after;
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["ell"] = trace.ell;
    j["R"] = coords_out(trace.R_final);
    return j;
}

json structure_report_to_json(const StructureReport& report) {
    json j;
    j["optimal"] = report.optimal;
    json groups = json::array();
    for (const CoordSet& g : report.groups) groups.push_back(coords_out(g));
    j["groups"] = std::move(groups);
    j["partition"] = {{"I", coords_out(report.info_coords)},
                      {"L", coords_out(report.light_parities)},
                      {"H", coords_out(report.heavy_parities)}};
    json items;
    for (const auto& [key, verdict] : report.items) {
        items[key] = {{"pass", verdict.pass}, {"detail", verdict.detail}};
    }
    j["items"] = std::move(items);
    j["heavy_bound"] = report.heavy_bound ? json(*report.heavy_bound) : json(nullptr);
    j["applicable"] = report.applicable;
    if (!report.applicable) j["reason"] = report.reason;
    return j;
}

json bound_report_to_json(const BoundReport& report) {
    return json{{"n", report.n},     {"k", report.k},
                {"d", report.d},     {"r", report.r},
                {"rhs", report.rhs}, {"holds", report.holds},
                {"optimal", report.optimal}};
}

json singleton_report_to_json(const SingletonReport& report) {
    return json{{"lhs", report.lhs},
                {"rhs", report.rhs},
                {"holds", report.holds},
                {"slack", report.slack}};
}

json tightness_report_to_json(const TightnessReport& report) {
    return json{{"pass", report.pass()},
                {"steps_full_width", report.steps_full_width},
                {"ell_matches", report.ell_matches},
                {"sizes_match", report.sizes_match},
                {"groups_disjoint", report.groups_disjoint},
                {"expected_ell", report.expected_ell},
                {"detail", report.detail}};
}

ConstructionSpec construction_spec_from_json(const json& j) {
    const json& kind = require(j, "construction");
    if (!kind.is_string()) throw ShapeError("\"construction\" must be a string");
    ConstructionSpec spec;
    const std::string name = kind.get<std::string>();
    if (name == "pyramid") {
        spec.kind = ConstructionSpec::Kind::Pyramid;
        spec.r = require_int(j, "r");
    } else if (name == "rs_mds") {
        spec.kind = ConstructionSpec::Kind::RsMds;
    } else {
        throw ShapeError("unknown construction \"" + name + "\"");
    }
    spec.q = require_int(j, "q");
    spec.k = require_int(j, "k");
    spec.d = require_int(j, "d");
    return spec;
}

json construction_spec_to_json(const ConstructionSpec& spec) {
    json j;
    j["construction"] =
        spec.kind == ConstructionSpec::Kind::Pyramid ? "pyramid" : "rs_mds";
    j["q"] = spec.q;
    j["k"] = spec.k;
    if (spec.kind == ConstructionSpec::Kind::Pyramid) j["r"] = spec.r;
    j["d"] = spec.d;
    return j;
}

TwistSpec twist_spec_from_json(const json& j) {
    if (j.is_object() && j.contains("perms")) {
        const json& arr = j.at("perms");
        if (!arr.is_array()) throw ShapeError("\"perms\" must be an array");
        std::vector<std::vector<Symbol>> perms;
        for (const json& row : arr) {
            if (!row.is_array()) throw ShapeError("each permutation must be an array");
            std::vector<Symbol> perm;
            for (const json& v : row) {
                if (!v.is_number_integer() || v.get<long long>() < 0) {
                    throw ShapeError("permutation entries must be non-negative integers");
                }
                perm.push_back(static_cast<Symbol>(v.get<long long>()));
            }
            perms.push_back(std::move(perm));
        }
        return TwistSpec::explicit_perms(std::move(perms));
    }
    if (j.is_object() && j.contains("seed")) {
        return TwistSpec::seeded(j.at("seed").get<std::uint64_t>());
    }
    throw ShapeError("twist spec needs \"seed\" or \"perms\"");
}

json pattern_to_json(const ErasurePattern& pattern) {
    json word = json::array();
    for (const auto& symbol : pattern.word) {
        word.push_back(symbol ? json(*symbol) : json(nullptr));
    }
    return json{{"word", std::move(word)}};
}

ErasurePattern pattern_from_json(const json& j) {
    const json& word = require(j, "word");
    if (!word.is_array() || word.empty()) {
        throw ShapeError("\"word\" must be a non-empty array");
    }
    ErasurePattern pattern;
    for (const json& v : word) {
        if (v.is_null()) {
            pattern.word.push_back(std::nullopt);
        } else if (v.is_number_integer() && v.get<long long>() >= 0 &&
                   v.get<long long>() <= 65535) {
            pattern.word.push_back(static_cast<Symbol>(v.get<long long>()));
        } else {
            throw ShapeError("pattern entries must be symbols or null");
        }
    }
    return pattern;
}

json recovery_to_json(const RecoveryResult& result) {
    json j;
    switch (result.status) {
        case RecoveryResult::Status::Unique: {
            j["status"] = "unique";
            json word = json::array();
            for (Symbol s : *result.word) word.push_back(s);
            j["word"] = std::move(word);
            break;
        }
        case RecoveryResult::Status::Ambiguous:
            j["status"] = "ambiguous";
            j["count"] = result.match_count;
            break;
        case RecoveryResult::Status::Inconsistent:
            j["status"] = "inconsistent";
            break;
    }
    return j;
}

Strategy forced_steps_from_json(const json& j) {
    if (!j.is_array()) throw ShapeError("forced steps must be an array");
    Strategy strategy;
    for (const json& row : j) {
        const int i = require_int(row, "i") - 1;
        const json& s = require(row, "S");
        if (!s.is_array()) throw ShapeError("\"S\" must be an array");
        CoordSet coords;
        for (const json& v : s) coords.push_back(v.get<int>() - 1);
        strategy.forced_steps.emplace_back(i, std::move(coords));
    }
    return strategy;
}

}  // namespace lrc
