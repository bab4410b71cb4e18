#pragma once

// Serialization of families, condition systems and reports.
// Family text format: header "n k m" (k = 0 for mixed sizes), then m lines
// of ascending elements. JSON mirrors: {"n":..., "blocks":[[...],...]}.
// Counts serialize as decimal strings so nothing truncates at 2^53.

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekr/intersection_conditions.hpp"
#include "ekr/report.hpp"
#include "ekr/set_family.hpp"

namespace ekr {

using Json = nlohmann::json;

inline int uniformity_of(const SetFamily& f) {
    if (f.empty()) return 0;
    const int k = popcount(f.block(0));
    for (Mask b : f.blocks())
        if (popcount(b) != k) return 0;
    return k;
}

inline std::string family_to_text(const SetFamily& f) {
    std::ostringstream out;
    out << f.n() << ' ' << uniformity_of(f) << ' ' << f.size() << '\n';
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto elems = f.block_set(i).elements();
        for (std::size_t j = 0; j < elems.size(); ++j)
            out << elems[j] << (j + 1 < elems.size() ? ' ' : '\n');
        if (elems.empty()) out << '\n';
    }
    return out.str();
}

inline SetFamily family_from_text(std::istream& in) {
    int n = 0, k = 0;
    std::size_t m = 0;
    if (!(in >> n >> k >> m)) throw std::invalid_argument("family text: bad header");
    std::string rest;
    std::getline(in, rest);
    std::vector<std::vector<int>> lists;
    lists.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::string line;
        if (!std::getline(in, line)) throw std::invalid_argument("family text: truncated");
        std::istringstream ls(line);
        std::vector<int> elems;
        int e;
        while (ls >> e) elems.push_back(e);
        if (k > 0 && static_cast<int>(elems.size()) != k)
            throw std::invalid_argument("family text: block size mismatch with header k");
        lists.push_back(std::move(elems));
    }
    return SetFamily::from_element_lists(n, lists);
}

inline SetFamily family_from_text(const std::string& text) {
    std::istringstream in(text);
    return family_from_text(in);
}

inline Json family_to_json(const SetFamily& f) {
    Json blocks = Json::array();
    for (std::size_t i = 0; i < f.size(); ++i) blocks.push_back(f.block_set(i).elements());
    return Json{{"n", f.n()}, {"blocks", blocks}};
}

inline SetFamily family_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("blocks"))
        throw std::invalid_argument("family json: expected keys n, blocks");
    const int n = j.at("n").get<int>();
    std::vector<std::vector<int>> lists;
    for (const auto& b : j.at("blocks")) lists.push_back(b.get<std::vector<int>>());
    return SetFamily::from_element_lists(n, lists);
}

inline Json condition_system_to_json(const ConditionSystem& sys) {
    Json rows = Json::array();
    for (const auto& row : sys.rows) {
        Json conds = Json::array();
        for (const auto& c : row.conditions)
            conds.push_back(Json{{"P", c.p.elements()}, {"beta", c.beta}});
        rows.push_back(Json{{"label", row.label},
                            {"witness", row.witness.elements()},
                            {"conds", std::move(conds)}});
    }
    return Json{{"n", sys.n}, {"s", sys.s}, {"rows", std::move(rows)}};
}

inline ConditionSystem condition_system_from_json(const Json& j) {
    ConditionSystem sys;
    sys.n = j.at("n").get<int>();
    sys.s = j.at("s").get<int>();
    for (const auto& row : j.at("rows")) {
        ConditionRow r;
        r.label = row.at("label").get<std::string>();
        r.witness = ElementSet::from_elements(sys.n, row.at("witness").get<std::vector<int>>());
        for (const auto& c : row.at("conds"))
            r.conditions.emplace_back(
                ElementSet::from_elements(sys.n, c.at("P").get<std::vector<int>>()),
                c.at("beta").get<int>());
        sys.rows.push_back(std::move(r));
    }
    sys.validate();
    return sys;
}

inline Json report_to_json(const VerificationReport& rep) {
    Json numbers = Json::object();
    for (const auto& [name, value] : rep.numbers) numbers[name] = value.str();
    Json witnesses = Json::array();
    for (const auto& fam : rep.witness_families) witnesses.push_back(family_to_json(fam));
    for (const auto& item : rep.witness_items) witnesses.push_back(item);
    return Json{{"claim_id", rep.claim_id},
                {"passed", rep.passed},
                {"numbers", std::move(numbers)},
                {"notes", rep.notes},
                {"witnesses", std::move(witnesses)}};
}

// Atomic write: temp file in the same directory, then rename.
inline void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << contents;
        if (!out.good()) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ekr
