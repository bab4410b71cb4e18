#pragma once

// Intersection conditions (P, beta) — the predicate |X & P| = beta — and
// condition systems: per-row witness sets with a fixed number of
// conditions each. These are the combinatorial side of the linear
// independence machinery.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekr/element_set.hpp"

namespace ekr {

struct IntersectionCondition {
    ElementSet p;
    int beta = 0;

    IntersectionCondition() = default;
    IntersectionCondition(ElementSet set, int b) : p(set), beta(b) {
        if (beta < 0 || beta > p.n)
            throw std::invalid_argument("beta out of range [0, n]: " + std::to_string(beta));
    }

    std::string str() const { return "(" + p.str() + "," + std::to_string(beta) + ")"; }
};

inline bool satisfies(const ElementSet& x, const IntersectionCondition& c) {
    if (x.n != c.p.n) throw std::invalid_argument("condition and set on different ground sets");
    return popcount(x.bits & c.p.bits) == c.beta;
}

struct ConditionRow {
    std::string label;
    ElementSet witness;
    std::vector<IntersectionCondition> conditions;
};

// A system of rows, each carrying exactly s conditions. Rows with fewer
// natural conditions are padded by repeating the first one; repetition
// does not change the zero set or the degree bound.
struct ConditionSystem {
    int n = 0;
    int s = 0;
    std::vector<ConditionRow> rows;

    void validate() const {
        std::vector<std::string> labels;
        labels.reserve(rows.size());
        for (const auto& row : rows) {
            if (row.witness.n != n)
                throw std::invalid_argument("row " + row.label + ": witness ground set mismatch");
            if (static_cast<int>(row.conditions.size()) != s)
                throw std::invalid_argument("row " + row.label + " has " +
                                            std::to_string(row.conditions.size()) +
                                            " conditions, expected s = " + std::to_string(s));
            for (const auto& c : row.conditions)
                if (c.p.n != n)
                    throw std::invalid_argument("row " + row.label + ": condition ground set mismatch");
            labels.push_back(row.label);
        }
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            throw std::invalid_argument("duplicate row label");
    }

    // Pads `conds` to exactly s entries by repeating the first condition.
    static std::vector<IntersectionCondition> pad(std::vector<IntersectionCondition> conds, int s) {
        if (conds.empty()) throw std::invalid_argument("cannot pad an empty condition list");
        if (static_cast<int>(conds.size()) > s)
            throw std::invalid_argument("row has more than s conditions");
        while (static_cast<int>(conds.size()) < s) conds.push_back(conds.front());
        return conds;
    }
};

}  // namespace ekr
