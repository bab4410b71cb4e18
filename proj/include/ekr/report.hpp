#pragma once

// Machine-checkable outcome of a single claim verification. A failed
// report always carries at least one witness (an offending family, set,
// or index rendered as text) so failures are reproducible.

#include <map>
#include <string>
#include <vector>

#include "ekr/bigint.hpp"
#include "ekr/set_family.hpp"

namespace ekr {

struct VerificationReport {
    std::string claim_id;
    bool passed = false;
    std::map<std::string, BigInt> numbers;
    std::vector<std::string> notes;
    std::vector<SetFamily> witness_families;
    std::vector<std::string> witness_items;

    void fail(const std::string& witness) {
        passed = false;
        witness_items.push_back(witness);
    }

    bool has_witness() const { return !witness_families.empty() || !witness_items.empty(); }
};

}  // namespace ekr
