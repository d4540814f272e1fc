#ifndef VPOL_TYPO_LEDGER_HPP
#define VPOL_TYPO_LEDGER_HPP

#include <string>
#include <vector>

#include "vpol/units.hpp"

namespace vpol::ledger {

// One numerically adjudicated discrepancy between a formula as published
// and its quadrature/identity oracle.
struct LedgerSample {
    std::string quantity;
    double x = 0.0;          // sampling abscissa (k, z, eta, ... as noted)
    double published = 0.0;  // value of the expression as published
    double oracle = 0.0;     // oracle / corrected value
    double rel_discrepancy = 0.0;
};

struct LedgerEntry {
    std::string id;
    std::string description;
    std::string resolution;
    std::vector<LedgerSample> samples;
};

struct TypoLedger {
    std::vector<LedgerEntry> entries;
};

// Assemble the full ledger; k_values sample the spectral-function entry
// (atomic units).
TypoLedger build_typo_ledger(const PhysicalContext& ctx,
                             const std::vector<double>& k_values);

std::string to_json_string(const TypoLedger& ledger, int indent = 2);

} // namespace vpol::ledger

#endif
