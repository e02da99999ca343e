#pragma once

// The verification ledger: every structural claim about a code, checked against brute-force
// oracles.

#include <cstdint>
#include <string>
#include <vector>

#include "zpzpu/code.hpp"

namespace zpu {

/// Discrepancy: a printed closed form disagrees with the oracle. Fail: the library broke one of
/// its own invariants. NotApplicable: the check has no input for this code.
enum class CheckStatus { Pass, Fail, DiscrepancyDocumented, SkippedBudget, NotApplicable };

std::string format(CheckStatus s);

struct LedgerEntry {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct VerificationLedger {
    std::vector<LedgerEntry> entries;

    bool any_failed() const noexcept;
    /// 1 when any entry failed, else 0.
    int exit_code() const noexcept;
    const LedgerEntry* find(const std::string& name) const;
};

VerificationLedger verify(const AdditiveCode& code, std::uint64_t budget = default_budget);

} // namespace zpu
