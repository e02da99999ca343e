#include "zpzpu/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "zpzpu/cyclic.hpp"
#include "zpzpu/gray.hpp"

namespace zpu {

std::string format(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::DiscrepancyDocumented: return "DISCREPANCY-DOCUMENTED";
    case CheckStatus::SkippedBudget: return "SKIPPED(budget)";
    case CheckStatus::NotApplicable: return "N/A";
    }
    return "";
}

bool VerificationLedger::any_failed() const noexcept {
    return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == CheckStatus::Fail; });
}

int VerificationLedger::exit_code() const noexcept { return any_failed() ? 1 : 0; }

const LedgerEntry* VerificationLedger::find(const std::string& name) const {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
    return it == entries.end() ? nullptr : &*it;
}

namespace {

std::string format_row(const UniformRow& row) {
    std::string out = "(";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? ", " : "") + format(row[i]);
    return out + ")";
}

std::string pow_text(std::uint32_t p, std::size_t e) { return std::to_string(p) + "^" + std::to_string(e); }

CheckStatus pass_or(bool ok, CheckStatus otherwise) { return ok ? CheckStatus::Pass : otherwise; }

struct Recorder {
    VerificationLedger& ledger;

    // Runs `check`; a budget overrun becomes SKIPPED(budget) for this entry only.
    void run(const std::string& name, const std::function<std::pair<CheckStatus, std::string>()>& check) {
        try {
            auto [status, detail] = check();
            ledger.entries.push_back({name, status, std::move(detail)});
        } catch (const BudgetExceeded& e) {
            ledger.entries.push_back({name, CheckStatus::SkippedBudget, e.what()});
        }
    }
    void run_many(const std::vector<std::string>& names,
                  const std::function<std::vector<std::pair<CheckStatus, std::string>>()>& check) {
        try {
            auto results = check();
            for (std::size_t i = 0; i < names.size(); ++i)
                ledger.entries.push_back({names[i], results[i].first, std::move(results[i].second)});
        } catch (const BudgetExceeded& e) {
            for (const auto& n : names) ledger.entries.push_back({n, CheckStatus::SkippedBudget, e.what()});
        }
    }
};

} // namespace

VerificationLedger verify(const AdditiveCode& code, std::uint64_t budget) {
    VerificationLedger ledger;
    Recorder rec{ledger};
    const auto& shape = code.shape();
    const auto p = shape.p();
    const auto n = shape.n();
    const auto sf = standard_form(code);

    rec.run("standard form", [&]() -> std::pair<CheckStatus, std::string> {
        bool same = enumerate(sf.reassembled(), budget) == enumerate(code, budget);
        return {pass_or(same, CheckStatus::Fail),
                same ? "reduced rows generate the input code" : "reduced rows generate a different code"};
    });

    rec.run("type", [&]() -> std::pair<CheckStatus, std::string> {
        auto type = sf.type();
        auto size = enumerate(code, budget).size();
        std::string detail = "type " + format(type) + ", |C| = " + std::to_string(size) + ", p^(2k0+k1) = " +
                             std::to_string(type.predicted_size());
        if (type.kappa) detail += ", " + std::to_string(type.kappa) + " pure Z_p rows counted in k1";
        return {pass_or(size == type.predicted_size(), CheckStatus::Fail), detail};
    });

    std::optional<AdditiveCode> dual;
    std::optional<CodewordSet> dual_set;
    try {
        dual = dual_oracle(code, DualStrategy::Nullspace, budget);
        dual_set = enumerate(*dual, budget);
    } catch (const BudgetExceeded&) {
    }

    rec.run("dual strategies", [&]() -> std::pair<CheckStatus, std::string> {
        auto scanned = dual_scan(code, budget);
        if (!dual_set) throw BudgetExceeded("dual", budget);
        bool same = scanned == *dual_set;
        return {pass_or(same, CheckStatus::Fail), "exhaustive scan " + std::to_string(scanned.size()) +
                                                      " words, nullspace " + std::to_string(dual_set->size()) + " words"};
    });

    rec.run("double dual", [&]() -> std::pair<CheckStatus, std::string> {
        if (!dual) throw BudgetExceeded("dual", budget);
        bool same = enumerate(dual_oracle(*dual, DualStrategy::Nullspace, budget), budget) == enumerate(code, budget);
        return {pass_or(same, CheckStatus::Fail), same ? "(C-perp)-perp = C" : "(C-perp)-perp != C"};
    });

    rec.run("size duality", [&]() -> std::pair<CheckStatus, std::string> {
        if (!dual_set) throw BudgetExceeded("dual", budget);
        auto size = enumerate(code, budget).size();
        auto product = static_cast<unsigned __int128>(size) * dual_set->size();
        bool ok = product == static_cast<unsigned __int128>(saturating_pow(p, n));
        return {pass_or(ok, CheckStatus::Fail), "|C| = " + std::to_string(size) + ", |C-perp| = " +
                                                    std::to_string(dual_set->size()) + ", product " +
                                                    (ok ? "= " : "!= ") + pow_text(p, n)};
    });

    // Closed-form parity-check matrix.
    std::optional<ClosedFormLayout> layout = detect_closed_form_layout(code.generators(), shape);
    std::string source = "input rows";
    if (!layout) {
        layout = closed_form_layout(sf);
        source = "standard form";
    }
    const std::vector<std::string> pc_names{"parity check: orthogonality", "parity check: typing",
                                            "parity check: dual membership", "parity check: dual type"};
    if (!layout) {
        for (const auto& name : pc_names)
            ledger.entries.push_back({name, CheckStatus::NotApplicable,
                                      "the code has rows the closed form cannot express (" + std::to_string(sf.kappa) +
                                          " pure Z_p rows)"});
    } else {
        rec.run_many(pc_names, [&]() {
            auto report = parity_check_closed_form(*layout);
            if (!dual_set) throw BudgetExceeded("dual", budget);
            check_against_dual(report, *dual_set);
            std::vector<std::pair<CheckStatus, std::string>> out;

            std::string ortho = "H from " + source + ", k0 = " + std::to_string(layout->k0) +
                                ", k1 = " + std::to_string(layout->k1);
            for (auto [h, g] : report.non_orthogonal)
                ortho += "; H row " + std::to_string(h + 1) + " " + format_row(report.h_rows[h]) + " . G row " +
                         std::to_string(g + 1) + " " + format_row(report.g_rows[g]) + " = " +
                         format(report.products[h][g]);
            out.emplace_back(pass_or(report.all_orthogonal(), CheckStatus::DiscrepancyDocumented),
                             report.all_orthogonal() ? ortho + "; every H row is orthogonal to every G row" : ortho);

            std::string typing;
            for (const auto& e : report.ill_typed)
                typing += (typing.empty() ? "" : "; ") + std::string("H row ") + std::to_string(e.row + 1) +
                          " has " + format(e.entry) + " in Z_p column " + std::to_string(e.column + 1);
            out.emplace_back(pass_or(report.well_typed(), CheckStatus::DiscrepancyDocumented),
                             typing.empty() ? "every entry of H fits its column alphabet" : typing);

            std::size_t in = 0;
            std::string missing;
            for (std::size_t i = 0; i < report.in_dual.size(); ++i) {
                if (report.in_dual[i].value_or(false)) {
                    ++in;
                } else {
                    missing += (missing.empty() ? " not in C-perp: rows " : ",") + std::to_string(i + 1);
                }
            }
            out.emplace_back(pass_or(in == report.h_rows.size(), CheckStatus::DiscrepancyDocumented),
                             std::to_string(in) + " of " + std::to_string(report.h_rows.size()) +
                                 " H rows lie in C-perp" + (missing.empty() ? "" : ";" + missing));

            const auto m = layout->width();
            CodeType claimed{p, shape.alpha(), shape.beta(), m - layout->k0 - layout->k1, layout->k1, 0};
            auto oracle_type = standard_form(*dual).type();
            bool ok = claimed.predicted_size() == dual_set->size();
            out.emplace_back(pass_or(ok, CheckStatus::DiscrepancyDocumented),
                             "claimed \"C-perp is of type " + format(claimed) + "\" gives " +
                                 std::to_string(claimed.predicted_size()) + " words; oracle |C-perp| = " +
                                 std::to_string(dual_set->size()) + ", type " + format(oracle_type) +
                                 "; |C| * |C-perp| = " + std::to_string(enumerate(code, budget).size()) + " * " +
                                 std::to_string(dual_set->size()) + " vs " + pow_text(p, n) + " = " +
                                 std::to_string(saturating_pow(p, n)));
            return out;
        });
    }

    rec.run("gray weight", [&]() -> std::pair<CheckStatus, std::string> {
        auto set = enumerate(code, budget);
        std::size_t bad = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            auto w = set.word(i);
            if (gray_weight(w) != hamming_weight(phi(w))) ++bad;
        }
        return {pass_or(bad == 0, CheckStatus::Fail),
                bad == 0 ? "W_G(c) = W_H(Phi(c)) for all " + std::to_string(set.size()) + " codewords"
                         : std::to_string(bad) + " codewords violate W_G(c) = W_H(Phi(c))"};
    });

    rec.run("case-table weight", [&]() -> std::pair<CheckStatus, std::string> {
        auto set = enumerate(code, budget);
        std::size_t differ = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            auto w = set.word(i);
            if (gray_weight_case_table(w) != gray_weight(w)) ++differ;
        }
        std::string detail = std::to_string(differ) + " of " + std::to_string(set.size()) +
                             " codewords get a different weight from the three-case table";
        if (p <= 13) {
            auto table = weight_discrepancy_report(p);
            detail += "; table disagrees with W_H(psi(.)) on " + std::to_string(table.size()) + " ring elements";
            if (!table.empty()) {
                detail += ", e.g. " + format(table.front().element) + ": " + std::to_string(table.front().table_value) +
                          " vs " + std::to_string(table.front().corrected_value);
            }
        }
        return {pass_or(differ == 0, CheckStatus::DiscrepancyDocumented), detail};
    });

    rec.run_many({"macwilliams (i)", "macwilliams (ii)", "macwilliams (iii)"}, [&]() {
        auto report = macwilliams_check(code, budget);
        return std::vector<std::pair<CheckStatus, std::string>>{
            {pass_or(report.weight_identity.pass, CheckStatus::DiscrepancyDocumented), report.weight_identity.detail},
            {pass_or(report.gray_image_identity.pass, CheckStatus::Fail), report.gray_image_identity.detail},
            {pass_or(report.gray_image_dual.pass, CheckStatus::DiscrepancyDocumented), report.gray_image_dual.detail}};
    });

    const std::vector<std::string> cyclic_names{"dual cyclic", "gray shift (i)", "gray shift (ii)",
                                                "gray shift (iii)"};
    bool cyclic = false;
    try {
        cyclic = is_cyclic(code, budget);
    } catch (const BudgetExceeded& e) {
        for (const auto& name : cyclic_names) ledger.entries.push_back({name, CheckStatus::SkippedBudget, e.what()});
        return ledger;
    }
    if (!cyclic) {
        for (const auto& name : cyclic_names)
            ledger.entries.push_back({name, CheckStatus::NotApplicable, "the code is not cyclic"});
        return ledger;
    }
    rec.run("dual cyclic", [&]() -> std::pair<CheckStatus, std::string> {
        auto r = dual_cyclicity_check(code, budget);
        return {pass_or(r.dual_cyclic, CheckStatus::DiscrepancyDocumented),
                std::string(r.dual_cyclic ? "C-perp is cyclic" : "C-perp is not cyclic") + ", |C-perp| = " +
                    std::to_string(r.dual_size)};
    });
    rec.run_many({"gray shift (i)", "gray shift (ii)", "gray shift (iii)"}, [&]() {
        auto r = gray_shift_analysis(code, budget);
        auto line = [](bool ok, const std::string& what) {
            return what + (ok ? " is closed under " : " is not closed under ");
        };
        return std::vector<std::pair<CheckStatus, std::string>>{
            {pass_or(r.full_interleaved, CheckStatus::DiscrepancyDocumented),
             line(r.full_interleaved, "interleaved Phi(C)") + "rotation of all " + std::to_string(n) + " coordinates"},
            {pass_or(r.full_blockwise, CheckStatus::DiscrepancyDocumented),
             line(r.full_blockwise, "blockwise Phi(C)") + "rotation of all " + std::to_string(n) + " coordinates"},
            {pass_or(r.block_shift, CheckStatus::Fail),
             line(r.block_shift, "blockwise Phi(C)") + "separate rotation of its three blocks"}};
    });
    return ledger;
}

} // namespace zpu
