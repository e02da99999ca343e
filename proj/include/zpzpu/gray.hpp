#pragma once

// The Gray map to Z_p^(alpha+2beta), Gray weights, weight enumerators and MacWilliams checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zpzpu/code.hpp"

namespace zpu {

/// Interleaved puts psi(b_j) in place of b_j. Blockwise lists the alpha block, then every first
/// component of psi, then every second component.
enum class GrayOrdering { Interleaved, Blockwise };

struct GrayVector {
    std::uint32_t p;
    GrayOrdering ordering;
    std::vector<std::uint32_t> entries;

    friend bool operator==(const GrayVector&, const GrayVector&) = default;
};

GrayVector phi(const MixedWord& w, GrayOrdering ordering = GrayOrdering::Interleaved);

std::size_t hamming_weight(const GrayVector& v) noexcept;
std::size_t hamming_distance(const GrayVector& x, const GrayVector& y);

/// W_H(psi(x)) = [b != 0] + [a + b != 0].
std::size_t gray_weight(const RElem& x) noexcept;
/// Sum of coordinate weights: 1 per nonzero Z_p entry plus gray_weight of each R entry.
std::size_t gray_weight(const MixedWord& w) noexcept;

/// Three-case table: 0 for zero, 2 when x = a + u(p - b) with a, b nonzero and a != b, else 1.
std::size_t gray_weight_case_table(const RElem& x) noexcept;
std::size_t gray_weight_case_table(const MixedWord& w) noexcept;

struct WeightDiscrepancy {
    RElem element;
    std::size_t table_value;
    std::size_t corrected_value;
};

/// Every element of R where the case table and W_H(psi(.)) disagree, in canonical order.
/// Requires p <= 13.
std::vector<WeightDiscrepancy> weight_discrepancy_report(std::uint32_t p);

/// W_G(x - y).
std::size_t gray_distance(const MixedWord& x, const MixedWord& y);

enum class WeightKind { Gray, CaseTable };

struct WeightEnumerator {
    std::size_t n = 0;
    std::vector<std::uint64_t> coeffs;  ///< A_0 .. A_n

    std::uint64_t total() const noexcept;
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

WeightEnumerator weight_enumerator(const CodewordSet& set, WeightKind kind = WeightKind::Gray);
WeightEnumerator weight_enumerator(const AdditiveCode& code, WeightKind kind = WeightKind::Gray,
                                   std::uint64_t budget = default_budget);
/// Hamming weight enumerator of a set of Z_p vectors given by index.
WeightEnumerator hamming_enumerator(const std::vector<std::uint64_t>& keys, const WordIndex& index);

/// "A_0 A_1 ... A_n".
std::string format_coefficients(const WeightEnumerator& we);
/// "x^5 + 2 x^3 y^2 + ...".
std::string format_polynomial(const WeightEnumerator& we);

/// (1/size) W(x + (q-1) y, x - y). Empty when a coefficient is not a nonnegative integer.
std::optional<WeightEnumerator> macwilliams_transform(const WeightEnumerator& we, std::uint32_t q, std::uint64_t size);

struct ClauseResult {
    bool pass = false;
    std::optional<std::size_t> first_difference;
    std::string detail;
};

struct MacWilliamsReport {
    ClauseResult weight_identity;      ///< (i): W_{C-perp} vs transform of W_C, Gray weight, q = p
    ClauseResult gray_image_identity;  ///< (ii): classical identity for Phi(C) and its Euclidean dual
    ClauseResult gray_image_dual;      ///< (iii): Phi(C-perp) == Phi(C)-perp as sets
};

MacWilliamsReport macwilliams_check(const AdditiveCode& code, std::uint64_t budget = default_budget);

/// Euclidean dual of the Gray image Phi(C) (interleaved), as sorted indices into Z_p^n.
std::vector<std::uint64_t> gray_image_dual(const AdditiveCode& code, std::uint64_t budget = default_budget);
/// Phi(C) (interleaved) as sorted indices into Z_p^n.
std::vector<std::uint64_t> gray_image(const CodewordSet& set, GrayOrdering ordering = GrayOrdering::Interleaved);

} // namespace zpu
