#pragma once

// Dense linear algebra over Z_p and base-p indexing of Z_p^n.

#include <cstdint>
#include <span>
#include <vector>

#include "zpzpu/ring.hpp"

namespace zpu {

using ZpVector = std::vector<std::uint32_t>;

/// Reduced row echelon form; `rows` holds only the nonzero rows, `pivots[i]` is the pivot column of row i.
struct Rref {
    std::vector<ZpVector> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return rows.size(); }
};

Rref rref(std::vector<ZpVector> rows, std::size_t ncols, const PrimeCtx& ctx);

/// Basis of {x : M x = 0} for the matrix whose rows are given.
std::vector<ZpVector> nullspace(const std::vector<ZpVector>& rows, std::size_t ncols, const PrimeCtx& ctx);

/// Membership of v in the row space of an RREF.
bool in_row_space(const Rref& basis, const ZpVector& v, const PrimeCtx& ctx);

/// Base-p index of vectors in Z_p^n, first coordinate most significant, so that index order
/// equals lexicographic order of coordinates.
class WordIndex {
public:
    /// Throws BudgetExceeded when p^n does not fit in 63 bits.
    WordIndex(std::uint32_t p, std::size_t n);

    std::uint32_t p() const noexcept { return p_; }
    std::uint64_t size() const noexcept { return size_; }
    std::size_t length() const noexcept { return n_; }

    std::uint64_t encode(std::span<const std::uint32_t> coords) const noexcept;
    void decode(std::uint64_t index, std::span<std::uint32_t> out) const noexcept;
    ZpVector decode(std::uint64_t index) const;
    /// Index of the coordinatewise sum mod p.
    std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept;
    /// Index of c * x mod p.
    std::uint64_t scale(std::uint32_t c, std::uint64_t x) const noexcept;

private:
    std::uint32_t p_;
    std::size_t n_;
    std::uint64_t size_;
};

/// All Z_p-linear combinations of linearly independent vectors, as sorted indices.
/// Throws BudgetExceeded when p^rank > budget.
std::vector<std::uint64_t> enumerate_span(const std::vector<ZpVector>& independent, const WordIndex& index,
                                          std::uint64_t budget);

/// p^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::size_t e) noexcept;

} // namespace zpu
