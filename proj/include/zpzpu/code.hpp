#pragma once

// Additive codes: submodules of Z_p^alpha x R^beta presented by generator words.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zpzpu/linalg.hpp"
#include "zpzpu/word.hpp"

namespace zpu {

inline constexpr std::uint64_t default_budget = 10'000'000;

/// Sorted set of codewords, stored as base-p indices of their `to_linear` coordinates.
class CodewordSet {
public:
    CodewordSet(const Shape& shape, std::vector<std::uint64_t> sorted_keys);

    const Shape& shape() const noexcept { return shape_; }
    const WordIndex& index() const noexcept { return index_; }
    std::uint64_t size() const noexcept { return keys_.size(); }
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }

    bool contains(const MixedWord& w) const;
    bool contains_key(std::uint64_t key) const;
    MixedWord word(std::size_t i) const;
    std::vector<MixedWord> words() const;

    friend bool operator==(const CodewordSet& x, const CodewordSet& y) {
        return x.shape_ == y.shape_ && x.keys_ == y.keys_;
    }

private:
    Shape shape_;
    WordIndex index_;
    std::vector<std::uint64_t> keys_;
};

std::uint64_t key_of(const WordIndex& index, const MixedWord& w);

/// The R-submodule generated by a list of words. Immutable; the enumerated codeword set is
/// cached and shared between copies.
class AdditiveCode {
public:
    AdditiveCode(const Shape& shape, std::vector<MixedWord> generators);

    const Shape& shape() const noexcept { return shape_; }
    const std::vector<MixedWord>& generators() const noexcept { return generators_; }

private:
    friend CodewordSet enumerate(const AdditiveCode&, std::uint64_t);
    struct Cache;

    Shape shape_;
    std::vector<MixedWord> generators_;
    std::shared_ptr<Cache> cache_;
};

/// Closure of the generators under addition and both scalar actions, computed by growing the
/// set one coset at a time. Throws BudgetExceeded when the code would exceed `budget` words.
CodewordSet enumerate(const AdditiveCode& code, std::uint64_t budget = default_budget);
bool contains(const AdditiveCode& code, const MixedWord& w, std::uint64_t budget = default_budget);

/// Linearly independent Z_p vectors (in `to_linear` coordinates) spanning the code.
std::vector<ZpVector> zp_basis(const AdditiveCode& code);

/// The ambient space as a code.
AdditiveCode ambient_code(const Shape& shape);

struct CodeType {
    std::uint32_t p;
    std::size_t alpha, beta;
    std::size_t k0;     ///< generators of order p^2
    std::size_t k1;     ///< generators of order p, including pure Z_p rows
    std::size_t kappa;  ///< pure Z_p rows counted in k1
    std::uint64_t predicted_size() const noexcept;

    friend bool operator==(const CodeType&, const CodeType&) = default;
};

/// "(p;alpha,beta;k0,k1)".
std::string format(const CodeType& t);

/// Standard form [I A B; 0 uI uD] over the R block, extended with a third class of rows that
/// live only in the Z_p block. Rows and blocks are expressed in the reduced column order:
///
///   Z_p block: [kappa pivot columns | rest]     R block: [k0 | k1_u | rest]
///   free rows   [0   | F]                                [I | A   | B ]
///   u-rows      [0   | T]                                [0 | uI  | uD]
///   Z_p rows    [I   | E]                                [0 | 0   | 0 ]
struct StandardForm {
    Shape shape;
    std::size_t k0 = 0;
    std::size_t k1_u = 0;
    std::size_t kappa = 0;
    /// Reduced position -> input coordinate, within each block.
    std::vector<std::size_t> fp_perm;
    std::vector<std::size_t> r_perm;
    std::vector<MixedWord> rows;
    std::vector<std::vector<FpElem>> A;  ///< k0 x k1_u
    std::vector<std::vector<RElem>> B;   ///< k0 x (beta - k0 - k1_u)
    std::vector<std::vector<FpElem>> D;  ///< k1_u x (beta - k0 - k1_u)
    std::vector<std::string> notes;

    std::size_t k1() const noexcept { return k1_u + kappa; }
    CodeType type() const noexcept;
    /// The rows with the column permutation undone.
    std::vector<MixedWord> rows_in_input_order() const;
    AdditiveCode reassembled() const;
};

StandardForm standard_form(const AdditiveCode& code);

/// Rearranges coordinates: out.fp[k] = w.fp[fp_perm[k]], out.r[k] = w.r[r_perm[k]].
MixedWord permute_columns(const MixedWord& w, const std::vector<std::size_t>& fp_perm,
                          const std::vector<std::size_t>& r_perm);

enum class DualStrategy { Exhaustive, Nullspace };

/// {w : v.w = 0 for every generator v}. Exhaustive scans the ambient space (needs
/// p^(alpha+2beta) <= budget); Nullspace solves the two Z_p equations each generator imposes.
AdditiveCode dual_oracle(const AdditiveCode& code, DualStrategy strategy = DualStrategy::Nullspace,
                         std::uint64_t budget = default_budget);

/// The raw exhaustive scan behind DualStrategy::Exhaustive.
CodewordSet dual_scan(const AdditiveCode& code, std::uint64_t budget = default_budget);

// Words viewed as alpha + beta uniform R entries, Z_p entries embedded in R. This is the column
// convention in which the closed-form [I A B; 0 uI uD] layout and its parity-check matrix are
// stated.
using UniformRow = std::vector<RElem>;

UniformRow to_uniform(const MixedWord& w);
/// Throws ShapeMismatch when a Z_p column carries a u component.
MixedWord from_uniform(const UniformRow& row, const Shape& shape);
bool is_well_typed(const UniformRow& row, const Shape& shape);
/// u * (sum over Z_p columns) + (sum over R columns), products taken in R.
RElem uniform_inner_product(const UniformRow& x, const UniformRow& y, const Shape& shape);

/// A generator matrix [I_k0 A B; 0 uI_k1 uD] over uniform columns taken in the order `columns`
/// (layout position -> uniform column).
struct ClosedFormLayout {
    Shape shape;
    std::size_t k0 = 0;
    std::size_t k1 = 0;
    std::vector<std::size_t> columns;
    std::vector<UniformRow> A;  ///< k0 x k1
    std::vector<UniformRow> B;  ///< k0 x (m - k0 - k1), m = alpha + beta
    std::vector<UniformRow> D;  ///< k1 x (m - k0 - k1)

    std::size_t width() const noexcept { return shape.alpha() + shape.beta(); }
    /// G in uniform input column order.
    std::vector<UniformRow> generator_rows() const;
};

/// Recognises rows that already have the layout with the identity column order.
std::optional<ClosedFormLayout> detect_closed_form_layout(const std::vector<MixedWord>& rows, const Shape& shape);
/// Expresses a standard form in the layout. Empty when the code has pure Z_p rows or u-rows with
/// Z_p block entries, which the layout cannot represent.
std::optional<ClosedFormLayout> closed_form_layout(const StandardForm& sf);

struct IllTypedEntry {
    std::size_t row;
    std::size_t column;
    RElem entry;
};

struct ParityCheckReport {
    Shape shape;
    std::vector<UniformRow> g_rows;
    /// H = [-B^t + D^t A^t, -D^t, I; uA^t, -uI, 0] in uniform input column order.
    std::vector<UniformRow> h_rows;
    std::vector<IllTypedEntry> ill_typed;
    /// products[i][j] = H row i . G row j.
    std::vector<std::vector<RElem>> products;
    std::vector<std::pair<std::size_t, std::size_t>> non_orthogonal;
    /// Per H row: membership in the dual (only filled by check_against_dual; ill-typed rows are false).
    std::vector<std::optional<bool>> in_dual;

    bool well_typed() const noexcept { return ill_typed.empty(); }
    bool all_orthogonal() const noexcept { return non_orthogonal.empty(); }
};

ParityCheckReport parity_check_closed_form(const ClosedFormLayout& layout);
void check_against_dual(ParityCheckReport& report, const CodewordSet& dual);

enum class Metric { Gray, HammingOfGrayImage };

/// Minimum weight over nonzero codewords. Throws Undefined for the zero code.
std::size_t min_distance(const AdditiveCode& code, Metric metric = Metric::Gray,
                         std::uint64_t budget = default_budget);

} // namespace zpu
