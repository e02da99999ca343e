#pragma once

// Words of the ambient space Z_p^alpha x R^beta and the scalar actions on them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zpzpu/ring.hpp"

namespace zpu {

/// Block lengths of the ambient space. alpha Z_p coordinates followed by beta R coordinates.
class Shape {
public:
    Shape(PrimeCtx ctx, std::size_t alpha, std::size_t beta);

    const PrimeCtx& ctx() const noexcept { return ctx_; }
    std::uint32_t p() const noexcept { return ctx_.p(); }
    std::size_t alpha() const noexcept { return alpha_; }
    std::size_t beta() const noexcept { return beta_; }
    /// alpha + 2 beta: length of the Gray image and of the Z_p coordinate vector.
    std::size_t n() const noexcept { return alpha_ + 2 * beta_; }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    PrimeCtx ctx_;
    std::size_t alpha_;
    std::size_t beta_;
};

std::string format(const Shape& shape);

class MixedWord {
public:
    /// The zero word.
    explicit MixedWord(const Shape& shape);
    MixedWord(const Shape& shape, std::vector<FpElem> fp, std::vector<RElem> r);

    const Shape& shape() const noexcept { return shape_; }
    FpElem fp(std::size_t i) const { return {fp_.at(i), shape_.ctx()}; }
    const RElem& r(std::size_t j) const { return r_.at(j); }
    std::span<const std::uint32_t> fp_values() const noexcept { return fp_; }
    std::span<const RElem> r_values() const noexcept { return r_; }

    void set_fp(std::size_t i, FpElem v);
    void set_r(std::size_t j, const RElem& v);

    bool is_zero() const noexcept;

    friend bool operator==(const MixedWord& x, const MixedWord& y) {
        return x.shape_ == y.shape_ && x.fp_ == y.fp_ && x.r_ == y.r_;
    }
    /// Lexicographic on the Z_p block, then the R block. Only meaningful for equal shapes.
    friend std::strong_ordering operator<=>(const MixedWord& x, const MixedWord& y);

private:
    Shape shape_;
    std::vector<std::uint32_t> fp_;
    std::vector<RElem> r_;
};

MixedWord word_add(const MixedWord& x, const MixedWord& y);
MixedWord word_sub(const MixedWord& x, const MixedWord& y);
MixedWord word_neg(const MixedWord& x);
/// Scalar c = r + qu: Z_p coordinates are multiplied by r only, R coordinates by c.
MixedWord scalar_mul_r(const RElem& c, const MixedWord& x);
/// Every coordinate multiplied by c (Z_p embedded in R).
MixedWord scalar_mul_fp(const FpElem& c, const MixedWord& x);
/// Coordinatewise product.
MixedWord hadamard(const MixedWord& x, const MixedWord& y);
/// v.w = u * (sum of Z_p block products) + (sum of R block products), valued in R.
RElem inner_product(const MixedWord& v, const MixedWord& w);

inline MixedWord operator+(const MixedWord& x, const MixedWord& y) { return word_add(x, y); }
inline MixedWord operator-(const MixedWord& x, const MixedWord& y) { return word_sub(x, y); }

/// Z_p coordinates of a word: [fp_0 .. fp_{alpha-1}, a_0, b_0, a_1, b_1, ...].
/// This is a Z_p-linear bijection onto Z_p^{alpha+2beta}.
std::vector<std::uint32_t> to_linear(const MixedWord& w);
MixedWord from_linear(const Shape& shape, std::span<const std::uint32_t> coords);

/// "1 0 | 2u 1+2u". The shape always comes from context.
std::string format(const MixedWord& w);

/// Error from parse_word; `column` is a 0-based byte offset into the parsed text.
class WordError : public Error {
public:
    WordError(std::string message, std::size_t column)
        : Error(message), message_(std::move(message)), column_(column) {}
    const std::string& message() const noexcept { return message_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t column_;
};

MixedWord parse_word(std::string_view text, const Shape& shape);

} // namespace zpu
