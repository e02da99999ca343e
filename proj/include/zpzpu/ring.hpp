#pragma once

// Exact arithmetic in Z_p and in the chain ring R = Z_p + uZ_p with u^2 = 0.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "zpzpu/errors.hpp"

namespace zpu {

/// Prime modulus shared by every element of a code. Primality is checked on construction.
class PrimeCtx {
public:
    static constexpr std::uint64_t max_modulus = 1ull << 31;

    explicit PrimeCtx(std::uint64_t p);
    /// Skips the primality test; only for moduli taken from an existing element or context.
    static PrimeCtx from_validated(std::uint32_t p) noexcept { return PrimeCtx(p, Validated{}); }

    std::uint32_t p() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const noexcept {
        std::uint64_t s = std::uint64_t{x} + y;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const noexcept {
        return x >= y ? x - y : static_cast<std::uint32_t>(std::uint64_t{x} + p_ - y);
    }
    std::uint32_t neg(std::uint32_t x) const noexcept { return x == 0 ? 0 : p_ - x; }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t{x} * y % p_);
    }
    /// Inverse of a nonzero residue; throws NotAUnit for 0.
    std::uint32_t inv(std::uint32_t x) const;
    std::uint32_t pow(std::uint32_t x, std::uint64_t e) const noexcept;

    friend bool operator==(const PrimeCtx&, const PrimeCtx&) = default;

private:
    struct Validated {};
    PrimeCtx(std::uint32_t p, Validated) noexcept : p_(p) {}

    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An element of Z_p, always fully reduced.
class FpElem {
public:
    FpElem(std::uint64_t value, const PrimeCtx& ctx)
        : value_(static_cast<std::uint32_t>(value % ctx.p())), p_(ctx.p()) {}

    static FpElem zero(const PrimeCtx& ctx) { return {0, ctx}; }
    static FpElem one(const PrimeCtx& ctx) { return {1, ctx}; }

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return p_; }
    PrimeCtx ctx() const { return PrimeCtx::from_validated(p_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FpElem inverse() const;

    friend FpElem operator+(FpElem x, FpElem y);
    friend FpElem operator-(FpElem x, FpElem y);
    friend FpElem operator*(FpElem x, FpElem y);
    friend FpElem operator-(FpElem x);
    friend bool operator==(const FpElem&, const FpElem&) = default;
    friend auto operator<=>(const FpElem&, const FpElem&) = default;

private:
    struct Raw {};
    FpElem(Raw, std::uint32_t v, std::uint32_t p) : value_(v), p_(p) {}

    std::uint32_t value_;
    std::uint32_t p_;
};

/// a + u*b in R = Z_p + uZ_p, u^2 = 0. Units are exactly the elements with a != 0.
class RElem {
public:
    RElem(std::uint64_t a, std::uint64_t b, const PrimeCtx& ctx)
        : a_(static_cast<std::uint32_t>(a % ctx.p())),
          b_(static_cast<std::uint32_t>(b % ctx.p())),
          p_(ctx.p()) {}
    RElem(FpElem a, FpElem b);
    /// Embedding Z_p -> R.
    explicit RElem(FpElem a) : a_(a.value()), b_(0), p_(a.modulus()) {}

    static RElem zero(const PrimeCtx& ctx) { return {0, 0, ctx}; }
    static RElem one(const PrimeCtx& ctx) { return {1, 0, ctx}; }
    static RElem u(const PrimeCtx& ctx) { return {0, 1, ctx}; }

    FpElem a() const { return FpElem(a_, PrimeCtx::from_validated(p_)); }
    FpElem b() const { return FpElem(b_, PrimeCtx::from_validated(p_)); }
    std::uint32_t unit_part() const noexcept { return a_; }
    std::uint32_t u_part() const noexcept { return b_; }
    std::uint32_t modulus() const noexcept { return p_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
    bool is_unit() const noexcept { return a_ != 0; }
    /// True when the element lies in Z_p (no u component).
    bool is_pure() const noexcept { return b_ == 0; }

    friend bool operator==(const RElem&, const RElem&) = default;
    friend auto operator<=>(const RElem&, const RElem&) = default;

private:
    std::uint32_t a_;
    std::uint32_t b_;
    std::uint32_t p_;
};

RElem r_add(const RElem& x, const RElem& y);
RElem r_sub(const RElem& x, const RElem& y);
RElem r_neg(const RElem& x);
/// (a1 + u b1)(a2 + u b2) = a1 a2 + u (a1 b2 + a2 b1).
RElem r_mul(const RElem& x, const RElem& y);
/// (a + u b)^{-1} = a^{-1} - u b a^{-2}; throws NotAUnit when a = 0.
RElem r_inv(const RElem& x);

inline RElem operator+(const RElem& x, const RElem& y) { return r_add(x, y); }
inline RElem operator-(const RElem& x, const RElem& y) { return r_sub(x, y); }
inline RElem operator-(const RElem& x) { return r_neg(x); }
inline RElem operator*(const RElem& x, const RElem& y) { return r_mul(x, y); }

/// Coordinate Gray map a + u b -> (b, a + b).
std::pair<FpElem, FpElem> psi(const RElem& x);

/// Error raised by the entry parsers. `offset` is the byte offset inside the parsed token.
class EntryError : public Error {
public:
    EntryError(std::string message, std::size_t offset)
        : Error(message), message_(std::move(message)), offset_(offset) {}
    const std::string& message() const noexcept { return message_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string message_;
    std::size_t offset_;
};

/// Parses INT | INT "u" | "u" | INT "+" INT "u" | INT "+" "u". Coefficients must be < p.
RElem parse_r_entry(std::string_view text, const PrimeCtx& ctx);
/// Parses a plain residue 0 <= v < p.
FpElem parse_fp_entry(std::string_view text, const PrimeCtx& ctx);

/// Canonical text: "a", "bu" ("u" when b = 1), or "a+bu".
std::string format(const RElem& x);
std::string format(const FpElem& x);

} // namespace zpu
