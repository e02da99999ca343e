#pragma once

// Polynomials over Z_p and over R = Z_p + uZ_p, lowest degree first.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zpzpu/ring.hpp"

namespace zpu {

class FpPoly {
public:
    /// The zero polynomial.
    explicit FpPoly(const PrimeCtx& ctx) : ctx_(ctx) {}
    /// Coefficients are reduced mod p and trailing zeros dropped.
    FpPoly(const PrimeCtx& ctx, std::vector<std::uint32_t> coeffs);

    static FpPoly constant(const PrimeCtx& ctx, std::uint32_t c) { return {ctx, {c}}; }
    static FpPoly monomial(const PrimeCtx& ctx, std::uint32_t c, std::size_t degree);
    /// x^n - 1.
    static FpPoly xn_minus_1(const PrimeCtx& ctx, std::size_t n);

    const PrimeCtx& ctx() const noexcept { return ctx_; }
    std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint32_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// Scaled to leading coefficient 1; zero stays zero.
    FpPoly monic() const;

    friend bool operator==(const FpPoly& x, const FpPoly& y) { return x.ctx_ == y.ctx_ && x.coeffs_ == y.coeffs_; }
    /// Orders by degree, then by coefficients from the top down.
    friend std::strong_ordering operator<=>(const FpPoly& x, const FpPoly& y);

private:
    PrimeCtx ctx_;
    std::vector<std::uint32_t> coeffs_;
};

FpPoly fp_poly_add(const FpPoly& x, const FpPoly& y);
FpPoly fp_poly_sub(const FpPoly& x, const FpPoly& y);
FpPoly fp_poly_mul(const FpPoly& x, const FpPoly& y);
FpPoly fp_poly_scale(const FpPoly& x, std::uint32_t c);
/// Quotient and remainder; throws DivisionByZero.
std::pair<FpPoly, FpPoly> fp_poly_divmod(const FpPoly& x, const FpPoly& y);
/// Monic generator of (x, y); gcd(0, 0) = 0.
FpPoly fp_poly_gcd(const FpPoly& x, const FpPoly& y);
/// Monic x*y / gcd(x, y); zero if either argument is zero.
FpPoly fp_poly_lcm(const FpPoly& x, const FpPoly& y);
/// d | x. Only 0 is divisible by 0.
bool fp_poly_divides(const FpPoly& d, const FpPoly& x);
FpPoly fp_poly_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod);

inline FpPoly operator+(const FpPoly& x, const FpPoly& y) { return fp_poly_add(x, y); }
inline FpPoly operator-(const FpPoly& x, const FpPoly& y) { return fp_poly_sub(x, y); }
inline FpPoly operator*(const FpPoly& x, const FpPoly& y) { return fp_poly_mul(x, y); }

/// Folds x^i onto x^(i mod n). n = 0 maps everything to the zero polynomial.
FpPoly reduce_mod_xn_minus_1(const FpPoly& x, std::size_t n);

/// g0(x) + u g1(x) with g0, g1 in Z_p[x].
class RPoly {
public:
    explicit RPoly(const PrimeCtx& ctx) : unit_(ctx), upart_(ctx) {}
    RPoly(FpPoly unit_part, FpPoly u_part);
    RPoly(const PrimeCtx& ctx, const std::vector<RElem>& coeffs);

    const PrimeCtx& ctx() const noexcept { return unit_.ctx(); }
    const FpPoly& unit_part() const noexcept { return unit_; }
    const FpPoly& u_part() const noexcept { return upart_; }
    int degree() const noexcept { return std::max(unit_.degree(), upart_.degree()); }
    bool is_zero() const noexcept { return unit_.is_zero() && upart_.is_zero(); }
    RElem coeff(std::size_t i) const { return {unit_.coeff(i), upart_.coeff(i), ctx()}; }
    std::vector<RElem> coeffs() const;

    friend bool operator==(const RPoly&, const RPoly&) = default;

private:
    FpPoly unit_;
    FpPoly upart_;
};

RPoly r_poly_add(const RPoly& x, const RPoly& y);
RPoly r_poly_sub(const RPoly& x, const RPoly& y);
RPoly r_poly_mul(const RPoly& x, const RPoly& y);
/// Division by a divisor whose leading coefficient is a unit of R; NotDivisible otherwise.
std::pair<RPoly, RPoly> r_poly_divmod(const RPoly& x, const RPoly& y);
RPoly reduce_mod_xn_minus_1(const RPoly& x, std::size_t n);

/// Monic irreducible factors of x^n - 1 with multiplicities, sorted. n >= 1.
std::vector<std::pair<FpPoly, std::size_t>> factor_xn_minus_1(const PrimeCtx& ctx, std::size_t n);
/// Every monic divisor of x^n - 1 (including 1 and x^n - 1), sorted.
std::vector<FpPoly> monic_divisors_xn_minus_1(const PrimeCtx& ctx, std::size_t n);

/// Distinct-degree then equal-degree splitting of a squarefree monic polynomial.
std::vector<FpPoly> factor_squarefree(const FpPoly& f);

/// "c0 + c1 x + c2 x^2"; R coefficients with both parts are parenthesised. `compact` drops spaces.
std::string format(const FpPoly& x, bool compact = false);
std::string format(const RPoly& x, bool compact = false);

FpPoly parse_fp_poly(std::string_view text, const PrimeCtx& ctx);
RPoly parse_r_poly(std::string_view text, const PrimeCtx& ctx);

} // namespace zpu
