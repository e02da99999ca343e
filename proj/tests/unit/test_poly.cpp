#include <doctest.h>

#include <set>

#include "zpzpu/poly.hpp"

using namespace zpu;

namespace {

FpPoly P(const PrimeCtx& ctx, std::vector<std::uint32_t> c) { return FpPoly(ctx, std::move(c)); }

// Every monic polynomial of degree <= d.
std::vector<FpPoly> monic_up_to(const PrimeCtx& ctx, std::size_t d) {
    std::vector<FpPoly> out;
    for (std::size_t deg = 0; deg <= d; ++deg) {
        std::vector<std::uint32_t> c(deg + 1, 0);
        c[deg] = 1;
        while (true) {
            out.emplace_back(ctx, c);
            std::size_t k = 0;
            while (k < deg && ++c[k] == ctx.p()) c[k++] = 0;
            if (k == deg) break;
        }
    }
    return out;
}

// Polynomial remainder by schoolbook long division, written out independently.
std::vector<std::int64_t> remainder(std::vector<std::int64_t> x, const FpPoly& d, std::int64_t p) {
    auto dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    std::int64_t lead_inv = 1;
    while (lead_inv * dc.back() % p != 1) ++lead_inv;
    for (std::size_t i = x.size(); i-- > dd;) {
        std::int64_t q = x[i] % p * lead_inv % p;
        for (std::size_t j = 0; j <= dd; ++j) x[i - dd + j] = ((x[i - dd + j] - q * dc[j]) % p + p) % p;
    }
    x.resize(std::min(x.size(), dd));
    return x;
}

bool divides_xn_minus_1(const FpPoly& d, std::size_t n, std::int64_t p) {
    std::vector<std::int64_t> x(n + 1, 0);
    x[0] = p - 1;
    x[n] = 1;
    for (auto v : remainder(x, d, p))
        if (v != 0) return false;
    return true;
}

} // namespace

TEST_CASE("polynomial arithmetic examples") {
    PrimeCtx p3(3);
    auto x2m1 = FpPoly::xn_minus_1(p3, 2);
    auto xm1 = P(p3, {2, 1});
    auto xp1 = P(p3, {1, 1});
    CHECK(fp_poly_gcd(x2m1, xm1) == xm1);
    auto x3m1 = FpPoly::xn_minus_1(p3, 3);
    CHECK(xm1 * xm1 * xm1 == x3m1);
    CHECK(fp_poly_divmod(x3m1, xm1 * xm1).second.is_zero());
    CHECK(fp_poly_lcm(xm1, xp1) == x2m1);
    CHECK(fp_poly_divides(xm1, x3m1));
    CHECK_FALSE(fp_poly_divides(xp1, x3m1));
}

TEST_CASE("division identity") {
    PrimeCtx p5(5);
    auto polys = monic_up_to(p5, 2);
    for (const auto& a : polys)
        for (const auto& b : polys) {
            auto x = fp_poly_scale(a * b, 3) + P(p5, {1, 4});
            auto [q, r] = fp_poly_divmod(x, b);
            CHECK(q * b + r == x);
            CHECK(r.degree() < b.degree());
        }
    CHECK_THROWS_AS(fp_poly_divmod(P(p5, {1}), FpPoly(p5)), DivisionByZero);
}

TEST_CASE("R[x] arithmetic") {
    PrimeCtx p3(3);
    RPoly a(P(p3, {1, 1}), P(p3, {0, 2}));  // (1) + (1+2u) x
    RPoly b(P(p3, {2}), P(p3, {1}));        // 2+u
    auto prod = r_poly_mul(a, b);
    CHECK(prod.coeff(0) == RElem(1, 0, p3) * RElem(2, 1, p3));
    CHECK(prod.coeff(1) == RElem(1, 2, p3) * RElem(2, 1, p3));
    CHECK(r_poly_sub(r_poly_add(a, b), b) == a);
    auto [q, r] = r_poly_divmod(prod, b);
    CHECK(q == a);
    CHECK(r.is_zero());
    CHECK_THROWS_AS(r_poly_divmod(a, RPoly(FpPoly(p3), P(p3, {0, 1}))), NotDivisible);
}

TEST_CASE("reduction mod x^n - 1") {
    PrimeCtx p3(3);
    CHECK(reduce_mod_xn_minus_1(FpPoly::monomial(p3, 1, 5), 2) == P(p3, {0, 1}));
    CHECK(reduce_mod_xn_minus_1(FpPoly::xn_minus_1(p3, 4), 4).is_zero());
}

TEST_CASE("divisors of x^n - 1 against exhaustive search") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeCtx ctx(p);
        for (std::size_t n = 1; n <= (p == 5 ? 4u : 6u); ++n) {
            CAPTURE(p);
            CAPTURE(n);
            std::set<FpPoly> brute;
            for (const auto& d : monic_up_to(ctx, n))
                if (divides_xn_minus_1(d, n, p)) brute.insert(d);
            auto divs = monic_divisors_xn_minus_1(ctx, n);
            CHECK(std::set<FpPoly>(divs.begin(), divs.end()) == brute);
            CHECK(divs.size() == brute.size());

            FpPoly product = FpPoly::constant(ctx, 1);
            for (const auto& [f, e] : factor_xn_minus_1(ctx, n)) {
                CHECK(f.is_monic());
                for (std::size_t i = 0; i < e; ++i) product = product * f;
                // irreducible: no monic divisor strictly between 1 and f
                for (const auto& d : monic_up_to(ctx, static_cast<std::size_t>(f.degree()) - 1))
                    if (d.degree() >= 1) CHECK_FALSE(fp_poly_divides(d, f));
            }
            CHECK(product == FpPoly::xn_minus_1(ctx, n));
        }
    }
}

TEST_CASE("square-free factorization") {
    PrimeCtx p7(7);
    auto f = P(p7, {6, 0, 0, 1});  // x^3 - 1 = (x - 1)(x - 2)(x - 4)
    auto factors = factor_squarefree(f);
    CHECK(factors.size() == 3);
    FpPoly product = FpPoly::constant(p7, 1);
    for (const auto& g : factors) product = product * g;
    CHECK(product == f);
}

TEST_CASE("polynomial text") {
    PrimeCtx p3(3);
    auto f = P(p3, {1, 1, 2});
    CHECK(format(f) == "1 + x + 2 x^2");
    CHECK(parse_fp_poly("1 + x + 2 x^2", p3) == f);
    CHECK(parse_fp_poly(format(f, true), p3) == f);
    RPoly r(P(p3, {0, 0, 1}), P(p3, {1, 0, 2}));
    CHECK(format(r) == "u + (1+2u) x^2");
    CHECK(parse_r_poly(format(r), p3) == r);
    CHECK(parse_r_poly(format(r, true), p3) == r);
    CHECK(format(FpPoly(p3)) == "0");
}
