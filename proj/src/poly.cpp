#include "zpzpu/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

namespace zpu {

namespace {

void trim(std::vector<std::uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same(const PrimeCtx& x, const PrimeCtx& y) {
    if (!(x == y)) throw ModulusMismatch(x.p(), y.p());
}

} // namespace

FpPoly::FpPoly(const PrimeCtx& ctx, std::vector<std::uint32_t> coeffs) : ctx_(ctx), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= ctx_.p();
    trim(coeffs_);
}

FpPoly FpPoly::monomial(const PrimeCtx& ctx, std::uint32_t c, std::size_t degree) {
    std::vector<std::uint32_t> v(degree + 1, 0);
    v[degree] = c;
    return {ctx, std::move(v)};
}

FpPoly FpPoly::xn_minus_1(const PrimeCtx& ctx, std::size_t n) {
    return monomial(ctx, 1, n) - constant(ctx, 1);
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return fp_poly_scale(*this, ctx_.inv(leading()));
}

std::strong_ordering operator<=>(const FpPoly& x, const FpPoly& y) {
    if (auto c = x.degree() <=> y.degree(); c != 0) return c;
    for (std::size_t i = x.coeffs_.size(); i-- > 0;)
        if (auto c = x.coeffs_[i] <=> y.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

FpPoly fp_poly_add(const FpPoly& x, const FpPoly& y) {
    require_same(x.ctx(), y.ctx());
    const auto& ctx = x.ctx();
    std::vector<std::uint32_t> out(std::max(x.coeffs().size(), y.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.add(x.coeff(i), y.coeff(i));
    return {ctx, std::move(out)};
}

FpPoly fp_poly_sub(const FpPoly& x, const FpPoly& y) {
    require_same(x.ctx(), y.ctx());
    const auto& ctx = x.ctx();
    std::vector<std::uint32_t> out(std::max(x.coeffs().size(), y.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.sub(x.coeff(i), y.coeff(i));
    return {ctx, std::move(out)};
}

FpPoly fp_poly_mul(const FpPoly& x, const FpPoly& y) {
    require_same(x.ctx(), y.ctx());
    const auto& ctx = x.ctx();
    if (x.is_zero() || y.is_zero()) return FpPoly(ctx);
    std::vector<std::uint32_t> out(x.coeffs().size() + y.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i)
        for (std::size_t j = 0; j < y.coeffs().size(); ++j)
            out[i + j] = ctx.add(out[i + j], ctx.mul(x.coeffs()[i], y.coeffs()[j]));
    return {ctx, std::move(out)};
}

FpPoly fp_poly_scale(const FpPoly& x, std::uint32_t c) {
    std::vector<std::uint32_t> out(x.coeffs().begin(), x.coeffs().end());
    for (auto& v : out) v = x.ctx().mul(v, c % x.ctx().p());
    return {x.ctx(), std::move(out)};
}

std::pair<FpPoly, FpPoly> fp_poly_divmod(const FpPoly& x, const FpPoly& y) {
    require_same(x.ctx(), y.ctx());
    if (y.is_zero()) throw DivisionByZero();
    const auto& ctx = x.ctx();
    std::vector<std::uint32_t> rem(x.coeffs().begin(), x.coeffs().end());
    const auto dy = static_cast<std::size_t>(y.degree());
    if (rem.size() <= dy) return {FpPoly(ctx), x};
    std::vector<std::uint32_t> quot(rem.size() - dy, 0);
    const auto lead_inv = ctx.inv(y.leading());
    for (std::size_t i = rem.size(); i-- > dy;) {
        auto c = ctx.mul(rem[i], lead_inv);
        if (c == 0) continue;
        quot[i - dy] = c;
        for (std::size_t j = 0; j <= dy; ++j) rem[i - dy + j] = ctx.sub(rem[i - dy + j], ctx.mul(c, y.coeffs()[j]));
    }
    return {FpPoly(ctx, std::move(quot)), FpPoly(ctx, std::move(rem))};
}

FpPoly fp_poly_gcd(const FpPoly& x, const FpPoly& y) {
    FpPoly a = x, b = y;
    while (!b.is_zero()) {
        auto r = fp_poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly fp_poly_lcm(const FpPoly& x, const FpPoly& y) {
    if (x.is_zero() || y.is_zero()) return FpPoly(x.ctx());
    return fp_poly_divmod(x * y, fp_poly_gcd(x, y)).first.monic();
}

bool fp_poly_divides(const FpPoly& d, const FpPoly& x) {
    if (d.is_zero()) return x.is_zero();
    return fp_poly_divmod(x, d).second.is_zero();
}

FpPoly fp_poly_powmod(const FpPoly& base, std::uint64_t e, const FpPoly& mod) {
    FpPoly result = fp_poly_divmod(FpPoly::constant(base.ctx(), 1), mod).second;
    FpPoly b = fp_poly_divmod(base, mod).second;
    while (e) {
        if (e & 1) result = fp_poly_divmod(result * b, mod).second;
        b = fp_poly_divmod(b * b, mod).second;
        e >>= 1;
    }
    return result;
}

FpPoly reduce_mod_xn_minus_1(const FpPoly& x, std::size_t n) {
    const auto& ctx = x.ctx();
    if (n == 0) return FpPoly(ctx);
    std::vector<std::uint32_t> out(std::min<std::size_t>(n, x.coeffs().size()), 0);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) out[i % n] = ctx.add(out[i % n], x.coeffs()[i]);
    return {ctx, std::move(out)};
}

RPoly::RPoly(FpPoly unit_part, FpPoly u_part) : unit_(std::move(unit_part)), upart_(std::move(u_part)) {
    require_same(unit_.ctx(), upart_.ctx());
}

RPoly::RPoly(const PrimeCtx& ctx, const std::vector<RElem>& coeffs) : unit_(ctx), upart_(ctx) {
    std::vector<std::uint32_t> a, b;
    for (const auto& c : coeffs) {
        if (c.modulus() != ctx.p()) throw ModulusMismatch(c.modulus(), ctx.p());
        a.push_back(c.unit_part());
        b.push_back(c.u_part());
    }
    unit_ = FpPoly(ctx, std::move(a));
    upart_ = FpPoly(ctx, std::move(b));
}

std::vector<RElem> RPoly::coeffs() const {
    std::vector<RElem> out;
    for (int i = 0; i <= degree(); ++i) out.push_back(coeff(static_cast<std::size_t>(i)));
    return out;
}

RPoly r_poly_add(const RPoly& x, const RPoly& y) { return {x.unit_part() + y.unit_part(), x.u_part() + y.u_part()}; }
RPoly r_poly_sub(const RPoly& x, const RPoly& y) { return {x.unit_part() - y.unit_part(), x.u_part() - y.u_part()}; }

RPoly r_poly_mul(const RPoly& x, const RPoly& y) {
    return {x.unit_part() * y.unit_part(), x.unit_part() * y.u_part() + x.u_part() * y.unit_part()};
}

std::pair<RPoly, RPoly> r_poly_divmod(const RPoly& x, const RPoly& y) {
    if (y.is_zero()) throw DivisionByZero();
    const auto& ctx = x.ctx();
    const auto dy = static_cast<std::size_t>(y.degree());
    auto lead = y.coeff(dy);
    if (!lead.is_unit()) throw NotDivisible("divisor " + format(y) + " has a non-unit leading coefficient");
    auto lead_inv = r_inv(lead);
    auto rem = x.coeffs();
    if (rem.size() <= dy) return {RPoly(ctx), x};
    std::vector<RElem> quot(rem.size() - dy, RElem::zero(ctx));
    for (std::size_t i = rem.size(); i-- > dy;) {
        auto c = rem[i] * lead_inv;
        if (c.is_zero()) continue;
        quot[i - dy] = c;
        for (std::size_t j = 0; j <= dy; ++j) rem[i - dy + j] = rem[i - dy + j] - c * y.coeff(j);
    }
    return {RPoly(ctx, quot), RPoly(ctx, rem)};
}

RPoly reduce_mod_xn_minus_1(const RPoly& x, std::size_t n) {
    return {reduce_mod_xn_minus_1(x.unit_part(), n), reduce_mod_xn_minus_1(x.u_part(), n)};
}

namespace {

// Splits a product of distinct irreducibles of equal degree d.
void equal_degree_split(const FpPoly& f, std::size_t d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    const auto& ctx = f.ctx();
    const auto deg = static_cast<std::size_t>(f.degree());
    if (deg == d) {
        out.push_back(f.monic());
        return;
    }
    const auto p = ctx.p();
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    unsigned __int128 pd = 1;
    for (std::size_t i = 0; i < d; ++i) {
        pd *= p;
        if (pd > (static_cast<unsigned __int128>(1) << 63)) throw Error("equal-degree splitting: p^d too large");
    }
    for (;;) {
        std::vector<std::uint32_t> c(deg);
        for (auto& v : c) v = coeff(rng);
        FpPoly a(ctx, std::move(c));
        if (a.degree() < 1) continue;
        FpPoly b(ctx);
        if (p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)) mod f.
            FpPoly term = a;
            b = a;
            for (std::size_t i = 1; i < d; ++i) {
                term = fp_poly_divmod(term * term, f).second;
                b = b + term;
            }
        } else {
            b = fp_poly_powmod(a, static_cast<std::uint64_t>((pd - 1) / 2), f) - FpPoly::constant(ctx, 1);
        }
        auto g = fp_poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(fp_poly_divmod(f, g).first.monic(), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FpPoly> factor_squarefree(const FpPoly& input) {
    const auto& ctx = input.ctx();
    std::vector<FpPoly> out;
    FpPoly f = input.monic();
    if (f.degree() < 1) return out;
    std::mt19937_64 rng(0x5eed);
    const auto x = FpPoly::monomial(ctx, 1, 1);
    FpPoly h = x;
    for (std::size_t d = 1; f.degree() >= static_cast<int>(2 * d); ++d) {
        h = fp_poly_powmod(h, ctx.p(), f);
        auto g = fp_poly_gcd(f, h - x);
        if (!g.is_one()) {
            equal_degree_split(g, d, rng, out);
            f = fp_poly_divmod(f, g).first.monic();
            h = fp_poly_divmod(h, f).second;
        }
    }
    if (f.degree() >= 1) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<FpPoly, std::size_t>> factor_xn_minus_1(const PrimeCtx& ctx, std::size_t n) {
    if (n == 0) throw Error("x^0 - 1 is zero");
    // x^n - 1 = (x^m - 1)^(p^e) with p not dividing m.
    std::size_t m = n, mult = 1;
    while (m % ctx.p() == 0) {
        m /= ctx.p();
        mult *= ctx.p();
    }
    std::vector<std::pair<FpPoly, std::size_t>> out;
    for (auto& f : factor_squarefree(FpPoly::xn_minus_1(ctx, m))) out.emplace_back(std::move(f), mult);
    return out;
}

std::vector<FpPoly> monic_divisors_xn_minus_1(const PrimeCtx& ctx, std::size_t n) {
    std::vector<FpPoly> divisors{FpPoly::constant(ctx, 1)};
    for (const auto& [factor, mult] : factor_xn_minus_1(ctx, n)) {
        std::vector<FpPoly> next;
        for (const auto& d : divisors) {
            FpPoly acc = d;
            next.push_back(acc);
            for (std::size_t k = 0; k < mult; ++k) {
                acc = acc * factor;
                next.push_back(acc);
            }
        }
        divisors = std::move(next);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

namespace {

std::string term(const std::string& coeff, std::size_t degree, bool coeff_is_one, bool compact) {
    if (degree == 0) return coeff;
    std::string xpart = degree == 1 ? "x" : "x^" + std::to_string(degree);
    if (coeff_is_one) return xpart;
    return coeff + (compact ? "" : " ") + xpart;
}

std::string join_terms(const std::vector<std::string>& terms, bool compact) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += compact ? "+" : " + ";
        out += terms[i];
    }
    return out;
}

} // namespace

std::string format(const FpPoly& x, bool compact) {
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        auto c = x.coeffs()[i];
        if (c == 0) continue;
        terms.push_back(term(std::to_string(c), i, c == 1, compact));
    }
    return join_terms(terms, compact);
}

std::string format(const RPoly& x, bool compact) {
    std::vector<std::string> terms;
    auto deg = x.degree();
    for (int i = 0; i <= deg; ++i) {
        auto c = x.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        auto text = format(c);
        bool composite = c.unit_part() != 0 && c.u_part() != 0;
        if (composite && i > 0) text = "(" + text + ")";
        terms.push_back(term(text, static_cast<std::size_t>(i), c == RElem::one(x.ctx()), compact));
    }
    return join_terms(terms, compact);
}

namespace {

// Shared term-level parser; coefficients come back as R elements.
std::map<std::size_t, RElem> parse_terms(std::string_view text, const PrimeCtx& ctx) {
    std::map<std::size_t, RElem> terms;
    std::vector<std::string_view> pieces;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == '+' && depth == 0)) {
            pieces.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw EntryError("unbalanced parentheses", text.size());
    std::size_t offset = 0;
    for (auto piece : pieces) {
        auto fail = [&](const std::string& msg, std::size_t at) { throw EntryError(msg, offset + at); };
        std::size_t i = 0;
        auto skip = [&] {
            while (i < piece.size() && std::isspace(static_cast<unsigned char>(piece[i]))) ++i;
        };
        skip();
        RElem coeff = RElem::one(ctx);
        if (i < piece.size() && piece[i] == '(') {
            auto close = piece.find(')', i);
            coeff = parse_r_entry(piece.substr(i + 1, close - i - 1), ctx);
            i = close + 1;
        } else if (i < piece.size() && (std::isdigit(static_cast<unsigned char>(piece[i])) || piece[i] == 'u')) {
            std::size_t b = i;
            while (i < piece.size() && std::isdigit(static_cast<unsigned char>(piece[i]))) ++i;
            if (i < piece.size() && piece[i] == 'u') ++i;
            try {
                coeff = parse_r_entry(piece.substr(b, i - b), ctx);
            } catch (const EntryError& e) {
                fail(e.message(), b + e.offset());
            }
        }
        skip();
        std::size_t degree = 0;
        if (i < piece.size() && piece[i] == 'x') {
            ++i;
            degree = 1;
            if (i < piece.size() && piece[i] == '^') {
                ++i;
                std::size_t b = i;
                while (i < piece.size() && std::isdigit(static_cast<unsigned char>(piece[i]))) ++i;
                if (b == i) fail("missing exponent", b);
                degree = std::stoul(std::string(piece.substr(b, i - b)));
            }
        } else if (coeff == RElem::one(ctx) && piece.find_first_not_of(" \t") == std::string_view::npos) {
            fail("empty term", 0);
        }
        skip();
        if (i != piece.size()) fail("unknown token", i);
        auto [it, inserted] = terms.try_emplace(degree, coeff);
        if (!inserted) it->second = it->second + coeff;
        offset += piece.size() + 1;
    }
    return terms;
}

} // namespace

RPoly parse_r_poly(std::string_view text, const PrimeCtx& ctx) {
    auto terms = parse_terms(text, ctx);
    std::vector<RElem> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, RElem::zero(ctx));
    for (const auto& [d, c] : terms) coeffs[d] = c;
    return {ctx, coeffs};
}

FpPoly parse_fp_poly(std::string_view text, const PrimeCtx& ctx) {
    auto r = parse_r_poly(text, ctx);
    if (!r.u_part().is_zero()) throw EntryError("u coefficient in a Z_p polynomial", 0);
    return r.unit_part();
}

} // namespace zpu
