#include "zpzpu/ring.hpp"

#include <charconv>
#include <tuple>

namespace zpu {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeCtx::PrimeCtx(std::uint64_t p) : p_(0) {
    if (p > max_modulus || !is_prime(p)) throw NotPrime(p);
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeCtx::pow(std::uint32_t x, std::uint64_t e) const noexcept {
    std::uint32_t result = 1 % p_;
    while (e) {
        if (e & 1) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeCtx::inv(std::uint32_t x) const {
    if (x % p_ == 0) throw NotAUnit("0 in Z_" + std::to_string(p_));
    std::int64_t r0 = p_, r1 = x % p_, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    return reduce(s0);
}

namespace {

void check_modulus(std::uint32_t lhs, std::uint32_t rhs) {
    if (lhs != rhs) throw ModulusMismatch(lhs, rhs);
}

} // namespace

FpElem FpElem::inverse() const { return {Raw{}, PrimeCtx::from_validated(p_).inv(value_), p_}; }

FpElem operator+(FpElem x, FpElem y) {
    check_modulus(x.p_, y.p_);
    std::uint32_t s = x.value_ + y.value_;
    return {FpElem::Raw{}, s >= x.p_ ? s - x.p_ : s, x.p_};
}

FpElem operator-(FpElem x, FpElem y) {
    check_modulus(x.p_, y.p_);
    return {FpElem::Raw{}, x.value_ >= y.value_ ? x.value_ - y.value_ : x.value_ + x.p_ - y.value_, x.p_};
}

FpElem operator*(FpElem x, FpElem y) {
    check_modulus(x.p_, y.p_);
    return {FpElem::Raw{}, static_cast<std::uint32_t>(std::uint64_t{x.value_} * y.value_ % x.p_), x.p_};
}

FpElem operator-(FpElem x) { return {FpElem::Raw{}, x.value_ == 0 ? 0 : x.p_ - x.value_, x.p_}; }

RElem::RElem(FpElem a, FpElem b) : a_(a.value()), b_(b.value()), p_(a.modulus()) {
    check_modulus(a.modulus(), b.modulus());
}

RElem r_add(const RElem& x, const RElem& y) {
    check_modulus(x.modulus(), y.modulus());
    auto ctx = PrimeCtx::from_validated(x.modulus());
    return {ctx.add(x.unit_part(), y.unit_part()), ctx.add(x.u_part(), y.u_part()), ctx};
}

RElem r_sub(const RElem& x, const RElem& y) {
    check_modulus(x.modulus(), y.modulus());
    auto ctx = PrimeCtx::from_validated(x.modulus());
    return {ctx.sub(x.unit_part(), y.unit_part()), ctx.sub(x.u_part(), y.u_part()), ctx};
}

RElem r_neg(const RElem& x) {
    auto ctx = PrimeCtx::from_validated(x.modulus());
    return {ctx.neg(x.unit_part()), ctx.neg(x.u_part()), ctx};
}

RElem r_mul(const RElem& x, const RElem& y) {
    check_modulus(x.modulus(), y.modulus());
    auto ctx = PrimeCtx::from_validated(x.modulus());
    auto a = ctx.mul(x.unit_part(), y.unit_part());
    auto b = ctx.add(ctx.mul(x.unit_part(), y.u_part()), ctx.mul(y.unit_part(), x.u_part()));
    return {a, b, ctx};
}

RElem r_inv(const RElem& x) {
    if (!x.is_unit()) throw NotAUnit(format(x));
    auto ctx = PrimeCtx::from_validated(x.modulus());
    auto ainv = ctx.inv(x.unit_part());
    return {ainv, ctx.neg(ctx.mul(x.u_part(), ctx.mul(ainv, ainv))), ctx};
}

std::pair<FpElem, FpElem> psi(const RElem& x) { return {x.b(), x.a() + x.b()}; }

namespace {

// Reads a decimal integer at text[pos...]; returns false if no digit is present.
bool read_int(std::string_view text, std::size_t& pos, std::uint64_t& out) {
    auto first = text.data() + pos;
    auto last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ptr == first) return false;
    if (ec == std::errc::result_out_of_range) throw EntryError("coefficient ≥ p", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return true;
}

} // namespace

RElem parse_r_entry(std::string_view text, const PrimeCtx& ctx) {
    if (text.empty()) throw EntryError("empty entry", 0);
    auto checked = [&](std::uint64_t v, std::size_t at) {
        if (v >= ctx.p()) throw EntryError("coefficient ≥ p", at);
        return v;
    };
    std::size_t pos = 0;
    std::uint64_t first = 0;
    bool have_first = read_int(text, pos, first);
    if (have_first) checked(first, 0);
    if (pos == text.size()) {
        if (!have_first) throw EntryError("unknown token", 0);
        return {first, 0, ctx};
    }
    if (text[pos] == 'u') {
        if (pos + 1 != text.size()) throw EntryError("unknown token", pos + 1);
        return {0, have_first ? first : 1, ctx};
    }
    if (text[pos] != '+' || !have_first) throw EntryError("unknown token", pos);
    ++pos;
    std::size_t second_at = pos;
    std::uint64_t second = 1;
    if (read_int(text, pos, second)) checked(second, second_at);
    if (pos >= text.size() || text[pos] != 'u' || pos + 1 != text.size())
        throw EntryError("unknown token", pos);
    return {first, second, ctx};
}

FpElem parse_fp_entry(std::string_view text, const PrimeCtx& ctx) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    if (!read_int(text, pos, v)) throw EntryError("unknown token", 0);
    if (v >= ctx.p()) throw EntryError("coefficient ≥ p", 0);
    if (pos != text.size()) {
        if (text[pos] == 'u' || text[pos] == '+')
            throw EntryError("R entry in a Z_p coordinate", 0);
        throw EntryError("unknown token", pos);
    }
    return {v, ctx};
}

std::string format(const FpElem& x) { return std::to_string(x.value()); }

std::string format(const RElem& x) {
    auto a = x.unit_part();
    auto b = x.u_part();
    std::string upart = b == 1 ? "u" : std::to_string(b) + "u";
    if (b == 0) return std::to_string(a);
    if (a == 0) return upart;
    return std::to_string(a) + "+" + upart;
}

} // namespace zpu
