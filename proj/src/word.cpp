#include "zpzpu/word.hpp"

#include <algorithm>

namespace zpu {

Shape::Shape(PrimeCtx ctx, std::size_t alpha, std::size_t beta)
    : ctx_(ctx), alpha_(alpha), beta_(beta) {
    if (alpha + beta == 0) throw ShapeMismatch("shape needs alpha + beta >= 1");
}

std::string format(const Shape& shape) {
    return "(" + std::to_string(shape.p()) + ";" + std::to_string(shape.alpha()) + "," +
           std::to_string(shape.beta()) + ")";
}

namespace {

void require_same(const Shape& x, const Shape& y) {
    if (!(x == y)) throw ShapeMismatch("shape mismatch: " + format(x) + " vs " + format(y));
}

} // namespace

MixedWord::MixedWord(const Shape& shape)
    : shape_(shape), fp_(shape.alpha(), 0), r_(shape.beta(), RElem::zero(shape.ctx())) {}

MixedWord::MixedWord(const Shape& shape, std::vector<FpElem> fp, std::vector<RElem> r)
    : shape_(shape), r_(std::move(r)) {
    if (fp.size() != shape.alpha() || r_.size() != shape.beta())
        throw ShapeMismatch("word does not have " + std::to_string(shape.alpha()) + " + " +
                            std::to_string(shape.beta()) + " coordinates");
    fp_.reserve(fp.size());
    for (const auto& v : fp) {
        if (v.modulus() != shape.p()) throw ModulusMismatch(v.modulus(), shape.p());
        fp_.push_back(v.value());
    }
    for (const auto& v : r_)
        if (v.modulus() != shape.p()) throw ModulusMismatch(v.modulus(), shape.p());
}

void MixedWord::set_fp(std::size_t i, FpElem v) {
    if (v.modulus() != shape_.p()) throw ModulusMismatch(v.modulus(), shape_.p());
    fp_.at(i) = v.value();
}

void MixedWord::set_r(std::size_t j, const RElem& v) {
    if (v.modulus() != shape_.p()) throw ModulusMismatch(v.modulus(), shape_.p());
    r_.at(j) = v;
}

bool MixedWord::is_zero() const noexcept {
    return std::all_of(fp_.begin(), fp_.end(), [](auto v) { return v == 0; }) &&
           std::all_of(r_.begin(), r_.end(), [](const RElem& v) { return v.is_zero(); });
}

std::strong_ordering operator<=>(const MixedWord& x, const MixedWord& y) {
    if (auto c = std::lexicographical_compare_three_way(x.fp_.begin(), x.fp_.end(), y.fp_.begin(),
                                                        y.fp_.end());
        c != 0)
        return c;
    return std::lexicographical_compare_three_way(x.r_.begin(), x.r_.end(), y.r_.begin(), y.r_.end());
}

MixedWord word_add(const MixedWord& x, const MixedWord& y) {
    require_same(x.shape(), y.shape());
    MixedWord out(x);
    const auto& ctx = x.shape().ctx();
    for (std::size_t i = 0; i < x.shape().alpha(); ++i)
        out.set_fp(i, {ctx.add(x.fp_values()[i], y.fp_values()[i]), ctx});
    for (std::size_t j = 0; j < x.shape().beta(); ++j) out.set_r(j, x.r(j) + y.r(j));
    return out;
}

MixedWord word_neg(const MixedWord& x) { return scalar_mul_fp(-FpElem::one(x.shape().ctx()), x); }

MixedWord word_sub(const MixedWord& x, const MixedWord& y) { return word_add(x, word_neg(y)); }

MixedWord scalar_mul_r(const RElem& c, const MixedWord& x) {
    if (c.modulus() != x.shape().p()) throw ModulusMismatch(c.modulus(), x.shape().p());
    MixedWord out(x);
    const auto& ctx = x.shape().ctx();
    for (std::size_t i = 0; i < x.shape().alpha(); ++i)
        out.set_fp(i, {ctx.mul(c.unit_part(), x.fp_values()[i]), ctx});
    for (std::size_t j = 0; j < x.shape().beta(); ++j) out.set_r(j, c * x.r(j));
    return out;
}

MixedWord scalar_mul_fp(const FpElem& c, const MixedWord& x) {
    if (c.modulus() != x.shape().p()) throw ModulusMismatch(c.modulus(), x.shape().p());
    MixedWord out(x);
    const auto& ctx = x.shape().ctx();
    RElem cr(c);
    for (std::size_t i = 0; i < x.shape().alpha(); ++i)
        out.set_fp(i, {ctx.mul(c.value(), x.fp_values()[i]), ctx});
    for (std::size_t j = 0; j < x.shape().beta(); ++j) out.set_r(j, cr * x.r(j));
    return out;
}

MixedWord hadamard(const MixedWord& x, const MixedWord& y) {
    require_same(x.shape(), y.shape());
    MixedWord out(x);
    const auto& ctx = x.shape().ctx();
    for (std::size_t i = 0; i < x.shape().alpha(); ++i)
        out.set_fp(i, {ctx.mul(x.fp_values()[i], y.fp_values()[i]), ctx});
    for (std::size_t j = 0; j < x.shape().beta(); ++j) out.set_r(j, x.r(j) * y.r(j));
    return out;
}

RElem inner_product(const MixedWord& v, const MixedWord& w) {
    require_same(v.shape(), w.shape());
    const auto& ctx = v.shape().ctx();
    FpElem fp_sum = FpElem::zero(ctx);
    for (std::size_t i = 0; i < v.shape().alpha(); ++i) fp_sum = fp_sum + v.fp(i) * w.fp(i);
    RElem r_sum = RElem::zero(ctx);
    for (std::size_t j = 0; j < v.shape().beta(); ++j) r_sum = r_sum + v.r(j) * w.r(j);
    return RElem::u(ctx) * RElem(fp_sum) + r_sum;
}

std::vector<std::uint32_t> to_linear(const MixedWord& w) {
    std::vector<std::uint32_t> out(w.fp_values().begin(), w.fp_values().end());
    out.reserve(w.shape().n());
    for (const auto& r : w.r_values()) {
        out.push_back(r.unit_part());
        out.push_back(r.u_part());
    }
    return out;
}

MixedWord from_linear(const Shape& shape, std::span<const std::uint32_t> coords) {
    if (coords.size() != shape.n()) throw ShapeMismatch("coordinate vector has wrong length");
    std::vector<FpElem> fp;
    fp.reserve(shape.alpha());
    for (std::size_t i = 0; i < shape.alpha(); ++i) fp.emplace_back(coords[i], shape.ctx());
    std::vector<RElem> r;
    r.reserve(shape.beta());
    for (std::size_t j = 0; j < shape.beta(); ++j)
        r.emplace_back(coords[shape.alpha() + 2 * j], coords[shape.alpha() + 2 * j + 1], shape.ctx());
    return {shape, std::move(fp), std::move(r)};
}

std::string format(const MixedWord& w) {
    std::string out;
    for (auto v : w.fp_values()) {
        out += std::to_string(v);
        out += ' ';
    }
    out += '|';
    for (const auto& r : w.r_values()) {
        out += ' ';
        out += format(r);
    }
    return out;
}

MixedWord parse_word(std::string_view text, const Shape& shape) {
    struct Token {
        std::string_view text;
        std::size_t column;
    };
    std::vector<Token> left, right;
    bool seen_bar = false;
    std::size_t bar_column = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            continue;
        }
        if (ch == '|') {
            if (seen_bar) throw WordError("unknown token", i);
            seen_bar = true;
            bar_column = i;
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '|' && text[i] != '\r')
            ++i;
        (seen_bar ? right : left).push_back({text.substr(start, i - start), start});
    }
    if (!seen_bar) throw WordError("missing '|' separator", text.size());
    if (left.size() != shape.alpha())
        throw WordError("row arity mismatch: expected " + std::to_string(shape.alpha()) +
                            " Z_p entries, found " + std::to_string(left.size()),
                        left.size() > shape.alpha() ? left[shape.alpha()].column : bar_column);
    if (right.size() != shape.beta())
        throw WordError("row arity mismatch: expected " + std::to_string(shape.beta()) +
                            " R entries, found " + std::to_string(right.size()),
                        right.size() > shape.beta() ? right[shape.beta()].column : text.size());
    std::vector<FpElem> fp;
    std::vector<RElem> r;
    for (const auto& t : left) {
        try {
            fp.push_back(parse_fp_entry(t.text, shape.ctx()));
        } catch (const EntryError& e) {
            throw WordError(e.message(), t.column + e.offset());
        }
    }
    for (const auto& t : right) {
        try {
            r.push_back(parse_r_entry(t.text, shape.ctx()));
        } catch (const EntryError& e) {
            throw WordError(e.message(), t.column + e.offset());
        }
    }
    return {shape, std::move(fp), std::move(r)};
}

} // namespace zpu
