#include "zpzpu/linalg.hpp"

#include <algorithm>
#include <limits>

namespace zpu {

Rref rref(std::vector<ZpVector> rows, std::size_t ncols, const PrimeCtx& ctx) {
    Rref out;
    std::size_t next = 0;
    for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(next), rows.end(),
                               [col](const ZpVector& r) { return r[col] != 0; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(next), it);
        auto& pivot = rows[next];
        auto inv = ctx.inv(pivot[col]);
        for (auto& v : pivot) v = ctx.mul(v, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col] == 0) continue;
            auto factor = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c)
                rows[r][c] = ctx.sub(rows[r][c], ctx.mul(factor, pivot[c]));
        }
        out.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

std::vector<ZpVector> nullspace(const std::vector<ZpVector>& rows, std::size_t ncols, const PrimeCtx& ctx) {
    auto reduced = rref(rows, ncols, ctx);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : reduced.pivots) is_pivot[c] = true;
    std::vector<ZpVector> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        ZpVector v(ncols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < reduced.rank(); ++i)
            v[reduced.pivots[i]] = ctx.neg(reduced.rows[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const Rref& basis, const ZpVector& v, const PrimeCtx& ctx) {
    ZpVector rest = v;
    for (std::size_t i = 0; i < basis.rank(); ++i) {
        auto factor = rest[basis.pivots[i]];
        if (factor == 0) continue;
        for (std::size_t c = 0; c < rest.size(); ++c)
            rest[c] = ctx.sub(rest[c], ctx.mul(factor, basis.rows[i][c]));
    }
    return std::all_of(rest.begin(), rest.end(), [](auto x) { return x == 0; });
}

std::uint64_t saturating_pow(std::uint64_t p, std::size_t e) noexcept {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
        out *= p;
    }
    return out;
}

WordIndex::WordIndex(std::uint32_t p, std::size_t n) : p_(p), n_(n), size_(saturating_pow(p, n)) {
    if (size_ > (1ull << 63)) throw BudgetExceeded("indexing Z_" + std::to_string(p) + "^" + std::to_string(n), 1ull << 63);
}

std::uint64_t WordIndex::encode(std::span<const std::uint32_t> coords) const noexcept {
    std::uint64_t idx = 0;
    for (auto c : coords) idx = idx * p_ + c;
    return idx;
}

void WordIndex::decode(std::uint64_t index, std::span<std::uint32_t> out) const noexcept {
    for (std::size_t i = n_; i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
}

ZpVector WordIndex::decode(std::uint64_t index) const {
    ZpVector out(n_);
    decode(index, out);
    return out;
}

std::uint64_t WordIndex::add(std::uint64_t x, std::uint64_t y) const noexcept {
    std::uint64_t out = 0, place = 1;
    for (std::size_t i = 0; i < n_; ++i) {
        std::uint64_t s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        out += s * place;
        place *= p_;
        x /= p_;
        y /= p_;
    }
    return out;
}

std::uint64_t WordIndex::scale(std::uint32_t c, std::uint64_t x) const noexcept {
    std::uint64_t out = 0, place = 1;
    for (std::size_t i = 0; i < n_; ++i) {
        out += (x % p_) * c % p_ * place;
        place *= p_;
        x /= p_;
    }
    return out;
}

std::vector<std::uint64_t> enumerate_span(const std::vector<ZpVector>& independent, const WordIndex& index,
                                          std::uint64_t budget) {
    auto p = index.p();
    auto total = saturating_pow(p, independent.size());
    if (total > budget) throw BudgetExceeded("span of dimension " + std::to_string(independent.size()), budget);
    std::vector<std::uint64_t> out{0};
    out.reserve(total);
    for (const auto& v : independent) {
        auto key = index.encode(v);
        auto base = out.size();
        for (std::uint32_t k = 1; k < p; ++k) {
            auto kv = index.scale(k, key);
            for (std::size_t i = 0; i < base; ++i) out.push_back(index.add(out[i], kv));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace zpu
