#include "zpzpu/gray.hpp"

#include <algorithm>

#include "zpzpu/parallel.hpp"

namespace zpu {

GrayVector phi(const MixedWord& w, GrayOrdering ordering) {
    const auto& shape = w.shape();
    GrayVector out{shape.p(), ordering, {}};
    out.entries.assign(w.fp_values().begin(), w.fp_values().end());
    out.entries.resize(shape.n());
    for (std::size_t j = 0; j < shape.beta(); ++j) {
        auto [first, second] = psi(w.r(j));
        if (ordering == GrayOrdering::Interleaved) {
            out.entries[shape.alpha() + 2 * j] = first.value();
            out.entries[shape.alpha() + 2 * j + 1] = second.value();
        } else {
            out.entries[shape.alpha() + j] = first.value();
            out.entries[shape.alpha() + shape.beta() + j] = second.value();
        }
    }
    return out;
}

std::size_t hamming_weight(const GrayVector& v) noexcept {
    return static_cast<std::size_t>(std::count_if(v.entries.begin(), v.entries.end(), [](auto x) { return x != 0; }));
}

std::size_t hamming_distance(const GrayVector& x, const GrayVector& y) {
    if (x.entries.size() != y.entries.size() || x.p != y.p) throw ShapeMismatch("Gray vectors differ in length");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.entries.size(); ++i) d += x.entries[i] != y.entries[i];
    return d;
}

std::size_t gray_weight(const RElem& x) noexcept {
    auto p = x.modulus();
    auto a = x.unit_part(), b = x.u_part();
    return (b != 0) + ((a + b) % p != 0);
}

std::size_t gray_weight(const MixedWord& w) noexcept {
    std::size_t total = 0;
    for (auto v : w.fp_values()) total += v != 0;
    for (const auto& r : w.r_values()) total += gray_weight(r);
    return total;
}

std::size_t gray_weight_case_table(const RElem& x) noexcept {
    if (x.is_zero()) return 0;
    const auto p = x.modulus();
    // Search the decomposition x = a + u(p - b) literally.
    for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = 1; b < p; ++b)
            if (a != b && x.unit_part() == a && x.u_part() == (p - b) % p) return 2;
    return 1;
}

std::size_t gray_weight_case_table(const MixedWord& w) noexcept {
    std::size_t total = 0;
    for (auto v : w.fp_values()) total += v != 0;
    for (const auto& r : w.r_values()) total += gray_weight_case_table(r);
    return total;
}

std::vector<WeightDiscrepancy> weight_discrepancy_report(std::uint32_t p) {
    if (p > 13) throw Error("weight discrepancy report is limited to p <= 13");
    PrimeCtx ctx(p);
    std::vector<WeightDiscrepancy> out;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b) {
            RElem x(a, b, ctx);
            auto table = gray_weight_case_table(x);
            auto corrected = hamming_weight(phi(MixedWord(Shape(ctx, 0, 1), {}, {x})));
            if (table != corrected) out.push_back({x, table, corrected});
        }
    return out;
}

std::size_t gray_distance(const MixedWord& x, const MixedWord& y) { return gray_weight(word_sub(x, y)); }

std::uint64_t WeightEnumerator::total() const noexcept {
    std::uint64_t s = 0;
    for (auto c : coeffs) s += c;
    return s;
}

WeightEnumerator weight_enumerator(const CodewordSet& set, WeightKind kind) {
    const auto n = set.shape().n();
    std::vector<std::vector<std::uint64_t>> parts(thread_count(), std::vector<std::uint64_t>(n + 1, 0));
    auto chunks = parallel_chunks(set.size(), [&](std::uint64_t begin, std::uint64_t end, std::size_t k) {
        for (auto i = begin; i < end; ++i) {
            auto w = set.word(i);
            ++parts[k][kind == WeightKind::Gray ? gray_weight(w) : gray_weight_case_table(w)];
        }
    });
    WeightEnumerator we{n, std::vector<std::uint64_t>(n + 1, 0)};
    for (std::size_t k = 0; k < chunks; ++k)
        for (std::size_t i = 0; i <= n; ++i) we.coeffs[i] += parts[k][i];
    return we;
}

WeightEnumerator weight_enumerator(const AdditiveCode& code, WeightKind kind, std::uint64_t budget) {
    return weight_enumerator(enumerate(code, budget), kind);
}

WeightEnumerator hamming_enumerator(const std::vector<std::uint64_t>& keys, const WordIndex& index) {
    WeightEnumerator we{index.length(), std::vector<std::uint64_t>(index.length() + 1, 0)};
    ZpVector coords(index.length());
    for (auto key : keys) {
        index.decode(key, coords);
        ++we.coeffs[static_cast<std::size_t>(std::count_if(coords.begin(), coords.end(), [](auto x) { return x != 0; }))];
    }
    return we;
}

std::string format_coefficients(const WeightEnumerator& we) {
    std::string out;
    for (std::size_t i = 0; i < we.coeffs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(we.coeffs[i]);
    }
    return out;
}

std::string format_polynomial(const WeightEnumerator& we) {
    std::string out;
    auto power = [](const char* var, std::size_t e) -> std::string {
        if (e == 0) return "";
        return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
    };
    for (std::size_t w = 0; w <= we.n; ++w) {
        auto c = we.coeffs[w];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        std::string mono = power("x", we.n - w);
        auto ypart = power("y", w);
        if (!ypart.empty()) mono += mono.empty() ? ypart : " " + ypart;
        if (mono.empty()) out += std::to_string(c);
        else out += c == 1 ? mono : std::to_string(c) + " " + mono;
    }
    return out.empty() ? "0" : out;
}

namespace {

using Wide = __int128;

Wide checked_mul(Wide x, Wide y) {
    Wide r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error("weight enumerator transform overflow");
    return r;
}

Wide checked_add(Wide x, Wide y) {
    Wide r;
    if (__builtin_add_overflow(x, y, &r)) throw Error("weight enumerator transform overflow");
    return r;
}

std::vector<std::vector<Wide>> binomials(std::size_t n) {
    std::vector<std::vector<Wide>> c(n + 1, std::vector<Wide>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
}

} // namespace

std::optional<WeightEnumerator> macwilliams_transform(const WeightEnumerator& we, std::uint32_t q, std::uint64_t size) {
    const auto n = we.n;
    auto binom = binomials(n);
    std::vector<Wide> qpow(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) qpow[i] = checked_mul(qpow[i - 1], q - 1);
    WeightEnumerator out{n, std::vector<std::uint64_t>(n + 1, 0)};
    for (std::size_t k = 0; k <= n; ++k) {
        Wide total = 0;
        for (std::size_t w = 0; w <= n; ++w) {
            if (we.coeffs[w] == 0) continue;
            // y^k coefficient of (x + (q-1) y)^(n-w) (x - y)^w.
            Wide kraw = 0;
            for (std::size_t j = 0; j <= std::min(k, w); ++j) {
                std::size_t i = k - j;
                if (i > n - w) continue;
                Wide term = checked_mul(checked_mul(binom[n - w][i], qpow[i]), binom[w][j]);
                kraw = checked_add(kraw, j % 2 ? -term : term);
            }
            total = checked_add(total, checked_mul(kraw, static_cast<Wide>(we.coeffs[w])));
        }
        if (total < 0 || total % static_cast<Wide>(size) != 0) return std::nullopt;
        out.coeffs[k] = static_cast<std::uint64_t>(total / static_cast<Wide>(size));
    }
    return out;
}

std::vector<std::uint64_t> gray_image(const CodewordSet& set, GrayOrdering ordering) {
    const auto& index = set.index();
    std::vector<std::uint64_t> out;
    out.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) out.push_back(index.encode(phi(set.word(i), ordering).entries));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> gray_image_dual(const AdditiveCode& code, std::uint64_t budget) {
    const auto& shape = code.shape();
    std::vector<ZpVector> image_rows;
    for (const auto& v : zp_basis(code)) image_rows.push_back(phi(from_linear(shape, v)).entries);
    auto dual_basis = nullspace(image_rows, shape.n(), shape.ctx());
    return enumerate_span(dual_basis, WordIndex(shape.p(), shape.n()), budget);
}

namespace {

ClauseResult compare(const WeightEnumerator& lhs, const std::optional<WeightEnumerator>& rhs, const std::string& what) {
    ClauseResult r;
    if (!rhs) {
        r.detail = what + ": transform has a non-integral or negative coefficient";
        return r;
    }
    for (std::size_t k = 0; k < lhs.coeffs.size(); ++k) {
        if (lhs.coeffs[k] != rhs->coeffs[k]) {
            r.first_difference = k;
            r.detail = what + ": A_" + std::to_string(k) + " = " + std::to_string(lhs.coeffs[k]) + " vs transform " +
                       std::to_string(rhs->coeffs[k]);
            return r;
        }
    }
    r.pass = true;
    r.detail = what + ": " + format_coefficients(lhs);
    return r;
}

} // namespace

MacWilliamsReport macwilliams_check(const AdditiveCode& code, std::uint64_t budget) {
    const auto& shape = code.shape();
    const auto p = shape.p();
    MacWilliamsReport report;

    auto set = enumerate(code, budget);
    auto dual = enumerate(dual_oracle(code, DualStrategy::Nullspace, budget), budget);
    auto w_code = weight_enumerator(set);
    auto w_dual = weight_enumerator(dual);
    report.weight_identity = compare(w_dual, macwilliams_transform(w_code, p, set.size()), "W_{C-perp}");

    WordIndex index(p, shape.n());
    auto image = gray_image(set);
    auto image_dual = gray_image_dual(code, budget);
    report.gray_image_identity = compare(hamming_enumerator(image_dual, index),
                                         macwilliams_transform(hamming_enumerator(image, index), p, image.size()),
                                         "W_{Phi(C)-perp}");

    auto image_of_dual = gray_image(dual);
    auto& iii = report.gray_image_dual;
    iii.pass = image_of_dual == image_dual;
    if (iii.pass) {
        iii.detail = "Phi(C-perp) = Phi(C)-perp (" + std::to_string(image_dual.size()) + " words)";
    } else {
        std::vector<std::uint64_t> only_left;
        std::set_difference(image_of_dual.begin(), image_of_dual.end(), image_dual.begin(), image_dual.end(),
                            std::back_inserter(only_left));
        iii.detail = "|Phi(C-perp)| = " + std::to_string(image_of_dual.size()) + ", |Phi(C)-perp| = " +
                     std::to_string(image_dual.size()) + ", " + std::to_string(only_left.size()) +
                     " words of Phi(C-perp) outside Phi(C)-perp";
    }
    return report;
}

} // namespace zpu
