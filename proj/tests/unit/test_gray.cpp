#include <doctest.h>

#include <map>

#include "support/testing.hpp"
#include "zpzpu/gray.hpp"

using namespace zpu;
using namespace zpu::testing;

namespace {

std::size_t hamming_psi(const RElem& x) {
    auto [s, t] = psi(x);
    return (s.value() != 0) + (t.value() != 0);
}

std::vector<std::uint64_t> brute_enumerator(const std::set<MixedWord>& set, std::size_t n) {
    std::vector<std::uint64_t> a(n + 1, 0);
    for (const auto& w : set) {
        std::size_t wt = 0;
        for (auto v : w.fp_values()) wt += v != 0;
        for (const auto& r : w.r_values()) wt += hamming_psi(r);
        ++a[wt];
    }
    return a;
}

} // namespace

TEST_CASE("phi examples") {
    auto s = shape_of(3, 1, 2);
    CHECK(phi(MixedWord(s)).entries == std::vector<std::uint32_t>(5, 0));
    auto w = parse_word("2 | 1+u u", s);
    CHECK(phi(w, GrayOrdering::Interleaved).entries == std::vector<std::uint32_t>{2, 1, 2, 1, 1});
    CHECK(phi(w, GrayOrdering::Blockwise).entries == std::vector<std::uint32_t>{2, 1, 1, 2, 1});
}

TEST_CASE("Gray weight of single coordinates") {
    PrimeCtx p3(3);
    // psi(1+2u) = (2, 0)
    CHECK(gray_weight(RElem(1, 2, p3)) == 1);
    CHECK(gray_weight(RElem::u(p3)) == 2);
    CHECK(gray_weight_case_table(RElem::zero(p3)) == 0);
    CHECK(gray_weight_case_table(RElem(1, 2, p3)) == 1);
    CHECK(gray_weight_case_table(RElem(0, 2, p3)) == 1);
    CHECK(gray_weight(RElem(0, 2, p3)) == 2);
}

TEST_CASE("case-table discrepancies") {
    auto r2 = weight_discrepancy_report(2);
    bool has_u = false;
    for (const auto& d : r2)
        if (d.element == RElem::u(PrimeCtx(2)) && d.table_value == 1 && d.corrected_value == 2) has_u = true;
    CHECK(has_u);

    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CAPTURE(p);
        PrimeCtx ctx(p);
        auto report = weight_discrepancy_report(p);
        std::set<RElem> listed;
        for (const auto& d : report) {
            listed.insert(d.element);
            CHECK(d.table_value == gray_weight_case_table(d.element));
            CHECK(d.corrected_value == hamming_psi(d.element));
        }
        for (const auto& x : all_r(ctx)) {
            bool agree = gray_weight_case_table(x) == hamming_psi(x);
            CHECK(agree != (listed.count(x) == 1));
        }
        if (p == 3) {
            std::set<RElem> u_multiples{RElem(0, 1, ctx), RElem(0, 2, ctx)};
            for (const auto& x : u_multiples) CHECK(listed.count(x) == 1);
        }
    }
}

TEST_CASE("weight preservation and metric axioms, exhaustive") {
    for (std::uint32_t p : {2u, 3u}) {
        for (std::size_t alpha = 0; alpha <= 2; ++alpha)
            for (std::size_t beta = 0; beta <= 2; ++beta) {
                if (alpha + beta == 0) continue;
                auto s = shape_of(p, alpha, beta);
                std::vector<MixedWord> words;
                for_each_word(s, [&](const MixedWord& w) { words.push_back(w); });
                std::set<std::vector<std::uint32_t>> images;
                for (const auto& x : words) {
                    auto gi = phi(x, GrayOrdering::Interleaved), gb = phi(x, GrayOrdering::Blockwise);
                    CHECK(gray_weight(x) == hamming_weight(gi));
                    CHECK(gray_weight(x) == hamming_weight(gb));
                    images.insert(gi.entries);
                }
                CHECK(images.size() == words.size());
                if (s.n() > 4) continue;
                for (const auto& x : words)
                    for (const auto& y : words) {
                        CHECK(gray_distance(x, y) == hamming_distance(phi(x), phi(y)));
                        CHECK(gray_distance(x, y) == gray_distance(y, x));
                        CHECK((gray_distance(x, y) == 0) == (x == y));
                        for (const auto& z : words) CHECK(gray_distance(x, z) <= gray_distance(x, y) + gray_distance(y, z));
                    }
            }
    }
}

TEST_CASE("phi is Z_p-linear") {
    Random rnd(21);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = rnd.shape(3, 8);
        auto x = rnd.word(s), y = rnd.word(s);
        auto px = phi(x), py = phi(y), pxy = phi(x + y);
        for (std::size_t i = 0; i < s.n(); ++i) CHECK(pxy.entries[i] == (px.entries[i] + py.entries[i]) % 3);
    }
}

TEST_CASE("weight enumerator examples") {
    auto s = shape_of(3, 1, 1);
    auto zero = weight_enumerator(AdditiveCode(s, {}));
    CHECK(zero.coeffs == std::vector<std::uint64_t>{1, 0, 0, 0});
    CHECK(format_coefficients(zero) == "1 0 0 0");
    CHECK(format_polynomial(zero) == "x^3");
    auto su = shape_of(3, 0, 1);
    auto ucode = AdditiveCode(su, {parse_word("| u", su)});
    CHECK(weight_enumerator(ucode).coeffs == std::vector<std::uint64_t>{1, 0, 2});
}

TEST_CASE("MacWilliams clauses") {
    auto s = shape_of(3, 1, 1);
    auto zero = macwilliams_check(AdditiveCode(s, {}));
    CHECK(zero.weight_identity.pass);
    CHECK(zero.gray_image_identity.pass);
    CHECK(zero.gray_image_dual.pass);

    Random rnd(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto sh = rnd.shape(trial % 2 ? 3 : 2, 6);
        auto c = rnd.code(sh, 3);
        auto set = enumerate(c);
        CHECK(weight_enumerator(set).coeffs == brute_enumerator(as_set(set), sh.n()));
        CHECK(macwilliams_check(c).gray_image_identity.pass);
    }
}

TEST_CASE("MacWilliams transform") {
    // (x + 2y)^3 from the zero code of length 3 at q = 3.
    WeightEnumerator we{3, {1, 0, 0, 0}};
    auto t = macwilliams_transform(we, 3, 1);
    REQUIRE(t.has_value());
    CHECK(t->coeffs == std::vector<std::uint64_t>{1, 6, 12, 8});
    WeightEnumerator odd{1, {1, 1}};
    CHECK_FALSE(macwilliams_transform(odd, 3, 2).has_value());
}
