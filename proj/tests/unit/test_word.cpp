#include <doctest.h>

#include "support/testing.hpp"
#include "zpzpu/word.hpp"

using namespace zpu;
using namespace zpu::testing;

namespace {

MixedWord w(const Shape& s, std::string_view text) { return parse_word(text, s); }

} // namespace

TEST_CASE("word addition") {
    auto s = shape_of(3, 1, 1);
    CHECK(w(s, "1 | u") + MixedWord(s) == w(s, "1 | u"));
    CHECK(w(s, "1 | u") + w(s, "2 | 1+2u") == w(s, "0 | 1"));
    auto s2 = shape_of(2, 2, 1);
    CHECK((w(s2, "1 1 | 1+u") + w(s2, "1 1 | 1+u")).is_zero());
}

TEST_CASE("scalar multiplication") {
    auto s = shape_of(3, 1, 2);
    const auto& ctx = s.ctx();
    CHECK(scalar_mul_r(RElem::u(ctx), w(s, "2 | 1+u 2")) == w(s, "0 | u 2u"));
    auto s1 = shape_of(3, 1, 1);
    CHECK(scalar_mul_r(RElem(2, 1, ctx), w(s1, "1 | 1+u")) == w(s1, "2 | 2"));
    CHECK(scalar_mul_fp(FpElem(0, ctx), w(s1, "1 | 1+u")).is_zero());
    CHECK(scalar_mul_fp(FpElem(2, ctx), w(s1, "1 | 1+u")) == w(s1, "2 | 2+2u"));
}

TEST_CASE("componentwise product") {
    auto s = shape_of(3, 1, 1);
    CHECK(hadamard(w(s, "2 | u"), w(s, "2 | u")) == w(s, "1 | 0"));
    CHECK(hadamard(w(s, "2 | 1+u"), w(s, "1 | 1")) == w(s, "2 | 1+u"));
    CHECK(hadamard(w(s, "2 | 1+u"), MixedWord(s)).is_zero());
}

TEST_CASE("inner product examples") {
    auto s0 = shape_of(3, 1, 0);
    CHECK(inner_product(MixedWord(s0), MixedWord(s0)).is_zero());
    CHECK(inner_product(w(s0, "1 |"), w(s0, "1 |")) == RElem::u(s0.ctx()));
    auto s = shape_of(3, 1, 4);
    CHECK(inner_product(w(s, "1 | 0 0 1 1"), w(s, "2 | 0 1 0 1")) == RElem(1, 2, s.ctx()));
}

TEST_CASE("module axioms, exhaustive") {
    for (auto [alpha, beta] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 0}, {0, 2}}) {
        for (std::uint32_t p : {2u, 3u}) {
            auto s = shape_of(p, alpha, beta);
            auto ring = all_r(s.ctx());
            std::vector<MixedWord> words;
            for_each_word(s, [&](const MixedWord& x) { words.push_back(x); });
            for (const auto& x : words) {
                for (const auto& c : ring)
                    for (const auto& d : ring) {
                        CHECK(scalar_mul_r(c + d, x) == scalar_mul_r(c, x) + scalar_mul_r(d, x));
                        CHECK(scalar_mul_r(c * d, x) == scalar_mul_r(c, scalar_mul_r(d, x)));
                    }
                for (const auto& y : words) {
                    CHECK(inner_product(x, y) == inner_product(y, x));
                    for (const auto& c : ring) CHECK(scalar_mul_r(c, x + y) == scalar_mul_r(c, x) + scalar_mul_r(c, y));
                }
            }
        }
    }
}

TEST_CASE("inner product is biadditive and the Z_p block only reaches uZ_p") {
    Random rnd(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto s = rnd.shape(trial % 2 ? 3 : 2, 6);
        auto x = rnd.word(s), x2 = rnd.word(s), y = rnd.word(s);
        CHECK(inner_product(x + x2, y) == inner_product(x, y) + inner_product(x2, y));
        auto sz = shape_of(s.p(), s.alpha() + 1, 0);
        CHECK(inner_product(rnd.word(sz), rnd.word(sz)).unit_part() == 0);
    }
}

TEST_CASE("linear coordinates round-trip") {
    Random rnd(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto s = rnd.shape(3, 7);
        auto x = rnd.word(s);
        auto lin = to_linear(x);
        CHECK(lin.size() == s.n());
        CHECK(from_linear(s, lin) == x);
    }
}

TEST_CASE("word text") {
    auto s = shape_of(3, 2, 2);
    CHECK(format(w(s, "1 0 | 2u 1+2u")) == "1 0 | 2u 1+2u");
    auto s0 = shape_of(3, 0, 2);
    CHECK(format(w(s0, "| u 2")) == "| u 2");
    auto s1 = shape_of(3, 2, 0);
    CHECK(format(w(s1, "1 0 |")) == "1 0 |");
    CHECK_THROWS_AS(parse_word("1 0 2u 1", s), WordError);
    CHECK_THROWS_AS(parse_word("1 | 2u 1", s), WordError);
    try {
        parse_word("1 0 | 3u 1", s);
        FAIL("accepted an out-of-range coefficient");
    } catch (const WordError& e) {
        CHECK(e.message() == "coefficient \xe2\x89\xa5 p");
        CHECK(e.column() == 6);
    }
}
