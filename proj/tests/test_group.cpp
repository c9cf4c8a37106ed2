#include "padic/group.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace padic;
using namespace padic::test;

TEST_CASE("GroupParams validates p, N, M") {
    CHECK_NOTHROW(GroupParams(2, 1, 1));
    CHECK_NOTHROW(GroupParams(5, 2, 2));
    CHECK_THROWS_AS(GroupParams(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GroupParams(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GroupParams(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(GroupParams(3, 1, 0), std::invalid_argument);
}

TEST_CASE("add: identity and carry") {
    // g_0 + 0 = g_0
    CHECK(add(3, Word::single(0, 1), Word()) == Word::single(0, 1));
    // p=3: 2g_0 + 2g_0 = g_0 + g_1 since 4 = 1 + 1*3
    CHECK(add(3, Word::single(0, 2), Word::single(0, 2)) ==
          Word::of({{0, 1}, {1, 1}}));
}

TEST_CASE("add: base-p integer oracle") {
    // p=2: (g_{-1} + g_0) + g_0 = g_{-1} + g_1, checked against the oracle.
    Word a = Word::of({{-1, 1}, {0, 1}});
    Word b = Word::single(0, 1);
    Word expect = int_to_word(2, word_to_int(2, a, -2, 4) + word_to_int(2, b, -2, 4), -2, 4);
    CHECK(add(2, a, b) == expect);
    CHECK(add(2, a, b) == Word::of({{-1, 1}, {1, 1}}));

    std::mt19937_64 rng(7);
    for (int p : {2, 3, 5}) {
        for (int i = 0; i < 200; ++i) {
            Word x = random_word(rng, p, -3, 4);
            Word y = random_word(rng, p, -3, 4);
            long long sum = word_to_int(p, x, -3, 5) + word_to_int(p, y, -3, 5);
            CHECK(add(p, x, y) == int_to_word(p, sum, -3, 5));
        }
    }
}

TEST_CASE("subtract: truncated tails and borrow oracle") {
    // negate-then-add: a + (0 - a) agrees with 0 below the floor
    std::mt19937_64 rng(11);
    for (int p : {2, 3}) {
        for (int i = 0; i < 100; ++i) {
            Word a = random_word(rng, p, -3, 3);
            Word neg = subtract(p, Word(), a, 4);
            Word sum = add(p, a, neg);
            CHECK(sum.truncate_above(4).empty());
        }
    }

    // p=3: g_0 - g_{-1} = 2 g_{-1} exactly (1 - 1/3 = 2/3); the borrow
    // terminates, no tail.
    CHECK(subtract(3, Word::single(0, 1), Word::single(-1, 1), 2) == Word::single(-1, 2));

    // p=2: 0 - g_0 = g_0 + g_1 + g_2 + ... truncated at the floor.
    CHECK(subtract(2, Word(), Word::single(0, 1), 3) ==
          Word::of({{0, 1}, {1, 1}, {2, 1}}));

    // Oracle: subtraction mod p^K on the integer images.
    for (int p : {2, 3, 5}) {
        long long pK = 1;
        for (int k = 0; k < 7; ++k) pK *= p;
        for (int i = 0; i < 200; ++i) {
            Word x = random_word(rng, p, -3, 4);
            Word y = random_word(rng, p, -3, 4);
            long long d = (word_to_int(p, x, -3, 4) - word_to_int(p, y, -3, 4)) % pK;
            if (d < 0) d += pK;
            CHECK(subtract(p, x, y, 4) == int_to_word(p, d, -3, 4));
        }
    }
}

TEST_CASE("dilation") {
    CHECK(dilate_element(Word::single(0, 1), 1) == Word::single(-1, 1));  // A g_0 = g_{-1}
    CHECK(dilate_character(Word::single(0, 1), 1) == Word::single(1, 1)); // r_0 A = r_1

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Word x = random_word(rng, 3, -3, 3);
        Word y = random_word(rng, 3, -3, 3);
        CHECK(dilate_element(x, 0) == x);
        // A(x + y) = A x + A y
        CHECK(dilate_element(add(3, x, y), 1) ==
              add(3, dilate_element(x, 1), dilate_element(y, 1)));
    }
}

TEST_CASE("pairing: elementary values") {
    const double tol = 1e-12;
    for (int p : {2, 3, 5}) {
        // (r_0, g_0) = exp(2 pi i / p)
        cplx v = pair_char(p, Word::single(0, 1), Word::single(0, 1));
        cplx expect = std::polar(1.0, 2.0 * 3.14159265358979323846 / p);
        CHECK(std::abs(v - expect) < tol);
        // (r_0, g_1) = 1
        CHECK(std::abs(pair_char(p, Word::single(0, 1), Word::single(1, 1)) - cplx(1.0)) < tol);
    }
    // (r_1 r_0, g_{-1} + g_0): four factors, checked via bicharacter splitting below.
    cplx lhs = pair_char(3, Word::of({{0, 1}, {1, 1}}), Word::of({{-1, 1}, {0, 1}}));
    cplx rhs = pair_char(3, Word::single(0, 1), Word::single(-1, 1)) *
               pair_char(3, Word::single(0, 1), Word::single(0, 1)) *
               pair_char(3, Word::single(1, 1), Word::single(-1, 1)) *
               pair_char(3, Word::single(1, 1), Word::single(0, 1));
    CHECK(std::abs(lhs - rhs) < tol);
}

TEST_CASE("pairing: bicharacter, modulus, dilation adjoint") {
    const double tol = 1e-12;
    std::mt19937_64 rng(19);
    for (int p : {2, 3, 5}) {
        for (int i = 0; i < 60; ++i) {
            Word w1 = random_word(rng, p, -2, 3);
            Word w2 = random_word(rng, p, -2, 3);
            Word x = random_word(rng, p, -3, 2);
            Word y = random_word(rng, p, -3, 2);
            CHECK(std::abs(std::abs(pair_char(p, w1, x)) - 1.0) < tol);
            // (w, x + y) = (w, x)(w, y)
            CHECK(std::abs(pair_char(p, w1, add(p, x, y)) -
                           pair_char(p, w1, x) * pair_char(p, w1, y)) < tol);
            // (w1 w2, x) = (w1, x)(w2, x)
            Word w12 = char_mul(p, w1, w2);
            CHECK(std::abs(pair_char(p, w12, x) -
                           pair_char(p, w1, x) * pair_char(p, w2, x)) < tol);
            // (chi A, x) = (chi, A x)
            CHECK(std::abs(pair_char(p, dilate_character(w1, 1), x) -
                           pair_char(p, w1, dilate_element(x, 1))) < tol);
        }
    }
}

TEST_CASE("character product carries downward") {
    // r_0^p = r_{-1}
    for (int p : {2, 3, 5})
        CHECK(char_mul(p, Word::single(0, p - 1), Word::single(0, 1)) == Word::single(-1, 1));
    // (r_0^2 r_1^2)(r_0^2 r_1) = r_{-1} r_0^2: index 1 gives 3 -> 0 carry,
    // index 0 gives 2+2+1 = 5 -> 2 carry, index -1 takes the carry.
    CHECK(char_mul(3, Word::of({{0, 2}, {1, 2}}), Word::of({{0, 2}, {1, 1}})) ==
          Word::of({{-1, 1}, {0, 2}}));
}

TEST_CASE("Monna maps") {
    CHECK(monna(3, Word()).num == 0);
    // lambda(g_{-1}) = 1
    CHECK(monna(3, Word::single(-1, 1)).num == 1);
    CHECK(monna(3, Word::single(-1, 1)).exp == 0);
    // lambda(a g_{-1} + b g_{-2}) = a + b p
    CHECK(monna(3, Word::of({{-1, 2}, {-2, 1}})).num == 2 + 1 * 3);
    // lambda'(1) = 0, lambda'(r_0) = 1
    CHECK(monna_dual(3, Word()).num == 0);
    CHECK(monna_dual(3, Word::single(0, 1)).num == 1);
    CHECK(monna_dual(3, Word::single(0, 1)).exp == 0);
    // lambda'(r_{-1} r_1^2) = p^{-1} + 2p
    auto fr = monna_dual(3, Word::of({{-1, 1}, {1, 2}}));
    CHECK(fr.exp == 1);
    CHECK(fr.num == 1 + 2 * 3 * 3);  // (1/3 + 6) * 3
}

TEST_CASE("enumerate_h0 is the Monna bijection onto 0..p^s-1") {
    // s=1, p=2 -> [0, g_{-1}]
    auto h1 = enumerate_h0(2, 1);
    REQUIRE(h1.size() == 2);
    CHECK(h1[0] == Word());
    CHECK(h1[1] == Word::single(-1, 1));

    // s=2, p=2 -> lambda values 0,1,2,3
    auto h2 = enumerate_h0(2, 2);
    REQUIRE(h2.size() == 4);
    CHECK(h2[2] == Word::single(-2, 1));
    CHECK(h2[3] == Word::of({{-1, 1}, {-2, 1}}));

    // s=1, p=3 -> [0, g_{-1}, 2g_{-1}]
    auto h3 = enumerate_h0(3, 1);
    REQUIRE(h3.size() == 3);
    CHECK(h3[2] == Word::single(-1, 2));

    for (int p : {2, 3, 5}) {
        for (int s = 1; s <= 3; ++s) {
            auto hs = enumerate_h0(p, s);
            long long expect = 1;
            for (int k = 0; k < s; ++k) expect *= p;
            REQUIRE((long long)hs.size() == expect);
            for (long long i = 0; i < expect; ++i) {
                auto fr = monna(p, hs[i]);
                CHECK(fr.exp == 0);
                CHECK(fr.num == i);
            }
        }
    }
}

TEST_CASE("coset reduction") {
    // Reduction idempotence.
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        Word g = random_word(rng, 3, -3, 3);
        auto c1 = TimeCoset::reduce(1, g);
        auto c2 = TimeCoset::reduce(1, c1.rep);
        CHECK(c1 == c2);
        auto d1 = DualCoset::reduce(0, g);
        auto d2 = DualCoset::reduce(0, d1.rep);
        CHECK(d1 == d2);
    }
    // r_k in G_l^bot iff k < l, consistent with reduction.
    for (int k = -3; k <= 3; ++k) {
        for (int l = -2; l <= 2; ++l) {
            bool member = rademacher_in_annihilator(k, l);
            bool reduced_away = DualCoset::reduce(l, Word::single(k, 1)).rep.empty();
            CHECK(member == reduced_away);
        }
    }
}

TEST_CASE("Monna orders match fraction values") {
    std::mt19937_64 rng(29);
    for (int p : {2, 3}) {
        for (int i = 0; i < 100; ++i) {
            Word a = random_word(rng, p, -3, 3);
            Word b = random_word(rng, p, -3, 3);
            auto fa = monna(p, a), fb = monna(p, b);
            double va = fa.approx(p), vb = fb.approx(p);
            if (va != vb) CHECK(monna_less(a, b) == (va < vb));
            auto da = monna_dual(p, a), db = monna_dual(p, b);
            double wa = da.approx(p), wb = db.approx(p);
            if (wa != wb) CHECK(monna_dual_less(a, b) == (wa < wb));
        }
    }
}
