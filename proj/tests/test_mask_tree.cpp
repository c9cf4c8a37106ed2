#include "padic/mask_tree.hpp"

#include <doctest.h>

#include <set>

using namespace padic;

namespace {

std::set<long> zero_set_of(const MaskTree& t) {
    auto z = t.zero_set();
    return std::set<long>(z.begin(), z.end());
}

}  // namespace

TEST_CASE("initial tree zero sets") {
    // p=3, N=1: {3..7} u {24,25,26}, 8 = p^{N+1}-1 zeros.
    auto t3 = initial_tree(GroupParams(3, 1, 1));
    CHECK(zero_set_of(t3) == std::set<long>{3, 4, 5, 6, 7, 24, 25, 26});
    CHECK(t3.zero_count() == 8);

    // p=2, N=1: {2} u {6,7}, 3 = p^{N+1}-1 zeros.
    auto t2 = initial_tree(GroupParams(2, 1, 1));
    CHECK(zero_set_of(t2) == std::set<long>{2, 6, 7});

    CHECK_THROWS_AS(initial_tree(GroupParams(3, 2, 1)), std::invalid_argument);

    // Validity: every leaf has a zero ancestor-or-self.
    for (auto pr : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
        auto t = initial_tree(GroupParams(pr.first, pr.second, pr.second));
        CHECK(t.every_path_has_zero());
        long target = 1;
        for (int i = 0; i <= pr.second; ++i) target *= pr.first;
        CHECK(t.zero_count() == target - 1);
    }
}

TEST_CASE("tree structure: levels, parents, node/coset bijection") {
    GroupParams params(3, 1, 1);
    MaskTree t(params);
    CHECK(t.node_count() == 27);
    CHECK(t.height() == 3);
    CHECK(t.level_of(0) == 0);
    CHECK(t.level_of(1) == 1);
    CHECK(t.level_of(3) == 2);
    CHECK(t.level_of(26) == 3);
    // level s contains p^s - p^{s-1} nodes
    for (int s = 1; s <= 3; ++s) {
        long count = 0;
        for (long m = 0; m < t.node_count(); ++m)
            if (t.level_of(m) == s) ++count;
        long ps = 1;
        for (int i = 0; i < s; ++i) ps *= 3;
        CHECK(count == ps - ps / 3);
    }
    // node -> coset -> node round trip, and the digit order of Eq 2.3
    for (long m = 0; m < t.node_count(); ++m) {
        auto c = node_coset(params, m);
        CHECK(c.level == -1);
        CHECK(coset_node(params, c) == m);
    }
    CHECK(node_coset(params, 5).rep == Word::of({{-1, 2}, {0, 1}}));  // 5 = 2 + 1*3
}

TEST_CASE("transform i") {
    auto t = initial_tree(GroupParams(3, 1, 1));
    auto u = transform_i(t, 0);  // children {3,4,5} of node 1
    CHECK(zero_set_of(u) == std::set<long>{1, 6, 7, 24, 25, 26});
    CHECK(u.zero_count() == t.zero_count() - (3 - 1));
    CHECK(u.every_path_has_zero());
    // same j again: children are no longer all zero
    CHECK_THROWS_AS(transform_i(u, 0), TransformError);
    // out of range
    CHECK_THROWS_AS(transform_i(t, 9), TransformError);
    // children not zero
    CHECK_THROWS_AS(transform_i(t, 1), TransformError);
}

TEST_CASE("transform ii and the inverse pair") {
    auto t = initial_tree(GroupParams(3, 1, 1));
    auto u = transform_ii(t, 0);  // node 3 -> children {9,10,11}
    CHECK(zero_set_of(u) == std::set<long>{4, 5, 6, 7, 9, 10, 11, 24, 25, 26});
    CHECK(u.zero_count() == t.zero_count() + (3 - 1));
    // transform_i on the created children restores the original tree
    // (children 9,10,11 have parent 3 = p^{N-1} + j with j = 2).
    auto back = transform_i(u, 2);
    CHECK(zero_set_of(back) == zero_set_of(t));
    // node not zero (node 8 = p^N + 5 is free in the initial tree)
    CHECK_THROWS_AS(transform_ii(t, 5), TransformError);
}

TEST_CASE("classification trichotomy") {
    for (auto pr : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        auto t = initial_tree(GroupParams(pr.first, pr.second, pr.second));
        CHECK(classify(t).kind == TreeClass::Determines);

        // one extra zero anywhere -> Infeasible
        long added = 0;
        for (long m = 1; m < t.node_count(); ++m) {
            if (t.state(m) != NodeState::Free) continue;
            auto u = pad_with(t, {m});
            CHECK(classify(u).kind == TreeClass::Infeasible);
            ++added;
        }
        CHECK(added > 0);
    }

    // removing a zero from the initial tree always exposes a zero-free path
    {
        auto t = initial_tree(GroupParams(3, 1, 1));
        auto u = t;
        u.set_free(24);
        CHECK_THROWS_AS(classify(u), InvalidTreeError);
        auto v = t;
        v.set_free(3);
        CHECK_THROWS_AS(classify(v), InvalidTreeError);
    }

    // transform_i removes p-1 zeros -> padding case with that deficit
    {
        auto t = transform_i(initial_tree(GroupParams(3, 1, 1)), 0);
        auto cls = classify(t);
        CHECK(cls.kind == TreeClass::DeterminesAfterPadding);
        CHECK(cls.deficit == 2);
    }
}

TEST_CASE("default padding stays below existing zeros") {
    auto t = transform_i(initial_tree(GroupParams(3, 1, 1)), 0);
    auto padded = pad_default(t);
    CHECK(classify(padded).kind == TreeClass::Determines);
    // Padded nodes are the smallest-index free nodes under a zero: 3 and 4
    // (children of the zero at node 1).
    CHECK(zero_set_of(padded) == std::set<long>{1, 3, 4, 6, 7, 24, 25, 26});
    // phi_hat structural zero set unchanged by the padding
    auto before = phi_hat_zero_flags(t);
    auto after = phi_hat_zero_flags(padded);
    CHECK(before == after);
    // level-1 zero pattern unchanged: lambda_1 = 0, lambda_2 free
    CHECK(padded.state(1) == NodeState::Zero);
    CHECK(padded.state(2) == NodeState::Free);
}

TEST_CASE("phi_hat products and shift") {
    GroupParams params(2, 1, 1);
    auto t = initial_tree(params);
    // unsolved tree: products must be rejected
    CHECK_THROWS_AS(phi_hat_tree(t), std::logic_error);
    // solve with arbitrary concrete values on the free nodes
    MaskTree s = t;
    long k = 2;
    for (long m = 1; m < s.node_count(); ++m)
        if (s.state(m) == NodeState::Free) s.set_value(m, cplx(1.0 / ++k, 0.5));
    auto ph = phi_hat_tree(s);
    CHECK(ph[0] == cplx(1.0));
    for (long m = 1; m < s.node_count(); ++m) {
        CHECK(std::abs(ph[m] - s.value(m) * ph[m / 2]) < 1e-15);
    }
    // all leaves vanish
    for (long m = s.first_leaf(); m < s.node_count(); ++m) CHECK(ph[m] == cplx(0.0));

    auto sh = shift_tree(ph, 2);
    CHECK(sh[0] == cplx(1.0));
    CHECK(sh[1] == cplx(1.0));
    for (long m = 2; m < (long)sh.size(); ++m) CHECK(sh[m] == ph[m / 2]);

    // shifted node value equals phi_hat evaluated at the coset dilated by A^{-1}:
    // word(m) A^{-1} = word(m div p); checked through the coset encoding.
    for (long m = 2; m < (long)sh.size(); ++m) {
        auto w = node_coset(params, m).rep;
        auto shifted_down = dilate_character(w, -1).truncate_below(-params.N);
        CHECK(coset_node(params, DualCoset{-params.N, shifted_down}) == m / params.p);
    }
}
