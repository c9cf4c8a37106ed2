#include "padic/frame_verify.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace padic;
using namespace padic::test;

namespace {

FrameSystem frame_for(int p, int N, bool transformed) {
    auto tree = initial_tree(GroupParams(p, N, N));
    if (transformed) {
        if (p == 2 && N == 1) tree = transform_i(tree, 2);
        if (p == 2 && N == 2) tree = transform_ii(transform_i(tree, 0), 2);
        if (p == 3 && N == 1) tree = transform_ii(transform_i(tree, 0), 4);
        if (p == 3 && N == 2) tree = transform_ii(transform_i(tree, 0), 3);
        if (p == 5) tree = transform_ii(transform_i(tree, 0), 5);
    }
    if (classify(tree).kind == TreeClass::DeterminesAfterPadding) tree = pad_default(tree);
    return build_frame(solve_mask(tree));
}

}  // namespace

TEST_CASE("coefficient: both routes agree and trivial cases hold") {
    std::mt19937_64 rng(606);
    for (int p : {2, 3}) {
        auto fs = frame_for(p, 1, false);
        auto f = random_test_function(fs.params, 42);
        auto fhat = fourier(f, false);
        for (auto& w : fs.wavelets) {
            // f = psi itself, n = 0, h = 0: <psi, psi> = nu(E)
            auto psihat = w.psi_hat;
            cplx self = coefficient(psihat, w.support, 0, Word());
            CHECK(std::abs(self - cplx(std::pow((double)p, w.support.level))) < 1e-12);

            // disjoint-support control: a function supported on a remote coset
            StepFunctionFreq remote(p, fs.params.M);
            remote.set(Word::single(fs.params.M, p - 1), cplx(2.0, 1.0));
            DualCoset rc{fs.params.M, Word::single(fs.params.M, p - 1)};
            if (!dual_coset_contains(rc, w.support) && !dual_coset_contains(w.support, rc))
                CHECK(std::abs(coefficient(remote, w.support, 0, Word())) < 1e-14);

            // dual-route oracle on random (n, h)
            for (int n : {-1, 0, 1, 2}) {
                for (int i = 0; i < 4; ++i) {
                    Word h = h0_element(p, (long long)(rng() % 9));
                    cplx a = coefficient(fhat, w.support, n, h);
                    cplx b = coefficient_time(f, w, n, h);
                    CHECK(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)));
                }
            }
        }
    }
}

TEST_CASE("Lemma 3.1 identity on a random grid") {
    int triples = 0;
    for (int p : {2, 3}) {
        auto fs_init = frame_for(p, 1, false);
        auto fs_tr = frame_for(p, 1, true);
        for (const auto* fs : {&fs_init, &fs_tr}) {
            if (fs->orthogonal) continue;
            for (int i = 0; i < 3; ++i) {
                auto f = random_test_function(fs->params, 900 + i);
                auto fhat = fourier(f, false);
                for (auto& w : fs->wavelets) {
                    for (int n : {-2, 0, 1, 3}) {
                        auto r = lemma31_check(f, fhat, w, n);
                        CHECK(r.residual <= 1e-9);
                        CHECK(r.extra_layer_max <= 1e-12 * std::sqrt(f.norm_sq()));
                        ++triples;
                    }
                }
            }
        }
    }
    CHECK(triples >= 20);

    // scaling: f -> 2f multiplies both sides by 4
    auto fs = frame_for(3, 1, false);
    auto f = random_test_function(fs.params, 7);
    StepFunctionTime f2(f.p(), f.constancy_level());
    for (auto& [w, v] : f.values()) f2.set(w, 2.0 * v);
    auto r1 = lemma31_check(f, fourier(f, false), fs.wavelets[0], 1);
    auto r4 = lemma31_check(f2, fourier(f2, false), fs.wavelets[0], 1);
    CHECK(r4.lhs == doctest::Approx(4.0 * r1.lhs).epsilon(1e-12));
    CHECK(r4.rhs == doctest::Approx(4.0 * r1.rhs).epsilon(1e-12));

    // fhat vanishing on E A^n: zero against zero
    StepFunctionTime g(fs.params.p, fs.params.M + 2);
    g.set(Word(), cplx(1.0));  // supported on G_{M+2}: fhat lives on G_{M+2}^bot
    auto gh = fourier(g, false);
    auto r0 = lemma31_check(g, gh, fs.wavelets[0], 5);  // dilate far beyond the support
    CHECK(r0.lhs == 0.0);
    CHECK(r0.rhs == 0.0);
}

TEST_CASE("Parseval residual on preset frames") {
    for (auto pr : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
        for (bool transformed : {false, true}) {
            auto fs = frame_for(pr.first, pr.second, transformed);
            if (fs.orthogonal) continue;
            for (int i = 0; i < 5; ++i) {
                auto f = random_test_function(fs.params, 50 + i);
                auto r = parseval_residual(f, fs);
                CHECK(r.residual <= 1e-9);
                CHECK(r.tiling_ok);
                CHECK(r.truncation_low <= 1e-12 * std::sqrt(r.norm_sq));
                CHECK(r.truncation_high <= 1e-12 * std::sqrt(r.norm_sq));
            }
        }
    }
}

TEST_CASE("Parseval: mean-zero control is purely finite") {
    auto fs = frame_for(3, 1, false);
    // f = 1_{G_0 + g_{-1}} - 1_{G_0}: fhat(1) = 0, so the tail vanishes.
    StepFunctionTime f(3, fs.params.M + 2);
    for (auto& ext : digit_extensions(3, 0, fs.params.M + 2)) {
        f.set(add(3, ext, Word::single(-1, 1)), cplx(1.0));
        f.accumulate(ext, cplx(-1.0));
    }
    auto r = parseval_residual(f, fs);
    CHECK(r.tail == 0.0);
    CHECK(r.residual <= 1e-10);
}

TEST_CASE("Parseval residual is shift friendly") {
    auto fs = frame_for(2, 1, false);
    auto f = random_test_function(fs.params, 99);
    auto r0 = parseval_residual(f, fs);
    for (long long i : {1, 2, 3}) {
        auto shifted = translate_time(f, h0_element(2, i));
        auto r = parseval_residual(shifted, fs);
        CHECK(r.norm_sq == doctest::Approx(r0.norm_sq).epsilon(1e-12));
        CHECK(r.residual <= 1e-9);
    }
}

TEST_CASE("Gram matrices of shifts") {
    // phi = 1_{G_0}: disjoint shifts, identity Gram.
    auto phi0 = StepFunctionTime::indicator_subgroup(2, 0);
    auto g = gram_shift_matrix(phi0, 2);
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            CHECK(std::abs(g[i][j] - (i == j ? cplx(1.0) : cplx(0.0))) < 1e-12);

    // generic solved mask: self-adjoint PSD, but not the identity
    auto fs = frame_for(3, 1, false);
    auto gm = gram_shift_matrix(fs.phi, 2);
    double off = 0.0;
    for (size_t i = 0; i < gm.size(); ++i) {
        for (size_t j = 0; j < gm.size(); ++j) {
            CHECK(std::abs(gm[i][j] - std::conj(gm[j][i])) < 1e-10);
            if (i != j) off = std::max(off, std::abs(gm[i][j]));
        }
        CHECK(gm[i][i].real() >= -1e-12);
    }
    CHECK(off > 1e-3);  // nonorthogonal MRA: recorded, not repaired

    // degenerate orthogonal case: renormalized phi has identity Gram
    auto t = transform_i(transform_i(initial_tree(GroupParams(2, 1, 1)), 2), 0);
    auto ortho = build_frame(solve_mask(pad_default(t)));
    REQUIRE(ortho.orthogonal);
    StepFunctionTime renorm = dilate_time(ortho.phi, ortho.params.N);
    StepFunctionTime scaled(renorm.p(), renorm.constancy_level());
    double pn = std::pow((double)ortho.params.p, ortho.params.N);
    for (auto& [w, v] : renorm.values()) scaled.set(w, pn * v);
    auto gg = gram_shift_matrix(scaled, 2);
    for (size_t i = 0; i < gg.size(); ++i)
        for (size_t j = 0; j < gg.size(); ++j)
            CHECK(std::abs(gg[i][j] - (i == j ? cplx(1.0) : cplx(0.0))) < 1e-10);
}

TEST_CASE("coefficient grid: entries match the lemma sums, truncation confirmed") {
    auto fs = frame_for(3, 1, false);
    auto f = random_test_function(fs.params, 11);
    auto fhat = fourier(f, false);
    auto grid = coefficient_grid(f, fhat, fs.wavelets[0], 0, -2, 2);
    CHECK(grid.truncation_ok);
    CHECK(grid.extra_layer_max <= 1e-12 * std::sqrt(f.norm_sq()));
    for (int n = -2; n <= 2; ++n) {
        double from_grid = 0.0;
        for (auto& [key, c] : grid.entries)
            if (key.first == n) from_grid += std::norm(c);
        auto r = lemma31_check(f, fhat, fs.wavelets[0], n);
        CHECK(from_grid == doctest::Approx(r.lhs).epsilon(1e-12));
    }
}

TEST_CASE("refinement residual across presets") {
    for (auto pr : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
        for (bool transformed : {false, true}) {
            auto fs = frame_for(pr.first, pr.second, transformed);
            CHECK(refinement_residual(fs.mask, fs.phi) <= 1e-10);
        }
    }
}
