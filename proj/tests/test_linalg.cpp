#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3twist/lattice.hpp"
#include "k3twist/linalg.hpp"
#include "oracles.hpp"

using namespace k3twist;

namespace {

IntMatrix im(std::initializer_list<std::initializer_list<Int>> rows) {
    return IntMatrix(rows);
}

bool unimodular(const IntMatrix& u) {
    const Int d = oracle::int_det(u);
    return d == 1 || d == -1;
}

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out = a;
    for (std::size_t i = 0; i < b.rows(); ++i)
        out.append_row(b.row(i));
    return out;
}

} // namespace

TEST_CASE("hnf of [[2,4],[1,3]]") {
    const IntMatrix m = im({{2, 4}, {1, 3}});
    const auto hf = hermite_form(m);
    // (1,3) reduced modulo the second pivot 2
    CHECK(hf.h == im({{1, 1}, {0, 2}}));
    CHECK(hermite_form(im({{1, 3}, {0, 2}})).h == hf.h);
    CHECK(hf.u * m == hf.h);
    CHECK(unimodular(hf.u));
    CHECK(oracle::is_hnf(hf.h));
    CHECK(hf.rank == 2);
}

TEST_CASE("hnf trivial cases") {
    const IntMatrix id = IntMatrix::identity(3);
    const auto a = hermite_form(id);
    CHECK(a.h == id);
    CHECK(a.u == id);
    const IntMatrix z(2, 3);
    const auto b = hermite_form(z);
    CHECK(b.h == z);
    CHECK(b.rank == 0);
}

TEST_CASE("hnf random: u.m = h, det u = +-1, canonical shape") {
    oracle::Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto c = static_cast<std::size_t>(rng.uniform(1, 6));
        IntMatrix m = rng.matrix(r, c, -9, 9);
        if (t % 5 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                m(r - 1, j) = 2 * m(0, j); // force a dependency
        const auto hf = hermite_form(m);
        REQUIRE(hf.u * m == hf.h);
        REQUIRE(unimodular(hf.u));
        REQUIRE(oracle::is_hnf(hf.h));
        CHECK(hf.rank == rank(m));
        // uniqueness: the HNF of any row-equivalent matrix agrees
        const IntMatrix mix = rng.matrix(r, r, -1, 1);
        if (unimodular(mix))
            CHECK(hermite_form(mix * m).h == hf.h);
    }
}

TEST_CASE("snf of [[2,0],[0,3]] is diag(1,6)") {
    const IntMatrix m = im({{2, 0}, {0, 3}});
    const auto sf = smith_form(m);
    CHECK(sf.s == im({{1, 0}, {0, 6}}));
    CHECK(sf.u * m * sf.v == sf.s);
    CHECK(sf.diagonal() == oracle::invariant_factors_by_minors(m));
}

TEST_CASE("snf trivial cases") {
    CHECK(smith_form(IntMatrix::identity(4)).s == IntMatrix::identity(4));
    const auto z = smith_form(im({{0}}));
    CHECK(z.s == im({{0}}));
}

TEST_CASE("snf random against gcd-of-minors oracle") {
    oracle::Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto c = static_cast<std::size_t>(rng.uniform(1, 4));
        const IntMatrix m = rng.matrix(r, c, -12, 12);
        const auto sf = smith_form(m);
        REQUIRE(sf.u * m * sf.v == sf.s);
        REQUIRE(unimodular(sf.u));
        REQUIRE(unimodular(sf.v));
        const auto d = sf.diagonal();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j)
                    REQUIRE(sf.s(i, j) == 0);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            REQUIRE(d[i] >= 0);
            if (d[i] != 0)
                REQUIRE(mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()));
            else
                REQUIRE(d[i + 1] == 0);
        }
        CHECK(d == oracle::invariant_factors_by_minors(m));
    }
}

TEST_CASE("determinant and inverse") {
    oracle::Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const IntMatrix m = rng.matrix(n, n, -7, 7);
        CHECK(determinant(m) == oracle::int_det(m));
        if (determinant(m) != 0)
            CHECK(inverse(to_rational(m)) * to_rational(m) == RatMatrix::identity(n));
    }
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(im({{1, 1}})) == im({{1, -1}}));
    CHECK(kernel_basis(IntMatrix::identity(3)).rows() == 0);
    CHECK(kernel_basis(IntMatrix(1, 3)) == IntMatrix::identity(3));
}

TEST_CASE("kernel_basis random: annihilates, full rank, saturated") {
    oracle::Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto c = static_cast<std::size_t>(rng.uniform(1, 6));
        const IntMatrix m = rng.matrix(r, c, -6, 6);
        const IntMatrix k = kernel_basis(m);
        REQUIRE(k.rows() == c - rank(m));
        if (k.rows() == 0)
            continue;
        CHECK((m * k.transpose()).is_zero());
        // saturated: invariant factors all 1
        for (const auto& d : smith_form(k).diagonal())
            CHECK(d == 1);
        // any kernel element lies in the integral span: stacking adds no torsion
        IntVec x(c);
        for (std::size_t i = 0; i < k.rows(); ++i) {
            const Int a = rng.integer(-3, 3);
            for (std::size_t j = 0; j < c; ++j)
                x[j] += a * k(i, j);
        }
        IntMatrix xs(1, c);
        for (std::size_t j = 0; j < c; ++j)
            xs(0, j) = 3 * x[j];
        const auto d = smith_form(stack(k, xs)).diagonal();
        for (std::size_t i = 0; i < k.rows(); ++i)
            CHECK(d[i] == 1);
        CHECK(solve_in_row_span(k, x).has_value());
    }
}

TEST_CASE("solve_in_row_span") {
    const IntMatrix b = im({{2, 0}, {0, 3}});
    const IntVec in{4, -3}, out{1, 0};
    const auto x = solve_in_row_span(b, in);
    REQUIRE(x.has_value());
    CHECK(vec_mat<Int>(*x, b) == in);
    CHECK_FALSE(solve_in_row_span(b, out).has_value());
}

TEST_CASE("short_vectors examples") {
    using V = std::vector<IntVec>;
    CHECK(short_vectors(RatMatrix{{2}}, 2) == V{{1}});
    const auto sv = short_vectors(RatMatrix{{2, 1}, {1, 2}}, 3);
    V want{{1, 0}, {0, 1}, {1, -1}};
    std::sort(want.begin(), want.end());
    CHECK(sv == want); // same set; output is lexicographic
    CHECK(short_vectors(RatMatrix{{2, 0}, {0, 2}}, 1).empty());
    CHECK_THROWS_AS(short_vectors(RatMatrix{{0, 1}, {1, 0}}, 3), PreconditionError);
    CHECK_THROWS_AS(short_vectors(RatMatrix{{1, 0}, {0, 0}}, 3), PreconditionError);
}

TEST_CASE("short_vectors against brute force") {
    oracle::Rng rng(15);
    for (int t = 0; t < 60; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        const RatMatrix g = oracle::as_rat(rng.positive_definite(n, 10));
        const Rat b = rng.rational(0, 30, 3);
        CHECK(short_vectors(g, b) == oracle::brute_short_vectors(g, b));
    }
}

TEST_CASE("short_vectors with rational Gram") {
    const RatMatrix g{{Rat(1, 2), Rat(1, 3)}, {Rat(1, 3), Rat(5, 4)}};
    for (const Rat b : {Rat(1, 2), Rat(2), Rat(7, 3), Rat(9)})
        CHECK(short_vectors(g, b) == oracle::brute_short_vectors(g, b));
}

TEST_CASE("signature examples") {
    CHECK(signature(hyperbolic_plane().gram()) == Inertia{1, 1, 0});
    CHECK(signature(e8_minus().gram()) == Inertia{0, 8, 0});
    CHECK(oracle::descartes_signature(e8_minus().gram()) == Inertia{0, 8, 0});
    CHECK(signature(im({{0}})) == Inertia{0, 0, 1});
}

TEST_CASE("signature random: Descartes oracle and additivity") {
    oracle::Rng rng(16);
    for (int t = 0; t < 150; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        IntMatrix g = rng.symmetric(n, -5, 5);
        if (t % 4 == 0) // make it degenerate
            for (std::size_t j = 0; j < n; ++j)
                g(0, j) = g(j, 0) = 0;
        const Inertia s = signature(g);
        CHECK(s == oracle::descartes_signature(g));
        const IntMatrix h = rng.symmetric(static_cast<std::size_t>(rng.uniform(1, 3)), -5, 5);
        const Inertia sh = signature(h);
        const Inertia sum = signature(direct_sum(Lattice(g), Lattice(h)).gram());
        CHECK(sum == Inertia{s.pos + sh.pos, s.neg + sh.neg, s.zero + sh.zero});
    }
}

TEST_CASE("discriminant_group") {
    CHECK(discriminant_group(hyperbolic_plane().gram()).empty());
    CHECK(discriminant_group(im({{-2}})) == std::vector<Int>{2});
    CHECK(discriminant_group(im({{-4, 0}, {0, -2}})) == std::vector<Int>{2, 4});
    CHECK_THROWS_AS(discriminant_group(im({{1, 1}, {1, 1}})), PreconditionError);
    oracle::Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix g = rng.symmetric(3, -6, 6);
        if (oracle::int_det(g) == 0)
            continue;
        std::vector<Int> want;
        for (const auto& d : oracle::invariant_factors_by_minors(g))
            if (d > 1)
                want.push_back(d);
        CHECK(discriminant_group(g) == want);
    }
}

TEST_CASE("orthogonal_complement") {
    CHECK(orthogonal_complement(hyperbolic_plane().gram(), im({{1, 0}})) == im({{1, 0}}));
    CHECK(orthogonal_complement(hyperbolic_plane().gram(), IntMatrix(0, 2)) == IntMatrix::identity(2));
    CHECK(orthogonal_complement(im({{2, 0}, {0, -2}}), im({{1, 0}})) == im({{0, 1}}));
    oracle::Rng rng(18);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix g = rng.symmetric(4, -4, 4);
        const IntMatrix v = rng.matrix(static_cast<std::size_t>(rng.uniform(1, 2)), 4, -3, 3);
        const IntMatrix c = orthogonal_complement(g, v);
        if (c.rows() > 0)
            CHECK((c * g * v.transpose()).is_zero());
        CHECK(c == saturate(c));
        CHECK(c.rows() == 4 - rank(v * g));
    }
}
