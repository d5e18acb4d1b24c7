#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3twist/moduli.hpp"
#include "brauer_fixtures.hpp"

using namespace k3twist;
using fixtures::k3_vec;

namespace {

IntVec mukai_coords(long r, const IntVec& c, long s) {
    IntVec out{r};
    out.insert(out.end(), c.begin(), c.end());
    out.push_back(s);
    return out;
}

// Γ ⊕ ⟨d⟩: the hand-derived model for v^⊥ with v = (1,0,1−n).
Lattice k3_plus(long d) {
    return direct_sum(k3_lattice(), rank_one(d));
}

const BField kNoTwist{IntVec(22), 1};

} // namespace

TEST_CASE("moduli_report for v = (1,0,1-n)") {
    const Sublattice ns = fixtures::u_ns_in_k3();
    for (long n = 0; n <= 6; ++n) {
        const MukaiVector v = MukaiVector::integral(1, IntVec(22), 1 - n);
        const auto rep = moduli_report(v, kNoTwist, ns, {1});
        CHECK(rep.pairing_square == 2 * n - 2);
        CHECK(rep.dim == 2 * n);
        CHECK(rep.nonempty);
        CHECK(rep.is_k3 == (n == 1));
        CHECK(rep.hilb_n == Int(n));
        CHECK(rep.dim - rep.pairing_square == 2);
        CHECK_FALSE(rep.general_polarization_assumed);
    }
    const auto empty = moduli_report(MukaiVector::integral(1, IntVec(22), 2), kNoTwist, ns, {1});
    CHECK(empty.pairing_square == -4);
    CHECK_FALSE(empty.nonempty);
    CHECK_FALSE(empty.hilb_n.has_value());
}

TEST_CASE("moduli_report rejections") {
    const Sublattice ns = fixtures::u_ns_in_k3();
    CHECK_THROWS_AS(moduli_report(MukaiVector::integral(2, IntVec(22), -2), kNoTwist, ns, {1}), PreconditionError);
    CHECK_THROWS_AS(moduli_report(MukaiVector::integral(0, k3_vec({{0, 1}, {1, 1}}), 1), kNoTwist, ns, {1}),
                    PreconditionError);
    CHECK_THROWS_AS(moduli_report(MukaiVector::integral(1, k3_vec({{2, 1}}), 0), kNoTwist, ns, {1}),
                    PreconditionError);
    CHECK_THROWS_AS(moduli_report(MukaiVector::integral(1, IntVec(22), 0), kNoTwist, ns, {1, 0}), ValidationError);

    // rank-2 NS = ⟨e+f⟩ ⊕ ⟨e′−f′⟩ ≅ [[2,0],[0,−2]]; H = (1,0) lies on the wall (0,1)
    const Sublattice ns2(k3_lattice(), IntMatrix::from_rows({k3_vec({{0, 1}, {1, 1}}), k3_vec({{2, 1}, {3, -1}})}));
    const MukaiVector v = MukaiVector::integral(2, IntVec(22), -1);
    CHECK_THROWS_AS(moduli_report(v, kNoTwist, ns2, {1, 0}), PreconditionError);
    const auto forced = moduli_report(v, kNoTwist, ns2, {1, 0}, true);
    CHECK(forced.general_polarization_assumed);
    CHECK(forced.pairing_square == 4);
    CHECK(forced.dim == 6);
}

TEST_CASE("moduli_report with a B-field") {
    const Sublattice ns = fixtures::u_ns_in_k3();
    const BField b{k3_vec({{0, 1}}), 2};
    // v = e^{−ξ/2}(2, D, a) with the class component in NS⊗ℚ: D = ξ + (e+f)
    const MukaiVector untwisted = MukaiVector::integral(2, k3_vec({{0, 2}, {1, 1}}), 1);
    RatVec nb = b.twist();
    for (auto& q : nb)
        q = -q;
    const MukaiVector v = exp_twist(untwisted, nb, k3_lattice());
    const auto rep = moduli_report(v, b, ns, {1});
    const Rat v2 = mukai_pairing(untwisted, untwisted, k3_lattice());
    CHECK(Rat(rep.pairing_square) == v2);
    CHECK(rep.dim == rep.pairing_square + 2);
}

TEST_CASE("beauville_lattice: isotropic v = (1,0,0)") {
    const Lattice m = mukai_lattice();
    const Lattice b = beauville_lattice(mukai_coords(1, IntVec(22), 0), m);
    CHECK(b.rank() == 22);
    CHECK(signature(b.gram()) == Inertia{3, 19, 0});
    CHECK(oracle::descartes_signature(b.gram()) == Inertia{3, 19, 0});
    CHECK(b.is_even());
    CHECK(b.is_unimodular());
    const Lattice b2 = beauville_lattice(mukai_coords(0, IntVec(22), 1), m);
    CHECK(b2.rank() == 22);
    CHECK(signature(b2.gram()) == Inertia{3, 19, 0});
    CHECK(b2.is_unimodular());
}

TEST_CASE("beauville_lattice: v = (1,0,1-n)") {
    const Lattice m = mukai_lattice();
    for (long n = 2; n <= 5; ++n) {
        const Lattice b = beauville_lattice(mukai_coords(1, IntVec(22), 1 - n), m);
        CHECK(b.rank() == 23);
        CHECK(signature(b.gram()) == Inertia{3, 20, 0});
        CHECK(b.is_even());
        CHECK(discriminant_group(b.gram()) == std::vector<Int>{Int(2 * n - 2)});
        // same invariants as the hand-derived Γ ⊕ ⟨−2(n−1)⟩
        const Lattice model = k3_plus(-2 * (n - 1));
        CHECK(discriminant_group(model.gram()) == discriminant_group(b.gram()));
        CHECK(signature(model.gram()) == signature(b.gram()));
        // the complement is exactly what the pairing says
        const IntMatrix c = orthogonal_complement(m.gram(), IntMatrix::from_rows({mukai_coords(1, IntVec(22), 1 - n)}));
        CHECK(congruence(c, m.gram()) == b.gram());
    }
    CHECK_THROWS_AS(beauville_lattice(mukai_coords(1, IntVec(22), 2), m), PreconditionError);
    CHECK_THROWS_AS(beauville_lattice(mukai_coords(1, IntVec(22), 1), m), PreconditionError); // ⟨v²⟩ = −2
    CHECK_THROWS_AS(beauville_lattice(mukai_coords(2, IntVec(22), -2), m), PreconditionError);
}

TEST_CASE("beauville_lattice: cyclic discriminant of order v^2, random primitive v") {
    const Lattice m = mukai_lattice();
    oracle::Rng rng(51);
    int done = 0;
    for (int t = 0; t < 400 && done < 40; ++t) {
        IntVec v(24);
        for (std::size_t j : {0, 1, 2, 3, 4, 5, 9, 23})
            v[j] = rng.integer(-3, 3);
        if (!is_primitive(v))
            continue;
        const Int v2 = m.pair(v, v);
        if (v2 <= 0 || v2 > 10)
            continue;
        ++done;
        const Lattice b = beauville_lattice(v, m);
        CHECK(b.rank() == 23);
        CHECK(b.is_even());
        const auto d = discriminant_group(b.gram());
        CHECK(d == std::vector<Int>{v2});
        CHECK(oracle::invariant_factors_by_minors(IntMatrix{{v2}}).back() == v2);
    }
    CHECK(done >= 20);
    for (long k = 1; k <= 5; ++k)
        CHECK(discriminant_group(beauville_lattice(mukai_coords(1, IntVec(22), -k), m).gram()) ==
              std::vector<Int>{Int(2 * k)});
}

TEST_CASE("algebraic_beauville") {
    for (long d = 1; d <= 4; ++d) {
        const Lattice ns = rank_one(2 * d);
        const Lattice a = algebraic_beauville(MukaiVector::integral(1, {0}, 0), ns);
        CHECK(a.gram() == IntMatrix{{2 * d}});
        const Lattice b = algebraic_beauville(MukaiVector::integral(0, {0}, 1), ns);
        CHECK(b.gram() == IntMatrix{{2 * d}});
    }
    // ⟨v²⟩ > 0 on ρ = 1: rank 2
    const Lattice ns = rank_one(2);
    const Lattice c = algebraic_beauville(MukaiVector::integral(1, {0}, -1), ns);
    CHECK(c.rank() == 2);
    CHECK(c.is_even());
    CHECK(signature(c.gram()) == Inertia{1, 1, 0});
    CHECK(oracle::int_det(c.gram()) == -4); // [[2]] ⊕ [[−2]] up to isometry
    CHECK_THROWS_AS(algebraic_beauville(MukaiVector::integral(1, {0}, 2), ns), PreconditionError);
}

TEST_CASE("algebraic_beauville in full mode matches abstract mode when the twist is trivial") {
    const Sublattice ns = fixtures::u_ns_in_k3(); // ≅ [[2]]
    for (long s : {0L, -1L, -2L}) {
        const MukaiVector v = MukaiVector::integral(1, IntVec(22), s);
        const Lattice full = algebraic_beauville(v, kNoTwist, ns);
        const Lattice abstract = algebraic_beauville(MukaiVector::integral(1, {0}, s), rank_one(2));
        CHECK(full.rank() == abstract.rank());
        CHECK(signature(full.gram()) == signature(abstract.gram()));
        CHECK(oracle::int_det(full.gram()) == oracle::int_det(abstract.gram()));
    }
    // a B-field inside NS twists nothing algebraically
    const BField b{k3_vec({{0, 1}, {1, 1}}), 2};
    const MukaiVector u = MukaiVector::integral(2, k3_vec({{0, 1}, {1, 1}}), 0);
    RatVec nb = b.twist();
    for (auto& q : nb)
        q = -q;
    const Lattice tw = algebraic_beauville(exp_twist(u, nb, k3_lattice()), b, ns);
    CHECK(tw.rank() == 2); // ⟨u²⟩ = 2
    const Lattice ab = algebraic_beauville(MukaiVector::integral(2, {1}, 0), rank_one(2));
    CHECK(oracle::int_det(tw.gram()) == oracle::int_det(ab.gram()));
    CHECK(signature(tw.gram()) == Inertia{1, 1, 0});
}
