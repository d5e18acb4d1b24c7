#include "k3twist/walls.hpp"

#include <algorithm>

namespace k3twist {

namespace {

void require_positive(const IntVec& h, const Lattice& ns) {
    if (h.size() != ns.rank())
        throw ValidationError("polarization length does not match the NS rank");
    if (ns.pair(h, h) <= 0)
        throw PreconditionError("polarization must satisfy (H,H) > 0");
}

void validate(const WallQuery& q) {
    require_positive(q.h0, q.ns);
    require_positive(q.h1, q.ns);
    if (q.ns.pair(q.h0, q.h1) <= 0)
        throw PreconditionError("endpoints must satisfy (H0,H1) > 0");
    if (q.v.c.size() != q.ns.rank())
        throw ValidationError("Mukai vector class length does not match the NS rank");
}

// Sign so that (ξ,H) > 0, or the first nonzero coordinate is positive when
// ξ ⊥ H.
void normalize_sign(IntVec& xi, const Lattice& ns, const IntVec& h) {
    const Int s = ns.pair(xi, h);
    bool flip = s < 0;
    if (s == 0) {
        auto nz = std::find_if(xi.begin(), xi.end(), [](const Int& x) { return x != 0; });
        flip = nz != xi.end() && *nz < 0;
    }
    if (flip)
        for (auto& x : xi)
            x = -x;
}

void sort_walls(std::vector<Wall>& walls) {
    std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) { return a.xi < b.xi; });
}

// Negative of the form restricted to the saturated H^⊥, with its basis.
std::pair<IntMatrix, RatMatrix> orthogonal_definite_part(const IntVec& h, const Lattice& ns) {
    IntMatrix k = orthogonal_complement(ns.gram(), IntMatrix::from_rows({h}));
    IntMatrix g = congruence(k, ns.gram());
    RatMatrix p(g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            p(i, j) = Rat(-g(i, j));
    return {std::move(k), std::move(p)};
}

std::vector<IntVec> short_vectors_hyperbolic(const RatMatrix& gram, const Rat& bound) {
    try {
        return short_vectors(gram, bound);
    } catch (const PreconditionError&) {
        throw PreconditionError("NS lattice is not of signature (1, rho-1) along the polarization");
    }
}

} // namespace

Int wall_multiplicity(const MukaiVector& v, const Int& r0) {
    if (r0 < 1)
        throw ValidationError("r0 must be positive");
    if (v.r <= 0)
        throw PreconditionError("walls are defined only for positive rank");
    if (!mpz_divisible_p(v.r.get_mpz_t(), r0.get_mpz_t()))
        throw PreconditionError("r0 does not divide rk(v)");
    return v.r / r0;
}

Rat wall_bound(const Int& l, const Rat& v2) {
    const Rat lq(l);
    return lq * lq / 4 * (2 * lq * lq + v2);
}

Rat wall_bound(const MukaiVector& v, const Int& r0, const Lattice& ns) {
    return wall_bound(wall_multiplicity(v, r0), mukai_pairing(v, v, ns));
}

Generality is_general(const IntVec& h, const Lattice& ns, const Rat& bound) {
    require_positive(h, ns);
    Generality out;
    if (ns.rank() <= 1 || bound <= 0) {
        out.general = true;
        return out;
    }
    const auto [basis, definite] = orthogonal_definite_part(h, ns);
    for (const auto& y : short_vectors_hyperbolic(definite, bound)) {
        if (!is_primitive(y))
            continue;
        Wall w{vec_mat(std::span<const Int>(y), basis), 0, true};
        w.norm = -ns.pair(w.xi, w.xi);
        normalize_sign(w.xi, ns, h);
        out.witnesses.push_back(std::move(w));
    }
    sort_walls(out.witnesses);
    out.general = out.witnesses.empty();
    return out;
}

Generality is_general(const IntVec& h, const WallQuery& q) {
    return is_general(h, q.ns, wall_bound(q.v, q.r0, q.ns));
}

RatMatrix majorant_gram(const Lattice& ns, const IntVec& p) {
    const Int pp = ns.pair(p, p);
    if (pp <= 0)
        throw PreconditionError("majorant needs (P,P) > 0");
    const IntVec gp = mat_vec(ns.gram(), std::span<const Int>(p));
    RatMatrix q(ns.rank(), ns.rank());
    for (std::size_t i = 0; i < ns.rank(); ++i)
        for (std::size_t j = 0; j < ns.rank(); ++j)
            q(i, j) = Rat(2 * gp[i] * gp[j], pp) - Rat(ns.gram()(i, j));
    for (std::size_t i = 0; i < ns.rank(); ++i)
        for (std::size_t j = 0; j < ns.rank(); ++j)
            q(i, j).canonicalize();
    return q;
}

Rat majorant_radius(const Lattice& ns, const IntVec& h0, const IntVec& h1, const Rat& bound) {
    const Rat a(ns.pair(h0, h0)), b(ns.pair(h1, h1)), c(ns.pair(h0, h1));
    // (H_t,H_t) = a + 2t(c − a) + t²(a − 2c + b) on [0,1]
    Rat min_norm = std::min(a, b);
    const Rat curv = a - 2 * c + b;
    if (curv > 0) {
        const Rat t = (a - c) / curv;
        if (t > 0 && t < 1)
            min_norm = std::min(min_norm, Rat(a - (c - a) * (c - a) / curv));
    }
    // (H0,H_t)² is convex in t, so its maximum sits at an endpoint
    const Rat cs = 2 * std::max(Rat(a * a), Rat(c * c)) / min_norm - a;
    return bound + 2 * bound * cs / a;
}

std::vector<Wall> walls_between(const WallQuery& q) {
    validate(q);
    const Rat bound = wall_bound(q.v, q.r0, q.ns);
    std::vector<Wall> out;
    if (q.ns.rank() <= 1 || bound <= 0)
        return out;
    const Rat radius = majorant_radius(q.ns, q.h0, q.h1, bound);
    for (auto& xi : short_vectors_hyperbolic(majorant_gram(q.ns, q.h0), radius)) {
        if (!is_primitive(xi))
            continue;
        const Int norm = -q.ns.pair(xi, xi);
        if (norm <= 0 || Rat(norm) > bound)
            continue;
        const Int a = q.ns.pair(xi, q.h0), b = q.ns.pair(xi, q.h1);
        if (a * b > 0)
            continue;
        Wall w{std::move(xi), norm, a == 0 || b == 0};
        normalize_sign(w.xi, q.ns, q.h0);
        out.push_back(std::move(w));
    }
    sort_walls(out);
    return out;
}

bool same_chamber(const WallQuery& q) {
    if (!walls_between(q).empty())
        return false;
    const Rat bound = wall_bound(q.v, q.r0, q.ns);
    return is_general(q.h0, q.ns, bound).general && is_general(q.h1, q.ns, bound).general;
}

StrongGenerality strong_generality(const IntVec& h, const WallQuery& q) {
    require_positive(h, q.ns);
    const Rat bound = wall_bound(q.v, q.r0, q.ns);
    StrongGenerality out;
    if (q.ns.rank() <= 1) {
        out.holds = true;
        return out;
    }
    const auto [basis, definite] = orthogonal_definite_part(h, q.ns);
    // some basis vector attains its diagonal entry, so the minimum is below it
    Rat cap = definite(0, 0);
    for (std::size_t i = 1; i < definite.rows(); ++i)
        cap = std::min(cap, definite(i, i));
    for (const auto& y : short_vectors_hyperbolic(definite, cap)) {
        const Rat n = bilinear(definite, std::span<const Rat>(to_rational(y)), std::span<const Rat>(to_rational(y)));
        if (!out.min_norm || Rat(*out.min_norm) > n)
            out.min_norm = n.get_num();
    }
    out.holds = Rat(*out.min_norm) > bound;
    return out;
}

} // namespace k3twist
