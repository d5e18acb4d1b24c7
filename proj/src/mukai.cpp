#include "k3twist/mukai.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3twist {

namespace {

void require_rank(const MukaiVector& v, const Lattice& ns) {
    if (v.c.size() != ns.rank())
        throw ValidationError("Mukai vector class has " + std::to_string(v.c.size()) +
                              " coordinates but the lattice has rank " + std::to_string(ns.rank()));
}

std::strong_ordering order_of(const Rat& a, const Rat& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

} // namespace

MukaiVector MukaiVector::integral(const Int& r, const IntVec& c, const Int& s) {
    return {r, to_rational(c), Rat(s)};
}

MukaiVector MukaiVector::from_coordinates(std::span<const Rat> coords) {
    if (coords.size() < 2)
        throw ValidationError("Mukai coordinates need at least the H0 and H4 entries");
    if (coords.front().get_den() != 1)
        throw ValidationError("Mukai vector rank must be an integer");
    return {coords.front().get_num(), RatVec(coords.begin() + 1, coords.end() - 1), coords.back()};
}

MukaiVector MukaiVector::from_coordinates(std::span<const Int> coords) {
    const RatVec q(coords.begin(), coords.end());
    return from_coordinates(q);
}

RatVec MukaiVector::coordinates() const {
    RatVec out;
    out.reserve(c.size() + 2);
    out.emplace_back(r);
    out.insert(out.end(), c.begin(), c.end());
    out.push_back(s);
    return out;
}

std::optional<IntVec> MukaiVector::integral_coordinates() const {
    return integral_vector(coordinates());
}

bool MukaiVector::is_zero() const {
    return r == 0 && s == 0 && std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    if (a.c.size() != b.c.size())
        throw ValidationError("Mukai vectors of different class rank");
    MukaiVector out = a;
    out.r += b.r;
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] += b.c[i];
    out.s += b.s;
    return out;
}

MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
    return a + Int(-1) * b;
}

MukaiVector operator*(const Int& k, const MukaiVector& v) {
    MukaiVector out = v;
    out.r *= k;
    for (auto& x : out.c)
        x *= Rat(k);
    out.s *= Rat(k);
    return out;
}

void BField::validate(std::size_t h2_rank) const {
    if (r < 1)
        throw ValidationError("B-field denominator r must be positive");
    if (xi.size() != h2_rank)
        throw ValidationError("B-field class has " + std::to_string(xi.size()) +
                              " coordinates but H2 has rank " + std::to_string(h2_rank));
}

RatVec BField::twist() const {
    RatVec b;
    b.reserve(xi.size());
    for (const auto& x : xi)
        b.push_back(Rat(x, r));
    for (auto& q : b)
        q.canonicalize();
    return b;
}

Rat mukai_pairing(const MukaiVector& v, const MukaiVector& w, const Lattice& ns) {
    require_rank(v, ns);
    require_rank(w, ns);
    return ns.pair(v.c, w.c) - Rat(v.r) * w.s - Rat(w.r) * v.s;
}

MukaiVector exp_twist(const MukaiVector& v, std::span<const Rat> b, const Lattice& ns) {
    require_rank(v, ns);
    if (b.size() != ns.rank())
        throw ValidationError("B-field length does not match the lattice rank");
    MukaiVector out = v;
    const Rat r(v.r);
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] += r * b[i];
    out.s += ns.pair(b, v.c) + r * ns.pair(b, b) / 2;
    return out;
}

MukaiVector mukai_from_chern(const Int& r, const IntVec& c1, const Int& c2, const Lattice& ns,
                             SurfaceType surface) {
    if (r < 0)
        throw PreconditionError("rank must be non-negative");
    if (c1.size() != ns.rank())
        throw ValidationError("c1 length does not match the lattice rank");
    Rat s = Rat(ns.pair(c1, c1)) / 2 - Rat(c2);
    if (surface == SurfaceType::k3)
        s += Rat(r);
    return {r, to_rational(c1), s};
}

Untwisted untwist(const MukaiVector& v, const BField& b, const Int& rG, const Sublattice& ns_in_h2) {
    const Lattice& h2 = ns_in_h2.ambient;
    b.validate(h2.rank());
    if (rG != b.r)
        throw ValidationError("reference rank rG must equal the B-field denominator");
    Untwisted out;
    out.d_vector = exp_twist(v, b.twist(), h2);
    const auto coords = out.d_vector.integral_coordinates();
    out.integral = coords.has_value();
    if (!out.integral || v.r == 0)
        return out;

    const Int& rk = v.r;
    const IntVec d(coords->begin() + 1, coords->end() - 1);
    IntVec w;
    w.reserve(d.size());
    for (const auto& x : d)
        w.push_back(mod(x, abs(rk)));
    out.w_class = std::move(w);

    // ⟨v,v⟩ ≡ (D,D) mod 2·rk
    const Rat v2 = mukai_pairing(v, v, h2);
    const Rat diff = v2 - Rat(h2.pair(d, d));
    if (diff.get_den() != 1 || !mpz_divisible_p(diff.get_num_mpz_t(), Int(2 * rk).get_mpz_t()))
        throw std::logic_error("untwist: <v,v> is not congruent to (D,D) mod 2 rk");
    return out;
}

PrimitivePart primitive_part(const MukaiVector& v) {
    const auto coords = v.integral_coordinates();
    if (!coords)
        throw PreconditionError("primitive part requires an integral Mukai vector");
    const Int g = content(*coords);
    if (g == 0)
        throw PreconditionError("the zero vector has no primitive part");
    IntVec scaled;
    scaled.reserve(coords->size());
    for (const auto& x : *coords)
        scaled.push_back(x / g);
    return {MukaiVector::from_coordinates(scaled), g};
}

Int expected_c2_residue(const Int& r, const IntVec& w, const Lattice& ns) {
    if (r < 1)
        throw PreconditionError("rank must be positive");
    if (w.size() != ns.rank())
        throw ValidationError("w length does not match the lattice rank");
    // (w + r·u)² − w² = 2r(w,u) + r²(u,u); times (r−1) this vanishes mod 2r
    // unless r is even and (u,u) can be odd.
    if (mpz_even_p(r.get_mpz_t()) && !ns.is_even())
        throw PreconditionError("residue depends on the lift: even rank on an odd lattice");
    return mod(-(r - 1) * ns.pair(w, w), 2 * r);
}

ExtensionDefect extension_defect(const MukaiVector& v1, const MukaiVector& v2, const Int& l1, const Int& l2,
                                 const MukaiVector& vf1, const MukaiVector& vf2, const Lattice& ns) {
    if (l1 < 1 || l2 < 1)
        throw PreconditionError("multiplicities l1, l2 must be positive");
    for (const auto* x : {&v1, &v2, &vf1, &vf2})
        require_rank(*x, ns);
    // common v₀: l₂(v₁ − v_F₁) = l₁(v₂ − v_F₂)
    if (l2 * (v1 - vf1) != l1 * (v2 - vf2))
        throw ValidationError("inconsistent decomposition: (v1 - vF1)/l1 differs from (v2 - vF2)/l2");

    const Int l = l1 + l2;
    const MukaiVector v = v1 + v2;
    ExtensionDefect out;
    out.lhs = mukai_pairing(v1, v1, ns) / Rat(l1) + mukai_pairing(v2, v2, ns) / Rat(l2) -
              mukai_pairing(v, v, ns) / Rat(l);
    const MukaiVector diff = l2 * vf1 - l1 * vf2;
    out.rhs = mukai_pairing(diff, diff, ns) / Rat(l * l1 * l2);
    if (out.lhs != out.rhs)
        throw std::logic_error("extension defect: the two sides disagree");
    return out;
}

bool bogomolov_check(const MukaiVector& v, const Int& l, const Lattice& ns) {
    return mukai_pairing(v, v, ns) >= Rat(-2 * l * l);
}

void HilbertCoeffs::validate() const {
    if (d < 0)
        throw ValidationError("Hilbert polynomial dimension must be non-negative");
    if (a.size() != static_cast<std::size_t>(d) + 1)
        throw ValidationError("Hilbert polynomial needs d+1 coefficients");
    if (a.front() <= 0)
        throw PreconditionError("leading coefficient a_d must be positive");
}

std::strong_ordering stability_compare(const HilbertCoeffs& f, const HilbertCoeffs& e) {
    f.validate();
    e.validate();
    if (f.d != e.d)
        return f.d < e.d ? std::strong_ordering::less : std::strong_ordering::greater;
    // C(m+i, i) has degree i with positive leading coefficient, so the sign
    // for m ≫ 0 is that of the first differing normalized coefficient.
    for (std::size_t i = 1; i < f.a.size(); ++i) {
        const auto o = order_of(f.a[i] / f.leading(), e.a[i] / e.leading());
        if (o != std::strong_ordering::equal)
            return o;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering type_lambda_compare(const HilbertCoeffs& f, const HilbertCoeffs& e, const Rat& lambda) {
    f.validate();
    e.validate();
    if (f.d != e.d || f.d < 1)
        throw PreconditionError("type-lambda comparison needs equal dimension d >= 1");
    return order_of(f.a[1] / f.leading(), e.a[1] / e.leading() + lambda);
}

} // namespace k3twist
