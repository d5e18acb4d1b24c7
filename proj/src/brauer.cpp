#include "k3twist/brauer.hpp"

#include <stdexcept>

namespace k3twist {

namespace {

// Rows: NS basis followed by m·(standard basis of H²).
IntMatrix ns_plus_multiple(const Sublattice& ns, const Int& m) {
    const std::size_t n = ns.ambient.rank();
    IntMatrix out = ns.basis;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n);
        e[i] = m;
        out.append_row(e);
    }
    return out;
}

RatVec scaled(std::span<const Int> x, const Rat& k) {
    RatVec out;
    out.reserve(x.size());
    for (const auto& v : x)
        out.push_back(Rat(v) * k);
    return out;
}

} // namespace

SaturatedNs saturate_ns(const Sublattice& ns) {
    if (ns.is_primitive())
        return {ns, false};
    return {ns.saturated(), true};
}

Int brauer_order(const BField& b, const Sublattice& ns_in) {
    const Sublattice ns = saturate_ns(ns_in).ns;
    b.validate(ns.ambient.rank());
    const std::size_t n = ns.ambient.rank();
    if (n == 0)
        return 1;
    // H²/(NS + r·H²) ≅ ⊕ ℤ/dᵢ through the Smith form of an HNF basis h:
    // x ∈ NS + rH² iff dᵢ | (x·v)ᵢ for every i.
    const HermiteForm hf = hermite_form(ns_plus_multiple(ns, b.r));
    IntMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = hf.h(i, j);
    const SmithForm sf = smith_form(h);
    const IntVec xv = vec_mat(std::span<const Int>(b.xi), sf.v);
    Int order = 1;
    const auto d = sf.diagonal();
    for (std::size_t i = 0; i < n; ++i) {
        Int g;
        mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), xv[i].get_mpz_t());
        const Int part = d[i] / g;
        mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), part.get_mpz_t());
    }
    return order;
}

std::optional<BrauerWitness> brauer_equivalent(const BField& b, const BField& b2, const Sublattice& ns_in) {
    const Sublattice ns = saturate_ns(ns_in).ns;
    const std::size_t n = ns.ambient.rank();
    b.validate(n);
    b2.validate(n);
    IntVec target(n);
    for (std::size_t i = 0; i < n; ++i)
        target[i] = b2.r * b.xi[i] - b.r * b2.xi[i];
    const auto coeffs = solve_in_row_span(ns_plus_multiple(ns, b.r * b2.r), target);
    if (!coeffs)
        return std::nullopt;

    BrauerWitness w{IntVec(n), IntVec(n)};
    for (std::size_t k = 0; k < ns.rank(); ++k)
        for (std::size_t j = 0; j < n; ++j)
            w.l[j] += (*coeffs)[k] * ns.basis(k, j);
    for (std::size_t j = 0; j < n; ++j)
        w.n[j] = (*coeffs)[ns.rank() + j];
    return w;
}

bool is_valid_witness(const BField& b, const BField& b2, const BrauerWitness& w, const Sublattice& ns) {
    const std::size_t n = ns.ambient.rank();
    b.validate(n);
    b2.validate(n);
    if (w.l.size() != n || w.n.size() != n)
        return false;
    for (std::size_t i = 0; i < n; ++i)
        if (b2.r * b.xi[i] - b.r * b2.xi[i] != w.l[i] + b.r * b2.r * w.n[i])
            return false;
    return solve_in_row_span(saturate_ns(ns).ns.basis, w.l).has_value();
}

TwistComparison twist_comparison_isometry(const BField& b, const BField& b2, const BrauerWitness& w,
                                          const Sublattice& ns) {
    if (!is_valid_witness(b, b2, w, ns))
        throw PreconditionError("invalid Brauer witness: r'xi - r xi' != L + r r' N with L in NS");
    const Lattice& h2 = ns.ambient;
    TwistComparison out{twist_isometry(scaled(w.n, Rat(-1)), h2),
                        twist_isometry(scaled(w.l, Rat(1) / Rat(b.r * b2.r)), h2)};

    const RatMatrix left = out.rational.matrix() * exp_twist_matrix(scaled(b.xi, Rat(-1) / Rat(b.r)), h2);
    const RatMatrix right = exp_twist_matrix(scaled(b2.xi, Rat(-1) / Rat(b2.r)), h2) * out.integral.matrix();
    if (left != right)
        throw std::logic_error("twist comparison square does not commute");
    return out;
}

MukaiCheck is_mukai_vector(const MukaiVector& v, const BField& b, const Sublattice& ns) {
    const Lattice& h2 = ns.ambient;
    b.validate(h2.rank());
    if (v.c.size() != h2.rank())
        throw ValidationError("Mukai vector class must be given in H2 coordinates");
    const auto untwisted = exp_twist(v, b.twist(), h2).integral_coordinates();
    MukaiCheck out;
    out.valid = untwisted.has_value() && in_rational_span(ns.basis, v.c);
    out.primitive = out.valid && is_primitive(*untwisted);
    return out;
}

} // namespace k3twist
