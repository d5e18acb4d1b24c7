#include "k3twist/moduli.hpp"

#include <stdexcept>

namespace k3twist {

ModuliReport moduli_report(const MukaiVector& v, const BField& b, const Sublattice& ns, const IntVec& h,
                           bool assume_general) {
    const Lattice& h2 = ns.ambient;
    b.validate(h2.rank());
    if (v.c.size() != h2.rank())
        throw ValidationError("Mukai vector class must be given in H2 coordinates");
    if (h.size() != ns.rank())
        throw ValidationError("polarization must be given in NS coordinates");
    if (!h2.is_even())
        throw PreconditionError("H2 lattice must be even");
    if (v.r <= 0)
        throw PreconditionError("moduli report requires rk(v) > 0");
    const MukaiCheck chk = is_mukai_vector(v, b, ns);
    if (!chk.valid)
        throw PreconditionError("v is not a Mukai vector for this B-field and NS");
    if (!chk.primitive)
        throw PreconditionError("v is not primitive");

    const Rat v2 = mukai_pairing(v, v, h2);
    if (v2.get_den() != 1 || !mpz_even_p(v2.get_num_mpz_t()))
        throw std::logic_error("<v,v> is not an even integer on an even lattice");

    ModuliReport out;
    out.general_polarization_assumed = assume_general;
    if (!assume_general) {
        const Sublattice sat = saturate_ns(ns).ns;
        const IntVec h_ambient = vec_mat(std::span<const Int>(h), ns.basis);
        const IntVec h_sat = *solve_in_row_span(sat.basis, h_ambient);
        const Int l = wall_multiplicity(v, brauer_order(b, ns));
        const Generality g = is_general(h_sat, Lattice(sublattice_gram(sat)), wall_bound(l, v2));
        if (!g.general)
            throw PreconditionError("polarization is not general: it lies on " + std::to_string(g.witnesses.size()) +
                                    " wall(s)");
    }
    out.pairing_square = v2.get_num();
    out.dim = out.pairing_square + 2;
    out.nonempty = out.pairing_square >= -2;
    out.is_k3 = out.pairing_square == 0;
    if (out.nonempty)
        out.hilb_n = out.pairing_square / 2 + 1;
    return out;
}

Lattice beauville_lattice(const IntVec& v, const Lattice& ambient) {
    if (v.size() != ambient.rank())
        throw ValidationError("vector length does not match the ambient rank");
    if (!is_primitive(v))
        throw PreconditionError("Beauville lattice requires a primitive vector");
    const Int v2 = ambient.pair(v, v);
    if (v2 < 0)
        throw PreconditionError("Beauville lattice requires <v,v> >= 0");
    if (v2 == 0)
        return theta_projection(v, ambient).quotient;
    const IntMatrix c = orthogonal_complement(ambient.gram(), IntMatrix::from_rows({v}));
    return Lattice(congruence(c, ambient.gram()));
}

Lattice algebraic_beauville(const MukaiVector& v, const Lattice& ns) {
    const auto coords = v.integral_coordinates();
    if (!coords || v.c.size() != ns.rank())
        throw PreconditionError("v must be an integral vector of H0 + NS + H4");
    return beauville_lattice(*coords, mukai_extension(ns));
}

Lattice algebraic_beauville(const MukaiVector& v, const BField& b, const Sublattice& ns) {
    const MukaiCheck chk = is_mukai_vector(v, b, ns);
    if (!chk.valid)
        throw PreconditionError("v is not a Mukai vector for this B-field and NS");
    if (!chk.primitive)
        throw PreconditionError("v is not primitive");
    const Lattice& h2 = ns.ambient;
    const std::size_t n = h2.rank();
    const IntVec u = *exp_twist(v, b.twist(), h2).integral_coordinates();

    // x is algebraic for the twisted structure iff x_c − (x_r/r)·ξ ∈ NS⊗ℚ,
    // i.e. k·(r·x_c − x_r·ξ) = 0 for every k annihilating NS.
    const IntMatrix annihilator = kernel_basis(ns.basis);
    IntMatrix constraints(annihilator.rows(), n + 2);
    for (std::size_t i = 0; i < annihilator.rows(); ++i) {
        Int kxi = 0;
        for (std::size_t j = 0; j < n; ++j) {
            kxi += annihilator(i, j) * b.xi[j];
            constraints(i, j + 1) = b.r * annihilator(i, j);
        }
        constraints(i, 0) = -kxi;
    }
    const IntMatrix algebraic =
        constraints.rows() == 0 ? IntMatrix::identity(n + 2) : kernel_basis(constraints);
    const Lattice mukai = mukai_extension(h2);
    const auto a = solve_in_row_span(algebraic, u);
    if (!a)
        throw std::logic_error("untwisted Mukai vector is not algebraic");
    return beauville_lattice(*a, Lattice(congruence(algebraic, mukai.gram())));
}

} // namespace k3twist
