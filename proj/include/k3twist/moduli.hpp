#pragma once

// Numerical invariants of moduli of twisted stable sheaves with a primitive
// Mukai vector v, and the lattice v^⊥ (or v^⊥/ℤv) carrying H² of the moduli
// space.

#include "k3twist/brauer.hpp"
#include "k3twist/walls.hpp"

namespace k3twist {

struct ModuliReport {
    Int pairing_square; // ⟨v,v⟩
    Int dim;            // ⟨v,v⟩ + 2
    bool nonempty = false;
    bool is_k3 = false;
    std::optional<Int> hilb_n;
    bool general_polarization_assumed = false;
};

// v has its class in H² coordinates of ns.ambient; h is a polarization in
// NS coordinates (w.r.t. ns.basis). Unless assume_general is set, h must be
// general for v. Throws PreconditionError when v is not a primitive Mukai
// vector, rk(v) ≤ 0, or h lies on a wall.
ModuliReport moduli_report(const MukaiVector& v, const BField& b, const Sublattice& ns, const IntVec& h,
                           bool assume_general = false);

// v^⊥ when ⟨v,v⟩ > 0, v^⊥/ℤv when ⟨v,v⟩ = 0. v is given in ambient
// coordinates and must be primitive.
Lattice beauville_lattice(const IntVec& v, const Lattice& ambient);

// Same construction inside the algebraic part of the twisted Mukai lattice
// (abstract NS: H⁰ ⊕ NS ⊕ H⁴ with no twist).
Lattice algebraic_beauville(const MukaiVector& v, const Lattice& ns);
Lattice algebraic_beauville(const MukaiVector& v, const BField& b, const Sublattice& ns);

} // namespace k3twist
