#pragma once

// Walls W_ξ = {L : (ξ,L) = 0} in the ample cone for a Mukai vector v, with
// ξ ∈ NS primitive and 0 < −(ξ,ξ) ≤ (l²/4)(2l² + ⟨v,v⟩), l = rk(v)/r₀.

#include "k3twist/mukai.hpp"

namespace k3twist {

struct Wall {
    IntVec xi;
    Int norm; // −(ξ,ξ)
    bool on_endpoint = false;

    friend bool operator==(const Wall&, const Wall&) = default;
};

struct WallQuery {
    Lattice ns;    // signature (1, ρ−1)
    MukaiVector v; // class in NS coordinates
    Int r0;        // order of the Brauer class
    IntVec h0;
    IntVec h1;
};

// l = rk(v)/r0. Throws PreconditionError if rk(v) = 0 or r0 ∤ rk(v).
Int wall_multiplicity(const MukaiVector& v, const Int& r0);
Rat wall_bound(const Int& l, const Rat& v2);
Rat wall_bound(const MukaiVector& v, const Int& r0, const Lattice& ns);

struct Generality {
    bool general = false;
    std::vector<Wall> witnesses;
};
// Walls through H. Throws PreconditionError if (H,H) ≤ 0 or NS ∩ H^⊥ is not
// negative definite.
Generality is_general(const IntVec& h, const Lattice& ns, const Rat& bound);
Generality is_general(const IntVec& h, const WallQuery& q);

// Walls meeting the segment [H0, H1], sign-normalized and sorted.
std::vector<Wall> walls_between(const WallQuery& q);

bool same_chamber(const WallQuery& q);

struct StrongGenerality {
    bool holds = false;
    std::optional<Int> min_norm; // min −(D,D) over nonzero D ∈ NS ∩ H^⊥
};
StrongGenerality strong_generality(const IntVec& h, const WallQuery& q);

// Rational bound on −(ξ,ξ) + 2(ξ,H0)²/(H0,H0) valid for every wall vector
// ξ meeting [H0,H1] with −(ξ,ξ) ≤ bound.
Rat majorant_radius(const Lattice& ns, const IntVec& h0, const IntVec& h1, const Rat& bound);

// Gram of q_P(x) = 2(x,P)²/(P,P) − (x,x), positive definite when (P,P) > 0
// and ns is hyperbolic.
RatMatrix majorant_gram(const Lattice& ns, const IntVec& p);

} // namespace k3twist
