#pragma once

// Brauer classes represented by B-field lifts (ξ, r): their order, the
// equivalence test r′ξ − rξ′ = L + rr′N with L ∈ NS, N ∈ H², and the
// resulting comparison between the twisted Mukai lattices.

#include "k3twist/isometry.hpp"

namespace k3twist {

// Witness for δ′[ξ mod r] = δ′[ξ′ mod r′]: r′ξ − rξ′ = L + rr′N.
struct BrauerWitness {
    IntVec l; // in H² coordinates, lies in NS
    IntVec n; // in H² coordinates

    friend bool operator==(const BrauerWitness&, const BrauerWitness&) = default;
};

// NS saturated inside its ambient H², and whether saturation changed it.
struct SaturatedNs {
    Sublattice ns;
    bool changed = false;
};
SaturatedNs saturate_ns(const Sublattice& ns);

// Smallest k ≥ 1 with k·ξ ∈ NS + r·H².
Int brauer_order(const BField& b, const Sublattice& ns);

std::optional<BrauerWitness> brauer_equivalent(const BField& b, const BField& b2, const Sublattice& ns);

bool is_valid_witness(const BField& b, const BField& b2, const BrauerWitness& w, const Sublattice& ns);

// The commuting square T_{−ξ′/r′}∘e^{−N} = e^{L/rr′}∘T_{−ξ/r}.
struct TwistComparison {
    Isometry integral; // e^{−N} on H*(X,ℤ), intertwining the two twisted Hodge structures
    Isometry rational; // e^{L/rr′}, carrying T_{−ξ/r}(H*ℤ) onto T_{−ξ′/r′}(H*ℤ)
};

// Throws PreconditionError for an invalid witness; std::logic_error if the
// square fails to commute on the lattice basis.
TwistComparison twist_comparison_isometry(const BField& b, const BField& b2, const BrauerWitness& w,
                                          const Sublattice& ns);

struct MukaiCheck {
    bool valid = false;
    bool primitive = false;
};
// v ∈ T_{−ξ/r}(H*ℤ) with class component in NS⊗ℚ; primitivity is that of
// e^{ξ/r}·v.
MukaiCheck is_mukai_vector(const MukaiVector& v, const BField& b, const Sublattice& ns);

} // namespace k3twist
