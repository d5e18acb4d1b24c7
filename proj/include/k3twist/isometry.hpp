#pragma once

// Certified isometries between lattices, used as the cohomological shadow of
// Fourier–Mukai transforms, and the projection v^⊥ → v^⊥/ℤv for isotropic v.
//
// Matrices act on column coordinate vectors; an isometry M : S → T satisfies
// Mᵀ·G_T·M = G_S.

#include "k3twist/mukai.hpp"

namespace k3twist {

class Isometry {
public:
    // Throws ValidationError on shape mismatch and PreconditionError when the
    // Gram matrices are not intertwined.
    Isometry(RatMatrix matrix, Lattice source, Lattice target);

    static Isometry identity(const Lattice& l);

    const RatMatrix& matrix() const { return matrix_; }
    const Lattice& source() const { return source_; }
    const Lattice& target() const { return target_; }
    bool is_integral() const { return k3twist::is_integral(matrix_); }
    IntMatrix integer_matrix() const { return to_integer(matrix_); }

    RatVec apply(std::span<const Rat> x) const;

    friend bool operator==(const Isometry&, const Isometry&) = default;

private:
    RatMatrix matrix_;
    Lattice source_;
    Lattice target_;
};

Isometry make_isometry(RatMatrix matrix, Lattice source, Lattice target);

// Matrix of v ↦ e^B·v in Mukai coordinates (r, c..., s) over h2.
RatMatrix exp_twist_matrix(std::span<const Rat> b, const Lattice& h2);
Isometry twist_isometry(std::span<const Rat> b, const Lattice& h2);

// (r, c, s) ↦ (r, −c, s) on a lattice in Mukai ordering.
Isometry duality(const Lattice& mukai_ambient);

// g ∘ f; throws ValidationError unless f.target() == g.source().
Isometry compose(const Isometry& g, const Isometry& f);

// ⟨x, ψ(y)⟩ = ⟨ψ^∨(x), y⟩ for all basis vectors, ψ : L′ → L, ψ^∨ : L → L′.
bool adjoint_check(const Isometry& psi, const Isometry& psi_dual);

struct ThetaProjection {
    Lattice quotient;       // v^⊥/ℤv
    IntMatrix complement;   // saturated basis of v^⊥ (rows, ambient coordinates)
    IntMatrix lift;         // quotient basis lifted to v^⊥ (rows, ambient coordinates)
    IntMatrix projection;   // complement coordinates → quotient coordinates

    // Quotient coordinates of x ∈ v^⊥; throws PreconditionError otherwise.
    IntVec project(std::span<const Int> x) const;
};

// Requires ⟨v,v⟩ = 0 and v primitive.
ThetaProjection theta_projection(const IntVec& v, const Lattice& ambient);

struct BrauerWitness;

// e^{−N} on H*(X,ℤ) for equivalent lifts (ξ,r) ~ (ξ′,r′), certified to
// intertwine the two twisted structures (see twist_comparison_isometry).
Isometry hodge_isometry_between_twists(const BField& b, const BField& b2, const BrauerWitness& w,
                                       const Sublattice& ns);

} // namespace k3twist
