#pragma once

// Mukai vectors (r, c, s) ∈ H⁰ ⊕ H²⊗ℚ ⊕ H⁴⊗ℚ, the Mukai pairing, B-field
// twists and the numerical identities relating twisted and untwisted data.
//
// A vector's class component c is expressed in the coordinates of whatever
// lattice it is paired with: an abstract Néron–Severi Gram matrix, or the
// full H² lattice when Brauer data is involved.

#include <compare>
#include <optional>

#include "k3twist/lattice.hpp"

namespace k3twist {

enum class SurfaceType { k3, abelian };

struct MukaiVector {
    Int r;
    RatVec c;
    Rat s;

    static MukaiVector integral(const Int& r, const IntVec& c, const Int& s);
    // (r, c..., s); r must be an integer.
    static MukaiVector from_coordinates(std::span<const Rat> coords);
    static MukaiVector from_coordinates(std::span<const Int> coords);

    std::size_t class_rank() const { return c.size(); }
    RatVec coordinates() const;
    std::optional<IntVec> integral_coordinates() const;
    bool is_integral() const { return integral_coordinates().has_value(); }
    bool is_zero() const;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
    friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b);
    friend MukaiVector operator-(const MukaiVector& a, const MukaiVector& b);
    friend MukaiVector operator*(const Int& k, const MukaiVector& v);
};

// A B-field lift ξ/r of a Brauer class, ξ integral in H² coordinates.
struct BField {
    IntVec xi;
    Int r = 1;

    // Throws ValidationError unless r ≥ 1.
    void validate(std::size_t h2_rank) const;
    RatVec twist() const; // ξ/r
};

Rat mukai_pairing(const MukaiVector& v, const MukaiVector& w, const Lattice& ns);

// e^B·v = (r, c + r·B, s + (B,c) + r·(B,B)/2)
MukaiVector exp_twist(const MukaiVector& v, std::span<const Rat> b, const Lattice& ns);

// ch·√td: (r, c₁, (c₁,c₁)/2 − c₂ + r) on a K3, (r, c₁, (c₁,c₁)/2 − c₂) on an
// abelian surface.
MukaiVector mukai_from_chern(const Int& r, const IntVec& c1, const Int& c2, const Lattice& ns,
                             SurfaceType surface = SurfaceType::k3);

struct Untwisted {
    MukaiVector d_vector;          // e^{ξ/r_G}·v = (rk, D, a)
    std::optional<IntVec> w_class; // D mod rk, when integral and rk ≠ 0
    bool integral = false;
};

// Untwists v by the B-field of the reference sheaf; rG must equal b.r. The
// class of v lives in the ambient H² of ns_in_h2.
Untwisted untwist(const MukaiVector& v, const BField& b, const Int& rG, const Sublattice& ns_in_h2);

struct PrimitivePart {
    MukaiVector primitive;
    Int content;
};
// Throws PreconditionError for zero or non-integral v.
PrimitivePart primitive_part(const MukaiVector& v);

// −(r−1)(w,w) mod 2r in [0, 2r). Throws PreconditionError when the residue
// would depend on the lift of w (r even on an odd lattice).
Int expected_c2_residue(const Int& r, const IntVec& w, const Lattice& ns);

struct ExtensionDefect {
    Rat lhs; // ⟨v₁²⟩/l₁ + ⟨v₂²⟩/l₂ − ⟨v²⟩/l
    Rat rhs; // ⟨(l₂·v_F₁ − l₁·v_F₂)²⟩ / (l·l₁·l₂)
};
// Throws ValidationError when (v₁ − v_F₁)/l₁ ≠ (v₂ − v_F₂)/l₂, and
// std::logic_error if the two sides disagree.
ExtensionDefect extension_defect(const MukaiVector& v1, const MukaiVector& v2, const Int& l1, const Int& l2,
                                 const MukaiVector& vf1, const MukaiVector& vf2, const Lattice& ns);

// ⟨v,v⟩ ≥ −2l²
bool bogomolov_check(const MukaiVector& v, const Int& l, const Lattice& ns);

// χ(m) = Σ aᵢ·C(m+i, i); coefficients stored from a_d down to a_0.
struct HilbertCoeffs {
    int d = 0;
    std::vector<Rat> a;

    const Rat& leading() const { return a.front(); }
    void validate() const;
};

// Order of χ_F/a_d(F) against χ_E/a_d(E) for m ≫ 0. A sheaf of lower
// dimension compares as less.
std::strong_ordering stability_compare(const HilbertCoeffs& f, const HilbertCoeffs& e);

// a_{d−1}(F)/a_d(F) against a_{d−1}(E)/a_d(E) + λ; F is of type λ relative
// to E when the result is not greater.
std::strong_ordering type_lambda_compare(const HilbertCoeffs& f, const HilbertCoeffs& e, const Rat& lambda);

} // namespace k3twist
