#pragma once

// Integral lattices given by Gram matrices, the standard K3 and Mukai
// lattices, and sublattices described by a basis in ambient coordinates.

#include <string>

#include "k3twist/linalg.hpp"

namespace k3twist {

class Lattice {
public:
    Lattice() = default;
    // Throws ValidationError unless gram is square and symmetric.
    explicit Lattice(IntMatrix gram, std::string name = {});

    const IntMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }
    const std::string& name() const { return name_; }
    bool is_even() const;
    bool is_unimodular() const;

    Int pair(std::span<const Int> x, std::span<const Int> y) const;
    Rat pair(std::span<const Rat> x, std::span<const Rat> y) const;

    // Equality is by Gram matrix; names are labels only.
    friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

private:
    IntMatrix gram_;
    std::string name_;
};

Lattice hyperbolic_plane();
// Negative of the E8 Cartan matrix (Bourbaki labelling: 1-3-4-5-6-7-8 chain,
// node 2 attached to node 4).
Lattice e8_minus();
Lattice rank_one(const Int& n);
Lattice direct_sum(const Lattice& a, const Lattice& b);

// U⊕U⊕U⊕E8(−1)⊕E8(−1), rank 22.
Lattice k3_lattice();

// H⁰ ⊕ H² ⊕ H⁴ with basis (H⁰ generator, H² basis..., H⁴ generator) and
// pairing ⟨(r,c,s),(r′,c′,s′)⟩ = (c,c′) − r·s′ − r′·s.
Lattice mukai_extension(const Lattice& h2);
// mukai_extension(k3_lattice()), rank 24.
Lattice mukai_lattice();

struct Sublattice {
    Lattice ambient;
    IntMatrix basis; // rows are ambient coordinates

    // Throws ValidationError for a dependent basis or a width mismatch.
    Sublattice(Lattice ambient, IntMatrix basis);

    std::size_t rank() const { return basis.rows(); }
    bool is_primitive() const;
    // Same rational span, primitive closure.
    Sublattice saturated() const;
};

// B·G·Bᵀ
IntMatrix sublattice_gram(const Sublattice& s);

} // namespace k3twist
