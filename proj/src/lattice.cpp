#include "k3twist/lattice.hpp"

#include <utility>

namespace k3twist {

Lattice::Lattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
    if (!gram_.is_symmetric())
        throw ValidationError("Gram matrix must be square and symmetric");
}

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (!mpz_even_p(gram_(i, i).get_mpz_t()))
            return false;
    return true;
}

bool Lattice::is_unimodular() const {
    return abs(determinant(gram_)) == 1;
}

Int Lattice::pair(std::span<const Int> x, std::span<const Int> y) const {
    if (x.size() != rank() || y.size() != rank())
        throw ValidationError("vector length does not match lattice rank");
    return bilinear(gram_, x, y);
}

Rat Lattice::pair(std::span<const Rat> x, std::span<const Rat> y) const {
    if (x.size() != rank() || y.size() != rank())
        throw ValidationError("vector length does not match lattice rank");
    Rat acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0)
            continue;
        Rat row = 0;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (gram_(i, j) != 0)
                row += Rat(gram_(i, j)) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Lattice hyperbolic_plane() {
    return Lattice(IntMatrix{{0, 1}, {1, 0}}, "U");
}

Lattice e8_minus() {
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        g(i, i) = -2;
    // edges of the Dynkin diagram, 0-based
    const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges) {
        g(a, b) = 1;
        g(b, a) = 1;
    }
    return Lattice(std::move(g), "E8(-1)");
}

Lattice rank_one(const Int& n) {
    return Lattice(IntMatrix{{n}}, "<" + n.get_str() + ">");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    const std::size_t n = a.rank(), m = b.rank();
    IntMatrix g(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            g(n + i, n + j) = b.gram()(i, j);
    std::string name;
    if (!a.name().empty() && !b.name().empty())
        name = a.name() + "+" + b.name();
    return Lattice(std::move(g), std::move(name));
}

Lattice k3_lattice() {
    const Lattice u = hyperbolic_plane();
    const Lattice e8 = e8_minus();
    Lattice k3 = direct_sum(direct_sum(direct_sum(direct_sum(u, u), u), e8), e8);
    return Lattice(k3.gram(), "K3");
}

Lattice mukai_extension(const Lattice& h2) {
    const std::size_t n = h2.rank();
    IntMatrix g(n + 2, n + 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i + 1, j + 1) = h2.gram()(i, j);
    g(0, n + 1) = -1;
    g(n + 1, 0) = -1;
    return Lattice(std::move(g), h2.name().empty() ? std::string{} : "Mukai(" + h2.name() + ")");
}

Lattice mukai_lattice() {
    return Lattice(mukai_extension(k3_lattice()).gram(), "Mukai");
}

Sublattice::Sublattice(Lattice amb, IntMatrix b) : ambient(std::move(amb)), basis(std::move(b)) {
    if (basis.rows() > 0 && basis.cols() != ambient.rank())
        throw ValidationError("sublattice basis width does not match the ambient rank");
    if (basis.rows() == 0)
        basis = IntMatrix(0, ambient.rank());
    if (k3twist::rank(basis) != basis.rows())
        throw ValidationError("sublattice basis is linearly dependent");
}

namespace {

IntMatrix canonical_basis(const IntMatrix& basis) {
    HermiteForm hf = hermite_form(basis);
    IntMatrix out(hf.rank, basis.cols());
    for (std::size_t i = 0; i < hf.rank; ++i)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            out(i, j) = hf.h(i, j);
    return out;
}

} // namespace

bool Sublattice::is_primitive() const {
    if (basis.rows() == 0)
        return true;
    return canonical_basis(basis) == saturate(basis);
}

Sublattice Sublattice::saturated() const {
    if (basis.rows() == 0)
        return *this;
    return Sublattice(ambient, saturate(basis));
}

IntMatrix sublattice_gram(const Sublattice& s) {
    return congruence(s.basis, s.ambient.gram());
}

} // namespace k3twist
