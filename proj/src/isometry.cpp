#include "k3twist/isometry.hpp"

#include "k3twist/brauer.hpp"

#include <stdexcept>

namespace k3twist {

Isometry::Isometry(RatMatrix matrix, Lattice source, Lattice target)
    : matrix_(std::move(matrix)), source_(std::move(source)), target_(std::move(target)) {
    if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
        throw ValidationError("isometry matrix shape does not match source/target ranks");
    if (!matrix_.is_square())
        throw ValidationError("isometry matrix must be square");
    if (matrix_.transpose() * to_rational(target_.gram()) * matrix_ != to_rational(source_.gram()))
        throw PreconditionError("matrix does not intertwine the Gram matrices");
}

Isometry Isometry::identity(const Lattice& l) {
    return Isometry(RatMatrix::identity(l.rank()), l, l);
}

RatVec Isometry::apply(std::span<const Rat> x) const {
    return mat_vec(matrix_, x);
}

Isometry make_isometry(RatMatrix matrix, Lattice source, Lattice target) {
    return Isometry(std::move(matrix), std::move(source), std::move(target));
}

RatMatrix exp_twist_matrix(std::span<const Rat> b, const Lattice& h2) {
    const std::size_t n = h2.rank();
    if (b.size() != n)
        throw ValidationError("B-field length does not match the lattice rank");
    RatMatrix m = RatMatrix::identity(n + 2);
    const RatVec gb = mat_vec(to_rational(h2.gram()), b);
    for (std::size_t i = 0; i < n; ++i) {
        m(i + 1, 0) = b[i];
        m(n + 1, i + 1) = gb[i];
    }
    m(n + 1, 0) = h2.pair(b, b) / 2;
    return m;
}

Isometry twist_isometry(std::span<const Rat> b, const Lattice& h2) {
    const Lattice ambient = mukai_extension(h2);
    return Isometry(exp_twist_matrix(b, h2), ambient, ambient);
}

Isometry duality(const Lattice& mukai_ambient) {
    const std::size_t n = mukai_ambient.rank();
    if (n < 2)
        throw ValidationError("Mukai-ordered lattice needs rank at least 2");
    RatMatrix m = RatMatrix::identity(n);
    for (std::size_t i = 1; i + 1 < n; ++i)
        m(i, i) = -1;
    return Isometry(std::move(m), mukai_ambient, mukai_ambient);
}

Isometry compose(const Isometry& g, const Isometry& f) {
    if (!(f.target() == g.source()))
        throw ValidationError("cannot compose: target of f differs from source of g");
    return Isometry(g.matrix() * f.matrix(), f.source(), g.target());
}

bool adjoint_check(const Isometry& psi, const Isometry& psi_dual) {
    if (!(psi.target() == psi_dual.source()) || !(psi.source() == psi_dual.target()))
        return false;
    // G_L·ψ = (ψ^∨)ᵀ·G_L′
    const RatMatrix lhs = to_rational(psi.target().gram()) * psi.matrix();
    const RatMatrix rhs = psi_dual.matrix().transpose() * to_rational(psi.source().gram());
    if (lhs != rhs)
        return false;
    if (compose(psi, psi_dual).matrix() != RatMatrix::identity(psi.target().rank()))
        throw std::logic_error("adjoint pair does not compose to the identity");
    return true;
}

IntVec ThetaProjection::project(std::span<const Int> x) const {
    const auto y = solve_in_row_span(complement, x);
    if (!y)
        throw PreconditionError("vector is not orthogonal to v");
    return mat_vec(projection, std::span<const Int>(*y));
}

ThetaProjection theta_projection(const IntVec& v, const Lattice& ambient) {
    if (v.size() != ambient.rank())
        throw ValidationError("vector length does not match the ambient rank");
    if (ambient.pair(v, v) != 0)
        throw PreconditionError("theta projection requires an isotropic vector");
    if (!is_primitive(v))
        throw PreconditionError("theta projection requires a primitive vector");

    ThetaProjection out;
    out.complement = orthogonal_complement(ambient.gram(), IntMatrix::from_rows({v}));
    const auto a = solve_in_row_span(out.complement, v);
    if (!a || !is_primitive(*a))
        throw std::logic_error("isotropic v is not primitive in its saturated complement");

    // unimodular u with u·aᵀ = e₁; the rows of (u⁻¹)ᵀ start with a
    const std::size_t k = a->size();
    IntMatrix col(k, 1);
    for (std::size_t i = 0; i < k; ++i)
        col(i, 0) = (*a)[i];
    const HermiteForm hf = hermite_form(col);
    const IntMatrix w = to_integer(inverse(to_rational(hf.u))).transpose();
    const IntMatrix new_basis = w * out.complement;

    out.lift = IntMatrix(k - 1, ambient.rank());
    out.projection = IntMatrix(k - 1, k);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 0; j < ambient.rank(); ++j)
            out.lift(i - 1, j) = new_basis(i, j);
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.projection(i - 1, j) = hf.u(i, j);
    out.quotient = Lattice(congruence(out.lift, ambient.gram()));

    // the Gram matrix must not depend on the chosen lifts
    IntMatrix shifted = out.lift;
    for (std::size_t i = 0; i < shifted.rows(); ++i)
        for (std::size_t j = 0; j < shifted.cols(); ++j)
            shifted(i, j) += Int(static_cast<long>(i + 1)) * v[j];
    if (congruence(shifted, ambient.gram()) != out.quotient.gram())
        throw std::logic_error("quotient pairing depends on the choice of lift");
    return out;
}

Isometry hodge_isometry_between_twists(const BField& b, const BField& b2, const BrauerWitness& w,
                                       const Sublattice& ns) {
    return twist_comparison_isometry(b, b2, w, ns).integral;
}

} // namespace k3twist
