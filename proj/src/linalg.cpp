#include "k3twist/linalg.hpp"

#include <algorithm>
#include <functional>

namespace k3twist {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rat(m(i, j));
    return r;
}

RatVec to_rational(const IntVec& v) {
    return RatVec(v.begin(), v.end());
}

bool is_integral(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& x : m.row(i))
            if (x.get_den() != 1)
                return false;
    return true;
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw PreconditionError("matrix entry is not an integer");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

std::optional<IntVec> integral_vector(const RatVec& v) {
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (x.get_den() != 1)
            return std::nullopt;
        out.push_back(x.get_num());
    }
    return out;
}

Int content(std::span<const Int> v) {
    Int g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

bool is_primitive(std::span<const Int> v) {
    return content(v) == 1;
}

namespace {

// row_a <- x·row_a + y·row_b, row_b <- p·row_a + q·row_b (simultaneously)
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Int& x, const Int& y,
                  const Int& p, const Int& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Int ra = m(a, j);
        Int rb = m(b, j);
        m(a, j) = x * ra + y * rb;
        m(b, j) = p * ra + q * rb;
    }
}

// row_dst -= k·row_src
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) -= k * m(src, j);
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0)
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) -= k * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (auto& x : m.row(i))
        x = -x;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Reduce v modulo the row lattice of an echelon basis so that every pivot
// coordinate lands in [0, pivot).
void reduce_mod_echelon(std::span<Int> v, const IntMatrix& echelon) {
    std::size_t col = 0;
    for (std::size_t i = 0; i < echelon.rows(); ++i) {
        while (col < echelon.cols() && echelon(i, col) == 0)
            ++col;
        if (col == echelon.cols())
            break;
        Int q = floor_div(v[col], echelon(i, col));
        if (q != 0)
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] -= q * echelon(i, j);
    }
}

IntMatrix top_rows(const IntMatrix& m, std::size_t n) {
    IntMatrix out(n, m.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j);
    return out;
}

IntMatrix bottom_rows(const IntMatrix& m, std::size_t from) {
    IntMatrix out(m.rows() - from, m.cols());
    for (std::size_t i = from; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i - from, j) = m(i, j);
    return out;
}

} // namespace

HermiteForm hermite_form(const IntMatrix& m) {
    HermiteForm res{m, IntMatrix::identity(m.rows()), 0};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < h.cols() && pr < h.rows(); ++col) {
        for (std::size_t i = pr + 1; i < h.rows(); ++i) {
            if (h(i, col) == 0)
                continue;
            Int a = h(pr, col), b = h(i, col), g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int p = -b / g, q = a / g;
            combine_rows(h, pr, i, x, y, p, q);
            combine_rows(u, pr, i, x, y, p, q);
        }
        if (h(pr, col) == 0)
            continue;
        if (h(pr, col) < 0) {
            negate_row(h, pr);
            negate_row(u, pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
            Int k = floor_div(h(i, col), h(pr, col));
            sub_row(h, i, pr, k);
            sub_row(u, i, pr, k);
        }
        ++pr;
    }
    res.rank = pr;
    return res;
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
        d.push_back(s(i, i));
    return d;
}

SmithForm smith_form(const IntMatrix& m) {
    SmithForm res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& s = res.s;
    const std::size_t n = std::min(s.rows(), s.cols());
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < s.rows(); ++i)
                for (std::size_t j = t; j < s.cols(); ++j)
                    if (s(i, j) != 0 && (!best || abs(s(i, j)) < abs(s(best->first, best->second))))
                        best = {i, j};
            if (!best)
                return res;
            s.swap_rows(t, best->first);
            res.u.swap_rows(t, best->first);
            s.swap_cols(t, best->second);
            res.v.swap_cols(t, best->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                Int k = floor_div(s(i, t), s(t, t));
                sub_row(s, i, t, k);
                sub_row(res.u, i, t, k);
                clean = clean && s(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                Int k = floor_div(s(t, j), s(t, t));
                sub_col(s, j, t, k);
                sub_col(res.v, j, t, k);
                clean = clean && s(t, j) == 0;
            }
            if (!clean)
                continue;

            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < s.rows() && !bad_row; ++i)
                for (std::size_t j = t + 1; j < s.cols(); ++j)
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            sub_row(s, t, *bad_row, Int(-1));
            sub_row(res.u, t, *bad_row, Int(-1));
        }
        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(res.u, t);
        }
    }
    return res;
}

std::size_t rank(const IntMatrix& m) {
    return hermite_form(m).rank;
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square())
        throw ValidationError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // fraction-free Bareiss elimination
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square())
        throw ValidationError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw PreconditionError("matrix is singular");
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        Rat piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0)
                continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    // x·mᵀ = 0  ⇔  m·x = 0; relation rows of the transposed HNF span it.
    HermiteForm hf = hermite_form(m.transpose());
    IntMatrix rel = bottom_rows(hf.u, hf.rank);
    if (rel.rows() == 0)
        return IntMatrix(0, m.cols());
    HermiteForm canon = hermite_form(rel);
    return top_rows(canon.h, canon.rank);
}

IntMatrix saturate(const IntMatrix& basis) {
    if (basis.rows() == 0)
        return IntMatrix(0, basis.cols());
    return kernel_basis(kernel_basis(basis));
}

std::optional<IntVec> solve_in_row_span(const IntMatrix& basis, std::span<const Int> target) {
    if (target.size() != basis.cols())
        throw ValidationError("target length does not match basis width");
    HermiteForm hf = hermite_form(basis);
    IntVec t(target.begin(), target.end());
    IntVec y(hf.rank);
    std::size_t col = 0;
    for (std::size_t i = 0; i < hf.rank; ++i) {
        while (hf.h(i, col) == 0)
            ++col;
        if (!mpz_divisible_p(t[col].get_mpz_t(), hf.h(i, col).get_mpz_t()))
            return std::nullopt;
        y[i] = t[col] / hf.h(i, col);
        for (std::size_t j = 0; j < t.size(); ++j)
            t[j] -= y[i] * hf.h(i, j);
    }
    if (std::any_of(t.begin(), t.end(), [](const Int& x) { return x != 0; }))
        return std::nullopt;

    IntVec c(basis.rows());
    for (std::size_t i = 0; i < hf.rank; ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] += y[i] * hf.u(i, j);
    if (hf.rank < basis.rows()) {
        HermiteForm rel = hermite_form(bottom_rows(hf.u, hf.rank));
        reduce_mod_echelon(c, top_rows(rel.h, rel.rank));
    }
    return c;
}

namespace {

IntVec clear_denominators(std::span<const Rat> v) {
    Int l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(x.get_num() * (l / x.get_den()));
    return out;
}

} // namespace

bool in_rational_span(const IntMatrix& basis, std::span<const Rat> v) {
    if (v.size() != basis.cols())
        throw ValidationError("vector length does not match basis width");
    IntMatrix ext = basis;
    IntVec w = clear_denominators(v);
    ext.append_row(w);
    return rank(ext) == rank(basis);
}

std::optional<RatVec> rational_coordinates(const IntMatrix& basis, std::span<const Rat> v) {
    if (v.size() != basis.cols())
        throw ValidationError("vector length does not match basis width");
    const std::size_t k = basis.rows(), n = basis.cols();
    // solve basisᵀ·α = v by Gauss–Jordan on the augmented system
    RatMatrix a(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            a(i, j) = Rat(basis(j, i));
        a(i, k) = v[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw PreconditionError("basis rows are linearly dependent");
        a.swap_rows(r, p);
        Rat piv = a(r, c);
        for (std::size_t j = 0; j <= k; ++j)
            a(r, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || a(i, c) == 0)
                continue;
            Rat f = a(i, c);
            for (std::size_t j = 0; j <= k; ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivots.size() < k)
        throw PreconditionError("basis rows are linearly dependent");
    for (std::size_t i = r; i < n; ++i)
        if (a(i, k) != 0)
            return std::nullopt;
    RatVec alpha(k);
    for (std::size_t i = 0; i < k; ++i)
        alpha[pivots[i]] = a(i, k);
    return alpha;
}

Inertia signature(const RatMatrix& gram) {
    if (!gram.is_symmetric())
        throw ValidationError("signature requires a symmetric matrix");
    // congruence diagonalization with symmetric pivoting
    RatMatrix a = gram;
    const std::size_t n = a.rows();
    Inertia in;
    auto sym_swap = [&a](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        a.swap_cols(i, j);
    };
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p) == 0)
            ++p;
        if (p == n) {
            // all remaining diagonal entries vanish; use an off-diagonal one
            std::optional<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t i = k; i < n && !off; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        off = {i, j};
                        break;
                    }
            if (!off) {
                in.zero += n - k;
                break;
            }
            auto [i, j] = *off;
            // e_i ← e_i + e_j gives diagonal 2·a(i,j) ≠ 0
            for (std::size_t c = 0; c < n; ++c)
                a(i, c) += a(j, c);
            for (std::size_t r = 0; r < n; ++r)
                a(r, i) += a(r, j);
            p = i;
        }
        sym_swap(k, p);
        const Rat piv = a(k, k);
        (piv > 0 ? in.pos : in.neg) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0)
                continue;
            Rat f = a(i, k) / piv;
            for (std::size_t c = k; c < n; ++c)
                a(i, c) -= f * a(k, c);
            for (std::size_t r = k; r < n; ++r)
                a(r, i) -= f * a(r, k);
        }
    }
    return in;
}

Inertia signature(const IntMatrix& gram) {
    return signature(to_rational(gram));
}

std::vector<Int> discriminant_group(const IntMatrix& gram) {
    if (!gram.is_symmetric())
        throw ValidationError("discriminant group requires a symmetric matrix");
    if (determinant(gram) == 0)
        throw PreconditionError("degenerate Gram matrix has no finite discriminant group");
    std::vector<Int> out;
    for (const auto& d : smith_form(gram).diagonal())
        if (d > 1)
            out.push_back(d);
    return out;
}

IntMatrix orthogonal_complement(const IntMatrix& ambient_gram, const IntMatrix& vectors) {
    if (!ambient_gram.is_symmetric())
        throw ValidationError("ambient Gram matrix must be symmetric");
    if (vectors.rows() == 0)
        return IntMatrix::identity(ambient_gram.rows());
    if (vectors.cols() != ambient_gram.rows())
        throw ValidationError("vector length does not match the ambient rank");
    return kernel_basis(vectors * ambient_gram);
}

LdlFactor ldl_positive_definite(const RatMatrix& gram) {
    if (!gram.is_symmetric())
        throw ValidationError("Gram matrix must be symmetric");
    const std::size_t n = gram.rows();
    LdlFactor f{RatMatrix::identity(n), RatVec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        Rat di = gram(i, i);
        for (std::size_t k = 0; k < i; ++k)
            di -= f.l(i, k) * f.l(i, k) * f.d[k];
        if (di <= 0)
            throw PreconditionError("Gram matrix is not positive definite");
        f.d[i] = di;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat s = gram(j, i);
            for (std::size_t k = 0; k < i; ++k)
                s -= f.l(j, k) * f.l(i, k) * f.d[k];
            f.l(j, i) = s / di;
        }
    }
    return f;
}

std::vector<IntVec> short_vectors(const RatMatrix& gram, const Rat& bound) {
    const LdlFactor f = ldl_positive_definite(gram);
    const std::size_t n = gram.rows();
    std::vector<IntVec> out;
    if (n == 0 || bound <= 0)
        return out;

    // q(x) = Σ dᵢ (xᵢ + Σ_{j>i} l(j,i)·xⱼ)², enumerated from the last coordinate
    IntVec x(n);
    std::function<void(std::size_t, const Rat&)> descend = [&](std::size_t i, const Rat& remaining) {
        Rat center = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            center -= f.l(j, i) * Rat(x[j]);
        const Rat t = remaining / f.d[i];
        Int radius;
        {
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
            mpz_sqrt(radius.get_mpz_t(), fl.get_mpz_t());
        }
        Int c0;
        mpz_fdiv_q(c0.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
        const Int lo = c0 - radius - 1, hi = c0 + radius + 2;
        for (Int xi = lo; xi <= hi; ++xi) {
            Rat diff = Rat(xi) - center;
            Rat used = f.d[i] * diff * diff;
            if (used > remaining)
                continue;
            x[i] = xi;
            if (i == 0) {
                auto nz = std::find_if(x.begin(), x.end(), [](const Int& v) { return v != 0; });
                if (nz != x.end() && *nz > 0)
                    out.push_back(x);
            } else {
                descend(i - 1, remaining - used);
            }
        }
        x[i] = 0;
    };
    descend(n - 1, bound);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace k3twist
