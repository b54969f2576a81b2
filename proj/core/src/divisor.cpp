#include <matdiv/divisor.hpp>
#include <matdiv/error.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace matdiv {

long DivisorGerm::pole_order() const {
    auto v = psi.valuation();
    if (!v) throw domain_error("germ vanishes within its window");
    return std::max(0L, -*v);
}

DivisorGerm make_germ(Realization r, MatSeries psi) {
    if (psi.rows() != r.module_dim || psi.cols() != r.module_dim)
        throw dimension_error("germ shape " + std::to_string(psi.rows()) + "x" + std::to_string(psi.cols()) +
                              " does not match the module dimension " + std::to_string(r.module_dim));
    if (!psi.valuation()) throw domain_error("germ vanishes within its window");
    return DivisorGerm{std::move(r), std::move(psi)};
}

DivisorGerm coweight_germ(const Realization& r, const CoweightH& h, long horizon) {
    r.check_coweight(h);
    if (!r.dual_lattice_check(h))
        throw domain_error("coweight pairs non-integrally with a module weight; z^h is not single-valued");
    const int n = r.module_dim;
    std::vector<std::vector<LaurentSeries>> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        mpq_class mu = r.weight_value(r.module_weights[static_cast<std::size_t>(i)], h);
        long d = mu.get_num().get_si();
        for (int j = 0; j < n; ++j)
            grid[static_cast<std::size_t>(i)].push_back(
                i == j ? LaurentSeries::monomial(Scalar(1), d, horizon) : LaurentSeries::zero(horizon));
    }
    return make_germ(r, MatSeries::from_entries(grid));
}

ReducedForm smith_reduce(const DivisorGerm& germ, long guard) {
    if (germ.realization.rs.family != Family::A)
        throw domain_error("unsupported family for reduction: the diagonal form is computed for type-A "
                           "matrix realizations only");
    DvrDiagonal d = dvr_diagonalize(germ.psi);

    long top = *std::max_element(d.exponents.begin(), d.exponents.end());
    if (germ.psi.horizon() < top + guard)
        throw precision_error("insufficient precision: the window certifies coefficients below degree " +
                              std::to_string(germ.psi.horizon()) + " but the top exponent " +
                              std::to_string(top) + " with guard " + std::to_string(guard) + " needs " +
                              std::to_string(top + guard - germ.psi.horizon()) + " more terms");

    // Multiply back onto the diagonal within the surviving window.
    MatSeries product = d.left * germ.psi * d.right;
    const int n = germ.psi.rows();
    std::vector<std::vector<LaurentSeries>> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            grid[static_cast<std::size_t>(i)].push_back(
                i == j ? LaurentSeries::monomial(Scalar(1), d.exponents[static_cast<std::size_t>(i)],
                                                 product.horizon())
                       : LaurentSeries::zero(product.horizon()));
    if (!product.equal_in_window(MatSeries::from_entries(grid)))
        throw std::logic_error("diagonalization factors do not multiply back to the exponent matrix");

    ReducedForm out;
    out.exponents = d.exponents;
    out.left = d.left;
    out.right = d.right;
    std::vector<long> neg(out.exponents.size());
    std::transform(out.exponents.begin(), out.exponents.end(), neg.begin(), [](long e) { return -e; });
    out.residual = (d.left * germ.psi).row_shifted(neg);

    auto rv = out.residual.valuation();
    if (!rv || *rv != 0 || rank_of(out.residual.coeff(0)) != n)
        throw std::logic_error("residual factor is not a unit of valuation zero");
    return out;
}

std::pair<std::vector<long>, MatSeries> reduced_form_left(const DivisorGerm& germ, long guard) {
    ReducedForm rf = smith_reduce(germ, guard);
    // psi must reproduce as left^{-1} z^d residual.
    MatSeries recon = series_invert(rf.left) * rf.residual.row_shifted(rf.exponents);
    if (!recon.equal_in_window(germ.psi))
        throw std::logic_error("one-sided reduction does not multiply back to the germ");
    return {rf.exponents, rf.residual};
}

Flag flag_from_system(const DivisorGerm& germ) {
    const int n = germ.psi.rows();
    const long m = germ.pole_order();

    MatSeries inv = series_invert(germ.psi);
    auto iv = inv.valuation();
    if (!iv) throw precision_error("inverse of the germ vanishes within its window");
    const long k = -*iv;

    const long lo = -k;
    const long hi = std::max(m, -k);
    std::vector<Subspace> chain;

    if (m + k > 0) {
        // Unknown blocks f_{-k}..f_{m-1}; one block row per degree -m-k..-1
        // of the product, with coefficient psi_{d-j} on block j.
        const long nblocks = m + k;
        Mat system(static_cast<int>(nblocks) * n, static_cast<int>(nblocks) * n);
        for (long d = -m - k; d <= -1; ++d) {
            const long row0 = (d + m + k) * n;
            for (long j = -k; j <= m - 1; ++j) {
                const long col0 = (j + k) * n;
                const long deg = d - j;
                if (deg < germ.psi.support_low()) continue;
                Mat c = germ.psi.coeff(deg);  // throws past the horizon
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        system.at(static_cast<int>(row0) + a, static_cast<int>(col0) + b) = c.at(a, b);
            }
        }
        Subspace sol = nullspace(system);

        for (long j = -k; j <= m - 1; ++j) {
            // Projection onto block j: image of the solution basis under the
            // coordinate restriction.
            std::vector<std::vector<Scalar>> rows;
            for (int r = 0; r < sol.dim(); ++r) {
                std::vector<Scalar> v(static_cast<std::size_t>(n));
                for (int b = 0; b < n; ++b)
                    v[static_cast<std::size_t>(b)] = sol.basis().at(r, static_cast<int>((j + k) * n) + b);
                rows.push_back(std::move(v));
            }
            chain.push_back(Subspace::span_of_vectors(rows, n));
        }
    }
    while (static_cast<long>(chain.size()) < hi - lo + 1) chain.push_back(Subspace::full(n));
    return Flag(n, static_cast<int>(lo), std::move(chain));
}

Flag flag_from_h(const Realization& r, const CoweightH& h) {
    return compute_module_grading(r, h).flag;
}

bool is_section(const MatSeries& f, const DivisorGerm& germ) {
    if (f.cols() != 1 || f.rows() != germ.psi.cols())
        throw dimension_error("section candidate must be a column of the module dimension");
    MatSeries product = germ.psi * f;
    // A certified nonzero coefficient at negative degree refutes membership.
    for (long d = product.support_low(); d < std::min(0L, product.horizon()); ++d)
        if (!product.coeff(d).is_zero()) return false;
    if (product.horizon() < 0)
        throw precision_error("window ends at degree " + std::to_string(product.horizon()) +
                              "; cannot decide holomorphy of the product");
    return true;
}

LieFiltration endomorphism_filtration(const Flag& flag, const Realization& r) {
    if (flag.ambient() != r.module_dim)
        throw dimension_error("flag ambient does not match the module dimension");
    const std::vector<Mat> basis = r.algebra_basis();
    const int dimg = static_cast<int>(basis.size());
    const int span = flag.hi() - flag.lo();

    LieFiltration out;
    out.ambient = dimg;
    out.lo = -span;
    for (int i = -span; i <= span; ++i) {
        // Rows: one linear condition per (j, chain vector, annihilator row).
        std::vector<std::vector<Scalar>> rows;
        for (int j = flag.lo(); j <= flag.hi(); ++j) {
            const Subspace& from = flag.at(j);
            const Subspace& to = flag.at(j + i);
            Subspace ann = to.annihilator();
            for (int v = 0; v < from.dim(); ++v) {
                std::vector<Scalar> vec = from.basis().row(v);
                for (int u = 0; u < ann.dim(); ++u) {
                    std::vector<Scalar> urow = ann.basis().row(u);
                    std::vector<Scalar> cond(static_cast<std::size_t>(dimg), Scalar(0));
                    for (int b = 0; b < dimg; ++b) {
                        std::vector<Scalar> xv = basis[static_cast<std::size_t>(b)].apply(vec);
                        Scalar s(0);
                        for (std::size_t t = 0; t < xv.size(); ++t) s += urow[t] * xv[t];
                        cond[static_cast<std::size_t>(b)] = s;
                    }
                    rows.push_back(std::move(cond));
                }
            }
        }
        if (rows.empty()) {
            out.tilde.push_back(Subspace::full(dimg));
        } else {
            Mat cond(static_cast<int>(rows.size()), dimg);
            for (std::size_t rr = 0; rr < rows.size(); ++rr) cond.set_row(static_cast<int>(rr), rows[rr]);
            out.tilde.push_back(nullspace(cond));
        }
    }
    return out;
}

}  // namespace matdiv
