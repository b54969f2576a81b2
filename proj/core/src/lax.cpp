#include <matdiv/lax.hpp>

#include <matdiv/error.hpp>
#include <matdiv/grading.hpp>

#include <cstddef>
#include <utility>

namespace matdiv {

void SurfaceConfig::validate() const {
    if (genus != 0) throw config_error("only genus 0 is supported");
    std::vector<Scalar> pts;
    for (const GammaPoint& g : gammas) {
        realization.check_coweight(g.h);
        pts.push_back(g.point);
    }
    for (const PiPoint& p : pis) {
        if (p.mult < 0) throw config_error("divisor multiplicities must be nonnegative");
        pts.push_back(p.point);
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j])
                throw config_error("marked points must be pairwise distinct: " + pts[i].str());
}

long SurfaceConfig::deg_D() const {
    long s = 0;
    for (const PiPoint& p : pis) s += p.mult;
    return s;
}

namespace {

struct ScalarTerm {
    bool is_const;
    Scalar point;
    int order;  // j in (w - point)^{-j}
};

struct PoleBound {
    Scalar point;
    long order;
};

std::vector<PoleBound> pole_layout(const SurfaceConfig& config,
                                   const std::vector<long>& gamma_orders) {
    if (gamma_orders.size() != config.gammas.size())
        throw dimension_error("one pole bound per gamma point expected");
    std::vector<PoleBound> out;
    for (std::size_t i = 0; i < config.gammas.size(); ++i) {
        if (gamma_orders[i] < 0) throw domain_error("pole bounds must be nonnegative");
        out.push_back({config.gammas[i].point, gamma_orders[i]});
    }
    for (const PiPoint& pi : config.pis) out.push_back({pi.point, pi.mult});
    return out;
}

// Scalar-function basis: the constant 1, then (w-p)^{-j} per pole in layout
// order.  Every ambient space below indexes coefficients as
// value_index * nterms + term_index, and all localization row builders rely
// on recreating this exact layout.
std::vector<ScalarTerm> scalar_terms(const std::vector<PoleBound>& layout) {
    std::vector<ScalarTerm> out;
    out.push_back({true, Scalar(0), 0});
    for (const PoleBound& pb : layout)
        for (long j = 1; j <= pb.order; ++j)
            out.push_back({false, pb.point, static_cast<int>(j)});
    return out;
}

RationalMatrix term_function(const ScalarTerm& t, const Mat& value) {
    return t.is_const ? RationalMatrix::constant(value)
                      : RationalMatrix::pole_term(value, t.point, t.order);
}

// Laurent coefficients of every scalar term around c, degrees wlo..whi.
std::vector<std::vector<Scalar>> scalar_jets(const std::vector<ScalarTerm>& terms,
                                             const Scalar& c, long wlo, long whi) {
    Mat one = Mat::identity(1);
    std::vector<std::vector<Scalar>> jets;
    jets.reserve(terms.size());
    for (const ScalarTerm& t : terms) {
        MatSeries s = term_function(t, one).localize(c, wlo, whi);
        std::vector<Scalar> row;
        for (long p = wlo; p <= whi; ++p) row.push_back(s.coeff(p).at(0, 0));
        jets.push_back(std::move(row));
    }
    return jets;
}

// Rows forcing the degree-p jet, read in value coordinates, into `allowed`:
// one row per annihilator functional u, with row[(a,t)] = u_a * jet_t[p].
void append_jet_rows(std::vector<std::vector<Scalar>>& rows, const Subspace& allowed,
                     const std::vector<std::vector<Scalar>>& jets, std::size_t pcol,
                     int nvalue) {
    Subspace functionals = allowed.annihilator();
    const Mat& ann = functionals.basis();
    std::size_t nterm = jets.size();
    for (int r = 0; r < ann.rows(); ++r) {
        std::vector<Scalar> row(static_cast<std::size_t>(nvalue) * nterm);
        for (int a = 0; a < nvalue; ++a) {
            const Scalar& u = ann.at(r, a);
            if (u.is_zero()) continue;
            for (std::size_t t = 0; t < nterm; ++t)
                row[static_cast<std::size_t>(a) * nterm + t] = u * jets[t][pcol];
        }
        rows.push_back(std::move(row));
    }
}

OperatorSpace finish_space(const SurfaceConfig& config, SpaceKind kind,
                           const std::vector<Mat>& values,
                           const std::vector<ScalarTerm>& terms,
                           const std::vector<std::vector<Scalar>>& rows) {
    std::size_t ncols = values.size() * terms.size();
    Subspace coords = Subspace::full(static_cast<int>(ncols));
    if (!rows.empty()) {
        Mat cm(static_cast<int>(rows.size()), static_cast<int>(ncols));
        for (std::size_t i = 0; i < rows.size(); ++i) cm.set_row(static_cast<int>(i), rows[i]);
        coords = nullspace(cm);
    }
    std::vector<RationalMatrix> funcs;
    funcs.reserve(ncols);
    for (const Mat& v : values)
        for (const ScalarTerm& t : terms) funcs.push_back(term_function(t, v));
    std::vector<RationalMatrix> basis;
    for (int r = 0; r < coords.basis().rows(); ++r) {
        RationalMatrix f(values.front().rows(), values.front().cols());
        for (std::size_t c = 0; c < ncols; ++c) {
            const Scalar& cv = coords.basis().at(r, static_cast<int>(c));
            if (!cv.is_zero()) f += cv * funcs[c];
        }
        basis.push_back(std::move(f));
    }
    return OperatorSpace{config, kind, std::move(basis), coords, coords.dim()};
}

std::vector<long> gamma_depths(const SurfaceConfig& config) {
    std::vector<long> depths;
    for (const GammaPoint& g : config.gammas)
        depths.push_back(compute_grading(config.realization, g.h).depth);
    return depths;
}

}  // namespace

std::vector<RationalMatrix> ambient_basis(const SurfaceConfig& config,
                                          const std::vector<long>& gamma_orders) {
    config.validate();
    std::vector<ScalarTerm> terms = scalar_terms(pole_layout(config, gamma_orders));
    std::vector<RationalMatrix> out;
    for (const Mat& v : config.realization.algebra_basis())
        for (const ScalarTerm& t : terms) out.push_back(term_function(t, v));
    return out;
}

OperatorSpace build_L_space(const SurfaceConfig& config) {
    config.validate();
    const Realization& r = config.realization;
    std::vector<LieFiltration> filts;
    for (const GammaPoint& g : config.gammas)
        filts.push_back(filtration_of(compute_grading(r, g.h)));
    std::vector<long> depths;
    for (const LieFiltration& f : filts) depths.push_back(-f.lo);

    std::vector<ScalarTerm> terms = scalar_terms(pole_layout(config, depths));
    int nvalue = r.algebra_dim();
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < config.gammas.size(); ++i) {
        long k = depths[i];
        if (k == 0) continue;  // every jet condition is vacuous
        auto jets = scalar_jets(terms, config.gammas[i].point, -k, k - 1);
        for (long p = -k; p <= k - 1; ++p)
            append_jet_rows(rows, filts[i].at(static_cast<int>(p)), jets,
                            static_cast<std::size_t>(p + k), nvalue);
    }
    return finish_space(config, SpaceKind::L, r.algebra_basis(), terms, rows);
}

OperatorSpace build_M_space(const SurfaceConfig& config) {
    config.validate();
    const Realization& r = config.realization;
    std::vector<LieFiltration> filts;
    for (const GammaPoint& g : config.gammas)
        filts.push_back(filtration_of(compute_grading(r, g.h)));
    std::vector<long> depths;
    for (const LieFiltration& f : filts) depths.push_back(-f.lo);

    std::vector<ScalarTerm> terms = scalar_terms(pole_layout(config, depths));
    int nvalue = r.algebra_dim();
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < config.gammas.size(); ++i) {
        long k = depths[i];
        if (k == 0) continue;
        auto jets = scalar_jets(terms, config.gammas[i].point, -k, -1);
        for (long p = -k; p <= -1; ++p) {
            Subspace allowed = filts[i].at(static_cast<int>(p));
            if (p == -1)
                allowed = allowed.sum(Subspace::span_of_vectors(
                    {r.coweight_coordinates(config.gammas[i].h)}, nvalue));
            append_jet_rows(rows, allowed, jets, static_cast<std::size_t>(p + k), nvalue);
        }
    }
    return finish_space(config, SpaceKind::M, r.algebra_basis(), terms, rows);
}

OperatorSpace build_section_space(const SurfaceConfig& config) {
    config.validate();
    const Realization& r = config.realization;
    int dv = r.module_dim;
    std::vector<Flag> flags;
    std::vector<long> bounds;
    for (const GammaPoint& g : config.gammas) {
        flags.push_back(compute_module_grading(r, g.h).flag);
        // Largest weight pairing = deepest admissible pole of a section.
        long m = 0;
        for (const auto& mu : r.module_weights) {
            mpq_class v = r.weight_value(mu, g.h);
            long vi = v.get_num().get_si();  // integral by the dual-lattice gate
            if (vi > m) m = vi;
        }
        bounds.push_back(m);
    }

    std::vector<ScalarTerm> terms = scalar_terms(pole_layout(config, bounds));
    std::vector<Mat> values;
    for (int b = 0; b < dv; ++b) {
        Mat e(dv, 1);
        e.at(b, 0) = Scalar(1);
        values.push_back(e);
    }
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < config.gammas.size(); ++i) {
        const Flag& fl = flags[i];
        long lo = -bounds[i], hi = fl.hi() - 1;
        if (hi < lo) continue;
        auto jets = scalar_jets(terms, config.gammas[i].point, lo, hi);
        for (long p = lo; p <= hi; ++p) {
            const Subspace& allowed = fl.at(static_cast<int>(p));
            if (allowed.dim() == dv) continue;
            append_jet_rows(rows, allowed, jets, static_cast<std::size_t>(p - lo), dv);
        }
    }
    return finish_space(config, SpaceKind::section, values, terms, rows);
}

RationalMatrix bracket_global(const RationalMatrix& f, const RationalMatrix& g) {
    return f.commutator(g);
}

QuotientReport quotient_report(const SurfaceConfig& config) {
    OperatorSpace lsp = build_L_space(config);
    OperatorSpace msp = build_M_space(config);
    const Realization& r = config.realization;

    QuotientReport rep;
    rep.dim_L = lsp.dim;
    rep.dim_M = msp.dim;
    rep.dim_quotient = msp.dim - lsp.dim;
    rep.l_subset_m = msp.coords.contains(lsp.coords);
    for (const GammaPoint& g : config.gammas)
        for (const Root& a : r.rs.positive) rep.tangent_formula += r.pair(a, g.h);

    // Localization kernel inside M: all jet coordinates over [-k, k) vanish
    // at every gamma.  The term layout matches build_M_space's ambient.
    std::vector<long> depths = gamma_depths(config);
    std::vector<ScalarTerm> terms = scalar_terms(pole_layout(config, depths));
    int nvalue = r.algebra_dim();
    std::size_t nterm = terms.size();
    bool all_deep = !config.gammas.empty();
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < config.gammas.size(); ++i) {
        long k = depths[i];
        if (k == 0) {
            all_deep = false;
            continue;
        }
        auto jets = scalar_jets(terms, config.gammas[i].point, -k, k - 1);
        for (long p = -k; p <= k - 1; ++p)
            for (int a = 0; a < nvalue; ++a) {
                std::vector<Scalar> row(static_cast<std::size_t>(nvalue) * nterm);
                for (std::size_t t = 0; t < nterm; ++t)
                    row[static_cast<std::size_t>(a) * nterm + t] = jets[t][p + k];
                rows.push_back(std::move(row));
            }
    }
    Subspace kernel = msp.coords;
    if (!rows.empty()) {
        Mat cm(static_cast<int>(rows.size()), static_cast<int>(nvalue * nterm));
        for (std::size_t i = 0; i < rows.size(); ++i) cm.set_row(static_cast<int>(i), rows[i]);
        kernel = msp.coords.intersect(nullspace(cm));
    }
    rep.localization_kernel_dim = kernel.dim();
    rep.injectivity_applicable =
        all_deep && config.deg_D() < static_cast<long>(config.gammas.size());
    return rep;
}

}  // namespace matdiv
