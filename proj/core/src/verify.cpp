#include <matdiv/verify.hpp>

#include <matdiv/error.hpp>
#include <matdiv/grading.hpp>

#include <algorithm>
#include <sstream>

namespace matdiv {

std::string check_status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "skip";
    }
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::fail;
    });
}

namespace {

Scalar rnd_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
    return Scalar::rational(num(rng), den(rng));
}

}  // namespace

MatSeries random_unit_series(int n, long horizon, std::mt19937_64& rng) {
    Mat lower = Mat::identity(n), upper = Mat::identity(n), diag(n, n);
    std::uniform_int_distribution<long> nz(1, 3);
    for (int i = 0; i < n; ++i) {
        diag.at(i, i) = Scalar(nz(rng));
        for (int j = 0; j < i; ++j) lower.at(i, j) = rnd_rat(rng);
        for (int j = i + 1; j < n; ++j) upper.at(i, j) = rnd_rat(rng);
    }
    std::vector<Mat> coeffs{lower * upper * diag};
    for (long t = 1; t < horizon; ++t) {
        Mat a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = rnd_rat(rng);
        coeffs.push_back(a);
    }
    return MatSeries(0, coeffs);
}

MatSeries random_germ_series(int n, long max_pole, long horizon, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-max_pole, max_pole);
    std::vector<long> exps;
    for (int i = 0; i < n; ++i) exps.push_back(d(rng));
    std::vector<std::vector<LaurentSeries>> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[static_cast<std::size_t>(i)].push_back(
                i == j ? LaurentSeries::monomial(Scalar(1), exps[static_cast<std::size_t>(i)], horizon)
                       : LaurentSeries::zero(horizon));
    return random_unit_series(n, horizon, rng) * MatSeries::from_entries(g) *
           random_unit_series(n, horizon, rng);
}

namespace {

std::vector<Scalar> algebra_coords(const Realization& r, const Mat& x) {
    std::vector<Mat> basis = r.algebra_basis();
    int nn = basis.front().rows() * basis.front().cols();
    Mat sys(nn, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::vector<Scalar> col = basis[j].flatten();
        for (int i = 0; i < nn; ++i) sys.at(i, static_cast<int>(j)) = col[i];
    }
    auto sol = solve_linear(sys, x.flatten());
    if (!sol) throw domain_error("matrix lies outside the realized algebra");
    return *sol;
}

Mat from_coords(const Realization& r, const Mat& coords_row, int row) {
    std::vector<Mat> basis = r.algebra_basis();
    Mat out(basis.front().rows(), basis.front().cols());
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const Scalar& c = coords_row.at(row, static_cast<int>(a));
        if (!c.is_zero()) out = out + c * basis[a];
    }
    return out;
}

std::vector<CoweightH> distinct_coweights(const SurfaceConfig& config) {
    std::vector<CoweightH> out;
    for (const GammaPoint& g : config.gammas) {
        bool seen = false;
        for (const CoweightH& h : out)
            if (h == g.h) seen = true;
        if (!seen) out.push_back(g.h);
    }
    return out;
}

CheckResult check_flag_nesting(const Scene& scene) {
    CheckResult res{"flag-nesting", CheckStatus::pass, ""};
    std::mt19937_64 rng(scene.options.seed);
    const Realization& r = scene.config.realization;
    int n = r.module_dim;
    const int trials = 10;
    // Pad the construction horizon: the unit * diag * unit product trims the
    // window by the pole depth at each end.
    long horizon = scene.options.precision + 4;
    for (int t = 0; t < trials; ++t) {
        MatSeries psi = random_germ_series(n, 2, horizon, rng);
        Flag f = flag_from_system(make_germ(r, psi));
        if (!f.nested()) {
            res.status = CheckStatus::fail;
            res.detail = "flag from a random germ is not nested";
            return res;
        }
    }
    res.detail = std::to_string(trials) + " random germs, all flags nested";
    return res;
}

CheckResult check_flag_equality(const Scene& scene) {
    CheckResult res{"flag-equality", CheckStatus::pass, ""};
    const Realization& r = scene.config.realization;
    std::vector<CoweightH> hs = distinct_coweights(scene.config);
    if (hs.empty()) return {res.name, CheckStatus::skip, "no gamma points"};
    int checked = 0;
    for (const CoweightH& h : hs) {
        if (!r.dual_lattice_check(h)) continue;
        DivisorGerm germ = coweight_germ(r, h, scene.options.precision);
        if (flag_from_system(germ) != flag_from_h(r, h)) {
            res.status = CheckStatus::fail;
            res.detail = "system flag differs from the weight flag at h = " + h.str();
            return res;
        }
        ++checked;
    }
    if (checked == 0)
        return {res.name, CheckStatus::skip,
                "no coweight pairs integrally with the module weights"};
    res.detail = std::to_string(checked) + " coweight(s): system flag equals weight flag";
    return res;
}

CheckResult check_grading_closure(const Scene& scene) {
    CheckResult res{"grading-closure", CheckStatus::pass, ""};
    const Realization& r = scene.config.realization;
    std::vector<CoweightH> hs = distinct_coweights(scene.config);
    if (hs.empty()) return {res.name, CheckStatus::skip, "no gamma points"};
    long pairs = 0;
    for (const CoweightH& h : hs) {
        LieGrading gr = compute_grading(r, h);
        for (int p = -gr.depth; p <= gr.depth; ++p)
            for (int q = -gr.depth; q <= gr.depth; ++q) {
                const Subspace& gp = gr.piece(p);
                const Subspace& gq = gr.piece(q);
                for (int i = 0; i < gp.dim(); ++i)
                    for (int j = 0; j < gq.dim(); ++j) {
                        Mat x = from_coords(r, gp.basis(), i);
                        Mat y = from_coords(r, gq.basis(), j);
                        if (!gr.piece(p + q).contains(algebra_coords(r, x.commutator(y)))) {
                            res.status = CheckStatus::fail;
                            std::ostringstream ss;
                            ss << "[g_" << p << ", g_" << q << "] escapes g_" << p + q
                               << " at h = " << h.str();
                            res.detail = ss.str();
                            return res;
                        }
                        ++pairs;
                    }
            }
    }
    res.detail = std::to_string(pairs) + " bracket pairs stay graded";
    return res;
}

CheckResult check_reduction_invariance(const Scene& scene) {
    CheckResult res{"reduction-invariance", CheckStatus::pass, ""};
    const Realization& r = scene.config.realization;
    if (r.rs.family != Family::A)
        return {res.name, CheckStatus::skip, "reduction is defined for family A only"};
    std::mt19937_64 rng(scene.options.seed + 1);
    int n = r.module_dim;
    const int germs = 5, dressings = 5;
    long horizon = scene.options.precision + 4;
    for (int t = 0; t < germs; ++t) {
        DivisorGerm germ = make_germ(r, random_germ_series(n, 2, horizon, rng));
        std::vector<long> base = smith_reduce(germ, scene.options.guard).exponents;
        for (int s = 0; s < dressings; ++s) {
            MatSeries k1 = random_unit_series(n, horizon, rng);
            MatSeries k2 = random_unit_series(n, horizon, rng);
            DivisorGerm dressed = make_germ(r, k1 * germ.psi * k2);
            if (smith_reduce(dressed, scene.options.guard).exponents != base) {
                res.status = CheckStatus::fail;
                res.detail = "reduction exponents changed under a unit dressing";
                return res;
            }
        }
    }
    res.detail = std::to_string(germs) + " germs x " + std::to_string(dressings) +
                 " unit dressings keep the exponents";
    return res;
}

CheckResult check_localization_injectivity(const Scene& scene, const QuotientReport& rep) {
    CheckResult res{"localization-injectivity", CheckStatus::pass, ""};
    if (scene.config.gammas.empty())
        return {res.name, CheckStatus::skip, "no gamma points"};
    if (!rep.injectivity_applicable) {
        std::ostringstream ss;
        ss << "not applicable: deg D = " << scene.config.deg_D() << ", |Gamma| = "
           << scene.config.gammas.size() << " (needs deg D < |Gamma| and depth >= 1 everywhere)";
        return {res.name, CheckStatus::skip, ss.str()};
    }
    if (rep.localization_kernel_dim != 0) {
        res.status = CheckStatus::fail;
        res.detail = "localization kernel has dimension " +
                     std::to_string(rep.localization_kernel_dim);
        return res;
    }
    std::ostringstream ss;
    ss << "kernel dimension 0 (deg D = " << scene.config.deg_D() << " < |Gamma| = "
       << scene.config.gammas.size() << ")";
    res.detail = ss.str();
    return res;
}

CheckResult check_section_dimension(const Scene& scene) {
    CheckResult res{"section-dimension", CheckStatus::pass, ""};
    const Realization& r = scene.config.realization;
    int dim = 0;
    try {
        dim = build_section_space(scene.config).dim;
    } catch (const domain_error& e) {
        return {res.name, CheckStatus::skip, e.what()};
    }
    long expected = static_cast<long>(r.module_dim) * (scene.config.deg_D() + 1);
    for (const GammaPoint& g : scene.config.gammas)
        for (const auto& mu : r.module_weights)
            expected += r.weight_value(mu, g.h).get_num().get_si();
    std::ostringstream ss;
    ss << "dim = " << dim << ", generic count = " << expected;
    res.detail = ss.str();
    if (dim < expected) {
        res.status = CheckStatus::fail;  // below the nullspace lower bound: a bug
    } else if (dim > expected) {
        res.status = CheckStatus::skip;
        res.detail += " (degenerate configuration; flag conditions overlap)";
    }
    return res;
}

CheckResult check_quotient_report(const Scene& scene, const QuotientReport& rep) {
    CheckResult res{"quotient-report", CheckStatus::pass, ""};
    std::ostringstream ss;
    ss << "dim L = " << rep.dim_L << ", dim M = " << rep.dim_M << ", quotient = "
       << rep.dim_quotient << ", tangent formula = " << rep.tangent_formula
       << ", excess = " << rep.excess() << ", kernel = " << rep.localization_kernel_dim;
    res.detail = ss.str();
    if (!rep.l_subset_m) {
        res.status = CheckStatus::fail;
        res.detail = "L space is not contained in the M space; " + res.detail;
    }
    return res;
}

}  // namespace

std::vector<CheckResult> verify_scene(const Scene& scene) {
    scene.config.validate();
    QuotientReport rep = quotient_report(scene.config);
    std::vector<CheckResult> out;
    out.push_back(check_flag_nesting(scene));
    out.push_back(check_flag_equality(scene));
    out.push_back(check_grading_closure(scene));
    out.push_back(check_reduction_invariance(scene));
    out.push_back(check_localization_injectivity(scene, rep));
    out.push_back(check_section_dimension(scene));
    out.push_back(check_quotient_report(scene, rep));
    return out;
}

}  // namespace matdiv
