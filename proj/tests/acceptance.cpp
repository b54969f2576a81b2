// Acceptance gate: nine end-to-end checks over the assembled library, each
// reported as a single [PASS]/[FAIL] line.  Tolerances and time budgets are
// pinned here in code; the binary exits with the number of failed checks.

#include <matdiv/divisor.hpp>
#include <matdiv/error.hpp>
#include <matdiv/grading.hpp>
#include <matdiv/lax.hpp>
#include <matdiv/verify.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace matdiv;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

CoweightH first_unit(int eps_dim) {
    std::vector<mpq_class> e(static_cast<std::size_t>(eps_dim), 0);
    e[0] = 1;
    return CoweightH{std::move(e)};
}

std::vector<Scalar> algebra_coords(const Realization& r, const Mat& x) {
    std::vector<Mat> basis = r.algebra_basis();
    int nn = basis.front().rows() * basis.front().cols();
    Mat sys(nn, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::vector<Scalar> col = basis[j].flatten();
        for (int i = 0; i < nn; ++i) sys.at(i, static_cast<int>(j)) = col[i];
    }
    auto sol = solve_linear(sys, x.flatten());
    if (!sol) throw domain_error("matrix outside the realized algebra");
    return *sol;
}

// --- 1: closed-form moduli dimensions -------------------------------------

Outcome criterion_dimensions() {
    Outcome out;
    int instances = 0;
    for (long n = 2; n <= 4; ++n) {
        struct Case {
            std::string label;
            Realization r;
            std::function<long(long)> formula;  // of the genus
        };
        std::vector<Case> cases;
        cases.push_back({"gl(" + std::to_string(n) + ")",
                         Realization::build(Family::A, static_cast<int>(n) - 1,
                                            ModuleTag::defining, AlgebraForm::gl),
                         [n](long g) { return n * n * (g - 1) + 1; }});
        cases.push_back({"so(" + std::to_string(2 * n) + ")",
                         Realization::build(Family::D, static_cast<int>(n), ModuleTag::defining),
                         [n](long g) { return (2 * n - 1) * n * (g - 1); }});
        cases.push_back({"sp(" + std::to_string(2 * n) + ")",
                         Realization::build(Family::C, static_cast<int>(n), ModuleTag::defining),
                         [n](long g) { return (2 * n + 1) * n * (g - 1); }});
        for (const Case& c : cases) {
            CoweightH h = first_unit(c.r.rs.eps_dim);
            for (long g = 1; g <= 3; ++g) {
                std::vector<CoweightH> hs(static_cast<std::size_t>(n * g), h);
                long got = moduli_dimension(c.r, hs, ModuliMode::moving_gamma_mod_adG);
                long want = c.formula(g);
                ++instances;
                if (got != want)
                    out.fail(c.label + " g=" + std::to_string(g) + ": got " +
                             std::to_string(got) + ", formula " + std::to_string(want));
            }
        }
    }
    if (out.pass) out.detail = std::to_string(instances) + " (family, n, g) instances exact";
    return out;
}

// --- 2: grading depths and piece dimensions --------------------------------

Outcome criterion_gradings() {
    Outcome out;
    auto check = [&](const std::string& label, const Realization& r, int depth,
                     const std::vector<std::pair<int, int>>& dims) {
        LieGrading gr = compute_grading(r, first_unit(r.rs.eps_dim));
        if (gr.depth != depth)
            out.fail(label + ": depth " + std::to_string(gr.depth) + " != " +
                     std::to_string(depth));
        for (auto [p, d] : dims)
            if (gr.piece_dim(p) != d)
                out.fail(label + ": dim g_" + std::to_string(p) + " = " +
                         std::to_string(gr.piece_dim(p)) + " != " + std::to_string(d));
    };
    for (int n = 2; n <= 4; ++n) {
        check("gl(" + std::to_string(n) + ")",
              Realization::build(Family::A, n - 1, ModuleTag::defining, AlgebraForm::gl), 1,
              {{1, n - 1}, {-1, n - 1}});
        check("so(" + std::to_string(2 * n) + ")",
              Realization::build(Family::D, n, ModuleTag::defining), 1,
              {{1, 2 * n - 2}, {-1, 2 * n - 2}});
        check("sp(" + std::to_string(2 * n) + ")",
              Realization::build(Family::C, n, ModuleTag::defining), 2,
              {{1, 2 * n - 2}, {-1, 2 * n - 2}, {2, 1}, {-2, 1}});
    }
    if (out.pass) out.detail = "9 gradings, depths and piece dimensions exact";
    return out;
}

// --- 3: flags of random germs are nested -----------------------------------

Outcome criterion_flag_nesting() {
    Outcome out;
    std::mt19937_64 rng(11);
    const int trials = 54;
    Realization r2 = Realization::from_tag("A1d");
    Realization r3 = Realization::from_tag("A2d");
    for (int t = 0; t < trials; ++t) {
        const Realization& r = (t % 2 == 0) ? r2 : r3;
        MatSeries psi = random_germ_series(r.module_dim, 2, 12, rng);
        Flag f = flag_from_system(make_germ(r, psi));
        if (!f.nested()) {
            out.fail("trial " + std::to_string(t) + ": chain not nested");
            break;
        }
        if (!f.complete_right()) {
            out.fail("trial " + std::to_string(t) + ": chain does not reach the full space");
            break;
        }
    }
    if (out.pass)
        out.detail = std::to_string(trials) + " random germs (sizes 2 and 3, poles <= 2)";
    return out;
}

// --- 4: system flag of z^h equals the weight flag ---------------------------

Outcome criterion_flag_from_h() {
    Outcome out;
    int tested = 0, filtered = 0;
    std::vector<Realization> reals;
    for (int rank = 1; rank <= 3; ++rank) {
        for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
            try {
                reals.push_back(Realization::build(fam, rank, ModuleTag::defining));
            } catch (const config_error&) {
                // rank below the family floor
            }
        }
    }
    for (const Realization& r : reals) {
        int rank = r.rs.rank;
        std::vector<long> p(static_cast<std::size_t>(rank), 0);
        long combos = 1;
        for (int i = 0; i < rank; ++i) combos *= 3;
        for (long c = 0; c < combos; ++c) {
            long v = c;
            for (int i = 0; i < rank; ++i) {
                p[static_cast<std::size_t>(i)] = v % 3;
                v /= 3;
            }
            CoweightH h;
            try {
                h = r.coweight_from_simple_values(p);
            } catch (const domain_error&) {
                ++filtered;
                continue;
            }
            // z^h needs integer module exponents; half-integral coweights
            // (odd simple values on the long root of C, etc.) sit outside
            // the dual lattice and are reported as filtered, not failed.
            if (!r.dual_lattice_check(h)) {
                ++filtered;
                continue;
            }
            long maxexp = 0;
            for (const auto& mu : r.module_weights) {
                mpq_class val = r.weight_value(mu, h);
                long e = std::labs(val.get_num().get_si());
                if (e > maxexp) maxexp = e;
            }
            DivisorGerm germ = coweight_germ(r, h, 2 * maxexp + 10);
            ++tested;
            if (flag_from_system(germ) != flag_from_h(r, h)) {
                out.fail(r.tag() + " h=" + h.str() + ": system flag differs from weight flag");
                return out;
            }
        }
    }
    if (out.pass)
        out.detail = std::to_string(tested) + " coweights across " +
                     std::to_string(reals.size()) + " realizations equal, " +
                     std::to_string(filtered) + " outside the dual lattice filtered";
    return out;
}

// --- 5: reduction exponents are unit-invariant ------------------------------

Outcome criterion_reduction_invariance() {
    Outcome out;
    std::mt19937_64 rng(5);
    Realization r2 = Realization::from_tag("A1d");
    Realization r3 = Realization::from_tag("A2d");
    const int germs = 20, dressings = 20;
    for (int t = 0; t < germs && out.pass; ++t) {
        const Realization& r = (t % 2 == 0) ? r2 : r3;
        MatSeries psi = random_germ_series(r.module_dim, 2, 12, rng);
        std::vector<long> base = smith_reduce(make_germ(r, psi), 4).exponents;
        for (int s = 0; s < dressings; ++s) {
            MatSeries k1 = random_unit_series(r.module_dim, 12, rng);
            MatSeries k2 = random_unit_series(r.module_dim, 12, rng);
            std::vector<long> got = smith_reduce(make_germ(r, k1 * psi * k2), 4).exponents;
            if (got != base) {
                std::ostringstream why;
                why << "germ " << t << " dressing " << s << ": exponents changed";
                out.fail(why.str());
                break;
            }
        }
    }
    if (out.pass) out.detail = "20 germs x 20 unit dressings keep the exponents";
    return out;
}

// --- 6: section-space dimensions at genus 0 ---------------------------------

Outcome criterion_section_dimensions() {
    Outcome out;
    struct Case {
        std::string label;
        Realization r;
        CoweightH h;
    };
    std::vector<Case> cases;
    cases.push_back({"gl(2) h=(1,-1)",
                     Realization::build(Family::A, 1, ModuleTag::defining, AlgebraForm::gl),
                     CoweightH{{1, -1}}});
    cases.push_back(
        {"sp(4) h=(1,0)", Realization::build(Family::C, 2, ModuleTag::defining), CoweightH{{1, 0}}});
    int combos = 0;
    for (const Case& c : cases) {
        // pole bound per point: the largest module pairing of h.
        long m = 0;
        for (const auto& mu : c.r.module_weights) {
            mpq_class val = c.r.weight_value(mu, c.h);
            if (val > m) m = val.get_num().get_si();
        }
        for (long degD = 1; degD <= 3; ++degD) {
            for (int nG = 1; nG <= 2; ++nG) {
                SurfaceConfig config{c.r, {}, {{Scalar(9), degD}}, 0};
                for (int i = 0; i < nG; ++i)
                    config.gammas.push_back({Scalar(i + 1), c.h});
                OperatorSpace sec = build_section_space(config);
                long dimV = c.r.module_dim;
                long expected = dimV * (degD + 1);
                long ambient = dimV * (degD + 1 + nG * m);
                long rank = ambient - sec.dim;
                ++combos;
                std::ostringstream tag;
                tag << c.label << " degD=" << degD << " |Gamma|=" << nG;
                if (sec.dim != expected)
                    out.fail(tag.str() + ": dim " + std::to_string(sec.dim) + " != " +
                             std::to_string(expected));
                else if (rank != m * dimV * nG)
                    out.fail(tag.str() + ": constraint rank " + std::to_string(rank) +
                             " != " + std::to_string(m * dimV * nG));
            }
        }
    }
    if (out.pass)
        out.detail = std::to_string(combos) + " scenes: dim = dimV(degD+1), constraints full rank";
    return out;
}

// --- 7: quotient report on deg D < |Gamma| scenes ----------------------------

Outcome criterion_quotient() {
    Outcome out;
    struct Case {
        std::string label;
        Realization r;
        CoweightH h;
    };
    std::vector<Case> cases;
    cases.push_back({"gl(2) h=(1,0)",
                     Realization::build(Family::A, 1, ModuleTag::defining, AlgebraForm::gl),
                     CoweightH{{1, 0}}});
    // sl(2) takes the half-coroot: the full coroot pins two tangent directions
    // per point and at deg D = 0 the quotient drops below the formula value.
    cases.push_back({"sl(2) h=(1/2,-1/2)",
                     Realization::build(Family::A, 1, ModuleTag::defining, AlgebraForm::sl),
                     CoweightH{{mpq_class(1, 2), mpq_class(-1, 2)}}});
    std::ostringstream excesses;
    for (const Case& c : cases) {
        for (int nG = 2; nG <= 3; ++nG) {
            for (long degD = 0; degD <= 1; ++degD) {
                SurfaceConfig config{c.r, {}, {}, 0};
                for (int i = 0; i < nG; ++i)
                    config.gammas.push_back({Scalar(i + 1), c.h});
                if (degD > 0) config.pis.push_back({Scalar(7), degD});
                auto t0 = Clock::now();
                QuotientReport q1 = quotient_report(config);
                QuotientReport q2 = quotient_report(config);  // rerun: report must be stable
                double secs = std::chrono::duration<double>(Clock::now() - t0).count() / 2;
                std::ostringstream tag;
                tag << c.label << " |Gamma|=" << nG << " degD=" << degD;
                if (q1.localization_kernel_dim != 0)
                    out.fail(tag.str() + ": localization kernel dim " +
                             std::to_string(q1.localization_kernel_dim));
                if (!q1.l_subset_m) out.fail(tag.str() + ": L not contained in M");
                if (q1.dim_quotient < q1.tangent_formula)
                    out.fail(tag.str() + ": quotient " + std::to_string(q1.dim_quotient) +
                             " below formula " + std::to_string(q1.tangent_formula));
                if (q1.excess() != q2.excess() || q1.dim_quotient != q2.dim_quotient)
                    out.fail(tag.str() + ": report not stable across runs");
                if (secs > 60.0) out.fail(tag.str() + ": took too long");
                excesses << (excesses.tellp() > 0 ? ", " : "") << nG << "/" << degD << ":"
                         << q1.excess();
            }
        }
    }
    if (out.pass)
        out.detail = "8 scenes: kernel 0, L in M, quotient >= formula; excess per "
                     "|Gamma|/degD = {" +
                     excesses.str() + "}";
    return out;
}

// --- 8: bracket closure against the jet oracle -------------------------------

Outcome criterion_bracket_closure() {
    Outcome out;
    Realization r = Realization::build(Family::A, 1, ModuleTag::defining, AlgebraForm::gl);
    CoweightH h{{1, 0}};
    SurfaceConfig config{r, {{Scalar(1), h}, {Scalar(2), h}}, {{Scalar(3), 1}}, 0};
    OperatorSpace L = build_L_space(config);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> coeff(-3, 3);
    auto combo = [&]() {
        RationalMatrix f = L.basis.front();
        f -= L.basis.front();
        for (const RationalMatrix& b : L.basis) f += Scalar(coeff(rng)) * b;
        return f;
    };
    const int pairs = 20;
    for (int t = 0; t < pairs && out.pass; ++t) {
        RationalMatrix br = bracket_global(combo(), combo());
        for (const GammaPoint& g : config.gammas) {
            LieFiltration filt = filtration_of(compute_grading(r, g.h));
            long k = -filt.lo;
            // Brackets can double the pole order at gamma; degrees below -k
            // must vanish outright, the rest sit in the filtration space.
            MatSeries jets = br.localize(g.point, -2 * k, k - 1);
            for (long p = -2 * k; p <= k - 1 && out.pass; ++p) {
                if (!filt.at(static_cast<int>(p))
                         .contains(algebra_coords(r, jets.coeff(p)))) {
                    out.fail("pair " + std::to_string(t) + " at gamma " + g.point.str() +
                             " degree " + std::to_string(p) + ": jet outside filtration");
                }
            }
        }
    }
    if (out.pass) out.detail = "20 random bracket pairs satisfy every jet constraint";
    return out;
}

// --- 9: dual lattice membership for sl(2) modules -----------------------------

Outcome criterion_dual_lattice() {
    Outcome out;
    Realization defining = Realization::build(Family::A, 1, ModuleTag::defining, AlgebraForm::sl);
    Realization adjoint = Realization::build(Family::A, 1, ModuleTag::adjoint);
    CoweightH coroot{{1, -1}};
    CoweightH half{{mpq_class(1, 2), mpq_class(-1, 2)}};
    if (!defining.dual_lattice_check(coroot)) out.fail("defining rejects the coroot");
    if (!adjoint.dual_lattice_check(half)) out.fail("adjoint rejects the half-coroot");
    if (defining.dual_lattice_check(half)) out.fail("defining accepts the half-coroot");
    if (out.pass) out.detail = "coroot/half-coroot memberships match on both modules";
    return out;
}

}  // namespace

int main() {
    struct Gate {
        std::string name;
        std::function<Outcome()> run;
        double budget_s;  // 0 = untimed
    };
    const std::vector<Gate> gates = {
        {"dimension formulas", criterion_dimensions, 1.0},
        {"grading facts", criterion_gradings, 0.0},
        {"flag nesting", criterion_flag_nesting, 30.0},
        {"flag from coweight", criterion_flag_from_h, 0.0},
        {"reduction invariance", criterion_reduction_invariance, 0.0},
        {"section dimensions", criterion_section_dimensions, 0.0},
        {"quotient report", criterion_quotient, 0.0},
        {"bracket closure", criterion_bracket_closure, 0.0},
        {"dual lattice", criterion_dual_lattice, 0.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            o = gates[i].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (gates[i].budget_s > 0 && secs > gates[i].budget_s) {
            o.pass = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget of ") +
                        std::to_string(gates[i].budget_s) + " s";
        }
        std::printf("[%s] %zu. %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                    gates[i].name.c_str(), o.detail.c_str(), secs);
        if (!o.pass) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria pass\n", gates.size());
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, gates.size());
    return failures;
}
