// matdiv: batch front end over the core library.
//
// Subcommands:
//   dims        per-point grading data and moduli dimensions for a scene
//   reduce      diagonal reduction of a germ file, with multiply-back check
//   flag        the subspace chain of a germ's linear system
//   lax-dim     operator-space dimensions and the quotient report
//   verify-quot quotient report with the asserted properties enforced
//   verify-all  the full property suite for a scene
//
// Exit codes: 0 success, 1 a checked property failed, 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <matdiv/divisor.hpp>
#include <matdiv/error.hpp>
#include <matdiv/grading.hpp>
#include <matdiv/lax.hpp>
#include <matdiv/scene.hpp>
#include <matdiv/verify.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace matdiv;

namespace {

struct Cli {
    std::string scene_path;
    std::string germ_path;
    long precision = 0;
    long guard = 0;
    unsigned long long seed = 0;
    bool has_precision = false, has_guard = false, has_seed = false;
    bool as_json = false;
};

// Env beats the flag, the flag beats the scene file.
void resolve_seed(Cli& cli) {
    if (const char* env = std::getenv("MATDIV_SEED")) {
        try {
            cli.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw config_error("MATDIV_SEED must be an unsigned integer, got '" +
                               std::string(env) + "'");
        }
        cli.has_seed = true;
    }
}

Scene scene_from(const Cli& cli) {
    if (cli.scene_path.empty()) throw config_error("this subcommand needs --scene FILE");
    Scene scene = load_scene(cli.scene_path);
    if (cli.has_precision) scene.options.precision = cli.precision;
    if (cli.has_guard) scene.options.guard = cli.guard;
    if (cli.has_seed) scene.options.seed = cli.seed;
    return scene;
}

GermFile germ_from(const Cli& cli) {
    if (cli.germ_path.empty()) throw config_error("this subcommand needs --germ FILE");
    return load_germ(cli.germ_path);
}

ordered_json options_json(const SceneOptions& o) {
    return ordered_json{{"precision", o.precision}, {"guard", o.guard}, {"seed", o.seed}};
}

ordered_json mat_json(const Mat& m) {
    ordered_json grid = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        grid.push_back(row);
    }
    return grid;
}

// ----- dims -----

// Closed-form value when the scene is one of the tabulated instances:
// module = defining, every h = (1, 0, ..., 0), and the point count equals
// n * genus_for_formulas.  Everything else gets computed dimensions only.
struct ClosedForm {
    bool known = false;
    std::string name;
    long n = 0;
    int genus = 0;
    long value = 0;
};

bool is_first_unit(const CoweightH& h) {
    for (std::size_t i = 0; i < h.eps.size(); ++i)
        if (h.eps[i] != (i == 0 ? 1 : 0)) return false;
    return !h.eps.empty();
}

ClosedForm closed_form(const Scene& scene) {
    const Realization& r = scene.config.realization;
    const long g = scene.genus_for_formulas;
    ClosedForm cf;
    if (scene.config.gammas.empty() || g < 1) return cf;
    if (r.module_tag != ModuleTag::defining) return cf;
    long n = 0;
    if (r.rs.family == Family::A && r.form == AlgebraForm::gl) {
        n = r.rs.rank + 1;
        cf.name = "n^2(g-1)+1";
        cf.value = n * n * (g - 1) + 1;
    } else if (r.rs.family == Family::C && r.form == AlgebraForm::standard) {
        n = r.rs.rank;
        cf.name = "(2n+1)n(g-1)";
        cf.value = (2 * n + 1) * n * (g - 1);
    } else if (r.rs.family == Family::D && r.form == AlgebraForm::standard) {
        n = r.rs.rank;
        cf.name = "(2n-1)n(g-1)";
        cf.value = (2 * n - 1) * n * (g - 1);
    } else {
        return cf;
    }
    for (const GammaPoint& gp : scene.config.gammas)
        if (!is_first_unit(gp.h)) return cf;
    if (static_cast<long>(scene.config.gammas.size()) != n * g) return cf;
    cf.known = true;
    cf.n = n;
    cf.genus = static_cast<int>(g);
    return cf;
}

int cmd_dims(const Cli& cli) {
    Scene scene = scene_from(cli);
    const Realization& r = scene.config.realization;

    std::vector<CoweightH> hs;
    for (const GammaPoint& gp : scene.config.gammas) hs.push_back(gp.h);

    ordered_json points = ordered_json::array();
    for (const GammaPoint& gp : scene.config.gammas) {
        LieGrading gr = compute_grading(r, gp.h);
        ordered_json pt{{"point", gp.point.str()},
                        {"h", gp.h.str()},
                        {"depth", gr.depth},
                        {"contribution", point_contribution(r, gp.h)}};
        ordered_json piece_dims = ordered_json::array();
        for (int s = -gr.depth; s <= gr.depth; ++s) piece_dims.push_back(gr.piece_dim(s));
        pt["piece_dims"] = piece_dims;
        points.push_back(pt);
    }

    const long fixed = moduli_dimension(r, hs, ModuliMode::fixed_gamma);
    const long moving = moduli_dimension(r, hs, ModuliMode::moving_gamma);
    const long mod_adg = moduli_dimension(r, hs, ModuliMode::moving_gamma_mod_adG);
    ClosedForm cf = closed_form(scene);

    if (cli.as_json) {
        ordered_json out{{"command", "dims"},
                         {"algebra", r.tag()},
                         {"algebra_dim", r.algebra_dim()},
                         {"points", points},
                         {"modes",
                          ordered_json{{"fixed_gamma", fixed},
                                       {"moving_gamma", moving},
                                       {"moving_gamma_mod_adG", mod_adg}}}};
        if (cf.known) {
            out["formula"] = ordered_json{{"name", cf.name},
                                          {"n", cf.n},
                                          {"genus", cf.genus},
                                          {"value", cf.value},
                                          {"matches_mod_adG", cf.value == mod_adg}};
        }
        out["options"] = options_json(scene.options);
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "algebra " << r.tag() << ", dim " << r.algebra_dim() << "\n";
    for (const GammaPoint& gp : scene.config.gammas) {
        LieGrading gr = compute_grading(r, gp.h);
        std::cout << "gamma " << gp.point.str() << ": h = " << gp.h.str() << ", depth "
                  << gr.depth << ", contribution " << point_contribution(r, gp.h) << "\n";
    }
    std::cout << "fixed_gamma           " << fixed << "\n";
    std::cout << "moving_gamma          " << moving << "\n";
    std::cout << "moving_gamma_mod_adG  " << mod_adg << "\n";
    if (cf.known) {
        std::cout << "formula " << cf.name << " with n = " << cf.n << ", g = " << cf.genus
                  << ": " << cf.value
                  << (cf.value == mod_adg ? " (matches moving_gamma_mod_adG)"
                                          : " (DIFFERS from moving_gamma_mod_adG)")
                  << "\n";
    }
    return 0;
}

// ----- reduce -----

int cmd_reduce(const Cli& cli) {
    GermFile gf = germ_from(cli);
    if (gf.realization.rs.family != Family::A)
        throw config_error("unsupported family for reduction: " +
                           family_to_string(gf.realization.rs.family) +
                           " (diagonal reduction needs a type-A realization)");
    const long guard = cli.has_guard ? cli.guard : 4;

    ReducedForm rf = smith_reduce(gf.germ, guard);
    auto [d_left, k] = reduced_form_left(gf.germ, guard);

    // Multiply back: left * psi * right must equal diag(z^d) on the window
    // both sides certify.
    MatSeries lhs = rf.left * gf.germ.psi * rf.right;
    const int n = gf.germ.psi.rows();
    std::vector<std::vector<LaurentSeries>> grid(
        static_cast<std::size_t>(n),
        std::vector<LaurentSeries>(static_cast<std::size_t>(n),
                                   LaurentSeries::zero(lhs.horizon())));
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            LaurentSeries::monomial(Scalar(1), rf.exponents[static_cast<std::size_t>(i)],
                                    lhs.horizon());
    MatSeries residual = lhs - MatSeries::from_entries(grid);
    const bool exact = residual.is_zero_window();

    if (cli.as_json) {
        ordered_json out{{"command", "reduce"},
                         {"algebra", gf.realization.tag()},
                         {"point", gf.point.str()},
                         {"exponents", rf.exponents},
                         {"unit_head", mat_json(k.coeff(0))},
                         {"residual_zero", exact},
                         {"window",
                          ordered_json{{"low", lhs.support_low()}, {"horizon", lhs.horizon()}}}};
        std::cout << out.dump(2) << "\n";
        return exact ? 0 : 1;
    }

    std::cout << "germ at " << gf.point.str() << ", " << gf.realization.tag() << "\n";
    std::cout << "d = (";
    for (std::size_t i = 0; i < rf.exponents.size(); ++i)
        std::cout << (i ? ", " : "") << rf.exponents[i];
    std::cout << ")\n";
    std::cout << "unit factor k(0) =\n" << k.coeff(0).str() << "\n";
    std::cout << "multiply-back residual on [" << lhs.support_low() << ", " << lhs.horizon()
              << "): " << (exact ? "zero" : "NONZERO") << "\n";
    if (!exact) {
        std::cout << "residual =\n" << residual.str() << "\n";
        return 1;
    }
    return 0;
}

// ----- flag -----

int cmd_flag(const Cli& cli) {
    GermFile gf = germ_from(cli);
    Flag f = flag_from_system(gf.germ).canonical();

    if (cli.as_json) {
        ordered_json chain = ordered_json::array();
        for (int i = f.lo(); i <= f.hi(); ++i) {
            chain.push_back(ordered_json{{"index", i},
                                         {"dim", f.at(i).dim()},
                                         {"basis", mat_json(f.at(i).basis())}});
        }
        ordered_json out{{"command", "flag"},
                         {"algebra", gf.realization.tag()},
                         {"point", gf.point.str()},
                         {"ambient", f.ambient()},
                         {"nested", f.nested()},
                         {"complete_right", f.complete_right()},
                         {"chain", chain}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "germ at " << gf.point.str() << ", " << gf.realization.tag() << "\n";
    std::cout << f.str() << "\n";
    std::cout << "nested: " << (f.nested() ? "yes" : "no")
              << ", reaches full space: " << (f.complete_right() ? "yes" : "no") << "\n";
    return 0;
}

// ----- lax-dim / verify-quot -----

ordered_json quotient_json(const SurfaceConfig& config, const QuotientReport& qr) {
    return ordered_json{{"gammas", config.gammas.size()},
                        {"deg_D", config.deg_D()},
                        {"dim_L", qr.dim_L},
                        {"dim_M", qr.dim_M},
                        {"dim_quotient", qr.dim_quotient},
                        {"tangent_formula", qr.tangent_formula},
                        {"excess", qr.excess()},
                        {"l_subset_m", qr.l_subset_m},
                        {"localization_kernel_dim", qr.localization_kernel_dim},
                        {"injectivity_applicable", qr.injectivity_applicable}};
}

void quotient_text(const SurfaceConfig& config, const QuotientReport& qr) {
    std::cout << "|Gamma| = " << config.gammas.size() << ", deg D = " << config.deg_D() << "\n";
    std::cout << "dim L = " << qr.dim_L << "\n";
    std::cout << "dim M = " << qr.dim_M << "\n";
    std::cout << "dim M/L = " << qr.dim_quotient << "\n";
    std::cout << "tangent formula sum_gamma sum_{alpha>0} alpha(h) = " << qr.tangent_formula
              << "\n";
    std::cout << "excess = " << qr.excess() << "\n";
    std::cout << "L subset of M: " << (qr.l_subset_m ? "yes" : "NO") << "\n";
    std::cout << "localization kernel dim = " << qr.localization_kernel_dim
              << (qr.injectivity_applicable ? " (vanishing argument applies)"
                                            : " (vanishing argument not applicable)")
              << "\n";
}

int cmd_lax_dim(const Cli& cli) {
    Scene scene = scene_from(cli);
    QuotientReport qr = quotient_report(scene.config);
    if (cli.as_json) {
        ordered_json out{{"command", "lax-dim"}};
        out.update(quotient_json(scene.config, qr));
        out["options"] = options_json(scene.options);
        std::cout << out.dump(2) << "\n";
    } else {
        quotient_text(scene.config, qr);
    }
    return 0;
}

int cmd_verify_quot(const Cli& cli) {
    Scene scene = scene_from(cli);
    QuotientReport qr = quotient_report(scene.config);

    std::string failing;
    if (!qr.l_subset_m) failing = "monotonicity (L subset of M)";
    else if (qr.injectivity_applicable && qr.localization_kernel_dim != 0)
        failing = "localization-injectivity";

    if (cli.as_json) {
        ordered_json out{{"command", "verify-quot"}};
        out.update(quotient_json(scene.config, qr));
        out["verdict"] = failing.empty() ? "pass" : "fail";
        if (!failing.empty()) out["failing_property"] = failing;
        out["options"] = options_json(scene.options);
        std::cout << out.dump(2) << "\n";
    } else {
        quotient_text(scene.config, qr);
        if (failing.empty()) {
            std::cout << "verdict: pass\n";
        } else {
            std::cout << "verdict: FAIL — " << failing << "\n";
        }
    }
    return failing.empty() ? 0 : 1;
}

// ----- verify-all -----

int cmd_verify_all(const Cli& cli) {
    Scene scene = scene_from(cli);
    std::vector<CheckResult> results = verify_scene(scene);

    std::string first_fail;
    int passed = 0, skipped = 0;
    for (const CheckResult& res : results) {
        if (res.status == CheckStatus::pass) ++passed;
        if (res.status == CheckStatus::skip) ++skipped;
        if (res.status == CheckStatus::fail && first_fail.empty()) first_fail = res.name;
    }

    if (cli.as_json) {
        ordered_json checks = ordered_json::array();
        for (const CheckResult& res : results)
            checks.push_back(ordered_json{{"name", res.name},
                                          {"status", check_status_str(res.status)},
                                          {"detail", res.detail}});
        ordered_json out{{"command", "verify-all"},
                         {"checks", checks},
                         {"passed", passed},
                         {"skipped", skipped},
                         {"failed", static_cast<int>(results.size()) - passed - skipped},
                         {"all_passed", first_fail.empty()}};
        if (!first_fail.empty()) out["first_failing_property"] = first_fail;
        out["options"] = options_json(scene.options);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const CheckResult& res : results) {
            std::string tag = check_status_str(res.status);
            for (char& c : tag) c = static_cast<char>(std::toupper(c));
            std::cout << "[" << tag << "] " << res.name;
            if (!res.detail.empty()) std::cout << ": " << res.detail;
            std::cout << "\n";
        }
        if (first_fail.empty()) {
            std::cout << "result: pass (" << passed << " passed, " << skipped << " skipped)\n";
        } else {
            std::cout << "result: FAIL — first failing property: " << first_fail << "\n";
        }
    }
    return first_fail.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matrix divisors, module gradings, and operator spaces on the rational surface"};
    app.require_subcommand(1);

    Cli cli;
    auto* opt_scene = app.add_option("--scene", cli.scene_path, "scene JSON file");
    auto* opt_germ = app.add_option("--germ", cli.germ_path, "germ JSON file");
    auto* opt_prec =
        app.add_option("--precision", cli.precision, "series precision override (>= 1)")
            ->check(CLI::PositiveNumber);
    auto* opt_guard = app.add_option("--guard", cli.guard, "reduction guard override (>= 0)")
                          ->check(CLI::NonNegativeNumber);
    auto* opt_seed = app.add_option("--seed", cli.seed, "seed for randomized checks");
    app.add_flag("--json", cli.as_json, "emit a JSON report instead of text");

    CLI::App* sub_dims =
        app.add_subcommand("dims", "grading depths and moduli dimensions for a scene");
    CLI::App* sub_reduce =
        app.add_subcommand("reduce", "diagonal reduction of a germ, with multiply-back check");
    CLI::App* sub_flag = app.add_subcommand("flag", "subspace chain of a germ's linear system");
    CLI::App* sub_lax = app.add_subcommand("lax-dim", "operator-space dimensions for a scene");
    CLI::App* sub_quot =
        app.add_subcommand("verify-quot", "quotient report with asserted properties");
    CLI::App* sub_all = app.add_subcommand("verify-all", "full property suite for a scene");
    for (CLI::App* sub : {sub_dims, sub_reduce, sub_flag, sub_lax, sub_quot, sub_all})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cli.has_precision = opt_prec->count() > 0;
    cli.has_guard = opt_guard->count() > 0;
    cli.has_seed = opt_seed->count() > 0;
    (void)opt_scene;
    (void)opt_germ;

    try {
        resolve_seed(cli);
        if (sub_dims->parsed()) return cmd_dims(cli);
        if (sub_reduce->parsed()) return cmd_reduce(cli);
        if (sub_flag->parsed()) return cmd_flag(cli);
        if (sub_lax->parsed()) return cmd_lax_dim(cli);
        if (sub_quot->parsed()) return cmd_verify_quot(cli);
        return cmd_verify_all(cli);
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
