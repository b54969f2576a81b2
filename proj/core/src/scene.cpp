#include <matdiv/scene.hpp>

#include <matdiv/error.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace matdiv {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
    throw parse_error(path + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(path + "." + key, "missing");
    return *it;
}

void only_keys(const json& j, std::initializer_list<const char*> keys,
               const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* allowed : keys)
            if (k == allowed) known = true;
        if (!known) bad(path + "." + k, "unknown field");
    }
}

long need_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    return j.get<long>();
}

std::string scalar_text(const json& j, const std::string& path) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    bad(path, "expected an integer or a rational string like \"1/2\"");
}

Scalar need_scalar(const json& j, const std::string& path) {
    try {
        return Scalar::parse(scalar_text(j, path));
    } catch (const error& e) {
        bad(path, e.what());
    }
}

Realization parse_algebra(const json& j, const std::string& path) {
    only_keys(j, {"family", "rank", "module", "form"}, path);
    const json& fam = need(j, "family", path);
    if (!fam.is_string()) bad(path + ".family", "expected \"A\", \"B\", \"C\" or \"D\"");
    long rank = need_integer(need(j, "rank", path), path + ".rank");
    ModuleTag tag = ModuleTag::defining;
    if (j.contains("module")) {
        const json& m = j["module"];
        if (!m.is_string()) bad(path + ".module", "expected \"defining\" or \"adjoint\"");
        try {
            tag = module_tag_from_string(m.get<std::string>());
        } catch (const error& e) {
            bad(path + ".module", e.what());
        }
    }
    AlgebraForm form = AlgebraForm::standard;
    if (j.contains("form")) {
        const json& f = j["form"];
        std::string s = f.is_string() ? f.get<std::string>() : "";
        if (s == "gl") form = AlgebraForm::gl;
        else if (s == "sl") form = AlgebraForm::sl;
        else if (s == "standard") form = AlgebraForm::standard;
        else bad(path + ".form", "expected \"gl\", \"sl\" or \"standard\"");
    }
    try {
        return Realization::build(family_from_string(fam.get<std::string>()),
                                  static_cast<int>(rank), tag, form);
    } catch (const error& e) {
        bad(path, e.what());
    }
}

CoweightH parse_coweight(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of coordinates");
    std::vector<std::string> entries;
    for (std::size_t i = 0; i < j.size(); ++i)
        entries.push_back(scalar_text(j[i], path + "[" + std::to_string(i) + "]"));
    try {
        return CoweightH::parse(entries);
    } catch (const error& e) {
        bad(path, e.what());
    }
}

std::string form_to_string(AlgebraForm f) {
    switch (f) {
        case AlgebraForm::gl: return "gl";
        case AlgebraForm::sl: return "sl";
        default: return "standard";
    }
}

json emit_algebra(const Realization& r) {
    json a;
    a["family"] = family_to_string(r.rs.family);
    a["rank"] = r.rs.rank;
    a["module"] = module_tag_to_string(r.module_tag);
    a["form"] = form_to_string(r.form);
    return a;
}

json emit_coweight(const CoweightH& h) {
    json out = json::array();
    for (const mpq_class& e : h.eps) out.push_back(e.get_str());
    return out;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Scene parse_scene(const std::string& text) {
    json j = parse_text(text);
    only_keys(j, {"algebra", "gammas", "pis", "genus_for_formulas", "options"}, "scene");

    Scene scene;
    scene.config.realization = parse_algebra(need(j, "algebra", "scene"), "scene.algebra");

    const json& gammas = need(j, "gammas", "scene");
    if (!gammas.is_array()) bad("scene.gammas", "expected an array");
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        std::string path = "scene.gammas[" + std::to_string(i) + "]";
        only_keys(gammas[i], {"point", "h"}, path);
        GammaPoint g;
        g.point = need_scalar(need(gammas[i], "point", path), path + ".point");
        g.h = parse_coweight(need(gammas[i], "h", path), path + ".h");
        scene.config.gammas.push_back(std::move(g));
    }

    const json& pis = need(j, "pis", "scene");
    if (!pis.is_array()) bad("scene.pis", "expected an array");
    for (std::size_t i = 0; i < pis.size(); ++i) {
        std::string path = "scene.pis[" + std::to_string(i) + "]";
        only_keys(pis[i], {"point", "mult"}, path);
        PiPoint p;
        p.point = need_scalar(need(pis[i], "point", path), path + ".point");
        p.mult = need_integer(need(pis[i], "mult", path), path + ".mult");
        scene.config.pis.push_back(std::move(p));
    }

    if (j.contains("genus_for_formulas")) {
        long g = need_integer(j["genus_for_formulas"], "scene.genus_for_formulas");
        if (g < 0) bad("scene.genus_for_formulas", "must be nonnegative");
        scene.genus_for_formulas = static_cast<int>(g);
    }

    if (j.contains("options")) {
        const json& o = j["options"];
        only_keys(o, {"precision", "guard", "seed"}, "scene.options");
        if (o.contains("precision")) {
            scene.options.precision = need_integer(o["precision"], "scene.options.precision");
            if (scene.options.precision < 1) bad("scene.options.precision", "must be >= 1");
        }
        if (o.contains("guard")) {
            scene.options.guard = need_integer(o["guard"], "scene.options.guard");
            if (scene.options.guard < 0) bad("scene.options.guard", "must be >= 0");
        }
        if (o.contains("seed")) {
            if (!o["seed"].is_number_unsigned() && !o["seed"].is_number_integer())
                bad("scene.options.seed", "expected an integer");
            scene.options.seed = o["seed"].get<unsigned long long>();
        }
    }

    scene.config.validate();
    return scene;
}

std::string emit_scene(const Scene& scene) {
    json j;
    j["algebra"] = emit_algebra(scene.config.realization);
    j["gammas"] = json::array();
    for (const GammaPoint& g : scene.config.gammas)
        j["gammas"].push_back({{"point", g.point.str()}, {"h", emit_coweight(g.h)}});
    j["pis"] = json::array();
    for (const PiPoint& p : scene.config.pis)
        j["pis"].push_back({{"point", p.point.str()}, {"mult", p.mult}});
    j["genus_for_formulas"] = scene.genus_for_formulas;
    j["options"] = {{"precision", scene.options.precision},
                    {"guard", scene.options.guard},
                    {"seed", scene.options.seed}};
    return j.dump(2) + "\n";
}

Scene load_scene(const std::string& path) { return parse_scene(read_file(path)); }

GermFile parse_germ(const std::string& text) {
    json j = parse_text(text);
    only_keys(j, {"algebra", "point", "valuation", "precision", "coeffs"}, "germ");

    GermFile gf;
    gf.realization = parse_algebra(need(j, "algebra", "germ"), "germ.algebra");
    gf.point = need_scalar(need(j, "point", "germ"), "germ.point");
    long valuation = need_integer(need(j, "valuation", "germ"), "germ.valuation");

    const json& coeffs = need(j, "coeffs", "germ");
    if (!coeffs.is_array() || coeffs.empty())
        bad("germ.coeffs", "expected a nonempty array of matrices");
    if (j.contains("precision") &&
        need_integer(j["precision"], "germ.precision") !=
            static_cast<long>(coeffs.size()))
        bad("germ.precision", "does not match the number of coefficient matrices");

    int n = gf.realization.module_dim;
    std::vector<Mat> mats;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        std::string mpath = "germ.coeffs[" + std::to_string(t) + "]";
        const json& m = coeffs[t];
        if (!m.is_array() || static_cast<int>(m.size()) != n)
            bad(mpath, "expected " + std::to_string(n) + " rows");
        Mat mat(n, n);
        for (int i = 0; i < n; ++i) {
            const json& row = m[i];
            std::string rpath = mpath + "[" + std::to_string(i) + "]";
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                bad(rpath, "expected " + std::to_string(n) + " entries");
            for (int c = 0; c < n; ++c)
                mat.at(i, c) = need_scalar(row[c], rpath + "[" + std::to_string(c) + "]");
        }
        mats.push_back(std::move(mat));
    }
    gf.germ = make_germ(gf.realization, MatSeries(valuation, std::move(mats)));
    return gf;
}

std::string emit_germ(const GermFile& gf) {
    const MatSeries& psi = gf.germ.psi;
    json j;
    j["algebra"] = emit_algebra(gf.realization);
    j["point"] = gf.point.str();
    j["valuation"] = psi.support_low();
    j["precision"] = psi.horizon() - psi.support_low();
    json coeffs = json::array();
    for (long d = psi.support_low(); d < psi.horizon(); ++d) {
        Mat m = psi.coeff(d);
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
            rows.push_back(std::move(row));
        }
        coeffs.push_back(std::move(rows));
    }
    j["coeffs"] = std::move(coeffs);
    return j.dump(2) + "\n";
}

GermFile load_germ(const std::string& path) { return parse_germ(read_file(path)); }

}  // namespace matdiv
