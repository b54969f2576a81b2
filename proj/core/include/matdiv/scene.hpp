#pragma once

#include <matdiv/divisor.hpp>
#include <matdiv/lax.hpp>

#include <string>

namespace matdiv {

struct SceneOptions {
    long precision = 8;
    long guard = 4;
    unsigned long long seed = 1;
};

// A surface configuration plus run options, as read from a JSON scene file.
// genus_for_formulas feeds only the closed-form dimension report; the surface
// itself is always rational.
struct Scene {
    SurfaceConfig config;
    int genus_for_formulas = 1;
    SceneOptions options;
};

Scene parse_scene(const std::string& text);
std::string emit_scene(const Scene& scene);
Scene load_scene(const std::string& path);

// A matrix germ at a marked point, stored as an explicit coefficient window.
struct GermFile {
    Realization realization;
    Scalar point;
    DivisorGerm germ;
};

GermFile parse_germ(const std::string& text);
std::string emit_germ(const GermFile& gf);
GermFile load_germ(const std::string& path);

}  // namespace matdiv
