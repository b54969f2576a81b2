#pragma once

#include <matdiv/linalg.hpp>
#include <matdiv/ratfun.hpp>
#include <matdiv/realization.hpp>

#include <vector>

namespace matdiv {

// Marked points on the w-line: gamma points carry coweights, pi points carry
// the multiplicities of the bounding divisor D.  Infinity stays unmarked, so
// every global function here is a rational function regular at infinity.
struct GammaPoint {
    Scalar point;
    CoweightH h;
};

struct PiPoint {
    Scalar point;
    long mult = 0;  // multiplicity in D, >= 0
};

struct SurfaceConfig {
    Realization realization;
    std::vector<GammaPoint> gammas;
    std::vector<PiPoint> pis;
    int genus = 0;  // only 0 is supported

    // Pairwise distinct points, gamma/pi sets disjoint, multiplicities >= 0.
    void validate() const;
    long deg_D() const;
};

enum class SpaceKind { L, M, section };

// A space of algebra- or module-valued rational functions, cut out of an
// explicit ambient pole-bounded space by exact jet conditions at the gammas.
struct OperatorSpace {
    SurfaceConfig config;
    SpaceKind kind = SpaceKind::L;
    std::vector<RationalMatrix> basis;
    Subspace coords;  // coefficient vectors over the ambient basis
    int dim = 0;
};

// Algebra-valued functions with poles bounded by gamma_orders on the gammas
// and by the multiplicities of D on the pis; regular at infinity, so the
// count is algebra_dim * (total pole order + 1).
std::vector<RationalMatrix> ambient_basis(const SurfaceConfig& config,
                                          const std::vector<long>& gamma_orders);

// Jets at each gamma confined to the grading filtration: degree p lands in
// tilde_g_p for -k <= p <= k-1, k the grading depth there.
OperatorSpace build_L_space(const SurfaceConfig& config);
// Same pole bounds, but only negative degrees are confined, and degree -1
// gains one extra admissible direction along h_gamma.
OperatorSpace build_M_space(const SurfaceConfig& config);
// Module-valued functions whose jets at each gamma respect the weight flag
// of h_gamma; poles bounded by the flag depth on gammas and by D on pis.
OperatorSpace build_section_space(const SurfaceConfig& config);

RationalMatrix bracket_global(const RationalMatrix& f, const RationalMatrix& g);

struct QuotientReport {
    int dim_L = 0;
    int dim_M = 0;
    int dim_quotient = 0;       // dim M - dim L
    long tangent_formula = 0;   // sum over gammas of sum over positive roots of alpha(h)
    int localization_kernel_dim = 0;  // jets in [-k, k) at every gamma vanish
    bool l_subset_m = false;
    // deg D < |Gamma| and every gamma has grading depth >= 1; only then does
    // the vanishing argument force the localization kernel to zero.
    bool injectivity_applicable = false;

    long excess() const { return dim_quotient - tangent_formula; }
};

QuotientReport quotient_report(const SurfaceConfig& config);

}  // namespace matdiv
