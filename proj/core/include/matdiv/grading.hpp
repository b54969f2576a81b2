#pragma once

#include <matdiv/flag.hpp>
#include <matdiv/linalg.hpp>
#include <matdiv/realization.hpp>

#include <string>
#include <vector>

namespace matdiv {

// Eigenspace decomposition g_p = {x : [h,x] = p x}, stored in coordinates
// with respect to Realization::algebra_basis(). The pieces are computed both
// as ad-h eigenspaces and as root-space sums; construction checks they agree.
struct LieGrading {
    Realization realization;
    CoweightH h;
    int depth = 0;          // largest p with g_p nonzero
    std::vector<Subspace> pieces;  // g_{-depth} .. g_{depth}

    const Subspace& piece(int p) const;  // zero outside the stored range
    int piece_dim(int p) const { return piece(p).dim(); }
};

// Requires h dominant and integral.
LieGrading compute_grading(const Realization& r, const CoweightH& h);

// Cumulative chain of the grading: tilde_g_p = sum of g_q over q <= p.
struct LieFiltration {
    int ambient = 0;  // algebra dimension
    int lo = 0;       // -depth
    std::vector<Subspace> tilde;  // tilde_g_lo .. tilde_g_{-lo}

    int hi() const { return lo + static_cast<int>(tilde.size()) - 1; }
    // Zero below the range, the full algebra above it.
    const Subspace& at(int p) const;
};

LieFiltration filtration_of(const LieGrading& g);

// Module eigenspaces V_i = {v : h v = -i v} and the induced chain
// F_j = sum of V_s over s <= j.  The stored range covers [-m, m] with m the
// pairing of the highest weight against h, widened when some weight pairs
// below -m (possible for gl coweights with negative entries), so the chain
// always ends at the full module.
struct ModuleGrading {
    CoweightH h;
    long m = 0;                    // highest-weight pairing chi(h)
    long lo = 0, hi = 0;           // stored index range
    std::vector<Subspace> pieces;  // V_lo .. V_hi in module coordinates
    Flag flag;                     // F_lo .. F_hi

    const Subspace& piece(long i) const;  // zero outside the stored range
};

// Requires h in the dual lattice of the module's weights.
ModuleGrading compute_module_grading(const Realization& r, const CoweightH& h);

// Monomials z^d x_alpha spanning the per-point tangent directions: one entry
// per positive root alpha and degree 0 <= d < alpha(h).
struct TangentEntry {
    Root alpha;
    long degree = 0;
};

std::vector<TangentEntry> tangent_basis(const Realization& r, const CoweightH& h);

enum class ModuliMode {
    fixed_gamma,             // per-point sum of s * dim g_s over s >= 1
    moving_gamma,            // adds one direction per point
    moving_gamma_mod_adG,    // subtracts dim g minus the center's dimension
};

ModuliMode moduli_mode_from_string(const std::string& s);
std::string moduli_mode_to_string(ModuliMode m);

// Dimension of the center {x : [x,y] = 0 for all y} of the realized algebra.
int center_dimension(const Realization& r);

// Total over all marked points; empty configuration gives 0 in every mode.
long moduli_dimension(const Realization& r, const std::vector<CoweightH>& hs, ModuliMode mode);

// Per-point contribution in fixed_gamma mode: sum of s * dim g_s, s >= 1.
long point_contribution(const Realization& r, const CoweightH& h);

}  // namespace matdiv
