#pragma once

#include <matdiv/flag.hpp>
#include <matdiv/grading.hpp>
#include <matdiv/realization.hpp>
#include <matdiv/series.hpp>

#include <utility>
#include <vector>

namespace matdiv {

// Germ at a marked point of a matrix-valued function, invertible over the
// Laurent field within the knowledge window.
struct DivisorGerm {
    Realization realization;
    MatSeries psi;

    // max(0, -valuation): the m of the pole expansion.
    long pole_order() const;
};

// Validates the shape against the realization and that the window certifies
// a nonzero leading coefficient.
DivisorGerm make_germ(Realization r, MatSeries psi);

// Diagonal germ z^h; the coweight must pair integrally with every module
// weight so the exponents are integers.
DivisorGerm coweight_germ(const Realization& r, const CoweightH& h, long horizon);

// left * psi * right = diag(z^exponents) with exponents descending and both
// factors invertible of valuation zero; residual = z^{-exponents} left psi,
// the unit factor of the one-sided form psi = left^{-1} z^exponents residual.
struct ReducedForm {
    std::vector<long> exponents;
    MatSeries left, right;
    MatSeries residual;
};

// guard: certified coefficient degrees demanded beyond the top exponent.
ReducedForm smith_reduce(const DivisorGerm& germ, long guard = 4);

// One-sided reduction psi = z^d k(z): the exponents and the unit factor.
std::pair<std::vector<long>, MatSeries> reduced_form_left(const DivisorGerm& germ, long guard = 4);

// Subspace chain of the germ's linear system: F_i is the projection onto
// the degree-i block of the joint solution space of the equations forcing
// psi * f to be holomorphic.
Flag flag_from_system(const DivisorGerm& germ);

// The chain of the module grading of h (the flag of the germ z^h).
Flag flag_from_h(const Realization& r, const CoweightH& h);

// True iff psi * f extends holomorphically; f is a column series.  Throws
// precision_error when the window cannot decide.
bool is_section(const MatSeries& f, const DivisorGerm& germ);

// Endomorphisms shifting the chain: level i holds {X : X F_j ⊆ F_{j+i} ∀j},
// in coordinates over the realization's algebra basis.
LieFiltration endomorphism_filtration(const Flag& flag, const Realization& r);

}  // namespace matdiv
