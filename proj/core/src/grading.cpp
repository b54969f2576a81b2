#include <matdiv/error.hpp>
#include <matdiv/grading.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace matdiv {

namespace {

// Coordinates of x over the given matrix basis; x must lie in the span.
std::vector<Scalar> coordinates_over(const std::vector<Mat>& basis, const Mat& x) {
    int n2 = x.rows() * x.cols();
    Mat cols(n2, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::vector<Scalar> f = basis[j].flatten();
        for (int i = 0; i < n2; ++i) cols.at(i, static_cast<int>(j)) = f[static_cast<std::size_t>(i)];
    }
    auto sol = solve_linear(cols, x.flatten());
    if (!sol) throw domain_error("element lies outside the realized algebra");
    return *sol;
}

Subspace coordinate_axes(const std::vector<int>& indices, int ambient) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(indices.size());
    for (int idx : indices) {
        std::vector<Scalar> e(static_cast<std::size_t>(ambient), Scalar(0));
        e[static_cast<std::size_t>(idx)] = Scalar(1);
        rows.push_back(std::move(e));
    }
    return Subspace::span_of_vectors(rows, ambient);
}

}  // namespace

const Subspace& LieGrading::piece(int p) const {
    if (p < -depth || p > depth) {
        thread_local Subspace zero = Subspace::zero(0);
        if (zero.ambient() != pieces.front().ambient()) zero = Subspace::zero(pieces.front().ambient());
        return zero;
    }
    return pieces[static_cast<std::size_t>(p + depth)];
}

LieGrading compute_grading(const Realization& r, const CoweightH& h) {
    r.check_coweight(h);
    if (!r.integral(h) || !r.dominant(h))
        throw domain_error("grading element must be dominant and integral");

    const std::vector<Mat> basis = r.algebra_basis();
    const int dimg = static_cast<int>(basis.size());
    const int ncartan = static_cast<int>(r.cartan_basis.size());
    const Mat H = r.coweight_matrix(h);

    // ad-h in basis coordinates: column j holds the coordinates of [H, b_j].
    Mat ad(dimg, dimg);
    for (int j = 0; j < dimg; ++j) {
        std::vector<Scalar> c = coordinates_over(basis, H.commutator(basis[static_cast<std::size_t>(j)]));
        for (int i = 0; i < dimg; ++i) ad.at(i, j) = c[static_cast<std::size_t>(i)];
    }

    int depth = 0;
    for (const Root& a : r.rs.roots)
        depth = std::max(depth, static_cast<int>(std::labs(r.pair(a, h))));

    LieGrading out;
    out.realization = r;
    out.h = h;
    out.depth = depth;
    for (int p = -depth; p <= depth; ++p) {
        Mat shifted = ad;
        for (int i = 0; i < dimg; ++i) shifted.at(i, i) -= Scalar(p);
        Subspace eig = nullspace(shifted);

        std::vector<int> idx;
        if (p == 0)
            for (int i = 0; i < ncartan; ++i) idx.push_back(i);
        for (std::size_t a = 0; a < r.root_order.size(); ++a)
            if (r.pair(r.root_order[a], h) == p) idx.push_back(ncartan + static_cast<int>(a));
        Subspace axes = coordinate_axes(idx, dimg);

        if (eig != axes)
            throw std::logic_error("eigenspace and root-space computations of the grading disagree");
        out.pieces.push_back(std::move(eig));
    }
    return out;
}

const Subspace& LieFiltration::at(int p) const {
    if (p < lo) {
        thread_local Subspace zero = Subspace::zero(0);
        if (zero.ambient() != ambient) zero = Subspace::zero(ambient);
        return zero;
    }
    if (p > hi()) return tilde.back();
    return tilde[static_cast<std::size_t>(p - lo)];
}

LieFiltration filtration_of(const LieGrading& g) {
    LieFiltration f;
    f.ambient = g.pieces.front().ambient();
    f.lo = -g.depth;
    Subspace acc = Subspace::zero(f.ambient);
    for (const Subspace& piece : g.pieces) {
        acc = acc.sum(piece);
        f.tilde.push_back(acc);
    }
    return f;
}

const Subspace& ModuleGrading::piece(long i) const {
    if (i < lo || i > hi) {
        thread_local Subspace zero = Subspace::zero(0);
        if (zero.ambient() != pieces.front().ambient()) zero = Subspace::zero(pieces.front().ambient());
        return zero;
    }
    return pieces[static_cast<std::size_t>(i - lo)];
}

ModuleGrading compute_module_grading(const Realization& r, const CoweightH& h) {
    r.check_coweight(h);
    if (!r.dual_lattice_check(h))
        throw domain_error("coweight pairs non-integrally with a module weight");

    ModuleGrading out;
    out.h = h;
    out.m = r.chi_value(h);

    // Weight support: V_i lives at i = -mu(h).
    long min_mu = 0, max_mu = 0;
    for (std::size_t b = 0; b < r.module_weights.size(); ++b) {
        mpq_class v = r.weight_value(r.module_weights[b], h);
        long vi = v.get_num().get_si();
        if (b == 0) { min_mu = max_mu = vi; }
        min_mu = std::min(min_mu, vi);
        max_mu = std::max(max_mu, vi);
    }
    out.lo = std::min(-out.m, -max_mu);
    out.hi = std::max(out.m, -min_mu);

    const int n = r.module_dim;
    const Mat H = r.coweight_matrix(h);
    std::vector<Subspace> chain;
    Subspace acc = Subspace::zero(n);
    for (long i = out.lo; i <= out.hi; ++i) {
        Mat shifted = H;
        for (int d = 0; d < n; ++d) shifted.at(d, d) += Scalar(i);
        Subspace eig = nullspace(shifted);

        std::vector<int> idx;
        for (std::size_t b = 0; b < r.module_weights.size(); ++b)
            if (r.weight_value(r.module_weights[b], h) == mpq_class(-i)) idx.push_back(static_cast<int>(b));
        Subspace axes = coordinate_axes(idx, n);
        if (eig != axes)
            throw std::logic_error("eigenspace and weight-bucket computations of the module grading disagree");

        acc = acc.sum(eig);
        out.pieces.push_back(std::move(eig));
        chain.push_back(acc);
    }
    out.flag = Flag(n, static_cast<int>(out.lo), std::move(chain));
    return out;
}

std::vector<TangentEntry> tangent_basis(const Realization& r, const CoweightH& h) {
    r.check_coweight(h);
    if (!r.integral(h) || !r.dominant(h))
        throw domain_error("grading element must be dominant and integral");
    std::vector<TangentEntry> out;
    for (const Root& a : r.rs.positive) {
        long p = r.pair(a, h);
        for (long d = 0; d < p; ++d) out.push_back({a, d});
    }
    return out;
}

ModuliMode moduli_mode_from_string(const std::string& s) {
    if (s == "fixed") return ModuliMode::fixed_gamma;
    if (s == "moving") return ModuliMode::moving_gamma;
    if (s == "moving_mod_adg") return ModuliMode::moving_gamma_mod_adG;
    throw config_error("unknown moduli mode: " + s);
}

std::string moduli_mode_to_string(ModuliMode m) {
    switch (m) {
        case ModuliMode::fixed_gamma: return "fixed";
        case ModuliMode::moving_gamma: return "moving";
        case ModuliMode::moving_gamma_mod_adG: return "moving_mod_adg";
    }
    throw std::logic_error("unreachable");
}

int center_dimension(const Realization& r) {
    const std::vector<Mat> basis = r.algebra_basis();
    const int dimg = static_cast<int>(basis.size());
    // Intersect centralizers one generator at a time, keeping only the
    // surviving candidate space; the commutator systems stay tiny once the
    // space shrinks, and an empty space ends the scan early.
    Subspace cand = Subspace::full(dimg);
    for (const Mat& b : basis) {
        const int s = cand.dim();
        if (s == 0) break;
        std::vector<Mat> members;
        members.reserve(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) {
            Mat x(basis.front().rows(), basis.front().cols());
            for (int j = 0; j < dimg; ++j)
                x += cand.basis().at(i, j) * basis[static_cast<std::size_t>(j)];
            members.push_back(std::move(x));
        }
        const int nn = basis.front().rows() * basis.front().cols();
        Mat sys(nn, s);
        for (int i = 0; i < s; ++i) {
            std::vector<Scalar> col = b.commutator(members[static_cast<std::size_t>(i)]).flatten();
            for (int k = 0; k < nn; ++k) sys.at(k, i) = col[static_cast<std::size_t>(k)];
        }
        Subspace ker = nullspace(sys);
        if (ker.dim() == s) continue;  // b centralizes the whole candidate space
        cand = Subspace::span_of(ker.basis() * cand.basis());
    }
    return cand.dim();
}

long point_contribution(const Realization& r, const CoweightH& h) {
    LieGrading g = compute_grading(r, h);
    long total = 0;
    for (int s = 1; s <= g.depth; ++s) total += static_cast<long>(s) * g.piece_dim(s);
    return total;
}

long moduli_dimension(const Realization& r, const std::vector<CoweightH>& hs, ModuliMode mode) {
    if (hs.empty()) return 0;
    long total = 0;
    // Configurations repeat the same coweight across points; grade each
    // distinct value once.
    std::vector<std::pair<CoweightH, long>> seen;
    for (const CoweightH& h : hs) {
        long contrib = -1;
        for (const auto& [hh, c] : seen)
            if (hh == h) { contrib = c; break; }
        if (contrib < 0) {
            contrib = point_contribution(r, h);
            seen.emplace_back(h, contrib);
        }
        total += contrib;
    }
    if (mode == ModuliMode::fixed_gamma) return total;
    total += static_cast<long>(hs.size());
    if (mode == ModuliMode::moving_gamma) return total;
    return total - (r.algebra_dim() - center_dimension(r));
}

}  // namespace matdiv
