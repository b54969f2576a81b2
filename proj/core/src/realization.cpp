#include "matdiv/realization.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace matdiv {

ModuleTag module_tag_from_string(const std::string& s) {
    if (s == "defining")
        return ModuleTag::defining;
    if (s == "adjoint")
        return ModuleTag::adjoint;
    throw config_error("unknown module '" + s + "' (expected 'defining' or 'adjoint')");
}

std::string module_tag_to_string(ModuleTag t) {
    return t == ModuleTag::defining ? "defining" : "adjoint";
}

bool CoweightH::is_zero() const {
    return std::all_of(eps.begin(), eps.end(), [](const mpq_class& q) { return sgn(q) == 0; });
}

CoweightH CoweightH::zero(int dim) {
    CoweightH h;
    h.eps.assign(static_cast<std::size_t>(dim), mpq_class(0));
    return h;
}

CoweightH CoweightH::parse(const std::vector<std::string>& entries) {
    CoweightH h;
    for (const std::string& e : entries)
        h.eps.push_back(parse_rational(e));
    return h;
}

std::string CoweightH::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (i)
            os << ",";
        os << rational_str(eps[i]);
    }
    os << ")";
    return os.str();
}

namespace {

Mat unit_mat(int n, int i, int j) {
    Mat m(n, n);
    m.at(i, j) = Scalar(1);
    return m;
}

Mat minus_pair(int n, int a1, int b1, int a2, int b2) {
    Mat m(n, n);
    m.at(a1, b1) = Scalar(1);
    m.at(a2, b2) = Scalar(-1);
    return m;
}

Mat plus_pair(int n, int a1, int b1, int a2, int b2) {
    Mat m(n, n);
    m.at(a1, b1) = Scalar(1);
    m.at(a2, b2) = Scalar(1);
    return m;
}

Root eps_root(int dim, int i, int ci, int j = -1, int cj = 0) {
    Root r;
    r.eps.assign(static_cast<std::size_t>(dim), 0);
    r.eps[static_cast<std::size_t>(i)] = ci;
    if (j >= 0)
        r.eps[static_cast<std::size_t>(j)] += cj;
    return r;
}

} // namespace

Realization Realization::build(Family family, int rank, ModuleTag tag, AlgebraForm form) {
    if (family != Family::A && form != AlgebraForm::standard)
        throw config_error("gl/sl form selection applies to family A only");
    if (tag == ModuleTag::adjoint && !(family == Family::A && rank == 1))
        throw config_error("adjoint module realized for A1 only");
    if (family == Family::A && form == AlgebraForm::standard)
        form = tag == ModuleTag::adjoint ? AlgebraForm::sl : AlgebraForm::gl;
    if (tag == ModuleTag::adjoint && form == AlgebraForm::gl)
        throw config_error("the adjoint module is not faithful for gl; use the sl form");

    Realization r;
    r.rs = RootSystem::build(family, rank);
    r.module_tag = tag;
    r.form = form;
    r.root_order = r.rs.roots;

    int l = rank;

    if (family == Family::A && tag == ModuleTag::adjoint) {
        // sl(2) acting on itself in the basis (e, h, f): ad h = diag(2,0,-2).
        r.module_dim = 3;
        Mat ade(3, 3), adf(3, 3);
        ade.at(0, 1) = Scalar(-2);
        ade.at(1, 2) = Scalar(1);
        adf.at(1, 0) = Scalar(-1);
        adf.at(2, 1) = Scalar(2);
        Mat adh(3, 3);
        adh.at(0, 0) = Scalar(2);
        adh.at(2, 2) = Scalar(-2);
        r.cartan_basis = {adh};
        for (const Root& a : r.root_order)
            r.root_vectors.push_back(a.eps[0] > 0 ? ade : adf);
        r.module_weights = {{1, -1}, {0, 0}, {-1, 1}};
        r.highest_weight = {1, -1};
        return r;
    }

    if (family == Family::A) {
        int n = l + 1;
        r.module_dim = n;
        if (form == AlgebraForm::gl) {
            for (int i = 0; i < n; ++i)
                r.cartan_basis.push_back(unit_mat(n, i, i));
        } else {
            for (int i = 0; i + 1 < n; ++i)
                r.cartan_basis.push_back(minus_pair(n, i, i, i + 1, i + 1));
        }
        for (const Root& a : r.root_order) {
            int i = -1, j = -1;
            for (int t = 0; t < n; ++t) {
                if (a.eps[static_cast<std::size_t>(t)] == 1)
                    i = t;
                if (a.eps[static_cast<std::size_t>(t)] == -1)
                    j = t;
            }
            r.root_vectors.push_back(unit_mat(n, i, j));
        }
        for (int b = 0; b < n; ++b) {
            std::vector<mpq_class> mu(static_cast<std::size_t>(n), 0);
            mu[static_cast<std::size_t>(b)] = 1;
            r.module_weights.push_back(mu);
        }
        r.highest_weight = r.module_weights.front();
        return r;
    }

    // B/C/D defining modules with the anti-diagonal forms: the Cartan
    // subalgebra is diag(t_1..t_l, (0,) -t_l..-t_1), so coweights written in
    // ε-coordinates read off the leading diagonal entries directly.
    int n = family == Family::B ? 2 * l + 1 : 2 * l;
    r.module_dim = n;
    auto bar = [n](int i) { return n - 1 - i; };
    int mid = family == Family::B ? l : -1;

    for (int i = 0; i < l; ++i)
        r.cartan_basis.push_back(minus_pair(n, i, i, bar(i), bar(i)));

    for (const Root& a : r.root_order) {
        int i = -1, j = -1, ci = 0, cj = 0;
        for (int t = 0; t < l; ++t) {
            int c = a.eps[static_cast<std::size_t>(t)];
            if (c == 0)
                continue;
            if (i < 0) {
                i = t;
                ci = c;
            } else {
                j = t;
                cj = c;
            }
        }
        Mat x(n, n);
        if (j < 0) {
            // short/long roots ±ε_i (B) and ±2ε_i (C)
            if (family == Family::B)
                x = ci > 0 ? minus_pair(n, i, mid, mid, bar(i)) : minus_pair(n, mid, i, bar(i), mid);
            else
                x = ci > 0 ? unit_mat(n, i, bar(i)) : unit_mat(n, bar(i), i);
        } else if (ci > 0 && cj < 0) {
            x = minus_pair(n, i, j, bar(j), bar(i)); // ε_i - ε_j
        } else if (ci < 0 && cj > 0) {
            x = minus_pair(n, j, i, bar(i), bar(j)); // ε_j - ε_i
        } else if (ci > 0 && cj > 0) {
            x = family == Family::C ? plus_pair(n, i, bar(j), j, bar(i))
                                    : minus_pair(n, i, bar(j), j, bar(i)); // ε_i + ε_j
        } else {
            x = family == Family::C ? plus_pair(n, bar(j), i, bar(i), j)
                                    : minus_pair(n, bar(i), j, bar(j), i); // -(ε_i + ε_j)
        }
        r.root_vectors.push_back(x);
    }

    for (int b = 0; b < n; ++b) {
        std::vector<mpq_class> mu(static_cast<std::size_t>(l), 0);
        if (b < l)
            mu[static_cast<std::size_t>(b)] = 1;
        else if (b != mid)
            mu[static_cast<std::size_t>(bar(b))] = -1;
        r.module_weights.push_back(mu);
    }
    r.highest_weight = r.module_weights.front();
    return r;
}

Realization Realization::from_tag(const std::string& tag, AlgebraForm form) {
    if (tag.size() < 2 || !std::isalpha(static_cast<unsigned char>(tag[0])))
        throw config_error("bad realization tag '" + tag + "'");
    Family fam = family_from_string(tag.substr(0, 1));
    std::size_t p = 1;
    while (p < tag.size() && std::isdigit(static_cast<unsigned char>(tag[p])))
        ++p;
    if (p == 1)
        throw config_error("bad realization tag '" + tag + "': missing rank");
    int rank = std::stoi(tag.substr(1, p - 1));
    std::string suffix = tag.substr(p);
    ModuleTag mt;
    if (suffix == "d")
        mt = ModuleTag::defining;
    else if (suffix == "adj")
        mt = ModuleTag::adjoint;
    else
        throw config_error("bad realization tag '" + tag + "': expected 'd' or 'adj' suffix");
    return build(fam, rank, mt, form);
}

std::string Realization::tag() const {
    return family_to_string(rs.family) + std::to_string(rs.rank) +
           (module_tag == ModuleTag::defining ? "d" : "adj");
}

std::vector<Mat> Realization::algebra_basis() const {
    std::vector<Mat> b = cartan_basis;
    b.insert(b.end(), root_vectors.begin(), root_vectors.end());
    return b;
}

void Realization::check_coweight(const CoweightH& h) const {
    if (static_cast<int>(h.eps.size()) != rs.eps_dim)
        throw domain_error("coweight has " + std::to_string(h.eps.size()) + " coordinates, expected " +
                           std::to_string(rs.eps_dim));
    if (rs.family == Family::A && (form == AlgebraForm::sl || module_tag == ModuleTag::adjoint)) {
        mpq_class trace = 0;
        for (const mpq_class& q : h.eps)
            trace += q;
        if (sgn(trace) != 0)
            throw domain_error("coweight " + h.str() + " has nonzero trace; not an sl Cartan element");
    }
}

mpq_class Realization::weight_value(const std::vector<mpq_class>& mu, const CoweightH& h) const {
    mpq_class v = 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        v += mu[i] * h.eps[i];
    return v;
}

long Realization::pair(const Root& alpha, const CoweightH& h) const {
    check_coweight(h);
    mpq_class v = 0;
    for (std::size_t i = 0; i < alpha.eps.size(); ++i)
        v += alpha.eps[i] * h.eps[i];
    if (v.get_den() != 1)
        throw domain_error("pairing " + alpha.str() + "(" + h.str() + ") = " + rational_str(v) +
                           " is not an integer; h lies outside the coweight lattice");
    return v.get_num().get_si();
}

bool Realization::integral(const CoweightH& h) const {
    check_coweight(h);
    for (const Root& a : rs.roots) {
        mpq_class v = 0;
        for (std::size_t i = 0; i < a.eps.size(); ++i)
            v += a.eps[i] * h.eps[i];
        if (v.get_den() != 1)
            return false;
    }
    return true;
}

bool Realization::dominant(const CoweightH& h) const {
    check_coweight(h);
    for (const Root& a : rs.simple) {
        mpq_class v = 0;
        for (std::size_t i = 0; i < a.eps.size(); ++i)
            v += a.eps[i] * h.eps[i];
        if (sgn(v) < 0)
            return false;
    }
    return true;
}

bool Realization::dual_lattice_check(const CoweightH& h) const {
    check_coweight(h);
    for (const auto& mu : module_weights)
        if (weight_value(mu, h).get_den() != 1)
            return false;
    return true;
}

long Realization::chi_value(const CoweightH& h) const {
    check_coweight(h);
    mpq_class v = weight_value(highest_weight, h);
    if (v.get_den() != 1)
        throw domain_error("χ(" + h.str() + ") = " + rational_str(v) +
                           " is not an integer; h fails the module lattice condition");
    return v.get_num().get_si();
}

Mat Realization::coweight_matrix(const CoweightH& h) const {
    check_coweight(h);
    Mat m(module_dim, module_dim);
    for (int b = 0; b < module_dim; ++b)
        m.at(b, b) = Scalar(weight_value(module_weights[static_cast<std::size_t>(b)], h));
    return m;
}

std::vector<Scalar> Realization::coweight_coordinates(const CoweightH& h) const {
    check_coweight(h);
    std::vector<Scalar> c(static_cast<std::size_t>(algebra_dim()));
    if (rs.family == Family::A && module_tag == ModuleTag::adjoint) {
        // Cartan basis is ad(coroot) = diag(2,0,-2); h = (a,-a) has coordinate a/... the
        // eigenvalues of h on the module are (2a, 0, -2a), i.e. a * ad(coroot).
        c[0] = Scalar(h.eps[0]);
        return c;
    }
    if (rs.family == Family::A && form == AlgebraForm::gl) {
        for (std::size_t i = 0; i < h.eps.size(); ++i)
            c[i] = Scalar(h.eps[i]);
        return c;
    }
    if (rs.family == Family::A) {
        // sl: h = sum c_i (E_ii - E_{i+1,i+1}) with c_i = h_1 + ... + h_i.
        mpq_class acc = 0;
        for (std::size_t i = 0; i + 1 < h.eps.size(); ++i) {
            acc += h.eps[i];
            c[i] = Scalar(acc);
        }
        return c;
    }
    for (std::size_t i = 0; i < h.eps.size(); ++i)
        c[i] = Scalar(h.eps[i]);
    return c;
}

CoweightH Realization::coweight_from_simple_values(const std::vector<long>& p) const {
    if (static_cast<int>(p.size()) != rs.rank)
        throw domain_error("expected " + std::to_string(rs.rank) + " simple-root values, got " +
                           std::to_string(p.size()));
    int d = rs.eps_dim;
    int rows = static_cast<int>(rs.simple.size());
    bool normalize = rs.family == Family::A;
    Mat sys(rows + (normalize ? 1 : 0), d + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < d; ++j)
            sys.at(i, j) = Scalar(rs.simple[static_cast<std::size_t>(i)].eps[static_cast<std::size_t>(j)]);
        sys.at(i, d) = Scalar(p[static_cast<std::size_t>(i)]);
    }
    if (normalize) {
        bool traceless = form == AlgebraForm::sl || module_tag == ModuleTag::adjoint;
        for (int j = 0; j < d; ++j)
            sys.at(rows, j) = Scalar(traceless ? 1 : (j == d - 1 ? 1 : 0));
        // right-hand side 0: either trace(h) = 0 or last diagonal entry 0
    }
    RrefResult rr = rref(sys);
    CoweightH h = CoweightH::zero(d);
    int solved = 0;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        int col = rr.pivots[r];
        if (col == d)
            throw domain_error("inconsistent simple-root values");
        h.eps[static_cast<std::size_t>(col)] = rr.reduced.at(static_cast<int>(r), d).re();
        if (!rr.reduced.at(static_cast<int>(r), d).is_real())
            throw domain_error("non-real solution for coweight");
        ++solved;
    }
    if (solved != d)
        throw domain_error("simple-root values underdetermine the coweight");
    return h;
}

} // namespace matdiv
