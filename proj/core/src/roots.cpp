#include "matdiv/roots.hpp"

#include <algorithm>
#include <sstream>

#include "matdiv/linalg.hpp"

namespace matdiv {

Family family_from_string(const std::string& s) {
    if (s == "A")
        return Family::A;
    if (s == "B")
        return Family::B;
    if (s == "C")
        return Family::C;
    if (s == "D")
        return Family::D;
    throw config_error("unknown family '" + s + "' (expected A, B, C or D)");
}

std::string family_to_string(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    }
    throw config_error("corrupt family value");
}

Root Root::operator-() const {
    Root r(*this);
    for (int& x : r.eps)
        x = -x;
    return r;
}

Root Root::operator+(const Root& o) const {
    if (eps.size() != o.eps.size())
        throw dimension_error("root coordinate length mismatch");
    Root r(*this);
    for (std::size_t i = 0; i < eps.size(); ++i)
        r.eps[i] += o.eps[i];
    return r;
}

bool Root::is_zero() const {
    return std::all_of(eps.begin(), eps.end(), [](int x) { return x == 0; });
}

std::string Root::str() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        int c = eps[i];
        if (c == 0)
            continue;
        if (any)
            os << (c > 0 ? "+" : "-");
        else if (c < 0)
            os << "-";
        int a = c > 0 ? c : -c;
        if (a != 1)
            os << a;
        os << "e" << (i + 1);
        any = true;
    }
    if (!any)
        os << "0";
    return os.str();
}

namespace {

Root eps_unit(int dim, int i, int c) {
    Root r;
    r.eps.assign(static_cast<std::size_t>(dim), 0);
    r.eps[static_cast<std::size_t>(i)] = c;
    return r;
}

Root eps_pair(int dim, int i, int ci, int j, int cj) {
    Root r = eps_unit(dim, i, ci);
    r.eps[static_cast<std::size_t>(j)] = cj;
    return r;
}

} // namespace

RootSystem RootSystem::build(Family family, int rank) {
    if (rank < 1 || (family == Family::D && rank < 2))
        throw config_error("unsupported rank " + std::to_string(rank) + " for family " + family_to_string(family));

    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.eps_dim = family == Family::A ? rank + 1 : rank;
    int d = rs.eps_dim;

    switch (family) {
    case Family::A:
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                rs.positive.push_back(eps_pair(d, i, 1, j, -1));
        for (int i = 0; i + 1 < d; ++i)
            rs.simple.push_back(eps_pair(d, i, 1, i + 1, -1));
        break;
    case Family::B:
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                rs.positive.push_back(eps_pair(d, i, 1, j, -1));
                rs.positive.push_back(eps_pair(d, i, 1, j, 1));
            }
        for (int i = 0; i < d; ++i)
            rs.positive.push_back(eps_unit(d, i, 1));
        for (int i = 0; i + 1 < d; ++i)
            rs.simple.push_back(eps_pair(d, i, 1, i + 1, -1));
        rs.simple.push_back(eps_unit(d, d - 1, 1));
        break;
    case Family::C:
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                rs.positive.push_back(eps_pair(d, i, 1, j, -1));
                rs.positive.push_back(eps_pair(d, i, 1, j, 1));
            }
        for (int i = 0; i < d; ++i)
            rs.positive.push_back(eps_unit(d, i, 2));
        for (int i = 0; i + 1 < d; ++i)
            rs.simple.push_back(eps_pair(d, i, 1, i + 1, -1));
        rs.simple.push_back(eps_unit(d, d - 1, 2));
        break;
    case Family::D:
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                rs.positive.push_back(eps_pair(d, i, 1, j, -1));
                rs.positive.push_back(eps_pair(d, i, 1, j, 1));
            }
        for (int i = 0; i + 1 < d; ++i)
            rs.simple.push_back(eps_pair(d, i, 1, i + 1, -1));
        rs.simple.push_back(eps_pair(d, d - 2, 1, d - 1, 1));
        break;
    }

    rs.roots = rs.positive;
    for (const Root& r : rs.positive)
        rs.roots.push_back(-r);
    return rs;
}

bool RootSystem::contains(const Root& r) const {
    return std::find(roots.begin(), roots.end(), r) != roots.end();
}

bool RootSystem::is_positive(const Root& r) const {
    return std::find(positive.begin(), positive.end(), r) != positive.end();
}

std::vector<int> RootSystem::simple_coordinates(const Root& r) const {
    // Solve r = sum c_i * simple_i exactly over the rationals, then demand integrality.
    int n = eps_dim;
    int s = static_cast<int>(simple.size());
    Mat sys(n, s + 1);
    for (int c = 0; c < s; ++c)
        for (int row = 0; row < n; ++row)
            sys.at(row, c) = Scalar(simple[static_cast<std::size_t>(c)].eps[static_cast<std::size_t>(row)]);
    for (int row = 0; row < n; ++row)
        sys.at(row, s) = Scalar(r.eps[static_cast<std::size_t>(row)]);

    RrefResult rr = rref(sys);
    std::vector<Scalar> coeff(static_cast<std::size_t>(s));
    for (std::size_t p = 0; p < rr.pivots.size(); ++p) {
        int col = rr.pivots[p];
        if (col == s)
            throw domain_error("root is not in the span of the simple roots");
        coeff[static_cast<std::size_t>(col)] = rr.reduced.at(static_cast<int>(p), s);
    }
    std::vector<int> out;
    for (const Scalar& c : coeff) {
        if (!c.is_real() || c.re().get_den() != 1)
            throw domain_error("root has non-integer simple-root coordinates");
        out.push_back(static_cast<int>(c.re().get_num().get_si()));
    }
    return out;
}

} // namespace matdiv
