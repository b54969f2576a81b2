#pragma once

#include <string>
#include <vector>

#include "matdiv/error.hpp"

namespace matdiv {

enum class Family { A, B, C, D };

Family family_from_string(const std::string& s);
std::string family_to_string(Family f);

// A linear functional on the Cartan subalgebra in ε-coordinates.
// For A_l the ambient is R^{l+1}; for B/C/D it is R^l.
struct Root {
    std::vector<int> eps;

    bool operator==(const Root& o) const { return eps == o.eps; }
    Root operator-() const;
    Root operator+(const Root& o) const;
    bool is_zero() const;
    std::string str() const;
};

struct RootSystem {
    Family family;
    int rank;
    int eps_dim; // rank+1 for A, rank otherwise

    std::vector<Root> roots;    // all roots, duplicate-free
    std::vector<Root> positive; // first nonzero ε-coordinate positive
    std::vector<Root> simple;   // Bourbaki ordering

    static RootSystem build(Family family, int rank);

    bool contains(const Root& r) const;
    bool is_positive(const Root& r) const;

    // Coefficients of r over the simple roots; throws domain_error if r is
    // not an integer combination (i.e. not in the root lattice span).
    std::vector<int> simple_coordinates(const Root& r) const;
};

} // namespace matdiv
