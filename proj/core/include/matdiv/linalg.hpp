#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "matdiv/scalar.hpp"

namespace matdiv {

// Dense matrix over Scalar, row-major.  Everything is exact; there is no
// pivoting for stability, only for nonzero-ness.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols);
    Mat(int rows, int cols, std::vector<Scalar> entries);

    static Mat identity(int n);
    // Convenience for literals in tests and fixtures.
    static Mat of(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const Scalar& c, Mat m);
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat submatrix(int r0, int c0, int nrows, int ncols) const;
    static Mat vstack(const Mat& top, const Mat& bottom);
    static Mat hstack(const Mat& left, const Mat& right);

    std::vector<Scalar> row(int i) const;
    void set_row(int i, const std::vector<Scalar>& v);
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const; // this * v

    // Row-major flattening, used to treat n x n matrices as vectors.
    std::vector<Scalar> flatten() const { return a_; }
    static Mat unflatten(const std::vector<Scalar>& v, int rows, int cols);

    // Commutator this*o - o*this.
    Mat commutator(const Mat& o) const;

    std::string str() const; // debugging aid

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Mat reduced;
    int rank = 0;
    std::vector<int> pivots; // pivot column of each nonzero row
};

// Gauss-Jordan to reduced row echelon form; the result is the unique
// canonical basis of the row space.
RrefResult rref(const Mat& m);

int rank_of(const Mat& m);

// Solve a x = rhs exactly; empty optional if inconsistent. Free variables
// are set to zero.
std::optional<std::vector<Scalar>> solve_linear(const Mat& a, const std::vector<Scalar>& rhs);

// Right null space {x : m x = 0} as canonical row-space basis.
class Subspace;
Subspace nullspace(const Mat& m);

// Subspace of a fixed ambient coordinate space, stored as RREF rows.
// Equal subspaces compare equal entry-wise because RREF is canonical.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(int ambient) { return Subspace(ambient); }
    static Subspace full(int ambient);
    static Subspace span_of(const Mat& rows);
    static Subspace span_of_vectors(const std::vector<std::vector<Scalar>>& rows, int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    std::vector<int> pivots() const { return pivots_; }

    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // Functionals vanishing on this subspace, as a subspace of the dual
    // (same coordinates): {u : b . u = 0 for every basis row b}.
    Subspace annihilator() const;
    // Image {g v : v in this} under an ambient x ambient matrix.
    Subspace transformed(const Mat& g) const;

    // Residual of v after elimination by the basis rows; zero iff contained.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

    std::string str() const;

private:
    int ambient_;
    Mat basis_;
    std::vector<int> pivots_;
};

} // namespace matdiv
