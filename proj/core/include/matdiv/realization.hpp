#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "matdiv/linalg.hpp"
#include "matdiv/roots.hpp"

namespace matdiv {

enum class ModuleTag { defining, adjoint };
enum class AlgebraForm { gl, sl, standard }; // gl/sl apply to family A only

ModuleTag module_tag_from_string(const std::string& s);
std::string module_tag_to_string(ModuleTag t);

// An element of the Cartan subalgebra in ε-coordinates (rational entries).
// For A the coordinates are the n diagonal entries; for B/C/D they are the
// first l diagonal entries t, the matrix being diag(t, (0,) -reverse(t)).
struct CoweightH {
    std::vector<mpq_class> eps;

    bool operator==(const CoweightH& o) const { return eps == o.eps; }
    bool is_zero() const;
    static CoweightH zero(int dim);
    static CoweightH parse(const std::vector<std::string>& entries);
    std::string str() const;
};

// A root system together with concrete matrices acting on a chosen module.
struct Realization {
    RootSystem rs;
    ModuleTag module_tag = ModuleTag::defining;
    AlgebraForm form = AlgebraForm::standard;
    int module_dim = 0;

    std::vector<Mat> cartan_basis;                    // h_1..h_r
    std::vector<Root> root_order;                     // fixed enumeration of all roots
    std::vector<Mat> root_vectors;                    // x_α aligned with root_order
    std::vector<std::vector<mpq_class>> module_weights; // μ_b in ε-coordinates, per module basis vector
    std::vector<mpq_class> highest_weight;            // χ in ε-coordinates

    static Realization build(Family family, int rank, ModuleTag tag,
                             AlgebraForm form = AlgebraForm::standard);
    // Tags like "A1d", "A2d", "B3d", "C2d", "D3d", "A1adj".
    static Realization from_tag(const std::string& tag, AlgebraForm form = AlgebraForm::standard);
    std::string tag() const;

    int algebra_dim() const { return static_cast<int>(cartan_basis.size() + root_vectors.size()); }
    // Deterministic basis: Cartan elements first, then root vectors in root_order.
    std::vector<Mat> algebra_basis() const;

    // ----- coweight plumbing -----
    void check_coweight(const CoweightH& h) const; // length/shape validation
    mpq_class weight_value(const std::vector<mpq_class>& mu, const CoweightH& h) const;
    // α(h); throws domain_error if the pairing is not an integer.
    long pair(const Root& alpha, const CoweightH& h) const;
    bool integral(const CoweightH& h) const;    // α(h) ∈ Z for every root
    bool dominant(const CoweightH& h) const;    // α_i(h) ≥ 0 on the simple roots
    bool dual_lattice_check(const CoweightH& h) const; // μ(h) ∈ Z for every module weight
    long chi_value(const CoweightH& h) const;   // χ(h); requires dual_lattice_check

    // h as an operator on the module: diag(μ_b(h)).
    Mat coweight_matrix(const CoweightH& h) const;
    // Coordinates of h over the Cartan part of algebra_basis (zero-padded to algebra_dim).
    std::vector<Scalar> coweight_coordinates(const CoweightH& h) const;

    // Simple-root values (p_1..p_l) -> the canonical integral representative
    // (type A: last diagonal entry 0). Throws domain_error when no rational
    // solution exists; the result may still fail dual_lattice_check.
    CoweightH coweight_from_simple_values(const std::vector<long>& p) const;
};

} // namespace matdiv
