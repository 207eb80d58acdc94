#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "icosa/constants.hpp"
#include "icosa/group.hpp"
#include "icosa/irreps.hpp"

namespace icosa {

// Complex coefficient vector over the 60 rotations, indexed by element
// id. Parity-resolved vectors use 120 entries (ids 60.. are the
// inverted elements).
using AlgebraVector = Eigen::VectorXcd;

// Expansion of one basis vector over the projection families of its
// sector: psi = N^{-1/2} * sum_i C[i] * phi(families[i], mu, nu),
// exactly as stored (no residual phase).
struct ReductionCoefficients {
    std::string rep;
    int mu;
    int nu;
    std::vector<int> families;
    std::vector<cplx> C;
    double N;
};

// The group algebra of the 60 rotations, reduced into 60 orthonormal
// basis vectors psi^Gamma_{mu nu} by diagonalizing the five-fold class
// sum inside each two-sided projection sector and chaining phases with
// the S1 representation matrices.
class Algebra {
public:
    Algebra(const Group& group, const IrrepSet& irreps, double tol = 1e-9);

    // Left and right multiplication by a rotation id.
    AlgebraVector left_mul(int g, const AlgebraVector& v) const;
    AlgebraVector right_mul(const AlgebraVector& v, int g) const;

    // Phase projections under the vertical five-fold turn:
    // (1/5) sum_lambda eta^{-mu lambda} T0^lambda acting from the left
    // or the right. Idempotent, mutually orthogonal, summing to one.
    AlgebraVector project_left(int mu, const AlgebraVector& v) const;
    AlgebraVector project_right(int nu, const AlgebraVector& v) const;

    // Family index sets. Family seeds: 1 -> E, 2 -> S11, 3 -> S5,
    // 4 -> S10. Families 1 and 2 exist only for nu = mu and nu = -mu.
    static bool family_valid(int family, int mu, int nu);
    std::vector<int> sector_families(int mu, int nu) const;
    int family_seed(int family) const;

    // Normalized projection-family vector with a real positive seed
    // coefficient; IndexInvalid outside the valid index set.
    const AlgebraVector& phi(int family, int mu, int nu) const;

    // Matrix of the five-fold class sum W restricted to one sector;
    // SectorLeak if W does not preserve the sector span within tol.
    Eigen::MatrixXcd class_operator_sector(int mu, int nu) const;

    // Apply W = sum of the twelve 72-degree rotations from the left.
    AlgebraVector apply_fivefold_class(const AlgebraVector& v) const;

    // The reduced basis. Built in the constructor; accessors throw
    // IndexInvalid for labels outside the irrep's row set.
    const AlgebraVector& psi(const std::string& rep, int mu, int nu) const;
    ReductionCoefficients coefficients(const std::string& rep, int mu,
                                       int nu) const;

    // Parity-resolved vector over 120 elements: (E +/- P) psi / sqrt(2).
    AlgebraVector parity_basis(const std::string& rep, int mu, int nu,
                               char parity) const;

    const Group& group() const { return group_; }
    const IrrepSet& irreps() const { return irreps_; }

private:
    const Group& group_;
    const IrrepSet& irreps_;
    double tol_;
    std::vector<int> fivefold_class_;
    mutable std::map<std::tuple<int, int, int>, AlgebraVector> phi_cache_;
    std::map<std::tuple<std::string, int, int>, AlgebraVector> psi_;

    void reduce_all();
};

} // namespace icosa
