#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "icosa/constants.hpp"
#include "icosa/group.hpp"

namespace icosa {

// One unitary irreducible representation of the rotation group, with a
// matrix stored for every rotation id. Row labels run in descending
// order (e.g. 2, 1, 0, -1, -2 for the five-dimensional irrep) and name
// the exponent of the phase picked up under the vertical five-fold turn:
// D(T0) = diag(eta^mu).
struct Irrep {
    std::string name; // "A", "T1", "T2", "G", "H"
    int dim;
    std::vector<int> rows;
    std::vector<Eigen::MatrixXcd> mats;

    const Eigen::MatrixXcd& at(int rotation_id) const;
    int row_index(int mu) const; // IndexInvalid for labels not in `rows`
};

// An irrep of the full 120-element group: the inversion acts as +1
// (gerade) or -1 (ungerade) on top of the rotation matrices.
struct ParityIrrep {
    std::string name; // "Ag", "T1u", ...
    const Irrep* base;
    int sign; // +1 g, -1 u

    Eigen::MatrixXcd at(int element_id) const;
};

class IrrepSet {
public:
    explicit IrrepSet(const Group& group);

    const std::vector<Irrep>& all() const { return irreps_; }
    const Irrep& rep(const std::string& name) const; // IndexInvalid
    ParityIrrep parity_rep(const std::string& name) const; // "Ag".."Hu"

    // chi[irrep][class], classes in the group's fixed order.
    Eigen::MatrixXd character_table() const;

    // The sum of an entire conjugacy class acts on each irrep as a
    // scalar; returns it, or throws NotScalar if the sum fails to be
    // proportional to the identity within tol.
    double class_operator_eigenvalue(const std::string& rep, int class_index,
                                     double tol = 1e-9) const;

    // Scalar of the sum of the twelve 72-degree rotations (the class of
    // T0). These five scalars are distinct and label the irreps.
    double fivefold_class_scalar(const std::string& rep,
                                 double tol = 1e-9) const;

    const Group& group() const { return group_; }

    static const std::vector<std::string>& names();
    static const std::vector<std::string>& parity_names();

private:
    const Group& group_;
    std::vector<Irrep> irreps_;
};

// Standard z-y-z rotation matrix for angular momentum l (rows and
// columns labeled by m = l..-l descending), evaluated at an orthogonal
// matrix via Euler angle extraction.
Eigen::MatrixXcd wigner_matrix(int l, const Eigen::Matrix3d& m);

// Real orthogonal 7x7 matrix splitting the l = 3 rotation matrices into
// the three-dimensional (columns 0..2) and four-dimensional (columns
// 3..6) icosahedral pieces.
Eigen::MatrixXd ell3_splitting_matrix();

// Largest deviation, per angular momentum l = 0..3, between the
// restricted rotation matrices and the stored irreps (after the l = 3
// split). Throws ConventionMismatch if any deviation exceeds tol.
struct SubductionReport {
    std::array<double, 4> max_dev;
};
SubductionReport subduction_check(const IrrepSet& irreps, double tol = 1e-9);

} // namespace icosa
