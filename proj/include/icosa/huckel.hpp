#pragma once

#include <string>
#include <vector>

#include "icosa/sab.hpp"

namespace icosa {

// The 30 inversion pairs of rotations: inverting a fullerene state
// |R> gives |R'>. Shipped as literal data and cross-checked, not
// derived from geometry.
const std::vector<std::pair<std::string, std::string>>&
inversion_pairing_table();

// Site permutation of the pairing over rotation ids; involution
// covering all 60 elements.
std::vector<int> c60_inversion_permutation(const Group& group);

// Sublattice relabeling under inversion for the 240-site model:
// 1 -> 1, 2 -> 2, 3 <-> 4.
int c240_sublabel_swap(int lambda);

// A Hueckel Hamiltonian on a homogeneous state space: 60 sites indexed
// by rotations, or 240 sites indexed by (rotation, sublattice).
struct HuckelModel {
    std::string kind; // "c60" or "c240"
    char arrangement; // 'a' or 'b' for c240, 0 for c60
    double alpha;
    Eigen::MatrixXd h;
    StateSpace space;
    int seed; // site index of |E> (or |E,1>)
};

// Cayley-rule construction; RuleMismatch if the generated rows disagree
// with the documented neighbor rows.
HuckelModel build_c60(const Group& group, double alpha);
HuckelModel build_c240(const Group& group, char arrangement, double alpha);

// The inversion site permutation of a model, after verifying that
// conjugating H by it changes nothing (NotSymmetry otherwise).
std::vector<int> parity_action(const HuckelModel& model);

// One diagonal block of H over a symmetry-adapted basis.
struct BlockReport {
    std::string rep; // parity irrep label
    int dim;
    std::vector<int> nus; // generating column per set (c60 route only)
    Eigen::MatrixXcd block;
    std::vector<double> eigenvalues; // ascending
    double hermiticity_dev;
    double row_dev; // worst cross-row block deviation
};

// Block of H for one parity irrep, built over the independent
// symmetry-adapted sets seeded at |E> (c60) or the |E,lambda> family
// (c240). The block must not depend on which row mu is used;
// RowDependence otherwise.
BlockReport block_decompose(const HuckelModel& model, const Algebra& algebra,
                            const std::string& parity_rep);

// Every nonempty block of a model.
std::vector<BlockReport> all_blocks(const HuckelModel& model,
                                    const Algebra& algebra);

// Closed-form 60-site block tables and spectra.
Eigen::MatrixXcd c60_block_table(const std::string& parity_rep, double alpha);
std::vector<double> closed_form_spectrum_c60(const std::string& parity_rep,
                                             double alpha);
// Monic cubic satisfied by the three-dimensional gerade block:
// x^3 + c[1] x^2 + c[2] x + c[3], with c[0] = 1.
std::array<double, 4> c60_hg_secular(double alpha);

// Closed-form 240-site block table for one parity irrep.
Eigen::MatrixXcd c240_block_table(const std::string& parity_rep,
                                  char arrangement, double alpha);

// Computed blocks next to their closed-form tables.
struct BlockTableComparison {
    BlockReport computed;
    Eigen::MatrixXcd expected;
    double entry_dev;
};
std::vector<BlockTableComparison> c240_block_tables(const HuckelModel& model,
                                                    const Algebra& algebra);
std::vector<BlockTableComparison> c60_block_tables(const HuckelModel& model,
                                                   const Algebra& algebra);

// The block eigenvalues, each repeated by its irrep dimension, must
// reproduce the dense spectrum; SpectrumMismatch beyond tol.
struct SpectrumReport {
    double max_dev;
    std::string worst_rep;
    std::vector<double> dense;
    std::vector<double> block_union;
};
SpectrumReport spectrum_check(const HuckelModel& model,
                              const std::vector<BlockReport>& blocks,
                              double tol = 1e-8);

} // namespace icosa
