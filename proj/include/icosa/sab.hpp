#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "icosa/algebra.hpp"

namespace icosa {

// A finite set of molecular states acted on by the rotation group
// through an explicit permutation table, with an optional inversion
// permutation. Construction verifies that the table is a genuine
// group action.
class StateSpace {
public:
    StateSpace(const Group& group, std::vector<std::string> labels,
               std::vector<std::vector<int>> action,
               std::vector<int> parity = {});

    int n_states() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    int act(int rotation_id, int state) const;
    bool has_parity() const { return !parity_.empty(); }
    int act_parity(int state) const;

    // Orbit size of a state under the rotation action (plus inversion
    // images when a parity action is present).
    int orbit_size(int state) const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> action_;
    std::vector<int> parity_;
};

// One independent set of symmetry-adapted vectors: unit vectors over
// the state space, one per row mu of the irrep, transforming into each
// other under the group action.
struct SabSet {
    std::string rep;  // irrep name, e.g. "T1"
    char parity;      // 'g', 'u', or 0 when the plain rotation basis is used
    int tau;          // dense set index, 1-based, in kept order
    int nu;           // the basis column the set was generated from
    std::vector<int> mus;
    std::vector<Eigen::VectorXcd> vectors; // one per mu
};

// Image of an algebra vector in the state space:
// sum_R v[R] |act(R, seed)>, the inverted half (if the vector has 120
// entries) acting through the state parity permutation.
Eigen::VectorXcd state_image(const StateSpace& space, int seed,
                             const AlgebraVector& v);

// State-space image of one reduced basis vector; parity 'g'/'u' uses
// the 120-element parity-resolved vector.
Eigen::VectorXcd sab_state_vector(const Algebra& algebra,
                                  const std::string& rep, int mu, int nu,
                                  const StateSpace& space, int seed,
                                  char parity = 0);

// All independent symmetry-adapted sets of one irrep over the orbit of
// `seed`. Sets are generated column by column in row order, dropped
// when they vanish, and kept only when they enlarge the span.
std::vector<SabSet> generate_sab(const Algebra& algebra,
                                 const std::string& rep,
                                 const StateSpace& space, int seed,
                                 char parity = 0);

// Number of independent sets per irrep and the dimension tally, which
// must equal the orbit size of the seed.
struct SetsReport {
    std::vector<std::pair<std::string, int>> counts;
    int total_dim;
    int orbit_size;
};
SetsReport independent_sets_report(const Algebra& algebra,
                                   const StateSpace& space, int seed,
                                   bool parity_resolved = false);

// Vibration quanta on the twelve radial bonds, upper vertices first.
using QuantaState = std::array<int, 12>;

// Permutes quanta by the inverse vertex permutation (quanta ride on
// bonds); the inverted elements additionally swap the two hemispheres.
QuantaState b12h12_action(const Group& group, int element_id,
                          const QuantaState& s);

// Orbit of a quanta state under the rotations, as a StateSpace. The
// inversion action is attached when the orbit is closed under it.
StateSpace b12h12_space(const Group& group, const QuantaState& seed,
                        int* seed_index = nullptr);

// Checks the inversion images of the projection families as state-space
// vector identities on a regular orbit with parity (the fullerene state
// space): P Phi^(1)_{mu mu} = eta^{2mu} Phi^(2)_{mu,-mu} and
// P Phi^(3)_{mu nu} = eta^{2mu-nu} Phi^(4)_{mu,-nu}.
struct ParityRelationsReport {
    double max_dev;
};
ParityRelationsReport c60_parity_relations_check(const Algebra& algebra,
                                                 const StateSpace& space,
                                                 int seed);

} // namespace icosa
