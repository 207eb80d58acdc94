#include "icosa/sab.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "icosa/errors.hpp"

namespace icosa {

StateSpace::StateSpace(const Group& group, std::vector<std::string> labels,
                       std::vector<std::vector<int>> action,
                       std::vector<int> parity)
    : labels_(std::move(labels)),
      action_(std::move(action)),
      parity_(std::move(parity)) {
    int n = n_states();
    if (action_.size() != static_cast<size_t>(Group::n_rotations))
        throw ActionInconsistent("action table needs one row per rotation");
    for (const auto& row : action_) {
        if (row.size() != static_cast<size_t>(n))
            throw ActionInconsistent("action row has wrong length");
        std::vector<bool> hit(n, false);
        for (int s : row) {
            if (s < 0 || s >= n || hit[s])
                throw ActionInconsistent("action row is not a bijection");
            hit[s] = true;
        }
    }
    for (int x = 0; x < Group::n_rotations; ++x) {
        for (int y = 0; y < Group::n_rotations; ++y) {
            int xy = group.multiply(x, y);
            for (int s = 0; s < n; ++s) {
                if (action_[x][action_[y][s]] != action_[xy][s])
                    throw ActionInconsistent(
                        "action table does not respect the group product at " +
                        group.element(x).label + "*" + group.element(y).label);
            }
        }
    }
    if (!parity_.empty()) {
        if (parity_.size() != static_cast<size_t>(n))
            throw ActionInconsistent("parity action has wrong length");
        for (int s = 0; s < n; ++s) {
            int t = parity_[s];
            if (t < 0 || t >= n || parity_[t] != s)
                throw ActionInconsistent("parity action is not an involution");
        }
        // The inversion is central, so it must commute with every
        // rotation's permutation.
        for (int x = 0; x < Group::n_rotations; ++x)
            for (int s = 0; s < n; ++s)
                if (parity_[action_[x][parity_[s]]] != action_[x][s])
                    throw ActionInconsistent(
                        "parity action does not commute with rotations");
    }
}

int StateSpace::act(int rotation_id, int state) const {
    if (rotation_id < 0 || rotation_id >= Group::n_rotations)
        throw IndexInvalid("state action is indexed by rotation ids");
    if (state < 0 || state >= n_states())
        throw IndexInvalid("state index out of range");
    return action_[rotation_id][state];
}

int StateSpace::act_parity(int state) const {
    if (parity_.empty())
        throw IndexInvalid("state space has no parity action");
    if (state < 0 || state >= n_states())
        throw IndexInvalid("state index out of range");
    return parity_[state];
}

int StateSpace::orbit_size(int state) const {
    std::set<int> orbit;
    for (int x = 0; x < Group::n_rotations; ++x)
        orbit.insert(action_[x][state]);
    if (!parity_.empty()) {
        std::set<int> extra;
        for (int s : orbit) extra.insert(parity_[s]);
        orbit.insert(extra.begin(), extra.end());
    }
    return static_cast<int>(orbit.size());
}

Eigen::VectorXcd state_image(const StateSpace& space, int seed,
                             const AlgebraVector& v) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(space.n_states());
    if (v.size() == Group::n_rotations) {
        for (int r = 0; r < Group::n_rotations; ++r)
            w[space.act(r, seed)] += v[r];
        return w;
    }
    if (v.size() == Group::n_elements) {
        for (int r = 0; r < Group::n_rotations; ++r) {
            int base = space.act(r, seed);
            w[base] += v[r];
            w[space.act_parity(base)] += v[60 + r];
        }
        return w;
    }
    throw IndexInvalid("algebra vector must have 60 or 120 entries");
}

Eigen::VectorXcd sab_state_vector(const Algebra& algebra,
                                  const std::string& rep, int mu, int nu,
                                  const StateSpace& space, int seed,
                                  char parity) {
    if (parity == 0)
        return state_image(space, seed, algebra.psi(rep, mu, nu));
    return state_image(space, seed,
                       algebra.parity_basis(rep, mu, nu, parity));
}

std::vector<SabSet> generate_sab(const Algebra& algebra,
                                 const std::string& rep,
                                 const StateSpace& space, int seed,
                                 char parity) {
    const Irrep& ir = algebra.irreps().rep(rep);
    double vanish_tol = 1e-9 * space.orbit_size(seed);

    std::vector<SabSet> kept;
    std::vector<Eigen::VectorXcd> leads; // first-row vectors of kept sets
    for (int nu : ir.rows) {
        std::vector<Eigen::VectorXcd> vecs;
        std::vector<double> norms;
        for (int mu : ir.rows) {
            vecs.push_back(
                sab_state_vector(algebra, rep, mu, nu, space, seed, parity));
            norms.push_back(vecs.back().norm());
        }
        double hi = *std::max_element(norms.begin(), norms.end());
        if (hi < vanish_tol) continue;
        double lo = *std::min_element(norms.begin(), norms.end());
        // Equivariance forces every row of a multiplet to have the
        // same norm; a spread here means the action table is broken.
        if (hi - lo > 1e-9 * std::max(1.0, hi))
            throw ActionInconsistent("rows of one multiplet differ in norm (" +
                                     rep + ", column " + std::to_string(nu) +
                                     ")");
        for (auto& v : vecs) v /= norms.front();

        // Keep the column only if its first-row vector enlarges the
        // span of what is already kept.
        Eigen::MatrixXcd m(static_cast<int>(leads.size()) + 1,
                           space.n_states());
        for (size_t i = 0; i < leads.size(); ++i) m.row(i) = leads[i];
        m.row(static_cast<int>(leads.size())) = vecs.front();
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        const auto& sv = svd.singularValues();
        if (sv[sv.size() - 1] <= 1e-8 * sv[0]) continue;

        leads.push_back(vecs.front());
        SabSet set;
        set.rep = rep;
        set.parity = parity;
        set.tau = static_cast<int>(kept.size()) + 1;
        set.nu = nu;
        set.mus = ir.rows;
        set.vectors = std::move(vecs);
        kept.push_back(std::move(set));
    }
    return kept;
}

SetsReport independent_sets_report(const Algebra& algebra,
                                   const StateSpace& space, int seed,
                                   bool parity_resolved) {
    SetsReport report;
    report.total_dim = 0;
    if (parity_resolved && !space.has_parity())
        throw IndexInvalid(
            "parity-resolved report needs a parity action on the space");
    if (parity_resolved) {
        for (const auto& name : IrrepSet::parity_names()) {
            std::string base = name.substr(0, name.size() - 1);
            auto sets =
                generate_sab(algebra, base, space, seed, name.back());
            report.counts.emplace_back(name, static_cast<int>(sets.size()));
            report.total_dim += static_cast<int>(sets.size()) *
                                algebra.irreps().rep(base).dim;
        }
        report.orbit_size = space.orbit_size(seed);
    } else {
        for (const auto& name : IrrepSet::names()) {
            auto sets = generate_sab(algebra, name, space, seed, 0);
            report.counts.emplace_back(name, static_cast<int>(sets.size()));
            report.total_dim += static_cast<int>(sets.size()) *
                                algebra.irreps().rep(name).dim;
        }
        // Without parity resolution the tally covers the rotation orbit.
        std::set<int> orbit;
        for (int x = 0; x < Group::n_rotations; ++x)
            orbit.insert(space.act(x, seed));
        report.orbit_size = static_cast<int>(orbit.size());
    }
    return report;
}

QuantaState b12h12_action(const Group& group, int element_id,
                          const QuantaState& s) {
    const auto& perm = group.element(group.inverse(element_id)).perm;
    QuantaState out{};
    for (int k = 0; k < 12; ++k) out[k] = s[perm[k]];
    return out;
}

namespace {

std::string quanta_label(const QuantaState& s) {
    std::string out = "|";
    for (int k = 0; k < 12; ++k) {
        if (k) out += " ";
        out += std::to_string(s[k]);
    }
    return out + ">";
}

} // namespace

StateSpace b12h12_space(const Group& group, const QuantaState& seed,
                        int* seed_index) {
    std::map<QuantaState, int> index;
    std::vector<QuantaState> states;
    for (int x = 0; x < Group::n_rotations; ++x) {
        QuantaState s = b12h12_action(group, x, seed);
        if (!index.count(s)) {
            index[s] = static_cast<int>(states.size());
            states.push_back(s);
        }
    }
    int n = static_cast<int>(states.size());
    std::vector<std::vector<int>> action(Group::n_rotations,
                                         std::vector<int>(n));
    for (int x = 0; x < Group::n_rotations; ++x)
        for (int i = 0; i < n; ++i) {
            auto it = index.find(b12h12_action(group, x, states[i]));
            if (it == index.end())
                throw ActionInconsistent("rotation leaves the quanta orbit");
            action[x][i] = it->second;
        }
    // Attach the inversion only when it preserves the rotation orbit.
    std::vector<int> parity(n);
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
        auto it = index.find(b12h12_action(group, group.id_P(), states[i]));
        if (it == index.end())
            closed = false;
        else
            parity[i] = it->second;
    }
    if (!closed) parity.clear();

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& s : states) labels.push_back(quanta_label(s));
    if (seed_index) *seed_index = index.at(seed);
    return StateSpace(group, std::move(labels), std::move(action),
                      std::move(parity));
}

ParityRelationsReport c60_parity_relations_check(const Algebra& algebra,
                                                 const StateSpace& space,
                                                 int seed) {
    if (!space.has_parity())
        throw IndexInvalid("parity relations need a parity action");
    auto apply_p = [&](const Eigen::VectorXcd& w) {
        Eigen::VectorXcd out = Eigen::VectorXcd::Zero(w.size());
        for (int s = 0; s < w.size(); ++s) out[space.act_parity(s)] += w[s];
        return out;
    };
    const auto& g = golden();
    ParityRelationsReport report{0.0};
    for (int mu = -2; mu <= 2; ++mu) {
        Eigen::VectorXcd lhs =
            apply_p(state_image(space, seed, algebra.phi(1, mu, mu)));
        Eigen::VectorXcd rhs = g.eta_pow(2 * mu) *
            state_image(space, seed, algebra.phi(2, mu, -mu));
        report.max_dev = std::max(report.max_dev, (lhs - rhs).norm());
        for (int nu = -2; nu <= 2; ++nu) {
            lhs = apply_p(state_image(space, seed, algebra.phi(3, mu, nu)));
            rhs = g.eta_pow(2 * mu - nu) *
                  state_image(space, seed, algebra.phi(4, mu, -nu));
            report.max_dev = std::max(report.max_dev, (lhs - rhs).norm());
        }
    }
    return report;
}

} // namespace icosa
