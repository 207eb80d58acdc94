#include "icosa/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "icosa/errors.hpp"
#include "icosa/huckel.hpp"

namespace icosa {

namespace {

std::string fmt_dev(double dev) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << "max dev " << dev;
    return os.str();
}

// Applies a rotation to a state vector: w[act(g, s)] = v[s].
Eigen::VectorXcd rotate_state(const StateSpace& space, int g,
                              const Eigen::VectorXcd& v) {
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(v.size());
    for (int s = 0; s < v.size(); ++s) w[space.act(g, s)] += v[s];
    return w;
}

struct Runner {
    std::vector<CheckResult> results;

    void check(const std::string& name, const std::function<double()>& body,
               double tol) {
        CheckResult r{name, false, ""};
        try {
            double dev = body();
            r.pass = dev <= tol;
            r.detail = fmt_dev(dev);
            if (!r.pass) r.detail += " exceeds " + std::to_string(tol);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    }
};

} // namespace

std::vector<CheckResult> run_all(double tol) {
    Runner run;
    const Group group;
    const IrrepSet irreps(group);
    const Algebra algebra(group, irreps, tol);
    const auto& gc = golden();

    run.check("group.order", [&] {
        std::set<std::string> labels;
        for (int id = 0; id < Group::n_elements; ++id)
            labels.insert(group.element(id).label);
        if (labels.size() != 120)
            throw Error("element labels are not distinct");
        return 0.0;
    }, tol);

    run.check("group.generator_words", [&] {
        int t0 = group.id_T0(), s1 = group.id_S1();
        int t2 = group.multiply(t0, t0);
        int t4 = group.multiply(t2, t2);
        int r6 = group.multiply(group.multiply(s1, t2),
                                group.multiply(s1, t4));
        if (r6 != group.id_R6()) throw Error("three-fold word is wrong");
        int s12 = group.multiply(group.multiply(r6, r6),
                                 group.multiply(s1, r6));
        if (s12 != group.id_S12()) throw Error("two-fold word is wrong");
        return 0.0;
    }, tol);

    run.check("group.closure", [&] {
        for (int x = 0; x < Group::n_elements; ++x) {
            std::set<int> row, col;
            for (int y = 0; y < Group::n_elements; ++y) {
                row.insert(group.multiply(x, y));
                col.insert(group.multiply(y, x));
            }
            if (row.size() != 120 || col.size() != 120)
                throw ClosureViolation("product table row is not a "
                                       "permutation");
        }
        return 0.0;
    }, tol);

    run.check("group.generation", [&] {
        std::set<int> reached{group.id_E()};
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<int> next = reached;
            for (int x : reached)
                for (int g : {group.id_T0(), group.id_S1()})
                    if (next.insert(group.multiply(x, g)).second) grew = true;
            reached = next;
        }
        if (static_cast<int>(reached.size()) != Group::n_rotations)
            throw Error("the five-fold and two-fold generators reach " +
                        std::to_string(reached.size()) + " elements");
        return 0.0;
    }, tol);

    run.check("group.classes", [&] {
        const int sizes[5] = {1, 12, 12, 20, 15};
        const char* names[5] = {"E", "C5", "C5^2", "C3", "C2"};
        for (int c = 0; c < 5; ++c) {
            if (static_cast<int>(group.class_members(c).size()) != sizes[c])
                throw Error("conjugacy class size is wrong");
            if (group.class_name(c) != names[c])
                throw Error("conjugacy class name is wrong");
        }
        if (group.class_of(group.id_T0()) != 1 ||
            group.class_of(group.multiply(group.id_T0(), group.id_T0())) != 2 ||
            group.class_of(group.id_R6()) != 3 ||
            group.class_of(group.id_S1()) != 4)
            throw Error("a representative sits in the wrong class");
        return 0.0;
    }, tol);

    run.check("group.decomposition", [&] {
        int t0 = group.id_T0(), r6 = group.id_R6();
        int s1 = group.id_S1(), s12 = group.id_S12();
        for (int r = 0; r < Group::n_rotations; ++r) {
            const Decomposition& w = group.decomposition(r);
            int x = group.id_E();
            for (int i = 0; i < w.a; ++i) x = group.multiply(x, t0);
            for (int i = 0; i < w.b; ++i) x = group.multiply(x, r6);
            for (int i = 0; i < w.c; ++i) x = group.multiply(x, s1);
            for (int i = 0; i < w.d; ++i) x = group.multiply(x, s12);
            if (x != r) throw Error("canonical word fails to reproduce " +
                                    group.element(r).label);
        }
        return 0.0;
    }, tol);

    run.check("group.inversion_central", [&] {
        int p = group.id_P();
        if (group.multiply(p, p) != group.id_E())
            throw Error("inversion squared is not the identity");
        for (int x = 0; x < Group::n_elements; ++x)
            if (group.multiply(p, x) != group.multiply(x, p))
                throw Error("inversion fails to commute with " +
                            group.element(x).label);
        return 0.0;
    }, tol);

    run.check("group.rotation_matrices", [&] {
        double dev = 0.0;
        const double cos_class[5] = {1.0, (gc.sqrt5 - 1.0) / 4.0,
                                     -(gc.sqrt5 + 1.0) / 4.0, -0.5, -1.0};
        for (int r = 0; r < Group::n_rotations; ++r) {
            const Eigen::Matrix3d& m = group.element(r).rotation.matrix;
            dev = std::max(dev, (m * m.transpose() -
                                 Eigen::Matrix3d::Identity())
                                    .cwiseAbs()
                                    .maxCoeff());
            dev = std::max(dev, std::abs(m.determinant() - 1.0));
            double c = (m.trace() - 1.0) / 2.0;
            dev = std::max(dev, std::abs(c - cos_class[group.class_of(r)]));
        }
        return dev;
    }, tol);

    run.check("irreps.homomorphism", [&] {
        double dev = 0.0;
        for (const auto& name : IrrepSet::names()) {
            const Irrep& rep = irreps.rep(name);
            for (int x = 0; x < Group::n_rotations; ++x)
                for (int y = 0; y < Group::n_rotations; ++y)
                    dev = std::max(dev, (rep.at(x) * rep.at(y) -
                                         rep.at(group.multiply(x, y)))
                                            .cwiseAbs()
                                            .maxCoeff());
        }
        return dev;
    }, tol);

    run.check("irreps.unitarity", [&] {
        double dev = 0.0;
        for (const auto& name : IrrepSet::names()) {
            const Irrep& rep = irreps.rep(name);
            Eigen::MatrixXcd id =
                Eigen::MatrixXcd::Identity(rep.dim, rep.dim);
            for (int x = 0; x < Group::n_rotations; ++x)
                dev = std::max(dev, (rep.at(x) * rep.at(x).adjoint() - id)
                                        .cwiseAbs()
                                        .maxCoeff());
        }
        return dev;
    }, tol);

    run.check("irreps.orthogonality", [&] {
        double dev = 0.0;
        for (const auto& na : IrrepSet::names())
            for (const auto& nb : IrrepSet::names()) {
                const Irrep& ra = irreps.rep(na);
                const Irrep& rb = irreps.rep(nb);
                for (int i = 0; i < ra.dim; ++i)
                    for (int j = 0; j < ra.dim; ++j)
                        for (int k = 0; k < rb.dim; ++k)
                            for (int l = 0; l < rb.dim; ++l) {
                                cplx sum = 0.0;
                                for (int x = 0; x < Group::n_rotations; ++x)
                                    sum += std::conj(ra.at(x)(i, j)) *
                                           rb.at(x)(k, l);
                                cplx want = 0.0;
                                if (na == nb && i == k && j == l)
                                    want = 60.0 / ra.dim;
                                dev = std::max(dev, std::abs(sum - want));
                            }
            }
        return dev;
    }, tol);

    run.check("irreps.characters", [&] {
        Eigen::MatrixXd table = irreps.character_table();
        Eigen::MatrixXd want(5, 5);
        want << 1, 1, 1, 1, 1,
                3, gc.pinv, -gc.p, 0, -1,
                3, -gc.p, gc.pinv, 0, -1,
                4, -1, -1, 1, 0,
                5, 0, 0, -1, 1;
        return (table - want).cwiseAbs().maxCoeff();
    }, tol);

    run.check("irreps.class_scalars", [&] {
        double dev = 0.0;
        const std::pair<std::string, double> want[5] = {
            {"A", 12.0}, {"T1", 4.0 * gc.pinv}, {"T2", -4.0 * gc.p},
            {"G", -3.0}, {"H", 0.0}};
        for (const auto& [name, value] : want)
            dev = std::max(dev, std::abs(irreps.fivefold_class_scalar(name) -
                                         value));
        return dev;
    }, tol);

    run.check("irreps.subduction", [&] {
        SubductionReport rep = subduction_check(irreps, 1e-8);
        return *std::max_element(rep.max_dev.begin(), rep.max_dev.end());
    }, 1e-8);

    run.check("algebra.projector_eigenvectors", [&] {
        double dev = 0.0;
        for (int mu = -2; mu <= 2; ++mu)
            for (int nu = -2; nu <= 2; ++nu)
                for (int fam : algebra.sector_families(mu, nu)) {
                    const AlgebraVector& v = algebra.phi(fam, mu, nu);
                    dev = std::max(
                        dev, (algebra.left_mul(group.id_T0(), v) -
                              gc.eta_pow(mu) * v)
                                 .cwiseAbs()
                                 .maxCoeff());
                    dev = std::max(
                        dev, (algebra.right_mul(v, group.id_T0()) -
                              gc.eta_pow(nu) * v)
                                 .cwiseAbs()
                                 .maxCoeff());
                    dev = std::max(dev, std::abs(v.norm() - 1.0));
                }
        return dev;
    }, tol);

    run.check("algebra.sector_dimensions", [&] {
        int total = 0;
        for (int mu = -2; mu <= 2; ++mu)
            for (int nu = -2; nu <= 2; ++nu) {
                int n = static_cast<int>(algebra.sector_families(mu, nu).size());
                int want = 2;
                if (mu == 0 && nu == 0) want = 4;
                else if ((mu - nu) % 5 == 0 || (mu + nu) % 5 == 0) want = 3;
                if (n != want)
                    throw Error("projected sector has the wrong dimension");
                total += n;
            }
        if (total != 60) throw Error("sector dimensions fail to add to 60");
        return 0.0;
    }, tol);

    run.check("algebra.basis_orthonormal", [&] {
        std::vector<const AlgebraVector*> basis;
        for (const auto& name : IrrepSet::names()) {
            const Irrep& rep = irreps.rep(name);
            for (int mu : rep.rows)
                for (int nu : rep.rows)
                    basis.push_back(&algebra.psi(name, mu, nu));
        }
        if (basis.size() != 60) throw Error("reduced basis is not complete");
        double dev = 0.0;
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < basis.size(); ++j) {
                cplx want = i == j ? 1.0 : 0.0;
                dev = std::max(dev,
                               std::abs(basis[i]->dot(*basis[j]) - want));
            }
        return dev;
    }, tol);

    run.check("algebra.translation_laws", [&] {
        double dev = 0.0;
        for (const auto& name : IrrepSet::names()) {
            const Irrep& rep = irreps.rep(name);
            for (int g : {group.id_T0(), group.id_S1()}) {
                const Eigen::MatrixXcd& d = rep.at(g);
                for (int i = 0; i < rep.dim; ++i)
                    for (int j = 0; j < rep.dim; ++j) {
                        int mu = rep.rows[i], nu = rep.rows[j];
                        AlgebraVector lhs =
                            algebra.left_mul(g, algebra.psi(name, mu, nu));
                        AlgebraVector rhs =
                            AlgebraVector::Zero(Group::n_rotations);
                        for (int k = 0; k < rep.dim; ++k)
                            rhs += d(k, i) *
                                   algebra.psi(name, rep.rows[k], nu);
                        dev = std::max(dev,
                                       (lhs - rhs).cwiseAbs().maxCoeff());
                        lhs = algebra.right_mul(algebra.psi(name, mu, nu), g);
                        rhs.setZero();
                        for (int k = 0; k < rep.dim; ++k)
                            rhs += d(j, k) *
                                   algebra.psi(name, mu, rep.rows[k]);
                        dev = std::max(dev,
                                       (lhs - rhs).cwiseAbs().maxCoeff());
                    }
            }
        }
        return dev;
    }, tol);

    run.check("algebra.class_operator", [&] {
        double dev = 0.0;
        for (const auto& name : IrrepSet::names()) {
            double scalar = irreps.fivefold_class_scalar(name);
            const Irrep& rep = irreps.rep(name);
            for (int mu : rep.rows)
                for (int nu : rep.rows) {
                    const AlgebraVector& v = algebra.psi(name, mu, nu);
                    dev = std::max(dev, (algebra.apply_fivefold_class(v) -
                                         scalar * v)
                                            .cwiseAbs()
                                            .maxCoeff());
                }
        }
        return dev;
    }, tol);

    run.check("algebra.anchor_vectors", [&] {
        double dev = 0.0;
        const AlgebraVector& unit = algebra.psi("A", 0, 0);
        for (int r = 0; r < Group::n_rotations; ++r)
            dev = std::max(dev,
                           std::abs(unit[r] - 1.0 / std::sqrt(60.0)));

        auto check_coeffs = [&](int mu, int nu,
                                const std::vector<int>& fams,
                                const std::vector<cplx>& c, double n) {
            ReductionCoefficients rc = algebra.coefficients("T1", mu, nu);
            if (rc.families != fams)
                throw Error("combination uses the wrong families");
            dev = std::max(dev, std::abs(rc.N - n));
            for (size_t i = 0; i < c.size(); ++i)
                dev = std::max(dev, std::abs(rc.C[i] - c[i]));
        };
        check_coeffs(0, 0, {1, 2, 3, 4}, {1.0, -1.0, 1.0, -1.0}, 4.0);
        check_coeffs(1, 0, {3, 4}, {-gc.eta_pow(1), gc.eta_pow(-2)}, 2.0);
        check_coeffs(1, 1, {1, 3, 4}, {1.0, -gc.pinv, -gc.p}, 4.0);
        return dev;
    }, tol);

    run.check("algebra.reconstruction", [&] {
        double dev = 0.0;
        for (const auto& name : IrrepSet::names()) {
            const Irrep& rep = irreps.rep(name);
            for (int mu : rep.rows)
                for (int nu : rep.rows) {
                    ReductionCoefficients rc =
                        algebra.coefficients(name, mu, nu);
                    AlgebraVector sum =
                        AlgebraVector::Zero(Group::n_rotations);
                    for (size_t i = 0; i < rc.families.size(); ++i)
                        sum += rc.C[i] *
                               algebra.phi(rc.families[i], mu, nu);
                    sum /= std::sqrt(rc.N);
                    dev = std::max(dev, (sum - algebra.psi(name, mu, nu))
                                            .cwiseAbs()
                                            .maxCoeff());
                }
        }
        return dev;
    }, tol);

    run.check("algebra.parity_split", [&] {
        double dev = 0.0;
        int p = group.id_P();
        for (const auto& name : IrrepSet::parity_names()) {
            ParityIrrep pr = irreps.parity_rep(name);
            const Irrep& rep = (*pr.base);
            for (int mu : rep.rows)
                for (int nu : rep.rows) {
                    AlgebraVector v =
                        algebra.parity_basis(pr.base->name, mu, nu, pr.sign > 0
                                                                  ? 'g'
                                                                  : 'u');
                    dev = std::max(dev, std::abs(v.norm() - 1.0));
                    AlgebraVector w = AlgebraVector::Zero(Group::n_elements);
                    for (int x = 0; x < Group::n_elements; ++x)
                        w[group.multiply(p, x)] += v[x];
                    dev = std::max(dev, (w - double(pr.sign) * v)
                                            .cwiseAbs()
                                            .maxCoeff());
                }
        }
        return dev;
    }, tol);

    // The fullerene state space doubles as the regular orbit.
    const HuckelModel c60 = build_c60(group, 1.0);

    run.check("sab.c60_discovery", [&] {
        const std::map<std::string, std::vector<int>> want = {
            {"Ag", {0}},        {"Au", {}},
            {"T1g", {1}},       {"T1u", {1, 0}},
            {"T2g", {2}},       {"T2u", {2, 0}},
            {"Gg", {2, 1}},     {"Gu", {2, 1}},
            {"Hg", {2, 1, 0}},  {"Hu", {2, 1}}};
        for (const auto& [name, nus] : want) {
            ParityIrrep pr = irreps.parity_rep(name);
            std::vector<SabSet> sets = generate_sab(
                algebra, pr.base->name, c60.space, c60.seed, pr.sign > 0 ? 'g'
                                                                   : 'u');
            std::vector<int> got;
            for (const auto& s : sets) got.push_back(s.nu);
            if (got != nus)
                throw Error("independent sets of " + name +
                            " differ from the documented list");
        }
        return 0.0;
    }, tol);

    run.check("sab.c60_dimension", [&] {
        SetsReport rep =
            independent_sets_report(algebra, c60.space, c60.seed, true);
        if (rep.total_dim != rep.orbit_size)
            throw Error("set dimensions add to " +
                        std::to_string(rep.total_dim) + " of " +
                        std::to_string(rep.orbit_size));
        return 0.0;
    }, tol);

    run.check("sab.equivariance", [&] {
        double dev = 0.0;
        for (const auto& name : IrrepSet::parity_names()) {
            ParityIrrep pr = irreps.parity_rep(name);
            const Irrep& rep = (*pr.base);
            std::vector<SabSet> sets = generate_sab(
                algebra, pr.base->name, c60.space, c60.seed, pr.sign > 0 ? 'g'
                                                                   : 'u');
            for (const auto& s : sets)
                for (int g : {group.id_T0(), group.id_S1()}) {
                    const Eigen::MatrixXcd& d = rep.at(g);
                    for (int i = 0; i < rep.dim; ++i) {
                        Eigen::VectorXcd lhs =
                            rotate_state(c60.space, g, s.vectors[i]);
                        Eigen::VectorXcd rhs =
                            Eigen::VectorXcd::Zero(lhs.size());
                        for (int k = 0; k < rep.dim; ++k)
                            rhs += d(k, i) * s.vectors[k];
                        dev = std::max(dev,
                                       (lhs - rhs).cwiseAbs().maxCoeff());
                    }
                }
        }
        return dev;
    }, tol);

    run.check("sab.parity_images", [&] {
        return c60_parity_relations_check(algebra, c60.space, c60.seed)
            .max_dev;
    }, 1e-10);

    run.check("sab.quanta_action_lines", [&] {
        QuantaState s0;
        for (int k = 0; k < 12; ++k) s0[k] = k + 1;
        auto expect = [&](const std::array<int, 12>& idx) {
            QuantaState out;
            for (int k = 0; k < 12; ++k) out[k] = s0[idx[k]];
            return out;
        };
        const std::map<std::string, std::array<int, 12>> want = {
            {"T0", {0, 5, 1, 2, 3, 4, 6, 11, 7, 8, 9, 10}},
            {"S11", {6, 10, 9, 8, 7, 11, 0, 4, 3, 2, 1, 5}},
            {"S5", {5, 4, 8, 9, 1, 0, 11, 10, 2, 3, 7, 6}},
            {"S10", {9, 5, 8, 6, 10, 1, 3, 11, 2, 0, 4, 7}}};
        for (const auto& [label, idx] : want)
            if (b12h12_action(group, group.id_of(label), s0) != expect(idx))
                throw Error("quanta image of " + label +
                            " differs from the documented line");
        return 0.0;
    }, tol);

    run.check("sab.quanta_sets", [&] {
        QuantaState distinct;
        for (int k = 0; k < 12; ++k) distinct[k] = k + 1;
        int seed = 0;
        StateSpace space = b12h12_space(group, distinct, &seed);
        SetsReport rep = independent_sets_report(algebra, space, seed);
        const std::map<std::string, int> want = {
            {"A", 1}, {"T1", 3}, {"T2", 3}, {"G", 4}, {"H", 5}};
        for (const auto& [name, count] : rep.counts)
            if (want.at(name) != count)
                throw Error("distinct quanta give the wrong set count for " +
                            name);
        if (rep.total_dim != 60 || rep.orbit_size != 60)
            throw Error("distinct quanta fail to fill the orbit");

        QuantaState equal;
        equal.fill(7);
        StateSpace trivial = b12h12_space(group, equal, &seed);
        rep = independent_sets_report(algebra, trivial, seed);
        int sets = 0;
        for (const auto& [name, count] : rep.counts) sets += count;
        if (sets != 1 || rep.counts[0].first != "A" ||
            rep.counts[0].second != 1 || rep.total_dim != 1)
            throw Error("equal quanta keep more than the symmetric set");
        return 0.0;
    }, tol);

    run.check("sab.quanta_completeness", [&] {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> quanta(0, 3);
        for (int trial = 0; trial < 20; ++trial) {
            QuantaState s0;
            for (int k = 0; k < 12; ++k) s0[k] = quanta(rng);
            int seed = 0;
            StateSpace space = b12h12_space(group, s0, &seed);
            SetsReport rep = independent_sets_report(algebra, space, seed);
            if (rep.total_dim != rep.orbit_size)
                throw Error("a random quanta orbit is not filled: " +
                            std::to_string(rep.total_dim) + " of " +
                            std::to_string(rep.orbit_size));
        }
        return 0.0;
    }, tol);

    run.check("huckel.c60_parity", [&] {
        parity_action(c60);
        std::vector<int> perm = c60_inversion_permutation(group);
        for (int r = 0; r < Group::n_rotations; ++r)
            if (perm[r] != group.multiply(r, group.id_S12()))
                throw Error("inversion pairing differs from the two-fold "
                            "partner rule");
        return 0.0;
    }, tol);

    run.check("huckel.c60_blocks", [&] {
        double dev = 0.0;
        for (double alpha : {0.0, 1.0, 2.5}) {
            HuckelModel m = build_c60(group, alpha);
            for (const auto& cmp : c60_block_tables(m, algebra)) {
                dev = std::max(dev, cmp.entry_dev);
                dev = std::max(dev, cmp.computed.hermiticity_dev);
                dev = std::max(dev, cmp.computed.row_dev);
            }
        }
        return dev;
    }, tol);

    run.check("huckel.c60_closed_forms", [&] {
        double dev = 0.0;
        for (double alpha : {0.0, 1.0, 2.5}) {
            HuckelModel m = build_c60(group, alpha);
            for (const auto& block : all_blocks(m, algebra)) {
                std::vector<double> want =
                    closed_form_spectrum_c60(block.rep, alpha);
                for (size_t i = 0; i < want.size(); ++i)
                    dev = std::max(dev, std::abs(want[i] -
                                                 block.eigenvalues[i]));
            }
        }
        return dev;
    }, 1e-8);

    run.check("huckel.c60_cubic", [&] {
        auto c = c60_hg_secular(1.0);
        if (c != std::array<double, 4>{1.0, 2.0, -2.0, -3.0})
            throw Error("secular cubic coefficients are wrong at unit "
                        "hopping");
        double dev = 0.0;
        for (double x : closed_form_spectrum_c60("Hg", 1.0))
            dev = std::max(dev,
                           std::abs(((x + c[1]) * x + c[2]) * x + c[3]));
        return dev;
    }, 1e-10);

    run.check("huckel.c60_spectrum", [&] {
        double dev = 0.0;
        for (double alpha : {0.0, 1.0, 2.5}) {
            HuckelModel m = build_c60(group, alpha);
            dev = std::max(dev,
                           spectrum_check(m, all_blocks(m, algebra)).max_dev);
        }
        return dev;
    }, 1e-8);

    run.check("huckel.c60_trace", [&] {
        double dev = 0.0;
        for (double alpha : {1.0, 2.5}) {
            HuckelModel m = build_c60(group, alpha);
            double total = 0.0;
            for (const auto& block : all_blocks(m, algebra)) {
                int d = irreps.rep(block.rep.substr(0, block.rep.size() - 1))
                            .dim;
                total += d * block.block.trace().real();
            }
            dev = std::max(dev, std::abs(total - m.h.trace()));
        }
        return dev;
    }, 1e-8);

    for (char arr : {'a', 'b'}) {
        std::string tag(1, arr);
        run.check("huckel.c240_" + tag + "_blocks", [&, arr] {
            double dev = 0.0;
            for (double alpha : {0.0, 1.0, 2.5}) {
                HuckelModel m = build_c240(group, arr, alpha);
                parity_action(m);
                for (const auto& cmp : c240_block_tables(m, algebra)) {
                    dev = std::max(dev, cmp.entry_dev);
                    dev = std::max(dev, cmp.computed.hermiticity_dev);
                    dev = std::max(dev, cmp.computed.row_dev);
                }
            }
            return dev;
        }, 1e-8);

        run.check("huckel.c240_" + tag + "_spectrum", [&, arr] {
            double dev = 0.0;
            for (double alpha : {0.0, 1.0, 2.5}) {
                HuckelModel m = build_c240(group, arr, alpha);
                dev = std::max(
                    dev, spectrum_check(m, all_blocks(m, algebra)).max_dev);
            }
            return dev;
        }, 1e-8);
    }

    return run.results;
}

} // namespace icosa
