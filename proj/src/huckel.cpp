#include "icosa/huckel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "icosa/errors.hpp"

namespace icosa {

namespace {

constexpr double kPi = 3.14159265358979323846;

int sidx(int r, int lambda) { return 4 * r + (lambda - 1); }

std::string dump_row(const std::map<int, double>& row) {
    std::ostringstream os;
    for (const auto& [s, w] : row) os << " (" << s << ", " << w << ")";
    return os.str();
}

// Nonzero entries of one column of a symmetric H, keyed by site.
std::map<int, double> column_weights(const Eigen::MatrixXd& h, int s) {
    std::map<int, double> out;
    for (int i = 0; i < h.rows(); ++i)
        if (std::abs(h(i, s)) > 1e-14) out[i] = h(i, s);
    return out;
}

void check_rows(const Eigen::MatrixXd& h,
                const std::map<int, std::map<int, double>>& expected,
                const std::string& what) {
    for (const auto& [s, want_raw] : expected) {
        std::map<int, double> want;
        for (const auto& [i, w] : want_raw)
            if (std::abs(w) > 1e-14) want[i] = w;
        std::map<int, double> got = column_weights(h, s);
        bool ok = got.size() == want.size();
        if (ok)
            for (const auto& [i, w] : want) {
                auto it = got.find(i);
                if (it == got.end() || std::abs(it->second - w) > 1e-12) {
                    ok = false;
                    break;
                }
            }
        if (!ok)
            throw RuleMismatch(what + " neighbor row at site " +
                               std::to_string(s) + " is" + dump_row(got) +
                               " but the documented row is" + dump_row(want));
    }
}

void mirror_lower(Eigen::MatrixXcd& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j) m(i, j) = std::conj(m(j, i));
}

// "A1g"/"A1u" are accepted as spellings of the one-dimensional blocks.
std::string normalize_parity_name(std::string name) {
    if (name.size() == 3 && name[0] == 'A' && name[1] == '1')
        name.erase(1, 1);
    return name;
}

// Roots of x^3 + b x^2 + c x + d when all three are real, by the
// trigonometric method, each polished by damped Newton steps that are
// only accepted while the residual shrinks.
std::vector<double> cubic_roots_real(double b, double c, double d) {
    double p = c - b * b / 3.0;
    double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    if (p >= -1e-12)
        throw Error("cubic is too degenerate for the three-real-root form");
    double m = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * m);
    arg = std::clamp(arg, -1.0, 1.0);
    double theta = std::acos(arg);
    auto f = [&](double x) { return ((x + b) * x + c) * x + d; };
    auto fp = [&](double x) { return (3.0 * x + 2.0 * b) * x + c; };
    std::vector<double> roots;
    for (int k = 0; k < 3; ++k) {
        double x = m * std::cos((theta - 2.0 * kPi * k) / 3.0) - b / 3.0;
        for (int it = 0; it < 3; ++it) {
            double deriv = fp(x);
            if (deriv == 0.0) break;
            double trial = x - f(x) / deriv;
            if (std::abs(f(trial)) < std::abs(f(x)))
                x = trial;
            else
                break;
        }
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

int base_dim(const std::string& base) {
    if (base == "A") return 1;
    if (base == "T1" || base == "T2") return 3;
    if (base == "G") return 4;
    if (base == "H") return 5;
    throw IndexInvalid("unknown irrep " + base);
}

// State-space image of one reduced basis vector placed on sublattice
// `lambda` of the 240-site model.
Eigen::VectorXcd planted(const Algebra& algebra, const StateSpace& space,
                         const std::string& rep, int mu, int nu, int lambda) {
    return state_image(space, lambda - 1, algebra.psi(rep, mu, nu));
}

// Curated symmetry-adapted combinations spanning one parity irrep block
// of the 240-site model, one unit vector per set index tau. Also
// reports the generating column of each tau.
std::vector<Eigen::VectorXcd> c240_tau_basis(const Algebra& algebra,
                                             const StateSpace& space,
                                             const std::string& base, char gu,
                                             int mu, std::vector<int>* nus) {
    const double inv_sq2 = 1.0 / std::sqrt(2.0);
    const int sigma[5] = {0, 1, 2, 4, 3};
    auto st = [&](int nu, int lambda) {
        return planted(algebra, space, base, mu, nu, lambda);
    };
    std::vector<Eigen::VectorXcd> out;
    std::vector<int> cols;
    auto paired = [&](int nu, double sg) {
        for (int lambda = 1; lambda <= 4; ++lambda) {
            out.push_back((st(nu, lambda) + sg * st(-nu, sigma[lambda])) *
                          inv_sq2);
            cols.push_back(nu);
        }
    };
    if (base == "A") {
        if (gu == 'g') {
            out.push_back(st(0, 1));
            out.push_back(st(0, 2));
            out.push_back((st(0, 3) + st(0, 4)) * inv_sq2);
            cols = {0, 0, 0};
        } else {
            out.push_back((st(0, 3) - st(0, 4)) * inv_sq2);
            cols = {0};
        }
    } else if (base == "T1" || base == "T2") {
        int hi = base == "T1" ? 1 : 2;
        double sg = (base == "T1") == (gu == 'g') ? 1.0 : -1.0;
        paired(hi, sg);
        if (gu == 'g') {
            out.push_back((st(0, 3) - st(0, 4)) * inv_sq2);
            cols.push_back(0);
        } else {
            out.push_back((st(0, 3) + st(0, 4)) * inv_sq2);
            out.push_back(st(0, 1));
            out.push_back(st(0, 2));
            cols.insert(cols.end(), {0, 0, 0});
        }
    } else if (base == "G") {
        double sg = gu == 'g' ? 1.0 : -1.0;
        paired(2, sg);
        paired(1, sg);
    } else if (base == "H") {
        paired(2, gu == 'g' ? 1.0 : -1.0);
        paired(1, gu == 'g' ? -1.0 : 1.0);
        if (gu == 'g') {
            out.push_back((st(0, 3) + st(0, 4)) * inv_sq2);
            out.push_back(st(0, 1));
            out.push_back(st(0, 2));
            cols.insert(cols.end(), {0, 0, 0});
        } else {
            out.push_back((st(0, 3) - st(0, 4)) * inv_sq2);
            cols.push_back(0);
        }
    } else {
        throw IndexInvalid("unknown irrep " + base);
    }
    if (nus) *nus = cols;
    return out;
}

Eigen::MatrixXcd block_from_basis(const Eigen::MatrixXcd& hc,
                                  const std::vector<Eigen::VectorXcd>& basis) {
    int n = static_cast<int>(basis.size());
    Eigen::MatrixXcd block(n, n);
    std::vector<Eigen::VectorXcd> images;
    images.reserve(basis.size());
    for (const auto& v : basis) images.push_back(hc * v);
    for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u) block(t, u) = basis[t].dot(images[u]);
    return block;
}

std::vector<double> ascending_eigenvalues(const Eigen::MatrixXcd& block) {
    if (block.rows() == 0) return {};
    Eigen::MatrixXcd sym = (block + block.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym);
    if (es.info() != Eigen::Success)
        throw Error("block eigenvalue solve failed");
    std::vector<double> out(es.eigenvalues().data(),
                            es.eigenvalues().data() + block.rows());
    return out;
}

} // namespace

const std::vector<std::pair<std::string, std::string>>&
inversion_pairing_table() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"E", "S12"},      {"S1", "S8"},      {"R5^2", "T4^2"},
        {"R1", "T3^3"},    {"T5^4", "R9"},    {"T2", "R7^2"},
        {"T0", "S15"},     {"R1^2", "T4^3"},  {"T1^4", "S9"},
        {"S2", "R8^2"},    {"T3", "T5^2"},    {"R2", "R10"},
        {"T0^2", "S13"},   {"T2^4", "R9^2"},  {"T4", "T5^3"},
        {"R2^2", "R6"},    {"R3", "S10"},     {"S3", "T1^2"},
        {"T0^3", "S11"},   {"T5", "R7"},      {"R4", "R10^2"},
        {"T3^4", "T2^2"},  {"S4", "T1^3"},    {"R3^2", "S6"},
        {"T0^4", "S14"},   {"R5", "T3^2"},    {"S5", "R8"},
        {"T1", "S7"},      {"R4^2", "R6^2"},  {"T4^4", "T2^3"},
    };
    return table;
}

std::vector<int> c60_inversion_permutation(const Group& group) {
    std::vector<int> perm(Group::n_rotations, -1);
    for (const auto& [a, b] : inversion_pairing_table()) {
        int ia = group.id_of(a);
        int ib = group.id_of(b);
        if (perm[ia] != -1 || perm[ib] != -1)
            throw Error("inversion pairing repeats element " + a);
        perm[ia] = ib;
        perm[ib] = ia;
    }
    for (int r = 0; r < Group::n_rotations; ++r) {
        if (perm[r] < 0) throw Error("inversion pairing misses an element");
        if (perm[perm[r]] != r || perm[r] == r)
            throw Error("inversion pairing is not a fixed-point-free "
                        "involution");
    }
    return perm;
}

int c240_sublabel_swap(int lambda) {
    if (lambda < 1 || lambda > 4)
        throw IndexInvalid("sublattice label out of range");
    return lambda <= 2 ? lambda : 7 - lambda;
}

HuckelModel build_c60(const Group& group, double alpha) {
    const int n = Group::n_rotations;
    int t0 = group.id_T0();
    int t0_4 = group.id_of("T0^4");
    int s1 = group.id_S1();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int r = 0; r < n; ++r) {
        h(group.multiply(r, t0), r) += -alpha;
        h(group.multiply(r, t0_4), r) += -alpha;
        h(group.multiply(r, s1), r) += alpha - 2.0;
    }
    if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-14)
        throw Error("bond rules produced an asymmetric Hamiltonian");

    std::map<int, std::map<int, double>> expected;
    expected[group.id_E()] = {{t0, -alpha}, {t0_4, -alpha}, {s1, alpha - 2.0}};
    expected[t0] = {{group.id_E(), -alpha},
                    {group.id_of("T0^2"), -alpha},
                    {group.id_of("R1^2"), alpha - 2.0}};
    expected[t0_4] = {{group.id_E(), -alpha},
                      {group.id_of("T0^3"), -alpha},
                      {group.id_of("R5"), alpha - 2.0}};
    expected[s1] = {{group.id_of("R1"), -alpha},
                    {group.id_of("R5^2"), -alpha},
                    {group.id_E(), alpha - 2.0}};
    check_rows(h, expected, "c60");

    std::vector<std::string> labels(n);
    std::vector<std::vector<int>> action(n, std::vector<int>(n));
    for (int r = 0; r < n; ++r) labels[r] = group.element(r).label;
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < n; ++s) action[x][s] = group.multiply(x, s);
    StateSpace space(group, std::move(labels), std::move(action),
                     c60_inversion_permutation(group));
    return HuckelModel{"c60", 0, alpha, std::move(h), std::move(space),
                       group.id_E()};
}

HuckelModel build_c240(const Group& group, char arrangement, double alpha) {
    if (arrangement != 'a' && arrangement != 'b')
        throw IndexInvalid("arrangement must be 'a' or 'b'");
    const int nr = Group::n_rotations;
    const int n = 4 * nr;
    int t0 = group.id_T0();
    int t0_4 = group.id_of("T0^4");
    int s1 = group.id_S1();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    auto add = [&](int a, int b, double w) {
        h(a, b) += w;
        h(b, a) += w;
    };
    for (int r = 0; r < nr; ++r) {
        add(sidx(r, 1), sidx(r, 3), -alpha);
        add(sidx(r, 1), sidx(r, 4), -alpha);
        add(sidx(r, 1), sidx(r, 2), alpha - 2.0);
        add(sidx(r, 2), sidx(group.multiply(r, t0), 2), -alpha);
        if (arrangement == 'a') {
            add(sidx(r, 3), sidx(group.multiply(r, s1), 4), -alpha);
            add(sidx(r, 3), sidx(group.multiply(r, t0), 4), alpha - 2.0);
        } else {
            add(sidx(r, 3), sidx(group.multiply(r, s1), 4), alpha - 2.0);
            add(sidx(r, 3), sidx(group.multiply(r, t0), 4), -alpha);
        }
    }

    int e = group.id_E();
    std::map<int, std::map<int, double>> expected;
    expected[sidx(e, 1)] = {{sidx(e, 3), -alpha},
                            {sidx(e, 4), -alpha},
                            {sidx(e, 2), alpha - 2.0}};
    expected[sidx(e, 2)] = {{sidx(t0, 2), -alpha},
                            {sidx(t0_4, 2), -alpha},
                            {sidx(e, 1), alpha - 2.0}};
    if (arrangement == 'a') {
        expected[sidx(e, 3)] = {{sidx(e, 1), -alpha},
                                {sidx(s1, 4), -alpha},
                                {sidx(t0, 4), alpha - 2.0}};
        expected[sidx(e, 4)] = {{sidx(e, 1), -alpha},
                                {sidx(s1, 3), -alpha},
                                {sidx(t0_4, 3), alpha - 2.0}};
    } else {
        expected[sidx(e, 3)] = {{sidx(e, 1), -alpha},
                                {sidx(s1, 4), alpha - 2.0},
                                {sidx(t0, 4), -alpha}};
        expected[sidx(e, 4)] = {{sidx(e, 1), -alpha},
                                {sidx(s1, 3), alpha - 2.0},
                                {sidx(t0_4, 3), -alpha}};
    }
    check_rows(h, expected, std::string("c240 arrangement ") + arrangement);

    std::vector<int> inv60 = c60_inversion_permutation(group);
    std::vector<std::string> labels(n);
    std::vector<std::vector<int>> action(nr, std::vector<int>(n));
    std::vector<int> parity(n);
    for (int r = 0; r < nr; ++r)
        for (int lambda = 1; lambda <= 4; ++lambda) {
            int s = sidx(r, lambda);
            labels[s] = group.element(r).label + "," + std::to_string(lambda);
            parity[s] = sidx(inv60[r], c240_sublabel_swap(lambda));
        }
    for (int x = 0; x < nr; ++x)
        for (int r = 0; r < nr; ++r)
            for (int lambda = 1; lambda <= 4; ++lambda)
                action[x][sidx(r, lambda)] = sidx(group.multiply(x, r), lambda);
    StateSpace space(group, std::move(labels), std::move(action),
                     std::move(parity));
    return HuckelModel{"c240", arrangement, alpha, std::move(h),
                       std::move(space), sidx(e, 1)};
}

std::vector<int> parity_action(const HuckelModel& model) {
    const int n = model.space.n_states();
    std::vector<int> perm(n);
    for (int s = 0; s < n; ++s) perm[s] = model.space.act_parity(s);
    double dev = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dev = std::max(dev,
                           std::abs(model.h(perm[i], perm[j]) - model.h(i, j)));
    if (dev > 1e-12)
        throw NotSymmetry("inversion fails to preserve the Hamiltonian, "
                          "deviation " +
                          std::to_string(dev));
    return perm;
}

BlockReport block_decompose(const HuckelModel& model, const Algebra& algebra,
                            const std::string& parity_rep) {
    std::string name = normalize_parity_name(parity_rep);
    ParityIrrep pr = algebra.irreps().parity_rep(name);
    const Irrep& base = *pr.base;
    const char gu = pr.sign > 0 ? 'g' : 'u';
    Eigen::MatrixXcd hc = model.h.cast<cplx>();

    // One basis per row mu; vectors renormalized so every row gives a
    // comparable block.
    std::vector<std::vector<Eigen::VectorXcd>> bases;
    std::vector<int> nus;
    if (model.kind == "c60") {
        std::vector<SabSet> sets =
            generate_sab(algebra, base.name, model.space, model.seed, gu);
        for (const auto& s : sets) nus.push_back(s.nu);
        bases.resize(base.dim);
        for (int k = 0; k < base.dim; ++k)
            for (const auto& s : sets)
                bases[k].push_back(s.vectors[k].normalized());
    } else {
        for (int k = 0; k < base.dim; ++k) {
            std::vector<int> cols;
            bases.push_back(c240_tau_basis(algebra, model.space, base.name,
                                           gu, base.rows[k], &cols));
            if (k == 0) nus = cols;
        }
        int dim = static_cast<int>(bases[0].size());
        Eigen::MatrixXcd gram(dim, dim);
        for (int t = 0; t < dim; ++t)
            for (int u = 0; u < dim; ++u)
                gram(t, u) = bases[0][t].dot(bases[0][u]);
        gram -= Eigen::MatrixXcd::Identity(dim, dim);
        if (gram.cwiseAbs().maxCoeff() > 1e-10)
            throw Error("state basis for " + name + " is not orthonormal");
    }

    BlockReport report;
    report.rep = name;
    report.dim = static_cast<int>(bases[0].size());
    report.nus = nus;
    report.block = block_from_basis(hc, bases[0]);
    report.row_dev = 0.0;
    for (int k = 1; report.dim > 0 && k < base.dim; ++k) {
        Eigen::MatrixXcd other = block_from_basis(hc, bases[k]);
        report.row_dev = std::max(
            report.row_dev, (other - report.block).cwiseAbs().maxCoeff());
    }
    if (report.row_dev > 1e-8)
        throw RowDependence("block of " + name +
                            " varies across rows, deviation " +
                            std::to_string(report.row_dev));
    report.hermiticity_dev =
        report.dim == 0
            ? 0.0
            : (report.block - report.block.adjoint()).cwiseAbs().maxCoeff();
    report.eigenvalues = ascending_eigenvalues(report.block);
    return report;
}

std::vector<BlockReport> all_blocks(const HuckelModel& model,
                                    const Algebra& algebra) {
    std::vector<BlockReport> out;
    for (const auto& name : IrrepSet::parity_names()) {
        BlockReport r = block_decompose(model, algebra, name);
        if (r.dim > 0) out.push_back(std::move(r));
    }
    return out;
}

Eigen::MatrixXcd c60_block_table(const std::string& parity_rep, double alpha) {
    const double a = alpha;
    const double sq5 = golden().sqrt5;
    const double sq3 = std::sqrt(3.0);
    std::string name = normalize_parity_name(parity_rep);
    Eigen::MatrixXcd m;
    if (name == "Au") {
        m.resize(0, 0);
    } else if (name == "Ag") {
        m.resize(1, 1);
        m(0, 0) = -a - 2.0;
    } else if (name == "T1g") {
        m.resize(1, 1);
        m(0, 0) = -a * (sq5 + 1.0) / 2.0 + 2.0;
    } else if (name == "T2g") {
        m.resize(1, 1);
        m(0, 0) = a * (sq5 - 1.0) / 2.0 + 2.0;
    } else if (name == "T1u") {
        m.resize(2, 2);
        m(0, 0) = -a * (7.0 - sq5) + 4.0;
        m(0, 1) = m(1, 0) = -4.0 * (a - 2.0);
        m(1, 1) = -2.0 * a * (2.0 * sq5 - 1.0) - 4.0;
        m /= 2.0 * sq5;
    } else if (name == "T2u") {
        m.resize(2, 2);
        m(0, 0) = a * (7.0 + sq5) - 4.0;
        m(0, 1) = m(1, 0) = 4.0 * (a - 2.0);
        m(1, 1) = -2.0 * a * (2.0 * sq5 + 1.0) + 4.0;
        m /= 2.0 * sq5;
    } else if (name == "Gg") {
        m.resize(2, 2);
        m(0, 0) = a * (sq5 + 1.0) / 2.0;
        m(0, 1) = m(1, 0) = -(a - 2.0);
        m(1, 1) = -a * (sq5 - 1.0) / 2.0;
    } else if (name == "Gu") {
        m.resize(2, 2);
        m(0, 0) = a * (sq5 + 1.0) + 8.0;
        m(0, 1) = m(1, 0) = 2.0 * (a - 2.0);
        m(1, 1) = a * (sq5 - 1.0) - 8.0;
        m /= 2.0 * sq5;
    } else if (name == "Hu") {
        m.resize(2, 2);
        m(0, 0) = a * (7.0 + sq5) - 4.0;
        m(0, 1) = m(1, 0) = 4.0 * (a - 2.0);
        m(1, 1) = -a * (7.0 - sq5) + 4.0;
        m /= 2.0 * sq5;
    } else if (name == "Hg") {
        m.resize(3, 3);
        m(0, 0) = a * (5.0 * sq5 + 11.0) - 12.0;
        m(0, 1) = m(1, 0) = 4.0 * (a - 2.0);
        m(0, 2) = m(2, 0) = 4.0 * sq3 * (a - 2.0);
        m(1, 1) = -a * (5.0 * sq5 - 11.0) - 12.0;
        m(1, 2) = m(2, 1) = -4.0 * sq3 * (a - 2.0);
        m(2, 2) = -22.0 * a + 4.0;
        m /= 10.0;
    } else {
        throw IndexInvalid("unknown parity irrep " + name);
    }
    return m;
}

std::array<double, 4> c60_hg_secular(double alpha) {
    const double a = alpha;
    return {1.0, 2.0, -6.0 * a * a + 8.0 * a - 4.0,
            a * a * a - 12.0 * a * a + 16.0 * a - 8.0};
}

std::vector<double> closed_form_spectrum_c60(const std::string& parity_rep,
                                             double alpha) {
    const double a = alpha;
    const double sq5 = golden().sqrt5;
    std::string name = normalize_parity_name(parity_rep);
    std::vector<double> out;
    if (name == "Au") {
        return out;
    } else if (name == "Ag") {
        out = {-a - 2.0};
    } else if (name == "T1g") {
        out = {-a * (sq5 + 1.0) / 2.0 + 2.0};
    } else if (name == "T2g") {
        out = {a * (sq5 - 1.0) / 2.0 + 2.0};
    } else if (name == "T1u") {
        double mid = -a * (3.0 + sq5) / 4.0;
        double r = std::sqrt(18.0 * a * a * (3.0 - sq5) -
                             16.0 * a * (5.0 - sq5) + 64.0) /
                   4.0;
        out = {mid - r, mid + r};
    } else if (name == "T2u") {
        double mid = -a * (3.0 - sq5) / 4.0;
        double r = std::sqrt(18.0 * a * a * (3.0 + sq5) -
                             16.0 * a * (5.0 + sq5) + 64.0) /
                   4.0;
        out = {mid - r, mid + r};
    } else if (name == "Gg") {
        double r = std::sqrt(9.0 * a * a - 16.0 * a + 16.0) / 2.0;
        out = {a / 2.0 - r, a / 2.0 + r};
    } else if (name == "Gu") {
        double r = std::sqrt(a * a + 16.0) / 2.0;
        out = {a / 2.0 - r, a / 2.0 + r};
    } else if (name == "Hu") {
        double r = std::sqrt(13.0 * a * a - 24.0 * a + 16.0) / 2.0;
        out = {a / 2.0 - r, a / 2.0 + r};
    } else if (name == "Hg") {
        auto c = c60_hg_secular(a);
        out = cubic_roots_real(c[1], c[2], c[3]);
    } else {
        throw IndexInvalid("unknown parity irrep " + name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Eigen::MatrixXcd c240_block_table(const std::string& parity_rep,
                                  char arrangement, double alpha) {
    if (arrangement != 'a' && arrangement != 'b')
        throw IndexInvalid("arrangement must be 'a' or 'b'");
    const double a = alpha;
    const bool arr_a = arrangement == 'a';
    const auto& gc = golden();
    const double sq5 = gc.sqrt5;
    const double sq2 = std::sqrt(2.0);
    const double sq6 = std::sqrt(6.0);
    const double p = gc.p;
    const double pinv = gc.pinv;
    std::string name = normalize_parity_name(parity_rep);
    if (name.size() < 2) throw IndexInvalid("unknown parity irrep " + name);
    char gu = name.back();
    std::string base = name.substr(0, name.size() - 1);
    if (gu != 'g' && gu != 'u')
        throw IndexInvalid("unknown parity irrep " + name);

    if (base == "A") {
        if (gu == 'g') {
            Eigen::MatrixXcd m(3, 3);
            m.setZero();
            m(0, 1) = m(1, 0) = a - 2.0;
            m(0, 2) = m(2, 0) = -sq2 * a;
            m(1, 1) = -2.0 * a;
            m(2, 2) = -2.0;
            return m;
        }
        Eigen::MatrixXcd m(1, 1);
        m(0, 0) = 2.0;
        return m;
    }

    if (base == "T1" || base == "T2") {
        double s = base == "T1" ? sq5 : -sq5;
        double ps = (s - 1.0) / 2.0;
        double pis = (s + 1.0) / 2.0;
        cplx etinv = gc.eta_pow(base == "T1" ? -1 : -2);
        double sq25 = sq2 / s;
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(5, 5);
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(7, 7);
        g(1, 1) = u(1, 1) = -a * ps;
        if (arr_a) {
            g(2, 2) = g(3, 3) = a * ps / s;
            u(2, 2) = u(3, 3) = -a * ps / s;
            g(4, 4) = -(a - 2.0) + a / s;
            u(4, 4) = (a - 2.0) - a / s;
            cplx g34 = (a - 2.0) * etinv + a * pis / s;
            g(2, 3) = u(2, 3) = g34;
            g(2, 4) = -a * sq25;
            g(3, 4) = a * sq25;
            u(2, 4) = u(3, 4) = a * sq25;
        } else {
            g(2, 2) = g(3, 3) = -(a - 2.0) * ps / s;
            u(2, 2) = u(3, 3) = (a - 2.0) * ps / s;
            g(4, 4) = a - (a - 2.0) / s;
            u(4, 4) = -a + (a - 2.0) / s;
            cplx g34 = -a * etinv - (a - 2.0) * pis / s;
            g(2, 3) = u(2, 3) = g34;
            g(2, 4) = (a - 2.0) * sq25;
            g(3, 4) = -(a - 2.0) * sq25;
            u(2, 4) = u(3, 4) = -(a - 2.0) * sq25;
        }
        u(6, 6) = -2.0 * a;
        g(0, 1) = u(0, 1) = u(5, 6) = a - 2.0;
        g(0, 2) = g(0, 3) = u(0, 2) = u(0, 3) = -a;
        u(4, 5) = -a * sq2;
        mirror_lower(g);
        mirror_lower(u);
        return gu == 'g' ? g : u;
    }

    if (base == "G") {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(8, 8);
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(8, 8);
        for (auto* m : {&g, &u}) {
            (*m)(1, 1) = a * pinv;
            (*m)(5, 5) = -a * p;
            (*m)(0, 1) = (*m)(4, 5) = a - 2.0;
            (*m)(0, 2) = (*m)(0, 3) = (*m)(4, 6) = (*m)(4, 7) = -a;
        }
        if (arr_a) {
            g(2, 2) = g(3, 3) = -a / sq5;
            g(6, 6) = g(7, 7) = a / sq5;
            u(2, 2) = u(3, 3) = a / sq5;
            u(6, 6) = u(7, 7) = -a / sq5;
            cplx v34 = (a - 2.0) * gc.eta_pow(-2) + a / sq5;
            cplx v78 = (a - 2.0) * gc.eta_pow(-1) - a / sq5;
            g(2, 3) = u(2, 3) = v34;
            g(6, 7) = u(6, 7) = v78;
            g(2, 6) = g(3, 7) = a * pinv / sq5;
            u(2, 6) = u(3, 7) = -a * pinv / sq5;
            g(2, 7) = g(3, 6) = u(2, 7) = u(3, 6) = a * p / sq5;
        } else {
            g(2, 2) = g(3, 3) = (a - 2.0) / sq5;
            g(6, 6) = g(7, 7) = -(a - 2.0) / sq5;
            u(2, 2) = u(3, 3) = -(a - 2.0) / sq5;
            u(6, 6) = u(7, 7) = (a - 2.0) / sq5;
            cplx v34 = -a * gc.eta_pow(-2) - (a - 2.0) / sq5;
            cplx v78 = -a * gc.eta_pow(-1) + (a - 2.0) / sq5;
            g(2, 3) = u(2, 3) = v34;
            g(6, 7) = u(6, 7) = v78;
            g(2, 6) = g(3, 7) = -(a - 2.0) * pinv / sq5;
            u(2, 6) = u(3, 7) = (a - 2.0) * pinv / sq5;
            g(2, 7) = g(3, 6) = u(2, 7) = u(3, 6) = -(a - 2.0) * p / sq5;
        }
        mirror_lower(g);
        mirror_lower(u);
        return gu == 'g' ? g : u;
    }

    if (base == "H") {
        const double p2 = p * p;
        const double pinv2 = pinv * pinv;
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(11, 11);
        Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(9, 9);
        for (auto* m : {&g, &u}) {
            (*m)(1, 1) = a * pinv;
            (*m)(5, 5) = -a * p;
            (*m)(0, 1) = (*m)(4, 5) = a - 2.0;
            (*m)(0, 2) = (*m)(0, 3) = (*m)(4, 6) = (*m)(4, 7) = -a;
        }
        if (arr_a) {
            g(2, 2) = g(3, 3) = -a * p2 / 5.0;
            u(2, 2) = u(3, 3) = a * p2 / 5.0;
            g(6, 6) = g(7, 7) = -a * pinv2 / 5.0;
            u(6, 6) = u(7, 7) = a * pinv2 / 5.0;
            g(8, 8) = (a - 2.0) + a / 5.0;
            u(8, 8) = -(a - 2.0) - a / 5.0;
            cplx v34 = (a - 2.0) * gc.eta_pow(-2) - a * pinv2 / 5.0;
            cplx v78 = (a - 2.0) * gc.eta_pow(-1) - a * p2 / 5.0;
            g(2, 3) = u(2, 3) = v34;
            g(6, 7) = u(6, 7) = v78;
            g(2, 6) = g(3, 7) = 2.0 * a * p / 5.0;
            u(2, 6) = u(3, 7) = -2.0 * a * p / 5.0;
            g(2, 7) = g(3, 6) = u(2, 7) = u(3, 6) = -2.0 * a * pinv / 5.0;
            g(2, 8) = g(3, 8) = -a * sq6 / 5.0;
            g(6, 8) = g(7, 8) = a * sq6 / 5.0;
            u(2, 8) = a * sq6 / 5.0;
            u(3, 8) = -a * sq6 / 5.0;
            u(6, 8) = -a * sq6 / 5.0;
            u(7, 8) = a * sq6 / 5.0;
        } else {
            g(2, 2) = g(3, 3) = (a - 2.0) * p2 / 5.0;
            u(2, 2) = u(3, 3) = -(a - 2.0) * p2 / 5.0;
            g(6, 6) = g(7, 7) = (a - 2.0) * pinv2 / 5.0;
            u(6, 6) = u(7, 7) = -(a - 2.0) * pinv2 / 5.0;
            g(8, 8) = -a - (a - 2.0) / 5.0;
            u(8, 8) = a + (a - 2.0) / 5.0;
            cplx v34 = -a * gc.eta_pow(-2) + (a - 2.0) * pinv2 / 5.0;
            cplx v78 = -a * gc.eta_pow(-1) + (a - 2.0) * p2 / 5.0;
            g(2, 3) = u(2, 3) = v34;
            g(6, 7) = u(6, 7) = v78;
            g(2, 6) = g(3, 7) = -2.0 * (a - 2.0) * p / 5.0;
            u(2, 6) = u(3, 7) = 2.0 * (a - 2.0) * p / 5.0;
            g(2, 7) = g(3, 6) = u(2, 7) = u(3, 6) = 2.0 * (a - 2.0) * pinv / 5.0;
            g(2, 8) = g(3, 8) = (a - 2.0) * sq6 / 5.0;
            g(6, 8) = g(7, 8) = -(a - 2.0) * sq6 / 5.0;
            u(2, 8) = -(a - 2.0) * sq6 / 5.0;
            u(3, 8) = (a - 2.0) * sq6 / 5.0;
            u(6, 8) = (a - 2.0) * sq6 / 5.0;
            u(7, 8) = -(a - 2.0) * sq6 / 5.0;
        }
        g(10, 10) = -2.0 * a;
        g(9, 10) = a - 2.0;
        g(8, 9) = -a * sq2;
        mirror_lower(g);
        mirror_lower(u);
        return gu == 'g' ? g : u;
    }

    throw IndexInvalid("unknown parity irrep " + name);
}

std::vector<BlockTableComparison> c240_block_tables(const HuckelModel& model,
                                                    const Algebra& algebra) {
    if (model.kind != "c240")
        throw IndexInvalid("block tables of the 240-site model need a "
                           "240-site model");
    std::vector<BlockTableComparison> out;
    for (const auto& name : IrrepSet::parity_names()) {
        BlockTableComparison cmp;
        cmp.computed = block_decompose(model, algebra, name);
        cmp.expected =
            c240_block_table(name, model.arrangement, model.alpha);
        cmp.entry_dev =
            (cmp.computed.block - cmp.expected).cwiseAbs().maxCoeff();
        out.push_back(std::move(cmp));
    }
    return out;
}

std::vector<BlockTableComparison> c60_block_tables(const HuckelModel& model,
                                                   const Algebra& algebra) {
    if (model.kind != "c60")
        throw IndexInvalid("block tables of the 60-site model need a "
                           "60-site model");
    std::vector<BlockTableComparison> out;
    for (const auto& name : IrrepSet::parity_names()) {
        BlockTableComparison cmp;
        cmp.computed = block_decompose(model, algebra, name);
        cmp.expected = c60_block_table(name, model.alpha);
        cmp.entry_dev =
            cmp.computed.dim == 0
                ? 0.0
                : (cmp.computed.block - cmp.expected).cwiseAbs().maxCoeff();
        out.push_back(std::move(cmp));
    }
    return out;
}

SpectrumReport spectrum_check(const HuckelModel& model,
                              const std::vector<BlockReport>& blocks,
                              double tol) {
    std::vector<std::pair<double, std::string>> tagged;
    for (const auto& b : blocks) {
        int d = base_dim(b.rep.substr(0, b.rep.size() - 1));
        for (double ev : b.eigenvalues)
            for (int k = 0; k < d; ++k) tagged.emplace_back(ev, b.rep);
    }
    std::sort(tagged.begin(), tagged.end());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(model.h);
    if (es.info() != Eigen::Success)
        throw Error("dense eigenvalue solve failed");
    if (static_cast<int>(tagged.size()) != model.space.n_states())
        throw SpectrumMismatch(
            "block eigenvalues account for " + std::to_string(tagged.size()) +
            " of " + std::to_string(model.space.n_states()) + " states");
    SpectrumReport report;
    report.max_dev = 0.0;
    for (int i = 0; i < model.space.n_states(); ++i) {
        report.block_union.push_back(tagged[i].first);
        report.dense.push_back(es.eigenvalues()(i));
        double dev = std::abs(tagged[i].first - es.eigenvalues()(i));
        if (dev >= report.max_dev) {
            report.max_dev = dev;
            report.worst_rep = tagged[i].second;
        }
    }
    if (report.max_dev > tol)
        throw SpectrumMismatch("block spectra disagree with the dense "
                               "spectrum, deviation " +
                               std::to_string(report.max_dev) + " at " +
                               report.worst_rep);
    return report;
}

} // namespace icosa
