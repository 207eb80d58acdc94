#include "icosa/irreps.hpp"

#include <cmath>

#include "icosa/errors.hpp"

namespace icosa {

const Eigen::MatrixXcd& Irrep::at(int rotation_id) const {
    if (rotation_id < 0 || rotation_id >= Group::n_rotations)
        throw IndexInvalid("irrep matrices are stored for rotations only");
    return mats[rotation_id];
}

int Irrep::row_index(int mu) const {
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i] == mu) return static_cast<int>(i);
    throw IndexInvalid("row " + std::to_string(mu) + " is not a row of " +
                       name);
}

Eigen::MatrixXcd ParityIrrep::at(int element_id) const {
    if (element_id < 0 || element_id >= Group::n_elements)
        throw IndexInvalid("element id out of range");
    Eigen::MatrixXcd m = base->mats[element_id % 60];
    if (element_id >= 60 && sign < 0) m = -m;
    return m;
}

namespace {

// The matrix of the in-plane two-fold turn S1 in each irrep. Together
// with the diagonal matrix of T0 these generate everything.
Eigen::MatrixXd s1_matrix(const std::string& name) {
    const auto& g = golden();
    const double p = g.p, q = g.pinv, s5 = g.sqrt5;
    const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
    if (name == "A") {
        Eigen::MatrixXd m(1, 1);
        m << 1.0;
        return m;
    }
    if (name == "T1") {
        Eigen::MatrixXd m(3, 3);
        m << -q, -r2, -p,
             -r2, 1, r2,
             -p, r2, -q;
        return m / s5;
    }
    if (name == "T2") {
        Eigen::MatrixXd m(3, 3);
        m << -p, r2, q,
             r2, -1, r2,
             q, r2, -p;
        return m / s5;
    }
    if (name == "G") {
        Eigen::MatrixXd m(4, 4);
        m << -1, -p, -q, 1,
             -p, 1, -1, -q,
             -q, -1, 1, -p,
             1, -q, -p, -1;
        return m / s5;
    }
    if (name == "H") {
        Eigen::MatrixXd m(5, 5);
        m << q * q, 2 * q, r6, 2 * p, p * p,
             2 * q, p * p, -r6, -q * q, -2 * p,
             r6, -r6, -1, r6, r6,
             2 * p, -q * q, r6, p * p, -2 * q,
             p * p, -2 * p, r6, -2 * q, q * q;
        return m / 5.0;
    }
    throw IndexInvalid("unknown irrep name: " + name);
}

std::vector<int> row_labels(const std::string& name) {
    if (name == "A") return {0};
    if (name == "T1") return {1, 0, -1};
    if (name == "T2") return {2, 0, -2};
    if (name == "G") return {2, 1, -1, -2};
    if (name == "H") return {2, 1, 0, -1, -2};
    throw IndexInvalid("unknown irrep name: " + name);
}

} // namespace

IrrepSet::IrrepSet(const Group& group) : group_(group) {
    for (const auto& name : names()) {
        Irrep ir;
        ir.name = name;
        ir.rows = row_labels(name);
        ir.dim = static_cast<int>(ir.rows.size());

        Eigen::MatrixXcd dt = Eigen::MatrixXcd::Zero(ir.dim, ir.dim);
        for (int i = 0; i < ir.dim; ++i)
            dt(i, i) = golden().eta_pow(ir.rows[i]);
        Eigen::MatrixXcd ds = s1_matrix(name).cast<cplx>();

        Eigen::MatrixXcd dt2 = dt * dt;
        Eigen::MatrixXcd dr6 = ds * dt2 * ds * dt2 * dt2;
        Eigen::MatrixXcd ds12 = dr6 * dr6 * ds * dr6;

        ir.mats.resize(Group::n_rotations);
        for (int x = 0; x < Group::n_rotations; ++x) {
            const Decomposition& w = group.decomposition(x);
            Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(ir.dim, ir.dim);
            for (int i = 0; i < w.a; ++i) m = m * dt;
            for (int i = 0; i < w.b; ++i) m = m * dr6;
            if (w.c) m = m * ds;
            if (w.d) m = m * ds12;
            ir.mats[x] = m;
        }
        irreps_.push_back(std::move(ir));
    }
}

const std::vector<std::string>& IrrepSet::names() {
    static const std::vector<std::string> n{"A", "T1", "T2", "G", "H"};
    return n;
}

const std::vector<std::string>& IrrepSet::parity_names() {
    static const std::vector<std::string> n{"Ag", "Au", "T1g", "T1u", "T2g",
                                            "T2u", "Gg", "Gu", "Hg", "Hu"};
    return n;
}

const Irrep& IrrepSet::rep(const std::string& name) const {
    for (const auto& ir : irreps_)
        if (ir.name == name) return ir;
    throw IndexInvalid("unknown irrep name: " + name);
}

ParityIrrep IrrepSet::parity_rep(const std::string& name) const {
    if (name.size() < 2)
        throw IndexInvalid("unknown parity irrep name: " + name);
    char tail = name.back();
    if (tail != 'g' && tail != 'u')
        throw IndexInvalid("parity irrep name must end in g or u: " + name);
    ParityIrrep pr;
    pr.name = name;
    pr.base = &rep(name.substr(0, name.size() - 1));
    pr.sign = (tail == 'g') ? +1 : -1;
    return pr;
}

Eigen::MatrixXd IrrepSet::character_table() const {
    Eigen::MatrixXd chi(irreps_.size(), group_.n_classes());
    for (size_t i = 0; i < irreps_.size(); ++i) {
        for (int c = 0; c < group_.n_classes(); ++c) {
            cplx t = irreps_[i].mats[group_.class_members(c).front()].trace();
            chi(i, c) = t.real();
        }
    }
    return chi;
}

double IrrepSet::class_operator_eigenvalue(const std::string& rep_name,
                                           int class_index,
                                           double tol) const {
    const Irrep& ir = rep(rep_name);
    if (class_index < 0 || class_index >= group_.n_classes())
        throw IndexInvalid("class index out of range");
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(ir.dim, ir.dim);
    for (int x : group_.class_members(class_index)) sum += ir.mats[x];
    cplx lambda = sum.trace() / static_cast<double>(ir.dim);
    double dev = (sum - lambda * Eigen::MatrixXcd::Identity(ir.dim, ir.dim))
                     .cwiseAbs()
                     .maxCoeff();
    dev = std::max(dev, std::abs(lambda.imag()));
    if (dev > tol)
        throw NotScalar("class sum is not scalar on " + rep_name +
                        " (deviation " + std::to_string(dev) + ")");
    return lambda.real();
}

double IrrepSet::fivefold_class_scalar(const std::string& rep_name,
                                       double tol) const {
    return class_operator_eigenvalue(rep_name, 1, tol);
}

namespace {

struct Euler {
    double a, b, g;
};

// M = Rz(a) Ry(b) Rz(g). The b = 0 or pi branch needs its own formula;
// it is exercised by the equatorial two-fold turns, whose matrices have
// M(2,2) = -1.
Euler euler_zyz(const Eigen::Matrix3d& m) {
    double c = std::clamp(m(2, 2), -1.0, 1.0);
    Euler e;
    e.b = std::acos(c);
    if (std::abs(m(2, 2)) < 1.0 - 1e-12) {
        e.a = std::atan2(m(1, 2), m(0, 2));
        e.g = std::atan2(m(2, 1), -m(2, 0));
    } else {
        e.g = 0.0;
        e.a = (m(2, 2) > 0) ? std::atan2(m(1, 0), m(0, 0))
                            : std::atan2(-m(1, 0), -m(0, 0));
    }
    return e;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Eigen::MatrixXd wigner_d_small(int l, double beta) {
    int n = 2 * l + 1;
    Eigen::MatrixXd d(n, n);
    double cb = std::cos(beta / 2.0), sb = std::sin(beta / 2.0);
    for (int i = 0; i < n; ++i) {
        int mp = l - i;
        for (int j = 0; j < n; ++j) {
            int m = l - j;
            double s = 0.0;
            for (int k = std::max(0, m - mp); k <= std::min(l - mp, l + m);
                 ++k) {
                double num = std::sqrt(factorial(l + mp) * factorial(l - mp) *
                                       factorial(l + m) * factorial(l - m));
                double den = factorial(l - mp - k) * factorial(l + m - k) *
                             factorial(k) * factorial(k + mp - m);
                double sign = ((k + mp - m) % 2 == 0) ? 1.0 : -1.0;
                s += sign * (num / den) *
                     std::pow(cb, 2 * l + m - mp - 2 * k) *
                     std::pow(sb, mp - m + 2 * k);
            }
            d(i, j) = s;
        }
    }
    return d;
}

} // namespace

Eigen::MatrixXcd wigner_matrix(int l, const Eigen::Matrix3d& m) {
    Euler e = euler_zyz(m);
    Eigen::MatrixXd d = wigner_d_small(l, e.b);
    int n = 2 * l + 1;
    Eigen::MatrixXcd out(n, n);
    for (int i = 0; i < n; ++i) {
        int mp = l - i;
        for (int j = 0; j < n; ++j) {
            int mm = l - j;
            out(i, j) = std::polar(1.0, -mp * e.a) * d(i, j) *
                        std::polar(1.0, -mm * e.g);
        }
    }
    return out;
}

Eigen::MatrixXd ell3_splitting_matrix() {
    double s25 = std::sqrt(2.0 / 5.0), s35 = std::sqrt(3.0 / 5.0);
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(7, 7);
    x(0, 2) = -s25; x(0, 6) = s35;
    x(1, 0) = s35;  x(1, 3) = -s25;
    x(2, 4) = 1.0;
    x(3, 1) = 1.0;
    x(4, 5) = 1.0;
    x(5, 2) = s35;  x(5, 6) = s25;
    x(6, 0) = s25;  x(6, 3) = s35;
    return x;
}

SubductionReport subduction_check(const IrrepSet& irreps, double tol) {
    const Group& g = irreps.group();
    const Irrep& ra = irreps.rep("A");
    const Irrep& rt1 = irreps.rep("T1");
    const Irrep& rt2 = irreps.rep("T2");
    const Irrep& rg = irreps.rep("G");
    const Irrep& rh = irreps.rep("H");
    Eigen::MatrixXd x = ell3_splitting_matrix();

    SubductionReport rep{};
    for (int i = 0; i < Group::n_rotations; ++i) {
        const Eigen::Matrix3d& m = g.element(i).rotation.matrix;
        rep.max_dev[0] = std::max(
            rep.max_dev[0],
            (wigner_matrix(0, m) - ra.mats[i]).cwiseAbs().maxCoeff());
        rep.max_dev[1] = std::max(
            rep.max_dev[1],
            (wigner_matrix(1, m) - rt1.mats[i]).cwiseAbs().maxCoeff());
        rep.max_dev[2] = std::max(
            rep.max_dev[2],
            (wigner_matrix(2, m) - rh.mats[i]).cwiseAbs().maxCoeff());
        Eigen::MatrixXcd b = x.transpose() * wigner_matrix(3, m) * x;
        double d3 = (b.block(0, 0, 3, 3) - rt2.mats[i]).cwiseAbs().maxCoeff();
        d3 = std::max(d3, (b.block(3, 3, 4, 4) - rg.mats[i])
                              .cwiseAbs()
                              .maxCoeff());
        d3 = std::max(d3, b.block(0, 3, 3, 4).cwiseAbs().maxCoeff());
        d3 = std::max(d3, b.block(3, 0, 4, 3).cwiseAbs().maxCoeff());
        rep.max_dev[3] = std::max(rep.max_dev[3], d3);
    }
    for (int l = 0; l <= 3; ++l) {
        if (rep.max_dev[l] > tol)
            throw ConventionMismatch(
                "rotation matrices at angular momentum " + std::to_string(l) +
                " deviate from the stored irreps by " +
                std::to_string(rep.max_dev[l]));
    }
    return rep;
}

} // namespace icosa
