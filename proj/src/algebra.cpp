#include "icosa/algebra.hpp"

#include <cmath>

#include "icosa/errors.hpp"

namespace icosa {

namespace {

int mod5(int x) { return ((x % 5) + 5) % 5; }

std::string sector_str(int mu, int nu) {
    return "(" + std::to_string(mu) + "," + std::to_string(nu) + ")";
}

} // namespace

Algebra::Algebra(const Group& group, const IrrepSet& irreps, double tol)
    : group_(group), irreps_(irreps), tol_(tol) {
    // The class of T0: the twelve rotations by +-72 degrees.
    fivefold_class_ = group_.class_members(1);
    reduce_all();
}

AlgebraVector Algebra::left_mul(int g, const AlgebraVector& v) const {
    AlgebraVector w = AlgebraVector::Zero(Group::n_rotations);
    for (int x = 0; x < Group::n_rotations; ++x)
        w[group_.multiply(g, x)] += v[x];
    return w;
}

AlgebraVector Algebra::right_mul(const AlgebraVector& v, int g) const {
    AlgebraVector w = AlgebraVector::Zero(Group::n_rotations);
    for (int x = 0; x < Group::n_rotations; ++x)
        w[group_.multiply(x, g)] += v[x];
    return w;
}

AlgebraVector Algebra::project_left(int mu, const AlgebraVector& v) const {
    AlgebraVector w = AlgebraVector::Zero(Group::n_rotations);
    AlgebraVector t = v;
    for (int lam = 0; lam < 5; ++lam) {
        w += golden().eta_pow(mod5(-mu * lam)) * t;
        t = left_mul(group_.id_T0(), t);
    }
    return w / 5.0;
}

AlgebraVector Algebra::project_right(int nu, const AlgebraVector& v) const {
    AlgebraVector w = AlgebraVector::Zero(Group::n_rotations);
    AlgebraVector t = v;
    for (int lam = 0; lam < 5; ++lam) {
        w += golden().eta_pow(mod5(-nu * lam)) * t;
        t = right_mul(t, group_.id_T0());
    }
    return w / 5.0;
}

bool Algebra::family_valid(int family, int mu, int nu) {
    switch (family) {
        case 1: return mod5(nu - mu) == 0;
        case 2: return mod5(nu + mu) == 0;
        case 3:
        case 4: return true;
        default: return false;
    }
}

std::vector<int> Algebra::sector_families(int mu, int nu) const {
    std::vector<int> out;
    for (int i = 1; i <= 4; ++i)
        if (family_valid(i, mu, nu)) out.push_back(i);
    return out;
}

int Algebra::family_seed(int family) const {
    switch (family) {
        case 1: return group_.id_E();
        case 2: return group_.id_of("S11");
        case 3: return group_.id_of("S5");
        case 4: return group_.id_of("S10");
        default: throw IndexInvalid("family index must be 1..4");
    }
}

const AlgebraVector& Algebra::phi(int family, int mu, int nu) const {
    if (!family_valid(family, mu, nu))
        throw IndexInvalid("family " + std::to_string(family) +
                           " has no vector at " + sector_str(mu, nu));
    auto key = std::make_tuple(family, mod5(mu), mod5(nu));
    auto it = phi_cache_.find(key);
    if (it != phi_cache_.end()) return it->second;

    int seed = family_seed(family);
    AlgebraVector v = AlgebraVector::Zero(Group::n_rotations);
    v[seed] = 1.0;
    AlgebraVector w = project_left(mu, project_right(nu, v));
    double n = w.norm();
    if (n < 1e-9)
        throw IndexInvalid("projection of family " + std::to_string(family) +
                           " vanishes at " + sector_str(mu, nu));
    w /= n;
    cplx c = w[seed];
    if (std::abs(c) < 1e-12)
        throw IndexInvalid("seed coefficient vanished in family " +
                           std::to_string(family));
    w *= std::abs(c) / c;
    return phi_cache_.emplace(key, std::move(w)).first->second;
}

AlgebraVector Algebra::apply_fivefold_class(const AlgebraVector& v) const {
    AlgebraVector w = AlgebraVector::Zero(Group::n_rotations);
    for (int g : fivefold_class_)
        for (int x = 0; x < Group::n_rotations; ++x)
            w[group_.multiply(g, x)] += v[x];
    return w;
}

Eigen::MatrixXcd Algebra::class_operator_sector(int mu, int nu) const {
    std::vector<int> fams = sector_families(mu, nu);
    int n = static_cast<int>(fams.size());
    std::vector<const AlgebraVector*> basis(n);
    std::vector<AlgebraVector> wb(n);
    for (int i = 0; i < n; ++i) {
        basis[i] = &phi(fams[i], mu, nu);
        wb[i] = apply_fivefold_class(*basis[i]);
    }
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = basis[i]->dot(wb[j]);
    // The class sum is central, so each image must stay inside the
    // sector span; anything left over signals a table bug.
    for (int j = 0; j < n; ++j) {
        AlgebraVector resid = wb[j];
        for (int i = 0; i < n; ++i) resid -= m(i, j) * (*basis[i]);
        if (resid.norm() > tol_)
            throw SectorLeak("class operator leaks out of sector " +
                             sector_str(mu, nu) + " by " +
                             std::to_string(resid.norm()));
    }
    return m;
}

void Algebra::reduce_all() {
    // Scalars of the five-fold class sum, one per irrep; these are
    // distinct, which is what makes the eigenvalue labeling work.
    std::map<std::string, double> alphas;
    for (const auto& ir : irreps_.all())
        alphas[ir.name] = irreps_.fivefold_class_scalar(ir.name);

    // Step 1: diagonalize each sector; label eigenvectors by irrep.
    std::map<std::pair<int, int>, std::map<std::string, AlgebraVector>> raw;
    for (int mu = -2; mu <= 2; ++mu) {
        for (int nu = -2; nu <= 2; ++nu) {
            std::vector<int> fams = sector_families(mu, nu);
            int n = static_cast<int>(fams.size());
            Eigen::MatrixXcd m = class_operator_sector(mu, nu);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
            if (es.info() != Eigen::Success)
                throw DegenerateAmbiguity("sector eigensolve failed at " +
                                          sector_str(mu, nu));
            auto& out = raw[{mu, nu}];
            for (int k = 0; k < n; ++k) {
                double ev = es.eigenvalues()[k];
                std::string match;
                for (const auto& [name, alpha] : alphas) {
                    if (std::abs(ev - alpha) < 1e-6) {
                        if (!match.empty())
                            throw DegenerateAmbiguity(
                                "eigenvalue matches two irreps at " +
                                sector_str(mu, nu));
                        match = name;
                    }
                }
                if (match.empty())
                    throw DegenerateAmbiguity(
                        "eigenvalue " + std::to_string(ev) +
                        " matches no irrep scalar at " + sector_str(mu, nu));
                if (out.count(match))
                    throw DegenerateAmbiguity("irrep " + match +
                                              " appears twice in sector " +
                                              sector_str(mu, nu));
                AlgebraVector vec = AlgebraVector::Zero(Group::n_rotations);
                for (int i = 0; i < n; ++i)
                    vec += es.eigenvectors()(i, k) * phi(fams[i], mu, nu);
                out.emplace(match, std::move(vec));
            }
        }
    }

    // Step 2: fix phases irrep by irrep. The anchor is the diagonal
    // sector of the leading row; its identity-element coefficient is
    // made real positive. The remaining sectors are reached through
    // the S1 action, whose matrix has no zero entries in the leading
    // row or column for any irrep.
    int s1 = group_.id_S1();
    for (const auto& ir : irreps_.all()) {
        const Eigen::MatrixXcd& ds = ir.at(s1);
        int mu0 = ir.rows[0];

        AlgebraVector anchor = raw[{mu0, mu0}].at(ir.name);
        cplx c = anchor[group_.id_E()];
        if (std::abs(c) < 1e-12)
            throw DegenerateAmbiguity(
                "anchor vector has no identity component in " + ir.name);
        anchor *= std::abs(c) / c;
        psi_[{ir.name, mu0, mu0}] = anchor;

        auto aligned = [&](int mu, int nu) -> const AlgebraVector& {
            return psi_.at({ir.name, mu, nu});
        };
        auto fix_phase = [&](const AlgebraVector& target_dir,
                             const AlgebraVector& vec, cplx dcoef,
                             int mu, int nu) {
            cplx z = vec.dot(target_dir) / dcoef;
            if (std::abs(std::abs(z) - 1.0) > 1e-6)
                throw DegenerateAmbiguity(
                    "phase factor is not unimodular in " + ir.name + " at " +
                    sector_str(mu, nu));
            psi_[{ir.name, mu, nu}] = vec * z;
        };

        // Column chain along the anchor row.
        AlgebraVector w = right_mul(aligned(mu0, mu0), s1);
        for (int r = 1; r < ir.dim; ++r) {
            int rho = ir.rows[r];
            fix_phase(w, raw[{mu0, rho}].at(ir.name), ds(0, r), mu0, rho);
        }
        // Row chains down every column.
        for (int nu : ir.rows) {
            AlgebraVector wl = left_mul(s1, aligned(mu0, nu));
            for (int r = 1; r < ir.dim; ++r) {
                int rho = ir.rows[r];
                fix_phase(wl, raw[{rho, nu}].at(ir.name), ds(r, 0), rho, nu);
            }
        }
    }
}

const AlgebraVector& Algebra::psi(const std::string& rep, int mu,
                                  int nu) const {
    auto it = psi_.find({rep, mu, nu});
    if (it == psi_.end())
        throw IndexInvalid("no basis vector " + rep + " at " +
                           sector_str(mu, nu));
    return it->second;
}

ReductionCoefficients Algebra::coefficients(const std::string& rep, int mu,
                                            int nu) const {
    const AlgebraVector& v = psi(rep, mu, nu);
    ReductionCoefficients rc;
    rc.rep = rep;
    rc.mu = mu;
    rc.nu = nu;
    rc.families = sector_families(mu, nu);
    std::vector<cplx> proj;
    for (int f : rc.families) proj.push_back(phi(f, mu, nu).dot(v));
    // Scale so the first non-vanishing coefficient has unit modulus;
    // then psi = N^{-1/2} sum_i C_i Phi_i holds exactly as stored.
    double lead = 0.0;
    for (const cplx& c : proj) {
        if (std::abs(c) > 1e-9) { lead = std::abs(c); break; }
    }
    if (lead == 0.0)
        throw IndexInvalid("basis vector has no family expansion at " +
                           sector_str(mu, nu));
    rc.N = 0.0;
    for (const cplx& c : proj) {
        rc.C.push_back(c / lead);
        rc.N += std::norm(c / lead);
    }
    return rc;
}

AlgebraVector Algebra::parity_basis(const std::string& rep, int mu, int nu,
                                    char parity) const {
    if (parity != 'g' && parity != 'u')
        throw IndexInvalid("parity must be 'g' or 'u'");
    const AlgebraVector& v = psi(rep, mu, nu);
    double s = (parity == 'g') ? 1.0 : -1.0;
    AlgebraVector w(Group::n_elements);
    const double r2 = std::sqrt(2.0);
    for (int r = 0; r < Group::n_rotations; ++r) {
        w[r] = v[r] / r2;
        w[60 + r] = s * v[r] / r2;
    }
    return w;
}

} // namespace icosa
