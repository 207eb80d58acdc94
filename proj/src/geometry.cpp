#include "icosa/geometry.hpp"

#include <cmath>

#include "icosa/constants.hpp"

namespace icosa {

Eigen::Matrix3d rotation_about(const Eigen::Vector3d& axis, double angle) {
    Eigen::Vector3d n = axis.normalized();
    Eigen::Matrix3d k;
    k << 0, -n.z(), n.y(),
         n.z(), 0, -n.x(),
         -n.y(), n.x(), 0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k +
           (1.0 - std::cos(angle)) * (k * k);
}

Eigen::Vector3d spherical_dir(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi),
            std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

Geometry::Geometry() {
    const double theta1 = std::atan2(2.0, 1.0);
    vertices_[0] = {0, "A0", Eigen::Vector3d(0, 0, 1)};
    for (int j = 1; j <= 5; ++j) {
        vertices_[j] = {j, "A" + std::to_string(j),
                        spherical_dir(theta1, 2.0 * (j - 1) * M_PI / 5.0)};
    }
    for (int j = 0; j < 6; ++j) {
        vertices_[6 + j] = {6 + j, "B" + std::to_string(j),
                            -vertices_[j].position};
    }
}

const Vertex& Geometry::vertex(int index) const {
    if (index < 0 || index >= 12)
        throw IndexInvalid("vertex index out of range: " +
                           std::to_string(index));
    return vertices_[index];
}

int Geometry::snap(const Eigen::Vector3d& pos, double tol) const {
    int best = -1;
    double best_d = tol;
    for (const auto& v : vertices_) {
        double d = (v.position - pos).norm();
        if (d < best_d) {
            best_d = d;
            best = v.index;
        }
    }
    if (best < 0)
        throw SnapFailure("point does not land on a vertex within tolerance");
    return best;
}

std::array<int, 12> Geometry::permutation_of(const Eigen::Matrix3d& m,
                                             double tol) const {
    std::array<int, 12> perm{};
    std::array<bool, 12> used{};
    for (int v = 0; v < 12; ++v) {
        int image = snap(m * vertices_[v].position, tol);
        if (used[image])
            throw SnapFailure("two vertices snapped to the same image");
        used[image] = true;
        perm[v] = image;
    }
    return perm;
}

Eigen::Vector3d Geometry::fivefold_axis(int j) const {
    if (j < 0 || j > 5)
        throw IndexInvalid("five-fold axis index out of range");
    if (j == 0) return Eigen::Vector3d(0, 0, 1);
    return vertices_[j].position;
}

Eigen::Vector3d Geometry::threefold_axis(int j) const {
    if (j < 1 || j > 10)
        throw IndexInvalid("three-fold axis index out of range");
    const double s5 = golden().sqrt5;
    if (j <= 5) {
        // face centers of the upper cap ring
        return spherical_dir(std::atan2(3.0 - s5, 1.0),
                             (2.0 * j - 1.0) * M_PI / 5.0);
    }
    return spherical_dir(std::atan2(3.0 + s5, 1.0),
                         (2.0 * (j - 5) - 1.0) * M_PI / 5.0);
}

Eigen::Vector3d Geometry::twofold_axis(int j) const {
    if (j < 1 || j > 15)
        throw IndexInvalid("two-fold axis index out of range");
    const auto& g = golden();
    if (j <= 5) {
        // edge midpoints of the upper cap; S1 lies in the xz plane
        return spherical_dir(std::atan2(g.p, 1.0),
                             2.0 * (j - 1) * M_PI / 5.0);
    }
    if (j <= 10) {
        return spherical_dir(std::atan2(g.pinv, 1.0),
                             (2.0 * (j - 5) - 1.0) * M_PI / 5.0);
    }
    // equatorial edge midpoints; S12's axis is +y
    return spherical_dir(M_PI / 2.0, (4.0 * (j - 10) - 3.0) * M_PI / 10.0);
}

} // namespace icosa
