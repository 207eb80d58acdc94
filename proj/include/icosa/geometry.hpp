#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

#include "icosa/errors.hpp"

namespace icosa {

// One icosahedron vertex. Indices 0..5 are the upper set A0..A5,
// indices 6..11 the antipodal set B0..B5 with B_j = -A_j.
struct Vertex {
    int index;
    std::string label;
    Eigen::Vector3d position;
};

// A proper rotation, kept together with its defining axis and angle.
struct Rotation {
    Eigen::Vector3d axis;
    double angle;
    Eigen::Matrix3d matrix;
};

// Right-handed rotation by `angle` about the unit direction `axis`.
Eigen::Matrix3d rotation_about(const Eigen::Vector3d& axis, double angle);

// Unit vector with polar angle theta (from +z) and azimuth phi (from +x).
Eigen::Vector3d spherical_dir(double theta, double phi);

// Icosahedron in the orientation used throughout: A0 on +z, A1 in the
// xz half-plane (azimuth 0), upper-vertex polar angle arctan(2).
// The y axis then points at the midpoint of edge A2 B5.
class Geometry {
public:
    Geometry();

    const std::array<Vertex, 12>& vertices() const { return vertices_; }
    const Vertex& vertex(int index) const;

    // Index of the vertex nearest to `pos`; SnapFailure when nothing
    // lies within `tol`.
    int snap(const Eigen::Vector3d& pos, double tol = 1e-6) const;

    // Vertex permutation induced by an orthogonal matrix: perm[v] is the
    // index of the image of vertex v.
    std::array<int, 12> permutation_of(const Eigen::Matrix3d& m,
                                       double tol = 1e-6) const;

    // Symmetry axes. Five-fold: j = 0..5 (T0 = +z, T_j through A_j).
    // Three-fold: j = 1..10. Two-fold: j = 1..15.
    Eigen::Vector3d fivefold_axis(int j) const;
    Eigen::Vector3d threefold_axis(int j) const;
    Eigen::Vector3d twofold_axis(int j) const;

private:
    std::array<Vertex, 12> vertices_;
};

} // namespace icosa
