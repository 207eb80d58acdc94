#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "icosa/geometry.hpp"

namespace icosa {

// Exponents of the canonical word x = T0^a R6^b S1^c S12^d.
struct Decomposition {
    int a; // 0..4
    int b; // 0..2
    int c; // 0..1
    int d; // 0..1
};

// One symmetry operation. Rotation ids run 0..59; ids 60..119 are the
// same rotations composed with the inversion. The vertex permutation
// includes the antipodal flip for the inverted half, so it is faithful
// on all 120 elements; `parity` records which half the element is in.
struct GroupElement {
    int id;
    std::string label;
    int parity; // +1 rotation, -1 inversion * rotation
    std::array<int, 12> perm;
    Rotation rotation; // rotation part (axis, angle, matrix)
    Decomposition word; // canonical word of the rotation part
};

// The 60 rotations of the icosahedron and their inversion partners.
//
// Rotation id layout:
//   0        E
//   1..24    T_j^k   five-fold, j = 0..5 (axis through A_j), k = 1..4
//   25..44   R_j^k   three-fold, j = 1..10, k = 1..2
//   45..59   S_j     two-fold, j = 1..15
// Inverted elements: id 60 + r, labeled "P" (for r = 0) or "P<label>".
class Group {
public:
    static constexpr int n_rotations = 60;
    static constexpr int n_elements = 120;

    explicit Group(double snap_tol = 1e-6);

    const GroupElement& element(int id) const;
    const GroupElement& element(const std::string& label) const;

    // Product id; accepts the full 0..119 range. ClosureViolation if a
    // composed vertex permutation is not one of the stored elements.
    int multiply(int x, int y) const;
    int inverse(int x) const;

    // Id lookup by label ("E", "T0^2", "S11", "P", "PR6"); IndexInvalid
    // for unknown labels.
    int id_of(const std::string& label) const;

    // Conjugacy classes of the rotation subgroup, in the fixed order
    // E, C5, C5^2, C3, C2 (sizes 1, 12, 12, 20, 15).
    int n_classes() const { return 5; }
    const std::vector<int>& class_members(int c) const;
    const std::string& class_name(int c) const;
    int class_of(int rotation_id) const;

    // Canonical word of a rotation (parity +1 only).
    const Decomposition& decomposition(int rotation_id) const;

    const Geometry& geometry() const { return geometry_; }

    // Frequently used ids.
    int id_E() const { return 0; }
    int id_T0() const { return id_t0_; }
    int id_R6() const { return id_r6_; }
    int id_S1() const { return id_s1_; }
    int id_S12() const { return id_s12_; }
    int id_P() const { return 60; }

private:
    Geometry geometry_;
    std::vector<GroupElement> elements_;
    std::array<std::array<int, 12>, 60> perms_;
    std::vector<std::array<int, 60>> table_; // rotation product table
    std::array<int, 60> inverse_;
    std::array<int, 60> class_of_;
    std::vector<std::vector<int>> classes_;
    std::vector<std::string> class_names_;
    std::map<std::string, int> label_to_id_;
    int id_t0_, id_r6_, id_s1_, id_s12_;

    void build_rotations(double snap_tol);
    void build_table();
    void build_classes();
    void build_decompositions();
    void build_parity_half();
};

} // namespace icosa
