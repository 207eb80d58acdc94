#include "icosa/group.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace icosa {

namespace {

std::string power_label(const std::string& base, int k) {
    return k > 1 ? base + "^" + std::to_string(k) : base;
}

} // namespace

Group::Group(double snap_tol) {
    build_rotations(snap_tol);
    build_table();
    build_classes();
    build_decompositions();
    build_parity_half();
}

void Group::build_rotations(double snap_tol) {
    elements_.reserve(n_elements);

    auto push = [&](const std::string& label, const Eigen::Vector3d& axis,
                    double angle) {
        GroupElement e;
        e.id = static_cast<int>(elements_.size());
        e.label = label;
        e.parity = +1;
        e.rotation.axis = axis.normalized();
        e.rotation.angle = angle;
        e.rotation.matrix = rotation_about(axis, angle);
        e.perm = geometry_.permutation_of(e.rotation.matrix, snap_tol);
        e.word = {0, 0, 0, 0};
        elements_.push_back(e);
    };

    push("E", Eigen::Vector3d(0, 0, 1), 0.0);
    for (int j = 0; j <= 5; ++j)
        for (int k = 1; k <= 4; ++k)
            push(power_label("T" + std::to_string(j), k),
                 geometry_.fivefold_axis(j), 2.0 * M_PI * k / 5.0);
    for (int j = 1; j <= 10; ++j)
        for (int k = 1; k <= 2; ++k)
            push(power_label("R" + std::to_string(j), k),
                 geometry_.threefold_axis(j), 2.0 * M_PI * k / 3.0);
    for (int j = 1; j <= 15; ++j)
        push("S" + std::to_string(j), geometry_.twofold_axis(j), M_PI);

    for (int i = 0; i < n_rotations; ++i) {
        perms_[i] = elements_[i].perm;
        label_to_id_[elements_[i].label] = i;
    }
    id_t0_ = label_to_id_.at("T0");
    id_r6_ = label_to_id_.at("R6");
    id_s1_ = label_to_id_.at("S1");
    id_s12_ = label_to_id_.at("S12");

    std::set<std::array<int, 12>> distinct(perms_.begin(), perms_.end());
    if (distinct.size() != n_rotations)
        throw ClosureViolation("vertex permutations are not distinct");
}

void Group::build_table() {
    std::map<std::array<int, 12>, int> perm_to_id;
    for (int i = 0; i < n_rotations; ++i) perm_to_id[perms_[i]] = i;

    table_.resize(n_rotations);
    for (int x = 0; x < n_rotations; ++x) {
        for (int y = 0; y < n_rotations; ++y) {
            std::array<int, 12> q;
            for (int v = 0; v < 12; ++v) q[v] = perms_[x][perms_[y][v]];
            auto it = perm_to_id.find(q);
            if (it == perm_to_id.end())
                throw ClosureViolation("product " + elements_[x].label + "*" +
                                       elements_[y].label +
                                       " is not a stored element");
            table_[x][y] = it->second;
        }
    }
    for (int x = 0; x < n_rotations; ++x) {
        int found = -1;
        for (int y = 0; y < n_rotations; ++y)
            if (table_[x][y] == 0) { found = y; break; }
        if (found < 0)
            throw ClosureViolation("element without inverse");
        inverse_[x] = found;
    }
}

void Group::build_classes() {
    std::array<bool, 60> assigned{};
    std::vector<std::vector<int>> raw;
    for (int x = 0; x < n_rotations; ++x) {
        if (assigned[x]) continue;
        std::set<int> c;
        for (int g = 0; g < n_rotations; ++g)
            c.insert(table_[table_[g][x]][inverse_[g]]);
        for (int y : c) assigned[y] = true;
        raw.emplace_back(c.begin(), c.end());
    }
    if (raw.size() != 5)
        throw ClosureViolation("expected five conjugacy classes");

    auto find_with = [&](int id) {
        for (auto& c : raw)
            if (std::find(c.begin(), c.end(), id) != c.end()) return c;
        throw ClosureViolation("element missing from class partition");
    };
    classes_ = {find_with(0), find_with(id_t0_),
                find_with(table_[id_t0_][id_t0_]), find_with(id_r6_),
                find_with(id_s1_)};
    class_names_ = {"E", "C5", "C5^2", "C3", "C2"};
    const std::array<size_t, 5> expected_sizes{1, 12, 12, 20, 15};
    for (int c = 0; c < 5; ++c) {
        if (classes_[c].size() != expected_sizes[c])
            throw ClosureViolation("class " + class_names_[c] +
                                   " has unexpected size");
        for (int y : classes_[c]) class_of_[y] = c;
    }
}

void Group::build_decompositions() {
    std::array<bool, 60> seen{};
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    int x = 0;
                    for (int i = 0; i < a; ++i) x = table_[x][id_t0_];
                    for (int i = 0; i < b; ++i) x = table_[x][id_r6_];
                    if (c) x = table_[x][id_s1_];
                    if (d) x = table_[x][id_s12_];
                    if (seen[x])
                        throw ClosureViolation(
                            "canonical word is not unique for " +
                            elements_[x].label);
                    seen[x] = true;
                    elements_[x].word = {a, b, c, d};
                }
    if (!std::all_of(seen.begin(), seen.end(), [](bool v) { return v; }))
        throw ClosureViolation("canonical words do not cover the group");
}

void Group::build_parity_half() {
    auto antipode = [](int v) { return v < 6 ? v + 6 : v - 6; };
    for (int r = 0; r < n_rotations; ++r) {
        GroupElement e = elements_[r];
        e.id = 60 + r;
        e.label = (r == 0) ? "P" : "P" + elements_[r].label;
        e.parity = -1;
        for (int v = 0; v < 12; ++v) e.perm[v] = antipode(elements_[r].perm[v]);
        elements_.push_back(e);
        label_to_id_[e.label] = e.id;
    }
}

const GroupElement& Group::element(int id) const {
    if (id < 0 || id >= n_elements)
        throw IndexInvalid("element id out of range: " + std::to_string(id));
    return elements_[id];
}

const GroupElement& Group::element(const std::string& label) const {
    return elements_[id_of(label)];
}

int Group::multiply(int x, int y) const {
    if (x < 0 || x >= n_elements || y < 0 || y >= n_elements)
        throw IndexInvalid("element id out of range in product");
    int r = table_[x % 60][y % 60];
    bool flip = (x >= 60) != (y >= 60);
    return r + (flip ? 60 : 0);
}

int Group::inverse(int x) const {
    if (x < 0 || x >= n_elements)
        throw IndexInvalid("element id out of range in inverse");
    return inverse_[x % 60] + (x >= 60 ? 60 : 0);
}

int Group::id_of(const std::string& label) const {
    auto it = label_to_id_.find(label);
    if (it == label_to_id_.end())
        throw IndexInvalid("unknown element label: " + label);
    return it->second;
}

const std::vector<int>& Group::class_members(int c) const {
    if (c < 0 || c >= 5) throw IndexInvalid("class index out of range");
    return classes_[c];
}

const std::string& Group::class_name(int c) const {
    if (c < 0 || c >= 5) throw IndexInvalid("class index out of range");
    return class_names_[c];
}

int Group::class_of(int rotation_id) const {
    if (rotation_id < 0 || rotation_id >= n_rotations)
        throw IndexInvalid("class lookup needs a rotation id");
    return class_of_[rotation_id];
}

const Decomposition& Group::decomposition(int rotation_id) const {
    if (rotation_id < 0 || rotation_id >= n_rotations)
        throw IndexInvalid("canonical word defined for rotations only");
    return elements_[rotation_id].word;
}

} // namespace icosa
