#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "icosa/errors.hpp"
#include "icosa/group.hpp"

using namespace icosa;

namespace {
const Group& shared_group() {
    static Group group;
    return group;
}
} // namespace

TEST_CASE("element labels are a bijection") {
    const Group& g = shared_group();
    std::set<std::string> labels;
    for (int id = 0; id < Group::n_elements; ++id) {
        const GroupElement& e = g.element(id);
        CHECK(e.id == id);
        CHECK(g.id_of(e.label) == id);
        labels.insert(e.label);
    }
    CHECK(labels.size() == 120);
    CHECK(g.element(0).label == "E");
    CHECK(g.element(60).label == "P");
    CHECK(g.element(60 + g.id_T0()).label == "PT0");
    CHECK_THROWS_AS(g.id_of("bogus"), IndexInvalid);
    CHECK_THROWS_AS(g.element(200), IndexInvalid);
}

TEST_CASE("generator relations") {
    const Group& g = shared_group();
    int t0 = g.id_T0(), s1 = g.id_S1(), e = g.id_E();
    int x = e;
    for (int i = 0; i < 5; ++i) x = g.multiply(x, t0);
    CHECK(x == e);
    CHECK(g.multiply(s1, s1) == e);
    int ts = g.multiply(t0, s1);
    CHECK(g.multiply(ts, g.multiply(ts, ts)) == e);

    int t2 = g.multiply(t0, t0);
    int t4 = g.multiply(t2, t2);
    CHECK(g.multiply(g.multiply(s1, t2), g.multiply(s1, t4)) == g.id_R6());
    int r6 = g.id_R6();
    CHECK(g.multiply(g.multiply(r6, r6), g.multiply(s1, r6)) == g.id_S12());
}

TEST_CASE("key products of the generators") {
    const Group& g = shared_group();
    int t0 = g.id_T0(), s1 = g.id_S1();
    int t0_4 = g.id_of("T0^4");
    CHECK(g.multiply(t0, s1) == g.id_of("R1^2"));
    CHECK(g.multiply(s1, t0) == g.id_of("R5^2"));
    CHECK(g.multiply(s1, t0_4) == g.id_of("R1"));
    CHECK(g.multiply(t0_4, s1) == g.id_of("R5"));
}

TEST_CASE("product table is a group") {
    const Group& g = shared_group();
    for (int x = 0; x < Group::n_elements; ++x) {
        std::set<int> row;
        for (int y = 0; y < Group::n_elements; ++y)
            row.insert(g.multiply(x, y));
        CHECK(row.size() == 120);
        CHECK(g.multiply(x, g.inverse(x)) == g.id_E());
        CHECK(g.multiply(g.inverse(x), x) == g.id_E());
    }
    for (int x = 0; x < 20; ++x)
        for (int y = 0; y < Group::n_elements; ++y)
            for (int z : {3, 31, 59, 87})
                CHECK(g.multiply(g.multiply(x, y), z) ==
                      g.multiply(x, g.multiply(y, z)));
}

TEST_CASE("two generators reach the whole rotation group") {
    const Group& g = shared_group();
    std::set<int> reached{g.id_E()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x : std::set<int>(reached))
            for (int h : {g.id_T0(), g.id_S1()})
                if (reached.insert(g.multiply(x, h)).second) grew = true;
    }
    CHECK(reached.size() == 60);
}

TEST_CASE("conjugacy classes") {
    const Group& g = shared_group();
    CHECK(g.n_classes() == 5);
    const int sizes[5] = {1, 12, 12, 20, 15};
    const char* names[5] = {"E", "C5", "C5^2", "C3", "C2"};
    int total = 0;
    for (int c = 0; c < 5; ++c) {
        CHECK(g.class_name(c) == names[c]);
        CHECK(static_cast<int>(g.class_members(c).size()) == sizes[c]);
        total += sizes[c];
        for (int id : g.class_members(c)) CHECK(g.class_of(id) == c);
    }
    CHECK(total == 60);
    CHECK(g.class_of(g.id_T0()) == 1);
    CHECK(g.class_of(g.id_of("T0^4")) == 1);
    CHECK(g.class_of(g.id_of("T0^2")) == 2);
    CHECK(g.class_of(g.id_R6()) == 3);
    CHECK(g.class_of(g.id_of("R1^2")) == 3);
    CHECK(g.class_of(g.id_S1()) == 4);
    CHECK(g.class_of(g.id_S12()) == 4);
}

TEST_CASE("canonical words cover the group uniquely") {
    const Group& g = shared_group();
    std::set<std::tuple<int, int, int, int>> words;
    int t0 = g.id_T0(), r6 = g.id_R6(), s1 = g.id_S1(), s12 = g.id_S12();
    for (int r = 0; r < Group::n_rotations; ++r) {
        const Decomposition& w = g.decomposition(r);
        CHECK(w.a >= 0);
        CHECK(w.a < 5);
        CHECK(w.b >= 0);
        CHECK(w.b < 3);
        CHECK(w.c >= 0);
        CHECK(w.c < 2);
        CHECK(w.d >= 0);
        CHECK(w.d < 2);
        words.insert({w.a, w.b, w.c, w.d});
        int x = g.id_E();
        for (int i = 0; i < w.a; ++i) x = g.multiply(x, t0);
        for (int i = 0; i < w.b; ++i) x = g.multiply(x, r6);
        for (int i = 0; i < w.c; ++i) x = g.multiply(x, s1);
        for (int i = 0; i < w.d; ++i) x = g.multiply(x, s12);
        CHECK(x == r);
    }
    CHECK(words.size() == 60);
}

TEST_CASE("inversion is a central involution") {
    const Group& g = shared_group();
    int p = g.id_P();
    CHECK(g.multiply(p, p) == g.id_E());
    for (int x = 0; x < Group::n_elements; ++x) {
        CHECK(g.multiply(p, x) == g.multiply(x, p));
        CHECK(g.element(x).parity == (x < 60 ? 1 : -1));
    }
}

TEST_CASE("displayed vertex maps") {
    const Group& g = shared_group();
    // Vertices 0..5 are the upper ring, 6..11 the antipodes.
    auto check_perm = [&](const std::string& label,
                          const std::array<int, 12>& want) {
        const auto& perm = g.element(g.id_of(label)).perm;
        for (int v = 0; v < 12; ++v) CHECK(perm[v] == want[v]);
    };
    check_perm("T0", {0, 2, 3, 4, 5, 1, 6, 8, 9, 10, 11, 7});
    check_perm("S11", {6, 10, 9, 8, 7, 11, 0, 4, 3, 2, 1, 5});
    check_perm("S5", {5, 4, 8, 9, 1, 0, 11, 10, 2, 3, 7, 6});
    check_perm("S10", {9, 5, 8, 6, 10, 1, 3, 11, 2, 0, 4, 7});
}

TEST_CASE("rotation matrices realize the permutations") {
    const Group& g = shared_group();
    const Geometry& geo = g.geometry();
    for (int r = 0; r < Group::n_rotations; ++r) {
        const GroupElement& e = g.element(r);
        for (int v = 0; v < 12; ++v) {
            Eigen::Vector3d image =
                e.rotation.matrix * geo.vertex(v).position;
            CHECK(geo.snap(image) == e.perm[v]);
        }
    }
}

TEST_CASE("geometry landmarks") {
    const Geometry& geo = shared_group().geometry();
    CHECK(geo.vertices().size() == 12);
    CHECK((geo.vertex(0).position - Eigen::Vector3d(0, 0, 1)).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(geo.vertex(0).label == "A0");
    CHECK(geo.vertex(6).label == "B0");
    for (int v = 0; v < 12; ++v) {
        CHECK(geo.vertex(v).position.norm() == doctest::Approx(1.0));
        CHECK((geo.vertex(v).position + geo.vertex((v + 6) % 12).position)
                  .norm() == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK((geo.fivefold_axis(0) - Eigen::Vector3d(0, 0, 1)).norm() ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(geo.snap(Eigen::Vector3d(0.5, 0.5, 0.5)), SnapFailure);
    CHECK_THROWS_AS(geo.vertex(12), IndexInvalid);
}

TEST_CASE("rotation angles by class") {
    const Group& g = shared_group();
    const double cos_by_class[5] = {1.0, (std::sqrt(5.0) - 1.0) / 4.0,
                                    -(std::sqrt(5.0) + 1.0) / 4.0, -0.5,
                                    -1.0};
    for (int r = 0; r < Group::n_rotations; ++r) {
        const Eigen::Matrix3d& m = g.element(r).rotation.matrix;
        CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
        CHECK((m * m.transpose() - Eigen::Matrix3d::Identity())
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
        double c = (m.trace() - 1.0) / 2.0;
        CHECK(c == doctest::Approx(cos_by_class[g.class_of(r)])
                       .epsilon(1e-12));
    }
}
