#include "doctest.h"

#include <cstdio>

#include "flatcs/calculus.hpp"
#include "flatcs/lattice.hpp"

using namespace flatcs;

namespace {

AlgebraElement su2_alg(double x, double y, double z) {
    Mat m(2, 2);
    m << cd(0, z), cd(y, x), cd(-y, x), cd(0, -z);
    return algebra_element(GroupId::SU2, m);
}

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("flat_from_holonomy: constants, commuting gate") {
    auto xi = su2_alg(0, 0, 0.5);
    LatticeConnection a = flat_from_holonomy({xi, zero_algebra(GroupId::SU2), xi}, 8);
    CHECK(a.n == 8);
    CHECK((connection_at(a, 0, 3, 2, 1) - xi.mat).norm() == 0.0);
    CHECK(connection_at(a, 1, 0, 0, 0).norm() == 0.0);

    auto bad1 = su2_alg(1, 0, 0);
    CHECK_THROWS_AS(flat_from_holonomy({xi, bad1, xi}, 8), ArgumentError);
}

TEST_CASE("degree_map: validation and pointwise membership") {
    CHECK_THROWS_AS(degree_map(9, 256), ArgumentError);
    CHECK_THROWS_AS(degree_map(2, 16), ArgumentError);

    GaugeMapField u = degree_map(1, 16);
    check_gauge_smoothness(u);
    for (int i : {0, 5, 8}) {
        Mat m = gauge_at(u, i, 7, 3);
        CHECK(group_membership_residual(GroupId::SU2, m) < 1e-12);
    }
    // identity far outside the bump's support ball
    CHECK((gauge_at(u, 0, 0, 0) - Mat::Identity(2, 2)).norm() < 1e-12);

    GaugeMapField u0 = degree_map(0, 8);
    CHECK((gauge_at(u0, 4, 4, 4) - Mat::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("mapping degree oracle on degree maps") {
    for (int d : {0, 1, -1}) {
        GaugeMapField u = degree_map(d, 32);
        CHECK(mapping_degree(u) == doctest::Approx(d).epsilon(0.02));
    }
    GaugeMapField u2 = degree_map(2, 32);
    CHECK(mapping_degree(u2) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("random smooth gauge maps are degree zero and smooth") {
    Rng rng(71);
    GaugeMapField u = random_smooth_gauge(GroupId::SU2, 16, 0.4, 2, rng);
    check_gauge_smoothness(u);
    CHECK(std::abs(mapping_degree(u)) < 0.05);
    for (GroupId g : {GroupId::U1, GroupId::SO3, GroupId::U2}) {
        GaugeMapField v = random_smooth_gauge(g, 8, 0.3, 1, rng);
        CHECK(group_membership_residual(g, gauge_at(v, 1, 2, 3)) < 1e-12);
    }
}

TEST_CASE("fcs container round trip") {
    Rng rng(72);
    LatticeConnection a = random_smooth_connection(GroupId::SO3, 8, 0.5, 1, rng);
    const std::string path = "/tmp/flatcs_test_conn.fcs";
    write_fcs(path, a);
    LatticeConnection b = read_fcs_connection(path);
    CHECK(b.group == a.group);
    CHECK(b.n == a.n);
    CHECK(b.data == a.data);  // bit-exact

    GaugeMapField u = random_smooth_gauge(GroupId::U2, 8, 0.2, 1, rng);
    const std::string path2 = "/tmp/flatcs_test_gauge.fcs";
    write_fcs(path2, u);
    GaugeMapField v = read_fcs_gauge(path2);
    CHECK(v.data == u.data);

    CHECK_THROWS_AS(read_fcs_gauge(path), ArgumentError);  // wrong payload size
}

TEST_CASE("json round trip") {
    Rng rng(73);
    LatticeConnection a = random_smooth_connection(GroupId::SU2, 4, 0.5, 1, rng);
    LatticeConnection b = connection_from_json(connection_to_json(a));
    double worst = 0.0;
    for (size_t e = 0; e < a.data.size(); ++e) worst = std::max(worst, std::abs(a.data[e] - b.data[e]));
    CHECK(worst == 0.0);

    GaugeMapField u = random_smooth_gauge(GroupId::U1, 4, 0.3, 1, rng);
    GaugeMapField v = gauge_from_json(gauge_to_json(u));
    CHECK(u.data == v.data);
}

TEST_CASE("tree_sum is deterministic and exact on integers") {
    std::vector<double> v;
    for (int i = 0; i < 1000; ++i) v.push_back(static_cast<double>((i * 7919) % 101 - 50));
    const double s1 = tree_sum(v);
    const double s2 = tree_sum(v);
    CHECK(s1 == s2);
    double ref = 0.0;
    for (double x : v) ref += x;
    CHECK(s1 == doctest::Approx(ref).epsilon(1e-15));
}

TEST_CASE("smoothness invariant violation is caught") {
    GaugeMapField u = identity_gauge(GroupId::SU2, 8);
    // plant an antipodal jump
    u.data[0] = cd(-1, 0);
    u.data[3] = cd(-1, 0);
    CHECK_THROWS_AS(check_gauge_smoothness(u), StencilError);
}

} // TEST_SUITE
