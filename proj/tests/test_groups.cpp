#include "doctest.h"


#include <numeric>
#include "flatcs/groups.hpp"

using namespace flatcs;

TEST_SUITE("groups") {

TEST_CASE("catalog invariants") {
    for (const GroupSpec& s : catalog_all()) {
        CHECK(s.n_G >= 1);
        CHECK(s.N_G >= 1);
        // N_G = lcm(1..n_G)
        int l = 1;
        for (int k = 2; k <= s.n_G; ++k) l = std::lcm(l, k);
        CHECK(l == s.N_G);
    }
    CHECK(catalog(GroupId::SO3).N_G == 12);
    CHECK(catalog(GroupId::SU2).N_G == 2);
}

TEST_CASE("granularity per flavor") {
    GranularityVerdict u1 = granularity(catalog(GroupId::U1), false);
    CHECK(u1.num == 1);
    CHECK(u1.den == 1);

    GranularityVerdict su2 = granularity(catalog(GroupId::SU2), false);
    CHECK(su2.value() == doctest::Approx(2.0 / 2.0));

    GranularityVerdict so3 = granularity(catalog(GroupId::SO3), false);
    CHECK(so3.value() == doctest::Approx(4.0 / 12.0));

    GranularityVerdict hyp = granularity(catalog(GroupId::SU2), true);
    CHECK(hyp.den == 1);
    CHECK(hyp.value() == doctest::Approx(2.0));
}

TEST_CASE("lattice distance helpers") {
    CHECK(lattice_distance(2.03, 1.0) == doctest::Approx(0.03));
    CHECK(nearest_lattice_point(-1.96, 2.0) == doctest::Approx(-2.0));
    CHECK(lattice_distance(0.16, 1.0 / 3.0) == doctest::Approx(0.16 - 1.0 / 3.0 + 1.0 / 3.0).epsilon(1));
}

TEST_CASE("centralizer bound: empty generators") {
    Rng rng(7);
    CHECK(centralizer_component_bound(catalog(GroupId::SU2), {}, 1000, 0.4, rng) == 1);
}

TEST_CASE("centralizer bound: SU(2) center from a generic pair") {
    // Oracle for the catalog value n_SU2 = 2: the centralizer of
    // {i sigma3, i sigma2} is exactly {+-I}, two isolated points.
    Rng rng(8);
    auto sets = structured_generator_sets(GroupId::SU2);
    REQUIRE(sets.size() == 1);
    const int b = centralizer_component_bound(catalog(GroupId::SU2), sets[0], 20000, 0.8, rng);
    CHECK(b == 2);
}

TEST_CASE("centralizer bound: SO(3) Klein four-group") {
    Rng rng(9);
    auto sets = structured_generator_sets(GroupId::SO3);
    REQUIRE(sets.size() == 1);
    const int b = centralizer_component_bound(catalog(GroupId::SO3), sets[0], 20000, 0.8, rng);
    CHECK(b == 4);
}

TEST_CASE("n_G estimates match catalog") {
    Rng rng(10);
    CHECK(n_G_estimate(catalog(GroupId::U1), 5, rng).bound == 1);
    CHECK(n_G_estimate(catalog(GroupId::SU2), 10, rng).bound == 2);
    CHECK(n_G_estimate(catalog(GroupId::SO3), 10, rng).bound == 4);
    // estimator never exceeds the catalog value
    for (const GroupSpec& s : catalog_all()) {
        Rng r2 = rng.split(group_name(s.name));
        CHECK(n_G_estimate(s, 6, r2).bound <= s.n_G);
    }
}

TEST_CASE("cover arithmetic and projection") {
    Rng rng(20);
    for (GroupId g : {GroupId::U1, GroupId::SU2, GroupId::SO3, GroupId::U2}) {
        for (int i = 0; i < 10; ++i) {
            CoverElement a = random_cover_element(g, rng);
            CoverElement b = random_cover_element(g, rng);
            GroupElement pa = cover_project(a);
            GroupElement pb = cover_project(b);
            GroupElement pab = cover_project(cover_mul(a, b));
            CHECK((pab.mat - pa.mat * pb.mat).norm() < 1e-12);
            CHECK(group_membership_residual(g, pa.mat) < 1e-12);
            GroupElement pinv = cover_project(cover_inverse(a));
            CHECK((pinv.mat - pa.mat.adjoint()).norm() < 1e-12);
        }
    }
    // the nontrivial deck element of SO(3) projects to the identity
    CoverElement d = central_delta(GroupId::SO3, 1);
    CHECK((cover_project(d).mat - Mat::Identity(3, 3)).norm() < 1e-13);
    CHECK(is_central(d));
}

} // TEST_SUITE
