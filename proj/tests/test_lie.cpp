#include "doctest.h"

#include <cmath>

#include "flatcs/lie.hpp"

using namespace flatcs;

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat pauli(int k) {
    Mat s(2, 2);
    switch (k) {
        case 1: s << cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0); break;
        case 2: s << cd(0, 0), cd(0, -1), cd(0, 1), cd(0, 0); break;
        default: s << cd(1, 0), cd(0, 0), cd(0, 0), cd(-1, 0); break;
    }
    return s;
}

} // namespace

TEST_SUITE("lie") {

TEST_CASE("inner product normalization on su(2)") {
    // X = diag(i pi, -i pi): Tr(X^2) = -2 pi^2, so <X, X> = 1.
    Mat x(2, 2);
    x << cd(0, kPi), cd(0, 0), cd(0, 0), cd(0, -kPi);
    AlgebraElement X = algebra_element(GroupId::SU2, x);
    CHECK(inner_product(X, X) == doctest::Approx(1.0).epsilon(1e-13));

    AlgebraElement Z = zero_algebra(GroupId::SU2);
    CHECK(inner_product(Z, X) == 0.0);
}

TEST_CASE("inner product symmetry, positivity, Ad-invariance") {
    Rng rng(11);
    for (GroupId g : {GroupId::U1, GroupId::SU2, GroupId::SO3, GroupId::U2}) {
        for (int i = 0; i < 20; ++i) {
            AlgebraElement x = random_algebra_element(g, rng);
            AlgebraElement y = random_algebra_element(g, rng);
            CHECK(inner_product(x, y) == doctest::Approx(inner_product(y, x)).epsilon(1e-12));
            if (x.mat.norm() > 1e-8) CHECK(inner_product(x, x) > 0.0);
            GroupElement u = random_group_element(g, rng);
            const double lhs = inner_product(adjoint_action(u, x), adjoint_action(u, y));
            CHECK(lhs == doctest::Approx(inner_product(x, y)).epsilon(1e-12));
        }
    }
}

TEST_CASE("infinitesimal Ad-invariance <[X,Y],Z> + <Y,[X,Z]> = 0") {
    Rng rng(12);
    for (GroupId g : {GroupId::SU2, GroupId::SO3, GroupId::U2}) {
        for (int i = 0; i < 30; ++i) {
            AlgebraElement x = random_algebra_element(g, rng);
            AlgebraElement y = random_algebra_element(g, rng);
            AlgebraElement z = random_algebra_element(g, rng);
            const double s = inner_product(bracket(x, y), z) + inner_product(y, bracket(x, z));
            CHECK(std::abs(s) < 1e-12 * (1.0 + x.mat.norm() * y.mat.norm() * z.mat.norm()));
        }
    }
}

TEST_CASE("matrix_exp basics") {
    CHECK((matrix_exp(zero_algebra(GroupId::SU2)).mat - Mat::Identity(2, 2)).norm() < 1e-15);

    Mat x(2, 2);
    x << cd(0, kPi), cd(0, 0), cd(0, 0), cd(0, -kPi);
    GroupElement g = matrix_exp(algebra_element(GroupId::SU2, x));
    CHECK((g.mat + Mat::Identity(2, 2)).norm() < 1e-13);

    Rng rng(13);
    for (GroupId gid : {GroupId::U1, GroupId::SU2, GroupId::SO3, GroupId::U2}) {
        for (int i = 0; i < 10; ++i) {
            AlgebraElement a = random_algebra_element(gid, rng);
            GroupElement e = matrix_exp(a);
            CHECK(group_membership_residual(gid, e.mat) < 1e-12);
            a.mat = -a.mat;
            GroupElement einv = matrix_exp(a);
            CHECK((e.mat * einv.mat - Mat::Identity(e.mat.rows(), e.mat.cols())).norm() < 1e-12);
        }
    }
}

TEST_CASE("matrix_log basics and branch cut") {
    CHECK(matrix_log(identity_element(GroupId::SU2)).mat.norm() < 1e-14);

    GroupElement minus_i{GroupId::SU2, -Mat::Identity(2, 2)};
    CHECK_THROWS_AS(matrix_log(minus_i), BranchCutError);

    Rng rng(14);
    int done = 0;
    while (done < 1000) {
        GroupId gid = static_cast<GroupId>(done % 4);
        AlgebraElement x = random_algebra_element(gid, rng, 0.3);
        AlgebraElement n{gid, x.mat};
        if (n.mat.norm() >= 1.0) continue;  // stay inside the log chart
        GroupElement g = matrix_exp(x);
        AlgebraElement back = matrix_log(g);
        CHECK((back.mat - x.mat).norm() < 1e-10);
        CHECK((matrix_exp(back).mat - g.mat).norm() < 1e-10);
        ++done;
    }
}

TEST_CASE("log norm bound") {
    Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        GroupElement g = random_group_element(GroupId::SU2, rng);
        try {
            AlgebraElement x = matrix_log(g);
            CHECK(x.mat.norm() <= kPi * std::sqrt(2.0) + 1e-9);
        } catch (const BranchCutError&) {
            // fine: near -1 spectrum
        }
    }
}

TEST_CASE("adjoint action") {
    Mat g3 = cd(0, 1) * pauli(3);
    Mat x1 = cd(0, 1) * pauli(1);
    GroupElement g = group_element(GroupId::SU2, g3);
    AlgebraElement x = algebra_element(GroupId::SU2, x1);

    AlgebraElement y = adjoint_action(identity_element(GroupId::SU2), x);
    CHECK((y.mat - x.mat).norm() < 1e-15);

    // sigma3 sigma1 sigma3 = -sigma1.
    AlgebraElement z = adjoint_action(g, x);
    CHECK((z.mat + x1).norm() < 1e-14);
}

TEST_CASE("retract_to_group") {
    Rng rng(16);
    for (GroupId gid : {GroupId::U1, GroupId::SU2, GroupId::SO3, GroupId::U2}) {
        for (int i = 0; i < 10; ++i) {
            GroupElement g = random_group_element(gid, rng);
            GroupElement r = retract_to_group(g.mat, gid);
            CHECK((r.mat - g.mat).norm() < 1e-12);

            Mat p = Mat::Zero(g.mat.rows(), g.mat.cols());
            for (int a = 0; a < p.rows(); ++a)
                for (int b = 0; b < p.cols(); ++b) p(a, b) = cd(rng.gaussian(), rng.gaussian());
            if (gid == GroupId::SO3) p = p.real().cast<cd>();
            Mat m = g.mat + 1e-6 * p;
            GroupElement r2 = retract_to_group(m, gid);
            CHECK((r2.mat - g.mat).norm() < 2e-6 * p.norm());
        }
    }

    Mat bad(2, 2);
    bad << cd(1, 0), cd(0, 0), cd(0, 0), cd(-1, 0);  // det = -1
    CHECK_THROWS_AS(retract_to_group(bad, GroupId::SU2), RetractionError);
    CHECK_THROWS_AS(retract_to_group(Mat::Zero(2, 2), GroupId::SU2), RetractionError);
}

TEST_CASE("group element validation") {
    Mat m(2, 2);
    m << cd(2, 0), cd(0, 0), cd(0, 0), cd(0.5, 0);
    CHECK_THROWS_AS(group_element(GroupId::SU2, m), ArgumentError);
    CHECK_THROWS_AS(algebra_element(GroupId::SU2, Mat::Identity(2, 2)), ArgumentError);
    CHECK_THROWS_AS(inner_product(zero_algebra(GroupId::SU2), zero_algebra(GroupId::U2)),
                    ArgumentError);
}

} // TEST_SUITE
