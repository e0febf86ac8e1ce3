#include "doctest.h"

#include <cmath>
#include <cstdio>

#include "flatcs/calculus.hpp"

using namespace flatcs;

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

AlgebraElement su2_alg(double x, double y, double z) {
    Mat m(2, 2);
    m << cd(0, z), cd(y, x), cd(-y, x), cd(0, -z);
    return algebra_element(GroupId::SU2, m);
}

// a = lambda * (i sigma_c / 2) dtheta_c; the only su(2) family with constant
// nonzero Chern-Simons density.
std::array<AlgebraElement, 3> sigma_frame(double lambda) {
    return {su2_alg(0.5 * lambda, 0, 0), su2_alg(0, 0.5 * lambda, 0), su2_alg(0, 0, 0.5 * lambda)};
}

LatticeConnection sigma_frame_connection(double lambda, int n) {
    const auto f = sigma_frame(lambda);
    LatticeConnection a = zero_connection(GroupId::SU2, n);
    const int dd = 4;
    for (int c = 0; c < 3; ++c) {
        cd* base = a.comp(c);
        for (int s = 0; s < a.sites(); ++s) {
            for (int e = 0; e < dd; ++e) base[s * dd + e] = f[c].mat(e / 2, e % 2);
        }
    }
    return a;
}

} // namespace

TEST_SUITE("calculus") {

TEST_CASE("curvature: zero, commuting constants, sigma frame") {
    CurvatureReport r0 = curvature(zero_connection(GroupId::SU2, 8));
    CHECK(r0.l2_norm == 0.0);
    CHECK(r0.max_norm == 0.0);

    auto xi = su2_alg(0, 0, 0.7);
    CurvatureReport rc = curvature(flat_from_holonomy({xi, xi, zero_algebra(GroupId::SU2)}, 8));
    CHECK(rc.max_norm == 0.0);  // constants differentiate to zero, brackets vanish

    // F_ij = lambda^2 [i sigma_i/2, i sigma_j/2], constant over the grid
    const double lam = 0.8;
    CurvatureReport rs = curvature(sigma_frame_connection(lam, 8));
    const auto f = sigma_frame(lam);
    AlgebraElement f12 = bracket(AlgebraElement{GroupId::SU2, f[0].mat},
                                 AlgebraElement{GroupId::SU2, f[1].mat});
    // dual component 2 is F_12
    Mat got(2, 2);
    const cd* p = rs.F.comp(2);
    got << p[0], p[1], p[2], p[3];
    CHECK((got - f12.mat).norm() < 1e-13);
}

TEST_CASE("gauge_apply: identity, constant conjugation") {
    Rng rng(81);
    LatticeConnection a = random_smooth_connection(GroupId::SU2, 8, 0.5, 1, rng);
    LatticeConnection b = gauge_apply(identity_gauge(GroupId::SU2, 8), a);
    double worst = 0.0;
    for (size_t e = 0; e < a.data.size(); ++e) worst = std::max(worst, std::abs(a.data[e] - b.data[e]));
    CHECK(worst < 1e-15);

    GroupElement g = random_group_element(GroupId::SU2, rng);
    auto xi = su2_alg(0.3, 0, 0.4);
    LatticeConnection flat = flat_from_holonomy({xi, zero_algebra(GroupId::SU2), xi}, 8);
    LatticeConnection conj = gauge_apply(constant_gauge(g, 8), flat);
    Mat expect = g.mat.adjoint() * xi.mat * g.mat;
    CHECK((connection_at(conj, 0, 2, 3, 4) - expect).norm() < 1e-13);
}

TEST_CASE("gauge covariance of curvature at order h^2") {
    Rng rng(82);
    auto xi = su2_alg(0.4, 0, 0.2);
    double err[2];
    int idx = 0;
    for (int n : {16, 32}) {
        LatticeConnection flat = flat_from_holonomy({xi, zero_algebra(GroupId::SU2), xi}, n);
        Rng r2 = rng.split(n);
        GaugeMapField u = random_smooth_gauge(GroupId::SU2, n, 0.4, 1, r2);
        CurvatureReport rep = curvature(gauge_apply(u, flat));
        err[idx++] = rep.max_norm;
    }
    CHECK(err[0] / err[1] > 3.0);  // order >= 2 decay
    CHECK(err[1] < 2e-3);
}

TEST_CASE("cs_eval: trivial cases") {
    LatticeConnection zero = zero_connection(GroupId::SU2, 8);
    Rng rng(83);
    LatticeConnection a = random_smooth_connection(GroupId::SU2, 8, 0.4, 1, rng);
    CHECK(cs_value(a, a) == doctest::Approx(0.0).epsilon(1e-14));

    auto xi = su2_alg(0, 0, 0.9);
    LatticeConnection flat = flat_from_holonomy({xi, xi, xi}, 8);
    CHECK(std::abs(cs_value(flat, zero)) < 1e-13);
}

TEST_CASE("cs_eval: sigma-frame closed form") {
    // CS = (2 pi)^3 <[xi1, xi2], xi3> for the constant connection; the
    // quadrature is exact because the integrand is constant.
    for (double lam : {0.3, 0.7, 1.1}) {
        const auto f = sigma_frame(lam);
        const double closed =
            kTwoPi * kTwoPi * kTwoPi *
            inner_product(bracket(AlgebraElement{GroupId::SU2, f[0].mat},
                                  AlgebraElement{GroupId::SU2, f[1].mat}),
                          AlgebraElement{GroupId::SU2, f[2].mat});
        LatticeConnection a = sigma_frame_connection(lam, 8);
        const double cs = cs_value(a, zero_connection(GroupId::SU2, 8));
        CHECK(cs == doctest::Approx(closed).epsilon(1e-10));
        // and the closed form itself is -2 pi lam^3
        CHECK(closed == doctest::Approx(-kTwoPi * lam * lam * lam).epsilon(1e-12));
    }
}

TEST_CASE("cs reference shift is constant in a") {
    Rng rng(84);
    LatticeConnection r0 = zero_connection(GroupId::SU2, 8);
    LatticeConnection r1 = random_smooth_connection(GroupId::SU2, 8, 0.3, 1, rng);
    double first = 0.0;
    for (int t = 0; t < 5; ++t) {
        Rng r = rng.split(t);
        LatticeConnection a = random_smooth_connection(GroupId::SU2, 8, 0.6, 2, r);
        const double diff = cs_value(a, r0) - cs_value(a, r1);
        if (t == 0) {
            first = diff;
        } else {
            CHECK(diff == doctest::Approx(first).epsilon(1e-8));
        }
    }
}

TEST_CASE("cs_jump: trivial gauge maps") {
    LatticeConnection zero = zero_connection(GroupId::SU2, 16);
    CHECK(cs_jump(identity_gauge(GroupId::SU2, 16), zero, zero) == doctest::Approx(0.0));
    Rng rng(85);
    GroupElement g = random_group_element(GroupId::SU2, rng);
    CHECK(cs_jump(constant_gauge(g, 16), zero, zero) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cs_jump: degree maps give even integers") {
    LatticeConnection zero = zero_connection(GroupId::SU2, 32);
    const GroupSpec& spec = catalog(GroupId::SU2);
    for (int d : {1, -1}) {
        const double j = cs_jump(degree_map(d, 32), zero, zero);
        JumpReport rep = check_jump_lattice(j, spec, 32);
        CHECK(rep.on_lattice);
        CHECK(std::abs(std::abs(j) - 2.0) < 0.05);
    }
}

TEST_CASE("path_action: constant and linear paths") {
    LatticeConnection zero = zero_connection(GroupId::SU2, 8);
    Rng rng(86);
    LatticeConnection a = random_smooth_connection(GroupId::SU2, 8, 0.4, 1, rng);
    std::vector<LatticeConnection> constant(5, a);
    CHECK(std::abs(path_action(constant, zero)) < 1e-12);

    // two noncommuting constant directions only: the top-form component of
    // the integrand vanishes, matching Delta CS = 0
    auto x1 = su2_alg(0.6, 0, 0);
    auto x2 = su2_alg(0, 0, 0.8);
    LatticeConnection end = zero_connection(GroupId::SU2, 8);
    const int dd = 4;
    for (int s = 0; s < end.sites(); ++s) {
        for (int e = 0; e < dd; ++e) {
            end.comp(0)[s * dd + e] = x1.mat(e / 2, e % 2);
            end.comp(1)[s * dd + e] = x2.mat(e / 2, e % 2);
        }
    }
    std::vector<LatticeConnection> path;
    for (int k = 0; k <= 16; ++k) {
        LatticeConnection node = end;
        const double t = k / 16.0;
        for (auto& z : node.data) z *= t;
        path.push_back(std::move(node));
    }
    CHECK(std::abs(path_action(path, zero)) < 1e-10);
    CHECK(std::abs(cs_value(end, zero)) < 1e-12);
}

TEST_CASE("path_action matches Delta CS for the sigma family") {
    // 33 nodes at small lambda: tau-quadrature error ~ pi lam^3 dtau^2
    LatticeConnection zero = zero_connection(GroupId::SU2, 8);
    const double lam = 0.05;
    LatticeConnection end = sigma_frame_connection(lam, 8);
    std::vector<LatticeConnection> path;
    for (int k = 0; k <= 32; ++k) {
        LatticeConnection node = end;
        const double t = k / 32.0;
        for (auto& z : node.data) z *= t;
        path.push_back(std::move(node));
    }
    const double action = path_action(path, zero);
    const double dcs = cs_value(end, zero);
    CHECK(std::abs(action - dcs) < 1e-6);
}

TEST_CASE("path_action converges at order dtau^2") {
    LatticeConnection zero = zero_connection(GroupId::SU2, 8);
    const double lam = 0.9;
    LatticeConnection end = sigma_frame_connection(lam, 8);
    const double dcs = cs_value(end, zero);
    double err[2];
    int idx = 0;
    for (int steps : {16, 32}) {
        const double action = path_action_stream(
            steps + 1,
            [&](int k) {
                LatticeConnection node = end;
                const double t = static_cast<double>(k) / steps;
                for (auto& z : node.data) z *= t;
                return node;
            },
            zero);
        err[idx++] = std::abs(action - dcs);
    }
    CHECK(err[0] / err[1] > 3.5);
    CHECK(err[0] / err[1] < 4.5);
}

} // TEST_SUITE
