#include "flatcs/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace flatcs {

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::Matrix2cd pauli(int k) {
    Eigen::Matrix2cd s;
    switch (k) {
        case 1: s << cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0); break;
        case 2: s << cd(0, 0), cd(0, -1), cd(0, 1), cd(0, 0); break;
        default: s << cd(1, 0), cd(0, 0), cd(0, 0), cd(-1, 0); break;
    }
    return s;
}

} // namespace

const char* rep_flavor_name(RepFlavor f) {
    switch (f) {
        case RepFlavor::Unitary: return "unitary";
        case RepFlavor::SpecialUnitary: return "special_unitary";
        case RepFlavor::ComplexifiedReal: return "complexified_real";
    }
    return "?";
}

const GroupSpec& catalog(GroupId g) {
    // n_G values: U(1) is abelian (every centralizer is the whole group);
    // SU(2) reaches 2 at the center (centralizer of a generic pair);
    // SO(3) reaches 4 at the Klein four-group of diagonal rotations, so
    // N = lcm(1..4) = 12; in U(2) every centralizer is the unitary group of
    // a *-subalgebra of M_2(C) and hence connected, so n = 1 (confirmed by
    // the estimator in the test suite).
    static const GroupSpec u1{GroupId::U1, 1, 0, "Z", "R", 1, 1, RepFlavor::Unitary};
    static const GroupSpec su2{GroupId::SU2, 2, 2, "trivial", "SU2", 2, 2, RepFlavor::SpecialUnitary};
    static const GroupSpec so3{GroupId::SO3, 3, 1, "Z/2", "SU2", 4, 12, RepFlavor::ComplexifiedReal};
    static const GroupSpec u2{GroupId::U2, 2, 0, "Z", "SU2xR", 1, 1, RepFlavor::Unitary};
    switch (g) {
        case GroupId::U1: return u1;
        case GroupId::SU2: return su2;
        case GroupId::SO3: return so3;
        case GroupId::U2: return u2;
    }
    throw CatalogError("catalog: unsupported group");
}

std::vector<GroupSpec> catalog_all() {
    return {catalog(GroupId::U1), catalog(GroupId::SU2), catalog(GroupId::SO3),
            catalog(GroupId::U2)};
}

GranularityVerdict granularity(const GroupSpec& spec, bool hypothesis1) {
    int s = 1;
    switch (spec.rep_flavor) {
        case RepFlavor::Unitary: s = 1; break;
        case RepFlavor::SpecialUnitary: s = 2; break;
        case RepFlavor::ComplexifiedReal: s = 4; break;
    }
    int den = hypothesis1 ? 1 : spec.N_G;
    const int g = std::gcd(s, den);
    return GranularityVerdict{s / g, den / g, hypothesis1};
}

double nearest_lattice_point(double x, double step) {
    return step * std::round(x / step);
}

double lattice_distance(double x, double step) {
    return std::abs(x - nearest_lattice_point(x, step));
}

bool cover_has_matrix_part(GroupId g) { return g != GroupId::U1; }

bool cover_has_abelian_part(GroupId g) { return g == GroupId::U1 || g == GroupId::U2; }

CoverElement cover_identity(GroupId g) { return CoverElement{g}; }

CoverElement cover_mul(const CoverElement& a, const CoverElement& b) {
    if (a.group != b.group) throw ArgumentError("cover_mul: group mismatch");
    return CoverElement{a.group, a.m * b.m, a.t + b.t};
}

CoverElement cover_inverse(const CoverElement& a) {
    return CoverElement{a.group, a.m.adjoint(), -a.t};
}

CoverElement cover_commutator(const CoverElement& a, const CoverElement& b) {
    if (a.group != b.group) throw ArgumentError("cover_commutator: group mismatch");
    return CoverElement{a.group, a.m * b.m * a.m.adjoint() * b.m.adjoint(), 0.0};
}

GroupElement cover_project(const CoverElement& a) {
    switch (a.group) {
        case GroupId::U1: {
            Mat m(1, 1);
            m(0, 0) = cd(std::cos(a.t), std::sin(a.t));
            return GroupElement{GroupId::U1, m};
        }
        case GroupId::SU2:
            return GroupElement{GroupId::SU2, a.m};
        case GroupId::SO3: {
            Mat r(3, 3);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    r(i, j) = cd(
                        0.5 * (pauli(i + 1) * a.m * pauli(j + 1) * a.m.adjoint()).trace().real(),
                        0.0);
                }
            }
            return GroupElement{GroupId::SO3, r};
        }
        case GroupId::U2:
            return GroupElement{GroupId::U2, cd(std::cos(a.t), std::sin(a.t)) * a.m};
    }
    throw CatalogError("cover_project: unsupported group");
}

double cover_distance(const CoverElement& a, const CoverElement& b) {
    double d = std::abs(a.t - b.t);
    if (cover_has_matrix_part(a.group)) d = std::hypot(d, (a.m - b.m).norm());
    return d;
}

CoverElement random_cover_element(GroupId g, Rng& rng) {
    CoverElement e{g};
    if (cover_has_matrix_part(g)) {
        e.m = random_group_element(GroupId::SU2, rng).mat;
    }
    if (cover_has_abelian_part(g)) {
        e.t = rng.gaussian();
    }
    return e;
}

CoverElement central_delta(GroupId g, int k) {
    CoverElement e{g};
    switch (g) {
        case GroupId::U1:
            e.t = 2.0 * kPi * k;
            break;
        case GroupId::SU2:
        case GroupId::SO3:
            if (k % 2 != 0) e.m = -Eigen::Matrix2cd::Identity();
            break;
        case GroupId::U2:
            if (k % 2 != 0) e.m = -Eigen::Matrix2cd::Identity();
            e.t = kPi * k;
            break;
    }
    return e;
}

bool is_central(const CoverElement& a, double tolerance) {
    if (!cover_has_matrix_part(a.group)) return true;
    const cd tr = a.m.trace() / 2.0;
    return (a.m - tr * Eigen::Matrix2cd::Identity()).norm() <= tolerance;
}

namespace {

double commute_defect(const Mat& g, const std::vector<GroupElement>& generators) {
    double worst = 0.0;
    for (const auto& h : generators) {
        worst = std::max(worst, (g * h.mat - h.mat * g).norm());
    }
    return worst;
}

std::vector<Mat> algebra_basis(GroupId g) {
    std::vector<Mat> basis;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (g) {
        case GroupId::U1: {
            Mat m(1, 1);
            m(0, 0) = cd(0, 1);
            basis.push_back(m);
            break;
        }
        case GroupId::SU2:
            for (int k = 1; k <= 3; ++k) basis.push_back(inv_sqrt2 * cd(0, 1) * Mat(pauli(k)));
            break;
        case GroupId::SO3:
            for (int k = 0; k < 3; ++k) {
                Mat m = Mat::Zero(3, 3);
                const int i = (k + 1) % 3, j = (k + 2) % 3;
                m(i, j) = cd(inv_sqrt2, 0);
                m(j, i) = cd(-inv_sqrt2, 0);
                basis.push_back(m);
            }
            break;
        case GroupId::U2:
            for (int k = 1; k <= 3; ++k) basis.push_back(inv_sqrt2 * cd(0, 1) * Mat(pauli(k)));
            basis.push_back(inv_sqrt2 * cd(0, 1) * Mat(Mat::Identity(2, 2)));
            break;
    }
    return basis;
}

double commute_defect_sq(const Mat& g, const std::vector<GroupElement>& gens) {
    double f = 0.0;
    for (const auto& h : gens) f += (g * h.mat - h.mat * g).squaredNorm();
    return f;
}

// Descend the squared commute defect so survivors land exactly on the
// centralizer before clustering; keeps the cluster count an honest lower
// bound for the component count.
Mat polish_to_centralizer(Mat g, const std::vector<GroupElement>& gens, GroupId gid) {
    const std::vector<Mat> basis = algebra_basis(gid);
    double f = commute_defect_sq(g, gens);
    double step = 0.05;
    for (int it = 0; it < 200 && f > 1e-24; ++it) {
        Eigen::VectorXd grad(basis.size());
        for (size_t k = 0; k < basis.size(); ++k) {
            double gk = 0.0;
            for (const auto& h : gens) {
                const Mat fh = g * h.mat - h.mat * g;
                const Mat dir = g * basis[k] * h.mat - h.mat * g * basis[k];
                gk += 2.0 * (fh.adjoint() * dir).trace().real();
            }
            grad(k) = gk;
        }
        if (grad.norm() < 1e-14) break;
        Mat xi = Mat::Zero(g.rows(), g.cols());
        for (size_t k = 0; k < basis.size(); ++k) xi += grad(k) * basis[k];
        bool moved = false;
        for (int bt = 0; bt < 30; ++bt) {
            const Mat trial = g * matrix_exp(AlgebraElement{gid, -step * xi}).mat;
            const double ft = commute_defect_sq(trial, gens);
            if (ft < f) {
                g = trial;
                f = ft;
                step *= 1.5;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return g;
}

int cluster_count(const std::vector<Mat>& pts, double radius) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if ((pts[i] - pts[j]).norm() < radius) {
                parent[find(i)] = find(j);
            }
        }
    }
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (find(i) == i) ++count;
    }
    return count;
}

} // namespace

int centralizer_component_bound(const GroupSpec& spec,
                                const std::vector<GroupElement>& generators,
                                int samples, double tolerance, Rng& rng,
                                double cluster_radius) {
    if (generators.empty()) return 1;  // centralizer is the whole connected group
    for (const auto& h : generators) {
        if (h.group != spec.name) throw ArgumentError("centralizer bound: generator group mismatch");
    }
    std::vector<Mat> survivors;
    survivors.push_back(identity_element(spec.name).mat);
    for (int s = 0; s < samples; ++s) {
        GroupElement g = random_group_element(spec.name, rng);
        if (commute_defect(g.mat, generators) < tolerance) {
            Mat p = polish_to_centralizer(g.mat, generators, spec.name);
            if (commute_defect(p, generators) < 1e-8) survivors.push_back(p);
        }
    }
    return cluster_count(survivors, cluster_radius);
}

std::vector<std::vector<GroupElement>> structured_generator_sets(GroupId g) {
    std::vector<std::vector<GroupElement>> sets;
    switch (g) {
        case GroupId::U1:
            break;  // abelian: nothing beats the empty set
        case GroupId::SU2: {
            Mat a = cd(0, 1) * pauli(3);
            Mat b = cd(0, 1) * pauli(2);
            sets.push_back({group_element(g, a), group_element(g, b)});
            break;
        }
        case GroupId::SO3: {
            // Klein four-group of diagonal rotations: its own centralizer.
            Mat d1 = Mat::Zero(3, 3);
            d1(0, 0) = 1; d1(1, 1) = -1; d1(2, 2) = -1;
            Mat d2 = Mat::Zero(3, 3);
            d2(0, 0) = -1; d2(1, 1) = 1; d2(2, 2) = -1;
            sets.push_back({group_element(g, d1), group_element(g, d2)});
            break;
        }
        case GroupId::U2: {
            Mat a = cd(0, 1) * pauli(3);
            Mat b = cd(0, 1) * pauli(2);
            sets.push_back({group_element(g, a), group_element(g, b)});
            break;
        }
    }
    return sets;
}

NgEstimate n_G_estimate(const GroupSpec& spec, int trials, Rng& rng) {
    if (trials < 1) throw ArgumentError("n_G_estimate: trials must be >= 1");
    const int samples_random = 4000;
    const int samples_structured = 20000;
    const double tolerance = 0.8;

    NgEstimate best{1, "empty generator set"};
    int idx = 0;
    for (const auto& gens : structured_generator_sets(spec.name)) {
        Rng child = rng.split("structured-" + std::to_string(idx++));
        const int b = centralizer_component_bound(spec, gens, samples_structured, tolerance, child);
        if (b > best.bound) best = {b, "structured set " + std::to_string(idx - 1)};
    }
    for (int t = 0; t < trials; ++t) {
        Rng child = rng.split("trial-" + std::to_string(t));
        const int k = 1 + t % 3;
        std::vector<GroupElement> gens;
        gens.reserve(k);
        for (int i = 0; i < k; ++i) gens.push_back(random_group_element(spec.name, child));
        const int b = centralizer_component_bound(spec, gens, samples_random, tolerance, child);
        if (b > best.bound) best = {b, "random set of size " + std::to_string(k)};
    }
    return best;
}

} // namespace flatcs
