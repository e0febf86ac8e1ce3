#include "flatcs/lie.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace flatcs {

namespace {

constexpr double kPi = 3.14159265358979323846;

const Mat& sigma(int k) {
    static const Mat s1 = (Mat(2, 2) << cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0)).finished();
    static const Mat s2 = (Mat(2, 2) << cd(0, 0), cd(0, -1), cd(0, 1), cd(0, 0)).finished();
    static const Mat s3 = (Mat(2, 2) << cd(1, 0), cd(0, 0), cd(0, 0), cd(-1, 0)).finished();
    switch (k) {
        case 1: return s1;
        case 2: return s2;
        default: return s3;
    }
}

} // namespace

const char* group_name(GroupId g) {
    switch (g) {
        case GroupId::U1: return "U1";
        case GroupId::SU2: return "SU2";
        case GroupId::SO3: return "SO3";
        case GroupId::U2: return "U2";
    }
    return "?";
}

GroupId group_from_name(const std::string& name) {
    if (name == "U1") return GroupId::U1;
    if (name == "SU2") return GroupId::SU2;
    if (name == "SO3") return GroupId::SO3;
    if (name == "U2") return GroupId::U2;
    throw CatalogError("unknown group: " + name);
}

int rep_dim(GroupId g) {
    switch (g) {
        case GroupId::U1: return 1;
        case GroupId::SU2: return 2;
        case GroupId::SO3: return 3;
        case GroupId::U2: return 2;
    }
    return 0;
}

double frobenius_distance(const Mat& a, const Mat& b) {
    return (a - b).norm();
}

double group_membership_residual(GroupId g, const Mat& m) {
    const int d = rep_dim(g);
    if (m.rows() != d || m.cols() != d) return 1e300;
    double r = (m.adjoint() * m - Mat::Identity(d, d)).norm();
    switch (g) {
        case GroupId::U1:
        case GroupId::U2:
            break;
        case GroupId::SU2:
            r = std::max(r, std::abs(m.determinant() - cd(1, 0)));
            break;
        case GroupId::SO3:
            r = std::max(r, m.imag().norm());
            r = std::max(r, std::abs(m.determinant() - cd(1, 0)));
            break;
    }
    return r;
}

double algebra_membership_residual(GroupId g, const Mat& m) {
    const int d = rep_dim(g);
    if (m.rows() != d || m.cols() != d) return 1e300;
    double r = (m + m.adjoint()).norm();
    switch (g) {
        case GroupId::U1:
        case GroupId::U2:
            break;
        case GroupId::SU2:
            r = std::max(r, std::abs(m.trace()));
            break;
        case GroupId::SO3:
            r = std::max(r, m.imag().norm());
            break;
    }
    return r;
}

GroupElement group_element(GroupId g, const Mat& m) {
    const double r = group_membership_residual(g, m);
    if (r > tol().tau_unitary) {
        throw ArgumentError(std::string("matrix is not in ") + group_name(g) +
                            " (residual " + std::to_string(r) + ")");
    }
    return GroupElement{g, m};
}

AlgebraElement algebra_element(GroupId g, const Mat& m) {
    const double r = algebra_membership_residual(g, m);
    if (r > tol().tau_unitary) {
        throw ArgumentError(std::string("matrix is not in the algebra of ") + group_name(g) +
                            " (residual " + std::to_string(r) + ")");
    }
    return AlgebraElement{g, m};
}

GroupElement identity_element(GroupId g) {
    const int d = rep_dim(g);
    return GroupElement{g, Mat::Identity(d, d)};
}

AlgebraElement zero_algebra(GroupId g) {
    const int d = rep_dim(g);
    return AlgebraElement{g, Mat::Zero(d, d)};
}

Mat project_to_algebra(GroupId g, const Mat& m) {
    Mat x = 0.5 * (m - m.adjoint().eval());
    switch (g) {
        case GroupId::U1:
            break;
        case GroupId::SU2:
            x -= (x.trace() / 2.0) * Mat::Identity(2, 2);
            break;
        case GroupId::SO3:
            x = x.real().cast<cd>();
            break;
        case GroupId::U2:
            break;
    }
    return x;
}

double inner_product(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.group != y.group) throw ArgumentError("inner_product: group mismatch");
    return -(x.mat * y.mat).trace().real() / (2.0 * kPi * kPi);
}

double algebra_norm(const AlgebraElement& x) {
    return std::sqrt(std::max(0.0, inner_product(x, x)));
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.group != y.group) throw ArgumentError("bracket: group mismatch");
    return AlgebraElement{x.group, x.mat * y.mat - y.mat * x.mat};
}

GroupElement matrix_exp(const AlgebraElement& x) {
    // X anti-Hermitian, so H = -iX is Hermitian and exp(X) = V e^{i diag} V^dag.
    const int d = rep_dim(x.group);
    Mat h = cd(0, -1) * x.mat;
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Eigen::VectorXcd phase(d);
    for (int i = 0; i < d; ++i) {
        const double lam = es.eigenvalues()(i);
        phase(i) = cd(std::cos(lam), std::sin(lam));
    }
    Mat g = es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
    if (x.group == GroupId::SO3) g = g.real().cast<cd>();
    return GroupElement{x.group, g};
}

AlgebraElement matrix_log(const GroupElement& g) {
    const int d = rep_dim(g.group);
    Eigen::ComplexSchur<Mat> schur(g.mat);
    // Unitary input is normal: T is diagonal to machine precision.
    const Mat& q = schur.matrixU();
    Eigen::VectorXcd theta(d);
    for (int i = 0; i < d; ++i) {
        cd lam = schur.matrixT()(i, i);
        lam /= std::abs(lam);
        if (std::abs(lam + cd(1, 0)) < tol().eps_log) {
            throw BranchCutError("matrix_log: eigenvalue within eps_log of -1");
        }
        theta(i) = cd(0, std::atan2(lam.imag(), lam.real()));
    }
    Mat x = q * theta.asDiagonal() * q.adjoint();
    return AlgebraElement{g.group, project_to_algebra(g.group, x)};
}

AlgebraElement adjoint_action(const GroupElement& g, const AlgebraElement& x) {
    if (g.group != x.group) throw ArgumentError("adjoint_action: group mismatch");
    Mat y = g.mat * x.mat * g.mat.adjoint();
    return AlgebraElement{x.group, project_to_algebra(x.group, y)};
}

GroupElement retract_to_group(const Mat& m, GroupId g) {
    const int d = rep_dim(g);
    if (m.rows() != d || m.cols() != d) throw ArgumentError("retract_to_group: wrong shape");

    if (g == GroupId::SO3) {
        Eigen::MatrixXd r = m.real();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
        if (svd.singularValues().minCoeff() < 0.25) {
            throw RetractionError("retract_to_group: matrix too far from SO(3)");
        }
        Eigen::MatrixXd u = svd.matrixU() * svd.matrixV().transpose();
        if (u.determinant() < 0.0) {
            throw RetractionError("retract_to_group: wrong component (det = -1)");
        }
        return GroupElement{g, u.cast<cd>()};
    }

    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues().minCoeff() < 0.25) {
        throw RetractionError("retract_to_group: matrix too far from the group");
    }
    Mat u = svd.matrixU() * svd.matrixV().adjoint();
    if (g == GroupId::SU2) {
        const cd det = u.determinant();
        const double phi = std::atan2(det.imag(), det.real());
        if (kPi - std::abs(phi) < 1e-6) {
            throw RetractionError("retract_to_group: wrong component for SU(2)");
        }
        u *= cd(std::cos(-phi / 2.0), std::sin(-phi / 2.0));
    }
    return GroupElement{g, u};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
    if (a.group != b.group) throw ArgumentError("group_mul: group mismatch");
    return GroupElement{a.group, a.mat * b.mat};
}

GroupElement group_inverse(const GroupElement& a) {
    return GroupElement{a.group, a.mat.adjoint()};
}

GroupElement random_group_element(GroupId g, Rng& rng) {
    switch (g) {
        case GroupId::U1: {
            const double th = rng.uniform(0.0, 2.0 * kPi);
            Mat m(1, 1);
            m(0, 0) = cd(std::cos(th), std::sin(th));
            return GroupElement{g, m};
        }
        case GroupId::SU2: {
            double q[4];
            double n2 = 0.0;
            for (double& v : q) {
                v = rng.gaussian();
                n2 += v * v;
            }
            const double inv = 1.0 / std::sqrt(n2);
            for (double& v : q) v *= inv;
            Mat m(2, 2);
            m(0, 0) = cd(q[0], q[3]);
            m(0, 1) = cd(q[2], q[1]);
            m(1, 0) = cd(-q[2], q[1]);
            m(1, 1) = cd(q[0], -q[3]);
            return GroupElement{g, m};
        }
        case GroupId::SO3: {
            GroupElement s = random_group_element(GroupId::SU2, rng);
            Mat r(3, 3);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    r(i, j) = cd(0.5 * (sigma(i + 1) * s.mat * sigma(j + 1) * s.mat.adjoint())
                                           .trace()
                                           .real(),
                                 0.0);
                }
            }
            return GroupElement{g, r};
        }
        case GroupId::U2: {
            // Haar on U(2) as the pushforward of Haar x Haar under
            // U(1) x SU(2) -> U(2).
            GroupElement s = random_group_element(GroupId::SU2, rng);
            const double th = rng.uniform(0.0, 2.0 * kPi);
            return GroupElement{g, cd(std::cos(th), std::sin(th)) * s.mat};
        }
    }
    throw CatalogError("random_group_element: unsupported group");
}

AlgebraElement random_algebra_element(GroupId g, Rng& rng, double scale) {
    switch (g) {
        case GroupId::U1: {
            Mat m(1, 1);
            m(0, 0) = cd(0, scale * rng.gaussian());
            return AlgebraElement{g, m};
        }
        case GroupId::SU2: {
            Mat m = Mat::Zero(2, 2);
            for (int k = 1; k <= 3; ++k) m += cd(0, scale * rng.gaussian()) * sigma(k);
            return AlgebraElement{g, m};
        }
        case GroupId::SO3: {
            Mat m = Mat::Zero(3, 3);
            const double a = scale * rng.gaussian();
            const double b = scale * rng.gaussian();
            const double c = scale * rng.gaussian();
            m(0, 1) = cd(a, 0); m(1, 0) = cd(-a, 0);
            m(0, 2) = cd(b, 0); m(2, 0) = cd(-b, 0);
            m(1, 2) = cd(c, 0); m(2, 1) = cd(-c, 0);
            return AlgebraElement{g, m};
        }
        case GroupId::U2: {
            Mat m = Mat::Zero(2, 2);
            for (int k = 1; k <= 3; ++k) m += cd(0, scale * rng.gaussian()) * sigma(k);
            m += cd(0, scale * rng.gaussian()) * Mat::Identity(2, 2);
            return AlgebraElement{g, m};
        }
    }
    throw CatalogError("random_algebra_element: unsupported group");
}

} // namespace flatcs
