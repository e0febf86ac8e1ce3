#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "flatcs/config.hpp"
#include "flatcs/errors.hpp"
#include "flatcs/rng.hpp"

namespace flatcs {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// Supported structure groups, each fixed in one faithful unitary
/// representation: standard for U(1), SU(2), U(2); the (complexified)
/// 3x3 orthogonal representation for SO(3).
enum class GroupId : int { U1 = 0, SU2 = 1, SO3 = 2, U2 = 3 };

const char* group_name(GroupId g);
GroupId group_from_name(const std::string& name);
int rep_dim(GroupId g);

/// A group element stored as its matrix in the fixed representation.
struct GroupElement {
    GroupId group;
    Mat mat;
};

/// An algebra element stored as its (anti-Hermitian) matrix image.
struct AlgebraElement {
    GroupId group;
    Mat mat;
};

/// Validating constructors. Throw ArgumentError unless the matrix lies in the
/// image of the fixed representation within tau_unitary.
GroupElement group_element(GroupId g, const Mat& m);
AlgebraElement algebra_element(GroupId g, const Mat& m);

GroupElement identity_element(GroupId g);
AlgebraElement zero_algebra(GroupId g);

/// Membership residuals (0 for exact members). Used by the validators above.
double group_membership_residual(GroupId g, const Mat& m);
double algebra_membership_residual(GroupId g, const Mat& m);

/// Removes numerical drift off the subalgebra (anti-Hermitian part, plus the
/// per-group linear constraints: traceless for su(2), real for so(3),
/// imaginary for u(1)).
Mat project_to_algebra(GroupId g, const Mat& m);

/// The paper-normalized Ad-invariant inner product
///   <X, Y> = -(1/2 pi^2) Tr(X Y).
double inner_product(const AlgebraElement& x, const AlgebraElement& y);
double algebra_norm(const AlgebraElement& x);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// exp: algebra -> group. Exact on the algebra (eigendecomposition of the
/// associated Hermitian matrix), unitary output to machine precision.
GroupElement matrix_exp(const AlgebraElement& x);

/// Principal log: group -> algebra. Throws BranchCutError when an eigenvalue
/// is within eps_log of -1.
AlgebraElement matrix_log(const GroupElement& g);

/// Ad(g) X = g X g^{-1}.
AlgebraElement adjoint_action(const GroupElement& g, const AlgebraElement& x);

/// Nearest group element under a polar-type retraction. Throws
/// RetractionError when the polar factor is near-singular or lands in the
/// wrong component (det < 0 for SO(3), det near -1 for SU(2)).
GroupElement retract_to_group(const Mat& m, GroupId g);

GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const GroupElement& a);

/// Haar-distributed random element.
GroupElement random_group_element(GroupId g, Rng& rng);
/// Gaussian algebra element with coefficients of the given scale over a
/// fixed orthogonal basis.
AlgebraElement random_algebra_element(GroupId g, Rng& rng, double scale = 1.0);

double frobenius_distance(const Mat& a, const Mat& b);

} // namespace flatcs
