#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatcs/lie.hpp"

namespace flatcs {

enum class RepFlavor { Unitary, SpecialUnitary, ComplexifiedReal };

const char* rep_flavor_name(RepFlavor f);

/// Catalog entry for a supported structure group.
struct GroupSpec {
    GroupId name;
    int rep_dim;
    int center_order;      // 0 means infinite
    std::string pi1;       // descriptor of the fundamental group
    std::string cover_name;
    int n_G;
    int N_G;               // lcm(1..n_G)
    RepFlavor rep_flavor;
};

const GroupSpec& catalog(GroupId g);
std::vector<GroupSpec> catalog_all();

/// Granularity of Chern-Simons critical values: s/N_G with s = 1, 2 or 4
/// depending on the representation flavor; denominator 1 under Hypothesis 1.
struct GranularityVerdict {
    int num;
    int den;
    bool hypothesis1;
    double value() const { return static_cast<double>(num) / den; }
};

GranularityVerdict granularity(const GroupSpec& spec, bool hypothesis1);

/// Distance from x to the lattice step*Z, and the nearest lattice point.
double lattice_distance(double x, double step);
double nearest_lattice_point(double x, double step);

/// Universal-cover element. The matrix factor covers the simple part
/// (SU(2) for SU(2), SO(3), U(2); trivial for U(1)); the real factor covers
/// the torus part (R for U(1) and U(2)).
///
/// Covering maps: U1: t -> e^{it}; SU2: m; SO3: adjoint image of m;
/// U2: (m, t) -> e^{it} m.
struct CoverElement {
    GroupId group;
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    double t = 0.0;
};

bool cover_has_matrix_part(GroupId g);
bool cover_has_abelian_part(GroupId g);

CoverElement cover_identity(GroupId g);
CoverElement cover_mul(const CoverElement& a, const CoverElement& b);
CoverElement cover_inverse(const CoverElement& a);
CoverElement cover_commutator(const CoverElement& a, const CoverElement& b);
GroupElement cover_project(const CoverElement& a);
double cover_distance(const CoverElement& a, const CoverElement& b);
CoverElement random_cover_element(GroupId g, Rng& rng);

/// The central element of the cover labeling a bundle class:
/// k mod 2 -> (+-I) for SU(2)/SO(3)/U(2) matrix part, with abelian part
/// pi*k for U(1)/U(2). Only classes with vanishing abelian part admit flat
/// connections.
CoverElement central_delta(GroupId g, int k);
bool is_central(const CoverElement& a, double tolerance = 1e-12);

/// Monte-Carlo lower bound for the number of connected components of the
/// centralizer of <generators>: sample the group, keep elements commuting
/// with every generator within `tolerance`, cluster survivors by the
/// transitive closure of Frobenius distance < cluster_radius.
int centralizer_component_bound(const GroupSpec& spec,
                                const std::vector<GroupElement>& generators,
                                int samples, double tolerance, Rng& rng,
                                double cluster_radius = 0.5);

struct NgEstimate {
    int bound;
    std::string witness;   // description of the generator set achieving it
};

/// Certified lower bound for n_G: max of centralizer_component_bound over
/// random generator sets of sizes 1..3 plus the catalog's structured sets.
NgEstimate n_G_estimate(const GroupSpec& spec, int trials, Rng& rng);

/// The structured generator sets the catalog knows to realize n_G.
std::vector<std::vector<GroupElement>> structured_generator_sets(GroupId g);

} // namespace flatcs
