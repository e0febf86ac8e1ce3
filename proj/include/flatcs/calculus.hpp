#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "flatcs/groups.hpp"
#include "flatcs/lattice.hpp"

namespace flatcs {

/// Order of the periodic central differences used by every field operator.
/// Fourth order keeps the gauge-jump errors of bump-localized degree maps
/// inside the integrality tolerances at N = 64; see the convergence tests.
inline constexpr int kStencilOrder = 4;

struct CurvatureReport {
    TwoFormField F;      // dual-ordered components F_23, F_31, F_12
    double l2_norm;
    double max_norm;     // pointwise inner-product norm, max over sites
};

/// F_ij = d_i a_j - d_j a_i + [a_i, a_j] with periodic central differences.
CurvatureReport curvature(const LatticeConnection& conn);

/// u^* a = u^{-1} a u + u^{-1} du, same stencil. Checks the gauge smoothness
/// invariant.
LatticeConnection gauge_apply(const GaugeMapField& u, const LatticeConnection& conn);

struct CSReport {
    double value = 0.0;
    std::string reference_id;
    int grid_n = 0;
    double richardson_error = 0.0;  // |cs(N) - cs(N/2)|
    std::optional<GranularityVerdict> granularity_check;
};

/// Chern-Simons functional relative to the reference connection:
/// integral of <F_ref ^ v> + 1/2 <d_ref v ^ v> + 1/6 <[v ^ v] ^ v>, v = a - ref,
/// by equal-weight periodic quadrature with orientation dtheta1^dtheta2^dtheta3.
CSReport cs_eval(const LatticeConnection& conn, const LatticeConnection& ref,
                 const std::string& reference_id = "ref");

/// CS value only (skips the Richardson pass).
double cs_value(const LatticeConnection& conn, const LatticeConnection& ref);

/// cs_eval(u^* conn, ref) - cs_eval(conn, ref).
double cs_jump(const GaugeMapField& u, const LatticeConnection& conn, const LatticeConnection& ref);

struct JumpReport {
    double value;
    double nearest;     // nearest point of the granularity lattice
    double distance;
    bool on_lattice;    // within the resolution-appropriate tolerance
};

JumpReport check_jump_lattice(double value, const GroupSpec& spec, int grid_n);

/// Trapezoid in tau of the 3-torus integral of <F_a ^ d_tau a> with centered
/// tau-differences (one-sided second order at the ends). Equals
/// cs_eval(last) - cs_eval(first) up to O(h^2) + O(dtau^2).
double path_action(std::span<const LatticeConnection> path, const LatticeConnection& ref);

/// Streaming variant: the k-th connection is produced on demand.
double path_action_stream(int count, const std::function<LatticeConnection(int)>& at,
                          const LatticeConnection& ref);

/// Numerically integrated mapping degree of an SU(2)-valued map
/// (pullback volume integral).
double mapping_degree(const GaugeMapField& u);

/// Restriction to the even-site half grid (used by Richardson estimates).
LatticeConnection restrict_half(const LatticeConnection& conn);

} // namespace flatcs
