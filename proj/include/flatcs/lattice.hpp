#pragma once

#include <array>
#include <string>
#include <vector>

#include "flatcs/lie.hpp"

namespace flatcs {

/// Periodic grid over the flat 3-torus with angles in [0, 2pi)^3 and
/// spacing h = 2pi/n. Site index s = (i*n + j)*n + k.
inline int site_index(int n, int i, int j, int k) { return (i * n + j) * n + k; }
inline double grid_spacing(int n) { return 6.283185307179586476925287 / n; }

/// Algebra-valued 1-form sampled at grid sites: three components, each a
/// d x d matrix per site, stored component-major and row-major per matrix.
struct LatticeConnection {
    GroupId group;
    int n = 0;
    std::vector<cd> data;  // 3 * n^3 * d^2

    int dim() const { return rep_dim(group); }
    int sites() const { return n * n * n; }
    cd* comp(int c) { return data.data() + static_cast<size_t>(c) * sites() * dim() * dim(); }
    const cd* comp(int c) const {
        return data.data() + static_cast<size_t>(c) * sites() * dim() * dim();
    }
};

/// Group-valued map sampled at grid sites.
struct GaugeMapField {
    GroupId group;
    int n = 0;
    std::vector<cd> data;  // n^3 * d^2

    int dim() const { return rep_dim(group); }
    int sites() const { return n * n * n; }
};

/// Algebra-valued 2-form, components stored in the dual order
/// [0] = F_23, [1] = F_31, [2] = F_12 so that component c pairs with the
/// 1-form component c in the wedge to the volume form.
struct TwoFormField {
    GroupId group;
    int n = 0;
    std::vector<cd> data;  // 3 * n^3 * d^2

    int dim() const { return rep_dim(group); }
    int sites() const { return n * n * n; }
    cd* comp(int c) { return data.data() + static_cast<size_t>(c) * sites() * dim() * dim(); }
    const cd* comp(int c) const {
        return data.data() + static_cast<size_t>(c) * sites() * dim() * dim();
    }
};

LatticeConnection zero_connection(GroupId g, int n);

/// Constant abelian connection a = sum xi_c dtheta_c from a commuting triple.
/// Throws ArgumentError unless the brackets vanish to 1e-12.
LatticeConnection flat_from_holonomy(const std::array<AlgebraElement, 3>& xi, int n);

GaugeMapField identity_gauge(GroupId g, int n);
GaugeMapField constant_gauge(const GroupElement& g, int n);

/// Smooth map T^3 -> SU(2) of mapping degree d: a bump-localized suspension
/// supported in a ball, identity outside; negative d mirrors the positive map
/// through an orientation-reversing reflection. Requires |d| <= 8 and
/// n >= 16 |d|.
GaugeMapField degree_map(int d, int n);

/// exp of a band-limited random algebra-valued 0-form (degree-zero map).
GaugeMapField random_smooth_gauge(GroupId g, int n, double amplitude, int max_freq, Rng& rng);

/// Band-limited random algebra-valued 1-form.
LatticeConnection random_smooth_connection(GroupId g, int n, double amplitude, int max_freq,
                                           Rng& rng);

/// Pointwise access helpers (copies).
Mat connection_at(const LatticeConnection& a, int c, int i, int j, int k);
Mat gauge_at(const GaugeMapField& u, int i, int j, int k);
GroupElement gauge_basepoint(const GaugeMapField& u);

/// Discrete smoothness invariant: neighboring samples stay well inside the
/// covering injectivity radius. Throws StencilError when violated.
void check_gauge_smoothness(const GaugeMapField& u);

/// Deterministic pairwise-tree reduction; serial and parallel schedules agree.
double tree_sum(const std::vector<double>& v);

/// Pointwise norms in the paper-normalized inner product.
double connection_max_norm(const LatticeConnection& a);
double connection_l2_norm(const LatticeConnection& a);
double connection_distance_l2(const LatticeConnection& a, const LatticeConnection& b);

// ---- serialization ---------------------------------------------------------

/// Binary container: magic "FCS1", u32 group tag, u32 N, then row-major
/// little-endian f64 matrix entries (re, im per entry); connections store
/// three components, gauge maps one.
void write_fcs(const std::string& path, const LatticeConnection& a);
void write_fcs(const std::string& path, const GaugeMapField& u);
LatticeConnection read_fcs_connection(const std::string& path);
GaugeMapField read_fcs_gauge(const std::string& path);

std::string connection_to_json(const LatticeConnection& a);
LatticeConnection connection_from_json(const std::string& text);
std::string gauge_to_json(const GaugeMapField& u);
GaugeMapField gauge_from_json(const std::string& text);

} // namespace flatcs
