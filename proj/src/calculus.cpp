#include "flatcs/calculus.hpp"

#include <cmath>

namespace flatcs {

namespace {

constexpr double kPi = 3.14159265358979323846;

inline int wrap(int x, int n) {
    const int r = x % n;
    return r < 0 ? r + n : r;
}

template <int D>
using MatD = Eigen::Matrix<cd, D, D, (D == 1 ? Eigen::ColMajor : Eigen::RowMajor)>;

template <int D>
inline MatD<D> load(const cd* p) {
    MatD<D> m;
    for (int e = 0; e < D * D; ++e) m.data()[e] = p[e];
    return m;
}

template <int D>
inline void store(cd* p, const MatD<D>& m) {
    for (int e = 0; e < D * D; ++e) p[e] = m.data()[e];
}

// <X, Y> = -Re Tr(X Y) / (2 pi^2)
template <int D>
inline double ip(const MatD<D>& x, const MatD<D>& y) {
    return -(x * y).trace().real() / (2.0 * kPi * kPi);
}

template <int D>
struct ConnView {
    const cd* comp[3];
    int n;
    static constexpr int dd = D * D;

    MatD<D> at(int c, int i, int j, int k) const {
        return load<D>(comp[c] + static_cast<size_t>(site_index(n, i, j, k)) * dd);
    }

    // periodic central difference along `axis` of component c
    MatD<D> deriv(int c, int i, int j, int k, int axis, double h) const {
        int ip1[3] = {i, j, k}, im1[3] = {i, j, k};
        ip1[axis] = wrap(ip1[axis] + 1, n);
        im1[axis] = wrap(im1[axis] - 1, n);
        if constexpr (kStencilOrder == 2) {
            return (at(c, ip1[0], ip1[1], ip1[2]) - at(c, im1[0], im1[1], im1[2])) / (2.0 * h);
        } else {
            int ip2[3] = {i, j, k}, im2[3] = {i, j, k};
            ip2[axis] = wrap(ip2[axis] + 2, n);
            im2[axis] = wrap(im2[axis] - 2, n);
            return (-at(c, ip2[0], ip2[1], ip2[2]) + 8.0 * at(c, ip1[0], ip1[1], ip1[2]) -
                    8.0 * at(c, im1[0], im1[1], im1[2]) + at(c, im2[0], im2[1], im2[2])) /
                   (12.0 * h);
        }
    }
};

template <int D>
ConnView<D> view(const LatticeConnection& a) {
    return ConnView<D>{{a.comp(0), a.comp(1), a.comp(2)}, a.n};
}

template <int D>
struct GaugeView {
    const cd* base;
    int n;
    static constexpr int dd = D * D;

    MatD<D> at(int i, int j, int k) const {
        return load<D>(base + static_cast<size_t>(site_index(n, i, j, k)) * dd);
    }

    MatD<D> deriv(int i, int j, int k, int axis, double h) const {
        int ip1[3] = {i, j, k}, im1[3] = {i, j, k};
        ip1[axis] = wrap(ip1[axis] + 1, n);
        im1[axis] = wrap(im1[axis] - 1, n);
        if constexpr (kStencilOrder == 2) {
            return (at(ip1[0], ip1[1], ip1[2]) - at(im1[0], im1[1], im1[2])) / (2.0 * h);
        } else {
            int ip2[3] = {i, j, k}, im2[3] = {i, j, k};
            ip2[axis] = wrap(ip2[axis] + 2, n);
            im2[axis] = wrap(im2[axis] - 2, n);
            return (-at(ip2[0], ip2[1], ip2[2]) + 8.0 * at(ip1[0], ip1[1], ip1[2]) -
                    8.0 * at(im1[0], im1[1], im1[2]) + at(im2[0], im2[1], im2[2])) /
                   (12.0 * h);
        }
    }
};

template <int D>
void curvature_impl(const LatticeConnection& conn, TwoFormField& out, double& l2, double& linf) {
    const int n = conn.n;
    const double h = grid_spacing(n);
    const auto a = view<D>(conn);
    std::vector<double> dens(conn.sites(), 0.0);
    double worst = 0.0;
    cd* fc[3] = {out.comp(0), out.comp(1), out.comp(2)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const int s = site_index(n, i, j, k);
                double site2 = 0.0;
                for (int c = 0; c < 3; ++c) {
                    const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
                    MatD<D> m1 = a.at(a1, i, j, k);
                    MatD<D> m2 = a.at(a2, i, j, k);
                    MatD<D> f = a.deriv(a2, i, j, k, a1, h) - a.deriv(a1, i, j, k, a2, h) +
                                m1 * m2 - m2 * m1;
                    store<D>(fc[c] + static_cast<size_t>(s) * D * D, f);
                    site2 += ip<D>(f, f);
                }
                dens[s] = site2;
                worst = std::max(worst, site2);
            }
        }
    }
    l2 = std::sqrt(std::max(0.0, tree_sum(dens)) * h * h * h);
    linf = std::sqrt(std::max(0.0, worst));
}

template <int D>
void gauge_apply_impl(const GaugeMapField& u, const LatticeConnection& conn,
                      LatticeConnection& out) {
    const int n = conn.n;
    const double h = grid_spacing(n);
    const auto a = view<D>(conn);
    const GaugeView<D> g{u.data.data(), n};
    cd* oc[3] = {out.comp(0), out.comp(1), out.comp(2)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const int s = site_index(n, i, j, k);
                const MatD<D> us = g.at(i, j, k);
                const MatD<D> udag = us.adjoint();
                for (int c = 0; c < 3; ++c) {
                    MatD<D> t = udag * a.at(c, i, j, k) * us + udag * g.deriv(i, j, k, c, h);
                    store<D>(oc[c] + static_cast<size_t>(s) * D * D, t);
                }
            }
        }
    }
}

template <int D>
double cs_value_impl(const LatticeConnection& conn, const LatticeConnection& ref) {
    const int n = conn.n;
    const double h = grid_spacing(n);
    const auto a = view<D>(conn);
    const auto r = view<D>(ref);
    std::vector<double> dens(conn.sites(), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                MatD<D> v[3], rr[3];
                for (int c = 0; c < 3; ++c) {
                    rr[c] = r.at(c, i, j, k);
                    v[c] = a.at(c, i, j, k) - rr[c];
                }
                double site = 0.0;
                for (int c = 0; c < 3; ++c) {
                    const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
                    // curvature of the reference
                    MatD<D> f0 = r.deriv(a2, i, j, k, a1, h) - r.deriv(a1, i, j, k, a2, h) +
                                 rr[a1] * rr[a2] - rr[a2] * rr[a1];
                    // covariant derivative d_ref v
                    MatD<D> dv = a.deriv(a2, i, j, k, a1, h) - r.deriv(a2, i, j, k, a1, h) -
                                 a.deriv(a1, i, j, k, a2, h) + r.deriv(a1, i, j, k, a2, h) +
                                 rr[a1] * v[a2] - v[a2] * rr[a1] -
                                 (rr[a2] * v[a1] - v[a1] * rr[a2]);
                    site += ip<D>(f0, v[c]) + 0.5 * ip<D>(dv, v[c]);
                }
                MatD<D> b01 = v[0] * v[1] - v[1] * v[0];
                site += ip<D>(b01, v[2]);
                dens[site_index(n, i, j, k)] = site;
            }
        }
    }
    return tree_sum(dens) * h * h * h;
}

// <F_a ^ d_tau a> integrated over the torus
template <int D>
double pairing_impl(const LatticeConnection& conn, const LatticeConnection& dtau) {
    const int n = conn.n;
    const double h = grid_spacing(n);
    const auto a = view<D>(conn);
    const auto w = view<D>(dtau);
    std::vector<double> dens(conn.sites(), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                double site = 0.0;
                for (int c = 0; c < 3; ++c) {
                    const int a1 = (c + 1) % 3, a2 = (c + 2) % 3;
                    MatD<D> m1 = a.at(a1, i, j, k);
                    MatD<D> m2 = a.at(a2, i, j, k);
                    MatD<D> f = a.deriv(a2, i, j, k, a1, h) - a.deriv(a1, i, j, k, a2, h) +
                                m1 * m2 - m2 * m1;
                    site += ip<D>(f, w.at(c, i, j, k));
                }
                dens[site_index(n, i, j, k)] = site;
            }
        }
    }
    return tree_sum(dens) * h * h * h;
}

template <int D>
double degree_impl(const GaugeMapField& u) {
    const int n = u.n;
    const double h = grid_spacing(n);
    const GaugeView<D> g{u.data.data(), n};
    std::vector<double> dens(u.sites(), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                Eigen::Matrix3d coeff;
                const MatD<D> udag = g.at(i, j, k).adjoint();
                for (int axis = 0; axis < 3; ++axis) {
                    const MatD<D> om = udag * g.deriv(i, j, k, axis, h);
                    // quaternion vector part of om = x . (i sigma)
                    coeff(axis, 0) = 0.5 * (om(0, 1) + om(1, 0)).imag();
                    coeff(axis, 1) = 0.5 * (om(0, 1) - om(1, 0)).real();
                    coeff(axis, 2) = 0.5 * (om(0, 0) - om(1, 1)).imag();
                }
                dens[site_index(n, i, j, k)] = coeff.determinant();
            }
        }
    }
    return -tree_sum(dens) * h * h * h / (2.0 * kPi * kPi);
}

template <class F>
auto dispatch(GroupId g, F&& f) {
    switch (rep_dim(g)) {
        case 1: return f(std::integral_constant<int, 1>{});
        case 2: return f(std::integral_constant<int, 2>{});
        default: return f(std::integral_constant<int, 3>{});
    }
}

void check_pair(const LatticeConnection& a, const LatticeConnection& b, const char* who) {
    if (a.group != b.group || a.n != b.n) {
        throw ArgumentError(std::string(who) + ": grid/group mismatch");
    }
}

} // namespace

CurvatureReport curvature(const LatticeConnection& conn) {
    CurvatureReport rep;
    rep.F.group = conn.group;
    rep.F.n = conn.n;
    rep.F.data.assign(conn.data.size(), cd(0, 0));
    dispatch(conn.group, [&](auto dc) {
        curvature_impl<dc.value>(conn, rep.F, rep.l2_norm, rep.max_norm);
        return 0;
    });
    return rep;
}

LatticeConnection gauge_apply(const GaugeMapField& u, const LatticeConnection& conn) {
    if (u.group != conn.group || u.n != conn.n) {
        throw ArgumentError("gauge_apply: grid/group mismatch");
    }
    check_gauge_smoothness(u);
    LatticeConnection out = zero_connection(conn.group, conn.n);
    dispatch(conn.group, [&](auto dc) {
        gauge_apply_impl<dc.value>(u, conn, out);
        return 0;
    });
    return out;
}

double cs_value(const LatticeConnection& conn, const LatticeConnection& ref) {
    check_pair(conn, ref, "cs_eval");
    return dispatch(conn.group,
                    [&](auto dc) { return cs_value_impl<dc.value>(conn, ref); });
}

LatticeConnection restrict_half(const LatticeConnection& conn) {
    if (conn.n % 2 != 0) throw ArgumentError("restrict_half: even grid required");
    const int n = conn.n, m = conn.n / 2;
    LatticeConnection out = zero_connection(conn.group, m);
    const int dd = conn.dim() * conn.dim();
    for (int c = 0; c < 3; ++c) {
        const cd* src = conn.comp(c);
        cd* dst = out.comp(c);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                for (int k = 0; k < m; ++k) {
                    const cd* s = src + static_cast<size_t>(site_index(n, 2 * i, 2 * j, 2 * k)) * dd;
                    cd* d = dst + static_cast<size_t>(site_index(m, i, j, k)) * dd;
                    for (int e = 0; e < dd; ++e) d[e] = s[e];
                }
            }
        }
    }
    return out;
}

CSReport cs_eval(const LatticeConnection& conn, const LatticeConnection& ref,
                 const std::string& reference_id) {
    CSReport rep;
    rep.value = cs_value(conn, ref);
    rep.reference_id = reference_id;
    rep.grid_n = conn.n;
    if (conn.n % 2 == 0 && conn.n >= 8) {
        const double coarse = cs_value(restrict_half(conn), restrict_half(ref));
        rep.richardson_error = std::abs(rep.value - coarse);
    }
    return rep;
}

double cs_jump(const GaugeMapField& u, const LatticeConnection& conn,
               const LatticeConnection& ref) {
    return cs_value(gauge_apply(u, conn), ref) - cs_value(conn, ref);
}

JumpReport check_jump_lattice(double value, const GroupSpec& spec, int grid_n) {
    const double step = granularity(spec, false).value();
    JumpReport rep;
    rep.value = value;
    rep.nearest = nearest_lattice_point(value, step);
    rep.distance = lattice_distance(value, step);
    const double t = grid_n >= 64 ? tol().jump_tol_n64 : tol().jump_tol_n32;
    rep.on_lattice = rep.distance <= t;
    return rep;
}

double path_action_stream(int count, const std::function<LatticeConnection(int)>& at,
                          const LatticeConnection& ref) {
    if (count < 2) throw ArgumentError("path_action: path length >= 2 required");
    const double dtau = 1.0 / (count - 1);

    // sliding window of three nodes
    LatticeConnection prev = at(0), cur = at(1);
    check_pair(prev, ref, "path_action");
    check_pair(cur, ref, "path_action");

    auto dtau_node = [&](const LatticeConnection& m1, const LatticeConnection& p1,
                         double scale) {
        LatticeConnection d = p1;
        for (size_t e = 0; e < d.data.size(); ++e) d.data[e] = (p1.data[e] - m1.data[e]) * scale;
        return d;
    };

    double action = 0.0;
    if (count == 2) {
        // single interval: exact derivative of the linear interpolant
        LatticeConnection d = dtau_node(prev, cur, 1.0 / dtau);
        const double f0 = dispatch(ref.group, [&](auto dc) { return pairing_impl<dc.value>(prev, d); });
        const double f1 = dispatch(ref.group, [&](auto dc) { return pairing_impl<dc.value>(cur, d); });
        return 0.5 * dtau * (f0 + f1);
    }

    LatticeConnection next = at(2);
    check_pair(next, ref, "path_action");

    // one-sided second-order derivative at the left end
    {
        LatticeConnection d = prev;
        for (size_t e = 0; e < d.data.size(); ++e) {
            d.data[e] = (-3.0 * prev.data[e] + 4.0 * cur.data[e] - next.data[e]) / (2.0 * dtau);
        }
        const double f = dispatch(ref.group, [&](auto dc) { return pairing_impl<dc.value>(prev, d); });
        action += 0.5 * f;
    }

    for (int k = 1; k < count - 1; ++k) {
        LatticeConnection d = dtau_node(prev, next, 1.0 / (2.0 * dtau));
        const double f = dispatch(ref.group, [&](auto dc) { return pairing_impl<dc.value>(cur, d); });
        action += f;
        if (k + 2 <= count - 1) {
            prev = std::move(cur);
            cur = std::move(next);
            next = at(k + 2);
            check_pair(next, ref, "path_action");
        }
    }

    // right end: prev, cur, next hold the last three nodes
    {
        LatticeConnection d = prev;
        for (size_t e = 0; e < d.data.size(); ++e) {
            d.data[e] = (3.0 * next.data[e] - 4.0 * cur.data[e] + prev.data[e]) / (2.0 * dtau);
        }
        const double f = dispatch(ref.group, [&](auto dc) { return pairing_impl<dc.value>(next, d); });
        action += 0.5 * f;
    }
    return action * dtau;
}

double path_action(std::span<const LatticeConnection> path, const LatticeConnection& ref) {
    return path_action_stream(static_cast<int>(path.size()),
                              [&](int k) { return path[k]; }, ref);
}

double mapping_degree(const GaugeMapField& u) {
    if (u.group != GroupId::SU2) throw ArgumentError("mapping_degree: SU(2) maps only");
    return degree_impl<2>(u);
}

} // namespace flatcs
