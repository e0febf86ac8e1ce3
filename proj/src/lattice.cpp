#include "flatcs/lattice.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "json.hpp"

namespace flatcs {

namespace {

constexpr double kPi = 3.14159265358979323846;
using json = nlohmann::json;

Eigen::Matrix2cd pauli(int k) {
    Eigen::Matrix2cd s;
    switch (k) {
        case 1: s << cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0); break;
        case 2: s << cd(0, 0), cd(0, -1), cd(0, 1), cd(0, 0); break;
        default: s << cd(1, 0), cd(0, 0), cd(0, 0), cd(-1, 0); break;
    }
    return s;
}

Eigen::Matrix2cd su2_exp_quat(double w, const Eigen::Vector3d& x) {
    Eigen::Matrix2cd m;
    m(0, 0) = cd(w, x(2));
    m(0, 1) = cd(x(1), x(0));
    m(1, 0) = cd(-x(1), x(0));
    m(1, 1) = cd(w, -x(2));
    return m;
}

// exp of x . (i sigma) in closed form.
Eigen::Matrix2cd su2_exp_vec(const Eigen::Vector3d& x) {
    const double t = x.norm();
    if (t < 1e-300) return Eigen::Matrix2cd::Identity();
    return su2_exp_quat(std::cos(t), (std::sin(t) / t) * x);
}

void check_grid(int n) {
    if (n < 4) throw ArgumentError("grid too small");
}

} // namespace

LatticeConnection zero_connection(GroupId g, int n) {
    check_grid(n);
    LatticeConnection a;
    a.group = g;
    a.n = n;
    a.data.assign(static_cast<size_t>(3) * n * n * n * rep_dim(g) * rep_dim(g), cd(0, 0));
    return a;
}

LatticeConnection flat_from_holonomy(const std::array<AlgebraElement, 3>& xi, int n) {
    const GroupId g = xi[0].group;
    for (const auto& x : xi) {
        if (x.group != g) throw ArgumentError("flat_from_holonomy: group mismatch");
    }
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            if ((xi[a].mat * xi[b].mat - xi[b].mat * xi[a].mat).norm() > 1e-12) {
                throw ArgumentError("flat_from_holonomy: holonomy generators must commute");
            }
        }
    }
    LatticeConnection out = zero_connection(g, n);
    const int d = out.dim();
    const int dd = d * d;
    for (int c = 0; c < 3; ++c) {
        cd* base = out.comp(c);
        for (int s = 0; s < out.sites(); ++s) {
            for (int r = 0; r < d; ++r) {
                for (int q = 0; q < d; ++q) base[s * dd + r * d + q] = xi[c].mat(r, q);
            }
        }
    }
    return out;
}

GaugeMapField identity_gauge(GroupId g, int n) {
    return constant_gauge(identity_element(g), n);
}

GaugeMapField constant_gauge(const GroupElement& g, int n) {
    check_grid(n);
    GaugeMapField u;
    u.group = g.group;
    u.n = n;
    const int d = rep_dim(g.group);
    const int dd = d * d;
    u.data.resize(static_cast<size_t>(n) * n * n * dd);
    for (int s = 0; s < u.sites(); ++s) {
        for (int r = 0; r < d; ++r) {
            for (int q = 0; q < d; ++q) u.data[s * dd + r * d + q] = g.mat(r, q);
        }
    }
    return u;
}

namespace {

// Radial suspension profile: 1 at s = 0, 0 at s = 1, first derivative
// vanishing at both ends. The cosine shape keeps the higher radial
// derivatives small, which controls the discretization error of the
// mapping degree and of the Chern-Simons jump.
double suspension_profile(double s) {
    if (s <= 0.0) return 1.0;
    if (s >= 1.0) return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * s));
}

} // namespace

GaugeMapField degree_map(int d, int n) {
    if (std::abs(d) > 8) throw ArgumentError("degree_map: |d| must be <= 8");
    if (d != 0 && n < 16 * std::abs(d)) {
        throw ArgumentError("degree_map: grid too coarse for |d| = " + std::to_string(std::abs(d)));
    }
    check_grid(n);
    GaugeMapField u;
    u.group = GroupId::SU2;
    u.n = n;
    u.data.resize(static_cast<size_t>(n) * n * n * 4);

    const int ad = std::abs(d);
    const double h = grid_spacing(n);
    const double radius = 0.98 * kPi;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                // mirror through theta_1 -> -theta_1 for negative degree
                const int ii = d < 0 ? (n - i) % n : i;
                const double x = ii * h - kPi;
                const double y = j * h - kPi;
                const double z = k * h - kPi;
                const double r = std::sqrt(x * x + y * y + z * z);
                Eigen::Matrix2cd m;
                if (d == 0 || r >= radius) {
                    m = Eigen::Matrix2cd::Identity();
                } else {
                    const double theta = kPi * suspension_profile(r / radius);
                    Eigen::Vector3d axis(x, y, z);
                    if (r > 1e-14) {
                        axis /= r;
                    } else {
                        axis = Eigen::Vector3d(0, 0, 1);
                    }
                    m = su2_exp_vec(ad * theta * axis);
                }
                const int s = site_index(n, i, j, k);
                u.data[s * 4 + 0] = m(0, 0);
                u.data[s * 4 + 1] = m(0, 1);
                u.data[s * 4 + 2] = m(1, 0);
                u.data[s * 4 + 3] = m(1, 1);
            }
        }
    }
    return u;
}

namespace {

// Band-limited random scalar field on the grid: low modes with 1/(1+|k|^2)
// falloff. Returned as samples.
std::vector<double> random_scalar_field(int n, int max_freq, Rng& rng) {
    struct Mode {
        int kx, ky, kz;
        double c, s;
    };
    std::vector<Mode> modes;
    for (int kx = -max_freq; kx <= max_freq; ++kx) {
        for (int ky = -max_freq; ky <= max_freq; ++ky) {
            for (int kz = -max_freq; kz <= max_freq; ++kz) {
                // one representative per +-k pair, constant term included
                if (kx < 0 || (kx == 0 && ky < 0) || (kx == 0 && ky == 0 && kz < 0)) continue;
                const double fall = 1.0 / (1.0 + kx * kx + ky * ky + kz * kz);
                modes.push_back({kx, ky, kz, fall * rng.gaussian(), fall * rng.gaussian()});
            }
        }
    }
    std::vector<double> out(static_cast<size_t>(n) * n * n, 0.0);
    const double h = grid_spacing(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                double v = 0.0;
                for (const Mode& m : modes) {
                    const double phase = h * (m.kx * i + m.ky * j + m.kz * k);
                    v += m.c * std::cos(phase) + m.s * std::sin(phase);
                }
                out[site_index(n, i, j, k)] = v;
            }
        }
    }
    return out;
}

std::vector<Mat> algebra_frame(GroupId g) {
    std::vector<Mat> frame;
    switch (g) {
        case GroupId::U1: {
            Mat m(1, 1);
            m(0, 0) = cd(0, 1);
            frame.push_back(m);
            break;
        }
        case GroupId::SU2:
            for (int k = 1; k <= 3; ++k) frame.push_back(cd(0, 1) * Mat(pauli(k)));
            break;
        case GroupId::SO3:
            for (int k = 0; k < 3; ++k) {
                Mat m = Mat::Zero(3, 3);
                const int a = (k + 1) % 3, b = (k + 2) % 3;
                m(a, b) = cd(1, 0);
                m(b, a) = cd(-1, 0);
                frame.push_back(m);
            }
            break;
        case GroupId::U2:
            for (int k = 1; k <= 3; ++k) frame.push_back(cd(0, 1) * Mat(pauli(k)));
            frame.push_back(cd(0, 1) * Mat(Mat::Identity(2, 2)));
            break;
    }
    return frame;
}

// Pointwise exp in the fixed representation, closed form per group.
Mat group_exp_fast(GroupId g, const std::vector<double>& coeffs) {
    switch (g) {
        case GroupId::U1: {
            Mat m(1, 1);
            m(0, 0) = cd(std::cos(coeffs[0]), std::sin(coeffs[0]));
            return m;
        }
        case GroupId::SU2:
            return su2_exp_vec(Eigen::Vector3d(coeffs[0], coeffs[1], coeffs[2]));
        case GroupId::SO3: {
            // Rodrigues on the generator assembled in the frame order above
            Eigen::Matrix3d kmat = Eigen::Matrix3d::Zero();
            kmat(1, 2) = coeffs[0];
            kmat(2, 1) = -coeffs[0];
            kmat(2, 0) = coeffs[1];
            kmat(0, 2) = -coeffs[1];
            kmat(0, 1) = coeffs[2];
            kmat(1, 0) = -coeffs[2];
            const double t = std::sqrt(coeffs[0] * coeffs[0] + coeffs[1] * coeffs[1] +
                                       coeffs[2] * coeffs[2]);
            Eigen::Matrix3d r;
            if (t < 1e-300) {
                r = Eigen::Matrix3d::Identity();
            } else {
                const Eigen::Matrix3d kn = kmat / t;
                r = Eigen::Matrix3d::Identity() + std::sin(t) * kn +
                    (1.0 - std::cos(t)) * (kn * kn);
            }
            return r.cast<cd>();
        }
        case GroupId::U2: {
            Eigen::Matrix2cd m = su2_exp_vec(Eigen::Vector3d(coeffs[0], coeffs[1], coeffs[2]));
            return cd(std::cos(coeffs[3]), std::sin(coeffs[3])) * Mat(m);
        }
    }
    throw CatalogError("group_exp_fast: unsupported group");
}

} // namespace

GaugeMapField random_smooth_gauge(GroupId g, int n, double amplitude, int max_freq, Rng& rng) {
    check_grid(n);
    const auto frame = algebra_frame(g);
    std::vector<std::vector<double>> fields;
    fields.reserve(frame.size());
    for (size_t b = 0; b < frame.size(); ++b) fields.push_back(random_scalar_field(n, max_freq, rng));

    GaugeMapField u;
    u.group = g;
    u.n = n;
    const int d = rep_dim(g);
    const int dd = d * d;
    u.data.resize(static_cast<size_t>(n) * n * n * dd);
    std::vector<double> coeffs(frame.size());
    for (int s = 0; s < u.sites(); ++s) {
        for (size_t b = 0; b < frame.size(); ++b) coeffs[b] = amplitude * fields[b][s];
        // frame order for SO(3) matches group_exp_fast's generator layout
        Mat m = group_exp_fast(g, coeffs);
        for (int r = 0; r < d; ++r) {
            for (int q = 0; q < d; ++q) u.data[s * dd + r * d + q] = m(r, q);
        }
    }
    return u;
}

LatticeConnection random_smooth_connection(GroupId g, int n, double amplitude, int max_freq,
                                           Rng& rng) {
    check_grid(n);
    const auto frame = algebra_frame(g);
    LatticeConnection a = zero_connection(g, n);
    const int d = a.dim();
    const int dd = d * d;
    for (int c = 0; c < 3; ++c) {
        cd* base = a.comp(c);
        for (size_t b = 0; b < frame.size(); ++b) {
            std::vector<double> field = random_scalar_field(n, max_freq, rng);
            for (int s = 0; s < a.sites(); ++s) {
                const double w = amplitude * field[s];
                for (int r = 0; r < d; ++r) {
                    for (int q = 0; q < d; ++q) base[s * dd + r * d + q] += w * frame[b](r, q);
                }
            }
        }
    }
    return a;
}

Mat connection_at(const LatticeConnection& a, int c, int i, int j, int k) {
    const int d = a.dim();
    Mat m(d, d);
    const cd* p = a.comp(c) + static_cast<size_t>(site_index(a.n, i, j, k)) * d * d;
    for (int r = 0; r < d; ++r) {
        for (int q = 0; q < d; ++q) m(r, q) = p[r * d + q];
    }
    return m;
}

Mat gauge_at(const GaugeMapField& u, int i, int j, int k) {
    const int d = u.dim();
    Mat m(d, d);
    const cd* p = u.data.data() + static_cast<size_t>(site_index(u.n, i, j, k)) * d * d;
    for (int r = 0; r < d; ++r) {
        for (int q = 0; q < d; ++q) m(r, q) = p[r * d + q];
    }
    return m;
}

GroupElement gauge_basepoint(const GaugeMapField& u) {
    return GroupElement{u.group, gauge_at(u, 0, 0, 0)};
}

void check_gauge_smoothness(const GaugeMapField& u) {
    const int n = u.n;
    const int dd = u.dim() * u.dim();
    // stay well below the covering diameter 2 sqrt(d)
    const double limit = 1.85 * std::sqrt(static_cast<double>(u.dim()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const int s = site_index(n, i, j, k);
                const int nb[3] = {site_index(n, (i + 1) % n, j, k),
                                   site_index(n, i, (j + 1) % n, k),
                                   site_index(n, i, j, (k + 1) % n)};
                for (int axis = 0; axis < 3; ++axis) {
                    double d2 = 0.0;
                    for (int e = 0; e < dd; ++e) {
                        const cd diff = u.data[s * dd + e] - u.data[nb[axis] * dd + e];
                        d2 += std::norm(diff);
                    }
                    if (std::sqrt(d2) > limit) {
                        throw StencilError("gauge map violates the discrete smoothness invariant");
                    }
                }
            }
        }
    }
}

double tree_sum(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    std::vector<double> cur = v;
    while (cur.size() > 1) {
        std::vector<double> next((cur.size() + 1) / 2, 0.0);
        for (size_t i = 0; i + 1 < cur.size(); i += 2) next[i / 2] = cur[i] + cur[i + 1];
        if (cur.size() % 2 == 1) next.back() = cur.back();
        cur.swap(next);
    }
    return cur[0];
}

namespace {

double site_ip_norm2(const cd* p, int d) {
    // <X, X> = -Tr(X X) / (2 pi^2) for anti-Hermitian X equals
    // ||X||_F^2 / (2 pi^2).
    double f2 = 0.0;
    for (int e = 0; e < d * d; ++e) f2 += std::norm(p[e]);
    return f2 / (2.0 * kPi * kPi);
}

} // namespace

double connection_max_norm(const LatticeConnection& a) {
    const int d = a.dim();
    const int dd = d * d;
    double worst = 0.0;
    for (int s = 0; s < a.sites(); ++s) {
        double v = 0.0;
        for (int c = 0; c < 3; ++c) v += site_ip_norm2(a.comp(c) + static_cast<size_t>(s) * dd, d);
        worst = std::max(worst, v);
    }
    return std::sqrt(worst);
}

double connection_l2_norm(const LatticeConnection& a) {
    const int d = a.dim();
    const int dd = d * d;
    const double h = grid_spacing(a.n);
    std::vector<double> dens(a.sites(), 0.0);
    for (int s = 0; s < a.sites(); ++s) {
        double v = 0.0;
        for (int c = 0; c < 3; ++c) v += site_ip_norm2(a.comp(c) + static_cast<size_t>(s) * dd, d);
        dens[s] = v;
    }
    return std::sqrt(tree_sum(dens) * h * h * h);
}

double connection_distance_l2(const LatticeConnection& a, const LatticeConnection& b) {
    if (a.group != b.group || a.n != b.n) throw ArgumentError("connection distance: shape mismatch");
    LatticeConnection diff = a;
    for (size_t e = 0; e < diff.data.size(); ++e) diff.data[e] -= b.data[e];
    return connection_l2_norm(diff);
}

// ---- serialization ---------------------------------------------------------

namespace {

void write_header(std::ofstream& f, GroupId g, int n) {
    f.write("FCS1", 4);
    const uint32_t tag = static_cast<uint32_t>(g);
    const uint32_t nn = static_cast<uint32_t>(n);
    f.write(reinterpret_cast<const char*>(&tag), 4);
    f.write(reinterpret_cast<const char*>(&nn), 4);
}

void write_payload(std::ofstream& f, const std::vector<cd>& data) {
    // complex<double> is laid out as (re, im) doubles; x86 is little-endian.
    f.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(cd)));
}

std::pair<GroupId, int> read_header(std::ifstream& f, const std::string& path) {
    char magic[4];
    f.read(magic, 4);
    if (!f || std::memcmp(magic, "FCS1", 4) != 0) {
        throw ArgumentError("not an FCS1 container: " + path);
    }
    uint32_t tag = 0, nn = 0;
    f.read(reinterpret_cast<char*>(&tag), 4);
    f.read(reinterpret_cast<char*>(&nn), 4);
    if (!f || tag > 3 || nn < 4 || nn > 4096) {
        throw ArgumentError("corrupt FCS1 header: " + path);
    }
    return {static_cast<GroupId>(tag), static_cast<int>(nn)};
}

} // namespace

void write_fcs(const std::string& path, const LatticeConnection& a) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot open for writing: " + path);
    write_header(f, a.group, a.n);
    write_payload(f, a.data);
}

void write_fcs(const std::string& path, const GaugeMapField& u) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot open for writing: " + path);
    write_header(f, u.group, u.n);
    write_payload(f, u.data);
}

LatticeConnection read_fcs_connection(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot open: " + path);
    auto [g, n] = read_header(f, path);
    LatticeConnection a = zero_connection(g, n);
    f.read(reinterpret_cast<char*>(a.data.data()),
           static_cast<std::streamsize>(a.data.size() * sizeof(cd)));
    if (!f || f.peek() != EOF) throw ArgumentError("FCS1 payload size mismatch: " + path);
    return a;
}

GaugeMapField read_fcs_gauge(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot open: " + path);
    auto [g, n] = read_header(f, path);
    GaugeMapField u = identity_gauge(g, n);
    f.read(reinterpret_cast<char*>(u.data.data()),
           static_cast<std::streamsize>(u.data.size() * sizeof(cd)));
    if (!f || f.peek() != EOF) throw ArgumentError("FCS1 payload size mismatch: " + path);
    return u;
}

namespace {

json matrices_to_json(const std::vector<cd>& data, int count, int dd) {
    json arr = json::array();
    for (int s = 0; s < count; ++s) {
        json m = json::array();
        for (int e = 0; e < dd; ++e) {
            const cd& z = data[static_cast<size_t>(s) * dd + e];
            m.push_back(json::array({z.real(), z.imag()}));
        }
        arr.push_back(std::move(m));
    }
    return arr;
}

void matrices_from_json(const json& arr, std::vector<cd>& data, size_t offset, int count, int dd) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != count) {
        throw ArgumentError("field JSON: wrong sample count");
    }
    for (int s = 0; s < count; ++s) {
        const json& m = arr[s];
        if (static_cast<int>(m.size()) != dd) throw ArgumentError("field JSON: wrong matrix size");
        for (int e = 0; e < dd; ++e) {
            data[offset + static_cast<size_t>(s) * dd + e] =
                cd(m[e][0].get<double>(), m[e][1].get<double>());
        }
    }
}

} // namespace

std::string connection_to_json(const LatticeConnection& a) {
    const int dd = a.dim() * a.dim();
    json j;
    j["group"] = group_name(a.group);
    j["n"] = a.n;
    j["components"] = json::array();
    for (int c = 0; c < 3; ++c) {
        std::vector<cd> comp(a.comp(c), a.comp(c) + static_cast<size_t>(a.sites()) * dd);
        j["components"].push_back(matrices_to_json(comp, a.sites(), dd));
    }
    return j.dump();
}

LatticeConnection connection_from_json(const std::string& text) {
    json j = json::parse(text);
    LatticeConnection a = zero_connection(group_from_name(j.at("group").get<std::string>()),
                                          j.at("n").get<int>());
    const int dd = a.dim() * a.dim();
    const auto& comps = j.at("components");
    if (comps.size() != 3) throw ArgumentError("connection JSON: three components required");
    for (int c = 0; c < 3; ++c) {
        matrices_from_json(comps[c], a.data, static_cast<size_t>(c) * a.sites() * dd, a.sites(), dd);
    }
    return a;
}

std::string gauge_to_json(const GaugeMapField& u) {
    const int dd = u.dim() * u.dim();
    json j;
    j["group"] = group_name(u.group);
    j["n"] = u.n;
    j["samples"] = matrices_to_json(u.data, u.sites(), dd);
    return j.dump();
}

GaugeMapField gauge_from_json(const std::string& text) {
    json j = json::parse(text);
    GaugeMapField u = identity_gauge(group_from_name(j.at("group").get<std::string>()),
                                     j.at("n").get<int>());
    const int dd = u.dim() * u.dim();
    matrices_from_json(j.at("samples"), u.data, 0, u.sites(), dd);
    return u;
}

} // namespace flatcs
