#include "flatcs/rep.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

namespace flatcs {

namespace {

constexpr double kPi = 3.14159265358979323846;
using M2 = Eigen::Matrix2cd;

M2 pauli(int k) {
    M2 s;
    switch (k) {
        case 1: s << cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0); break;
        case 2: s << cd(0, 0), cd(0, -1), cd(0, 1), cd(0, 0); break;
        default: s << cd(1, 0), cd(0, 0), cd(0, 0), cd(-1, 0); break;
    }
    return s;
}

// Quaternion coordinates of a 2x2 matrix: M ~ w I + x . (i sigma).
void quat_parts(const M2& m, double& w, Eigen::Vector3d& x) {
    w = 0.5 * (m(0, 0) + m(1, 1)).real();
    x(0) = 0.5 * (m(0, 1) + m(1, 0)).imag();
    x(1) = 0.5 * (m(0, 1) - m(1, 0)).real();
    x(2) = 0.5 * (m(0, 0) - m(1, 1)).imag();
}

M2 from_quat(double w, const Eigen::Vector3d& x) {
    M2 m;
    m(0, 0) = cd(w, x(2));
    m(0, 1) = cd(x(1), x(0));
    m(1, 0) = cd(-x(1), x(0));
    m(1, 1) = cd(w, -x(2));
    return m;
}

// Principal log of an SU(2) element in closed form; theta in [0, pi].
// On the branch cut (theta = pi) the axis is ambiguous: callers either treat
// it as a sentinel or pass a deterministic fallback axis.
bool su2_log(const M2& g, M2& out, double margin = 1e-12) {
    double w;
    Eigen::Vector3d x;
    quat_parts(g, w, x);
    const double xn = x.norm();
    const double theta = std::atan2(xn, w);
    if (2.0 * std::cos(0.5 * theta) < margin) return false;  // eigenvalue at -1
    Eigen::Vector3d axis = xn > 1e-300 ? Eigen::Vector3d(x / xn) : Eigen::Vector3d(0, 0, 1);
    out = from_quat(0.0, theta * axis);
    return true;
}

M2 su2_exp(const M2& x) {
    double w;
    Eigen::Vector3d v;
    quat_parts(x, w, v);
    const double t = v.norm();
    if (t < 1e-300) return M2::Identity();
    return from_quat(std::cos(t), (std::sin(t) / t) * v);
}

// Geodesic interpolation; antipodal pairs get a deterministic axis.
M2 su2_slerp(const M2& a, const M2& b, double t) {
    M2 d = a.adjoint() * b;
    M2 x;
    if (!su2_log(d, x, 1e-9)) {
        x = from_quat(0.0, Eigen::Vector3d(0, 0, kPi));
    }
    return a * su2_exp(t * x);
}

// ||log|| in the paper-normalized su(2) inner product: theta / pi.
double su2_log_norm(const M2& g, bool& branch) {
    double w;
    Eigen::Vector3d x;
    quat_parts(g, w, x);
    const double theta = std::atan2(x.norm(), w);
    branch = 2.0 * std::cos(0.5 * theta) < tol().eps_log;
    return theta / kPi;
}

double abelian_norm(double t) { return std::abs(t) / (kPi * std::sqrt(2.0)); }

// ---- single-surface solver in SU(2) ---------------------------------------

struct SurfaceProblem {
    int genus;
    M2 delta;
    std::vector<M2> vars;  // A1, B1, ..., Ag, Bg

    M2 commutator(int j) const {
        const M2& a = vars[2 * j];
        const M2& b = vars[2 * j + 1];
        return a * b * a.adjoint() * b.adjoint();
    }

    M2 product() const {
        M2 p = M2::Identity();
        for (int j = 0; j < genus; ++j) p *= commutator(j);
        return p;
    }

    double energy() const { return (product() - delta).squaredNorm(); }

    double defect() const {
        bool branch = false;
        const double d = su2_log_norm(M2(product() * delta.adjoint()), branch);
        return branch ? std::numeric_limits<double>::infinity() : d;
    }
};

// Tangent-direction derivative of the full commutator product when variable v
// moves along xi (right translation).
M2 product_derivative(const SurfaceProblem& sp, const std::vector<M2>& prefix,
                      const std::vector<M2>& suffix, int v, const M2& xi) {
    const int j = v / 2;
    const M2& a = sp.vars[2 * j];
    const M2& b = sp.vars[2 * j + 1];
    M2 dc;
    if (v % 2 == 0) {
        dc = a * (xi * b - b * xi) * a.adjoint() * b.adjoint();
    } else {
        dc = a * b * (xi * a.adjoint() - a.adjoint() * xi) * b.adjoint();
    }
    return prefix[j] * dc * suffix[j];
}

void partial_products(const SurfaceProblem& sp, std::vector<M2>& prefix, std::vector<M2>& suffix) {
    prefix.assign(sp.genus, M2::Identity());
    suffix.assign(sp.genus, M2::Identity());
    for (int j = 1; j < sp.genus; ++j) prefix[j] = prefix[j - 1] * sp.commutator(j - 1);
    for (int j = sp.genus - 2; j >= 0; --j) suffix[j] = sp.commutator(j + 1) * suffix[j];
}

const std::array<M2, 3>& tangent_basis() {
    static const std::array<M2, 3> basis = {
        M2((1.0 / std::sqrt(2.0)) * cd(0, 1) * pauli(1)),
        M2((1.0 / std::sqrt(2.0)) * cd(0, 1) * pauli(2)),
        M2((1.0 / std::sqrt(2.0)) * cd(0, 1) * pauli(3)),
    };
    return basis;
}

// Riemannian descent with Armijo backtracking on the Frobenius energy,
// followed by Gauss-Newton on the quaternion residual. Returns iterations
// used; the problem is mutated toward the variety.
int solve_surface(SurfaceProblem& sp, int max_iters) {
    const auto& basis = tangent_basis();
    const int nv = 2 * sp.genus;
    std::vector<M2> prefix, suffix;

    double energy = sp.energy();
    double step = 0.25;
    int it = 0;
    const int retract_period = 50;

    while (it < max_iters && energy > 1e-8) {
        partial_products(sp, prefix, suffix);
        const M2 p = sp.product();
        const M2 pm = p - sp.delta;
        std::vector<Eigen::Vector3d> grads(nv);
        double gnorm2 = 0.0;
        for (int v = 0; v < nv; ++v) {
            for (int k = 0; k < 3; ++k) {
                const M2 dp = product_derivative(sp, prefix, suffix, v, basis[k]);
                grads[v](k) = 2.0 * (pm.adjoint() * dp).trace().real();
            }
            gnorm2 += grads[v].squaredNorm();
        }
        if (gnorm2 < 1e-24) break;

        bool moved = false;
        for (int bt = 0; bt < 40; ++bt) {
            SurfaceProblem trial = sp;
            for (int v = 0; v < nv; ++v) {
                M2 xi = M2::Zero();
                for (int k = 0; k < 3; ++k) xi += grads[v](k) * basis[k];
                trial.vars[v] = sp.vars[v] * su2_exp(M2(-step * xi));
            }
            const double te = trial.energy();
            if (te < energy - 1e-4 * step * gnorm2) {
                sp = trial;
                energy = te;
                step *= 1.4;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        ++it;
        if (it % retract_period == 0) {
            for (M2& v : sp.vars) {
                Eigen::JacobiSVD<M2> svd(v, Eigen::ComputeFullU | Eigen::ComputeFullV);
                v = svd.matrixU() * svd.matrixV().adjoint();
                const cd det = v.determinant();
                const double phi = std::atan2(det.imag(), det.real());
                v *= cd(std::cos(-phi / 2), std::sin(-phi / 2));
            }
            energy = sp.energy();
        }
        if (!moved) break;
    }

    // Gauss-Newton on the vector part of P delta^dagger.
    for (int gn = 0; gn < 40 && it < max_iters; ++gn, ++it) {
        const M2 pd = sp.product() * sp.delta.adjoint();
        double w;
        Eigen::Vector3d r;
        quat_parts(pd, w, r);
        if (r.norm() < 1e-14 && w > 0.0) break;
        partial_products(sp, prefix, suffix);
        Eigen::MatrixXd jac(3, 3 * nv);
        for (int v = 0; v < nv; ++v) {
            for (int k = 0; k < 3; ++k) {
                const M2 dp = product_derivative(sp, prefix, suffix, v, basis[k]) *
                              sp.delta.adjoint();
                double dw;
                Eigen::Vector3d dr;
                quat_parts(dp, dw, dr);
                jac.col(3 * v + k) = dr;
            }
        }
        Eigen::VectorXd h = jac.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(-r);
        for (int v = 0; v < nv; ++v) {
            M2 xi = M2::Zero();
            for (int k = 0; k < 3; ++k) xi += h(3 * v + k) * basis[k];
            sp.vars[v] = sp.vars[v] * su2_exp(xi);
        }
    }
    return it;
}

bool group_has_matrix(GroupId g) { return cover_has_matrix_part(g); }

} // namespace

int CompressionBodySignature::plus_genus() const {
    int s = 0;
    for (int g : surface_genera) s += g;
    return s + free_rank;
}

void CompressionBodySignature::validate() const {
    if (surface_genera.size() != deltas.size()) {
        throw ArgumentError("signature: one delta per surface required");
    }
    if (free_rank < 0) throw ArgumentError("signature: negative free rank");
    for (const auto& d : deltas) {
        if (d.group != group) throw ArgumentError("signature: delta group mismatch");
        if (!is_central(d, 1e-12)) throw ArgumentError("signature: delta is not central");
    }
    for (int g : surface_genera) {
        if (g < 0) throw ArgumentError("signature: negative genus");
    }
}

namespace {

void check_shapes(const RepPoint& p, const CompressionBodySignature& data) {
    if (p.group != data.group) throw ArgumentError("rep point: group mismatch");
    if (p.surface_tuples.size() != data.surface_genera.size()) {
        throw ArgumentError("rep point: surface count mismatch");
    }
    for (size_t i = 0; i < p.surface_tuples.size(); ++i) {
        if (static_cast<int>(p.surface_tuples[i].size()) != data.surface_genera[i]) {
            throw ArgumentError("rep point: genus mismatch on surface " + std::to_string(i));
        }
    }
    if (static_cast<int>(p.free_images.size()) != data.free_rank) {
        throw ArgumentError("rep point: free rank mismatch");
    }
}

double surface_defect(const RepPoint& p, const CompressionBodySignature& data, size_t i,
                      bool frobenius) {
    CoverElement prod = cover_identity(p.group);
    for (const auto& [a, b] : p.surface_tuples[i]) {
        prod = cover_mul(prod, cover_commutator(a, b));
    }
    const CoverElement& delta = data.deltas[i];
    double d = 0.0;
    if (group_has_matrix(p.group)) {
        if (frobenius) {
            d = (prod.m - delta.m).norm();
        } else {
            bool branch = false;
            d = su2_log_norm(M2(prod.m * delta.m.adjoint()), branch);
            if (branch) return std::numeric_limits<double>::infinity();
        }
    }
    if (cover_has_abelian_part(p.group)) {
        d = std::hypot(d, abelian_norm(prod.t - delta.t));
    }
    return d;
}

} // namespace

double commutator_defect(const RepPoint& point, const CompressionBodySignature& data) {
    data.validate();
    check_shapes(point, data);
    double worst = 0.0;
    for (size_t i = 0; i < point.surface_tuples.size(); ++i) {
        worst = std::max(worst, surface_defect(point, data, i, false));
    }
    return worst;
}

double commutator_defect_frobenius(const RepPoint& point, const CompressionBodySignature& data) {
    data.validate();
    check_shapes(point, data);
    double worst = 0.0;
    for (size_t i = 0; i < point.surface_tuples.size(); ++i) {
        worst = std::max(worst, surface_defect(point, data, i, true));
    }
    return worst;
}

namespace {

void check_feasible(const CompressionBodySignature& data) {
    for (size_t i = 0; i < data.deltas.size(); ++i) {
        const CoverElement& d = data.deltas[i];
        if (cover_has_abelian_part(data.group) && std::abs(d.t) > 1e-12) {
            throw FeasibilityError("flat connections require a vanishing abelian obstruction");
        }
        if (data.surface_genera[i] == 0 && group_has_matrix(data.group) &&
            (d.m - M2::Identity()).norm() > 1e-12) {
            throw FeasibilityError("genus 0 with nontrivial delta: the variety is empty");
        }
    }
}

CoverElement cover_from_su2(GroupId g, const M2& m) {
    CoverElement e{g};
    e.m = m;
    return e;
}

} // namespace

RepPoint solve_commutator(const CompressionBodySignature& data, uint64_t seed, int max_iters) {
    data.validate();
    check_feasible(data);
    Rng rng = Rng(seed).split("solve_commutator");

    RepPoint p;
    p.group = data.group;
    p.surface_tuples.resize(data.surface_genera.size());
    double best_defect = 0.0;

    for (size_t i = 0; i < data.surface_genera.size(); ++i) {
        const int genus = data.surface_genera[i];
        Rng srng = rng.split(i);
        auto& tuple = p.surface_tuples[i];
        tuple.resize(genus);
        if (!group_has_matrix(data.group)) {
            for (auto& [a, b] : tuple) {
                a = random_cover_element(data.group, srng);
                b = random_cover_element(data.group, srng);
            }
            continue;
        }
        SurfaceProblem sp;
        sp.genus = genus;
        sp.delta = data.deltas[i].m;
        bool solved = genus == 0;
        for (int attempt = 0; attempt < 8 && !solved; ++attempt) {
            sp.vars.clear();
            for (int v = 0; v < 2 * genus; ++v) {
                sp.vars.push_back(random_group_element(GroupId::SU2, srng).mat);
            }
            solve_surface(sp, max_iters);
            solved = sp.defect() <= tol().rep_defect;
        }
        if (!solved) {
            throw SolverError("solve_commutator: did not reach the target defect", sp.defect());
        }
        best_defect = std::max(best_defect, sp.defect());
        for (int j = 0; j < genus; ++j) {
            tuple[j] = {cover_from_su2(data.group, sp.vars[2 * j]),
                        cover_from_su2(data.group, sp.vars[2 * j + 1])};
            if (cover_has_abelian_part(data.group)) {
                tuple[j].first.t = srng.gaussian();
                tuple[j].second.t = srng.gaussian();
            }
        }
    }
    Rng frng = rng.split("free");
    for (int k = 0; k < data.free_rank; ++k) {
        p.free_images.push_back(random_cover_element(data.group, frng));
    }
    return p;
}

double project_to_variety(RepPoint& init, const CompressionBodySignature& data, int max_iters) {
    data.validate();
    check_shapes(init, data);
    if (!group_has_matrix(data.group)) return commutator_defect(init, data);
    for (size_t i = 0; i < init.surface_tuples.size(); ++i) {
        SurfaceProblem sp;
        sp.genus = data.surface_genera[i];
        if (sp.genus == 0) continue;
        sp.delta = data.deltas[i].m;
        for (const auto& [a, b] : init.surface_tuples[i]) {
            sp.vars.push_back(a.m);
            sp.vars.push_back(b.m);
        }
        solve_surface(sp, max_iters);
        for (int j = 0; j < sp.genus; ++j) {
            init.surface_tuples[i][j].first.m = sp.vars[2 * j];
            init.surface_tuples[i][j].second.m = sp.vars[2 * j + 1];
        }
    }
    return commutator_defect(init, data);
}

namespace {

CoverElement cover_interp(const CoverElement& a, const CoverElement& b, double t) {
    CoverElement e{a.group};
    if (group_has_matrix(a.group)) e.m = su2_slerp(a.m, b.m, t);
    e.t = (1.0 - t) * a.t + t * b.t;
    return e;
}

RepPoint interpolate(const RepPoint& p0, const RepPoint& p1, double t) {
    RepPoint p;
    p.group = p0.group;
    p.surface_tuples.resize(p0.surface_tuples.size());
    for (size_t i = 0; i < p0.surface_tuples.size(); ++i) {
        for (size_t j = 0; j < p0.surface_tuples[i].size(); ++j) {
            p.surface_tuples[i].push_back(
                {cover_interp(p0.surface_tuples[i][j].first, p1.surface_tuples[i][j].first, t),
                 cover_interp(p0.surface_tuples[i][j].second, p1.surface_tuples[i][j].second, t)});
        }
    }
    for (size_t k = 0; k < p0.free_images.size(); ++k) {
        p.free_images.push_back(cover_interp(p0.free_images[k], p1.free_images[k], t));
    }
    return p;
}

} // namespace

std::vector<RepPoint> connect(const RepPoint& p0, const RepPoint& p1,
                              const CompressionBodySignature& data, int steps) {
    if (steps < 1) throw ArgumentError("connect: steps must be >= 1");
    if (commutator_defect(p0, data) > tol().rep_defect ||
        commutator_defect(p1, data) > tol().rep_defect) {
        throw PreconditionError("connect: endpoints must lie on the variety");
    }
    std::vector<RepPoint> path;
    path.reserve(steps + 1);
    path.push_back(p0);
    for (int k = 1; k < steps; ++k) {
        RepPoint q = interpolate(p0, p1, static_cast<double>(k) / steps);
        const double d = project_to_variety(q, data);
        if (!(d <= tol().path_defect)) {
            throw ContinuationError("connect: projection failed at step " + std::to_string(k), k);
        }
        path.push_back(std::move(q));
    }
    path.push_back(p1);
    return path;
}

std::vector<RepPoint> restrict_minus(const RepPoint& point, const CompressionBodySignature& data) {
    data.validate();
    check_shapes(point, data);
    std::vector<RepPoint> out;
    for (const auto& tuple : point.surface_tuples) {
        RepPoint q;
        q.group = point.group;
        q.surface_tuples.push_back(tuple);
        out.push_back(std::move(q));
    }
    return out;
}

PlusRestriction restrict_plus(const RepPoint& point, const CompressionBodySignature& data) {
    data.validate();
    check_shapes(point, data);
    PlusRestriction out;
    out.point.group = point.group;
    std::vector<HandlePair> tuple;
    CoverElement delta = cover_identity(point.group);
    for (size_t i = 0; i < point.surface_tuples.size(); ++i) {
        tuple.insert(tuple.end(), point.surface_tuples[i].begin(), point.surface_tuples[i].end());
        delta = cover_mul(delta, data.deltas[i]);
    }
    for (const auto& f : point.free_images) {
        tuple.push_back({f, cover_identity(point.group)});
    }
    out.point.surface_tuples.push_back(std::move(tuple));
    out.signature.group = data.group;
    out.signature.surface_genera = {data.plus_genus()};
    out.signature.free_rank = 0;
    out.signature.deltas = {delta};
    return out;
}

RepPoint conjugate(const RepPoint& point, const CoverElement& g) {
    RepPoint q = point;
    const CoverElement gi = cover_inverse(g);
    auto conj = [&](const CoverElement& x) {
        return cover_mul(cover_mul(g, x), gi);
    };
    for (auto& tuple : q.surface_tuples) {
        for (auto& [a, b] : tuple) {
            a = conj(a);
            b = conj(b);
        }
    }
    for (auto& f : q.free_images) f = conj(f);
    return q;
}

namespace {

std::vector<const CoverElement*> all_generators(const RepPoint& p) {
    std::vector<const CoverElement*> out;
    for (const auto& tuple : p.surface_tuples) {
        for (const auto& [a, b] : tuple) {
            out.push_back(&a);
            out.push_back(&b);
        }
    }
    for (const auto& f : p.free_images) out.push_back(&f);
    return out;
}

double align_objective(const M2& g, const std::vector<const CoverElement*>& xs,
                       const std::vector<const CoverElement*>& ys) {
    double f = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        f += (g.adjoint() * xs[i]->m * g - ys[i]->m).squaredNorm();
    }
    return f;
}

// Rotation -> SU(2) lift consistent with conjugation on quaternion vectors.
M2 su2_from_rotation(const Eigen::Matrix3d& r) {
    const double t = r.trace();
    double w, x, y, z;
    if (t > 0.0) {
        double s = std::sqrt(t + 1.0) * 2.0;
        w = 0.25 * s;
        x = (r(2, 1) - r(1, 2)) / s;
        y = (r(0, 2) - r(2, 0)) / s;
        z = (r(1, 0) - r(0, 1)) / s;
    } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
        double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
        w = (r(2, 1) - r(1, 2)) / s;
        x = 0.25 * s;
        y = (r(0, 1) + r(1, 0)) / s;
        z = (r(0, 2) + r(2, 0)) / s;
    } else if (r(1, 1) > r(2, 2)) {
        double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
        w = (r(0, 2) - r(2, 0)) / s;
        x = (r(0, 1) + r(1, 0)) / s;
        y = 0.25 * s;
        z = (r(1, 2) + r(2, 1)) / s;
    } else {
        double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
        w = (r(1, 0) - r(0, 1)) / s;
        x = (r(0, 2) + r(2, 0)) / s;
        y = (r(1, 2) + r(2, 1)) / s;
        z = 0.25 * s;
    }
    Eigen::Vector3d v(x, y, z);
    const double n = std::sqrt(w * w + v.squaredNorm());
    return from_quat(w / n, v / n);
}

} // namespace

AlignResult align(const RepPoint& p0, const RepPoint& p1) {
    if (p0.group != p1.group) throw ArgumentError("align: group mismatch");
    auto xs = all_generators(p0);
    auto ys = all_generators(p1);
    if (xs.size() != ys.size()) throw ArgumentError("align: shape mismatch");

    AlignResult res;
    res.g = cover_identity(p0.group);

    double abelian = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double d = xs[i]->t - ys[i]->t;
        abelian += d * d;
    }

    if (!group_has_matrix(p0.group)) {
        res.residual = std::sqrt(abelian);
        return res;
    }

    // Conjugation rotates quaternion vector parts: solve the vector
    // alignment in closed form, then polish on the group.
    Eigen::Matrix3d b = Eigen::Matrix3d::Zero();
    for (size_t i = 0; i < xs.size(); ++i) {
        double w0, w1;
        Eigen::Vector3d v0, v1;
        quat_parts(xs[i]->m, w0, v0);
        quat_parts(ys[i]->m, w1, v1);
        b += v1 * v0.transpose();
    }
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
    d(2, 2) = (svd.matrixU() * svd.matrixV().transpose()).determinant() >= 0.0 ? 1.0 : -1.0;
    const Eigen::Matrix3d rot = svd.matrixU() * d * svd.matrixV().transpose();

    M2 g = su2_from_rotation(rot);
    if (align_objective(M2(g.adjoint()), xs, ys) < align_objective(g, xs, ys)) {
        g = g.adjoint().eval();
    }

    // Descent polish (no-op at the closed-form optimum, has a role when the
    // scalar parts carry weight through numerical noise).
    const auto& basis = tangent_basis();
    double f = align_objective(g, xs, ys);
    double step = 0.1;
    for (int it = 0; it < 100 && f > 1e-28; ++it) {
        Eigen::Vector3d grad;
        for (int k = 0; k < 3; ++k) {
            double gk = 0.0;
            for (size_t i = 0; i < xs.size(); ++i) {
                const M2 c = g.adjoint() * xs[i]->m * g;
                const M2 dc = c * basis[k] - basis[k] * c;
                gk += 2.0 * ((c - ys[i]->m).adjoint() * dc).trace().real();
            }
            grad(k) = gk;
        }
        if (grad.norm() < 1e-15) break;
        bool moved = false;
        for (int bt = 0; bt < 25; ++bt) {
            M2 xi = M2::Zero();
            for (int k = 0; k < 3; ++k) xi += grad(k) * basis[k];
            const M2 trial = g * su2_exp(M2(-step * xi));
            const double ft = align_objective(trial, xs, ys);
            if (ft < f) {
                g = trial;
                f = ft;
                step *= 1.4;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }

    // Among central multiples return the one nearest the identity.
    if (g.trace().real() < 0.0) g = -g;

    res.g.m = g;
    res.residual = std::sqrt(align_objective(g, xs, ys) + abelian);
    return res;
}

} // namespace flatcs
