#include "widthlab/mesh.hpp"

#include "widthlab/constants.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace widthlab {

namespace {

double clamp_unit(double v) { return std::max(-1.0, std::min(1.0, v)); }

double lorentz_dot(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    return u.head(3).dot(v.head(3)) - u(3) * v(3);
}

Eigen::VectorXd model_center(const SurfaceMesh& mesh) {
    switch (mesh.model) {
    case AmbientModel::Euclidean:
        return Eigen::VectorXd::Zero(3);
    case AmbientModel::Sphere: {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(4);
        c(0) = 1.0 / std::sqrt(mesh.K);
        return c;
    }
    case AmbientModel::Hyperboloid: {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(4);
        c(3) = 1.0 / std::sqrt(-mesh.K);
        return c;
    }
    }
    throw std::logic_error("model_center: unknown model");
}

const char* model_name(AmbientModel m) {
    switch (m) {
    case AmbientModel::Euclidean: return "euclidean";
    case AmbientModel::Sphere: return "sphere";
    case AmbientModel::Hyperboloid: return "hyperboloid";
    }
    return "unknown";
}

AmbientModel model_from_name(const std::string& s) {
    if (s == "euclidean") return AmbientModel::Euclidean;
    if (s == "sphere") return AmbientModel::Sphere;
    if (s == "hyperboloid") return AmbientModel::Hyperboloid;
    throw std::runtime_error("unknown ambient model: " + s);
}

// Undirected edge list with incidence counts; boundary edges appear once.
std::map<std::pair<int, int>, int> edge_counts(const SurfaceMesh& mesh) {
    std::map<std::pair<int, int>, int> count;
    for (int t = 0; t < mesh.nt(); ++t) {
        for (int e = 0; e < 3; ++e) {
            int i = mesh.triangles(e, t);
            int j = mesh.triangles((e + 1) % 3, t);
            if (i > j) std::swap(i, j);
            ++count[{i, j}];
        }
    }
    return count;
}

std::vector<std::vector<int>> vertex_adjacency(const SurfaceMesh& mesh) {
    std::vector<std::set<int>> nbr(mesh.nv());
    for (int t = 0; t < mesh.nt(); ++t) {
        for (int e = 0; e < 3; ++e) {
            const int i = mesh.triangles(e, t);
            const int j = mesh.triangles((e + 1) % 3, t);
            nbr[i].insert(j);
            nbr[j].insert(i);
        }
    }
    std::vector<std::vector<int>> out(mesh.nv());
    for (int v = 0; v < mesh.nv(); ++v) out[v].assign(nbr[v].begin(), nbr[v].end());
    return out;
}

std::vector<int> ring_stencil(const std::vector<std::vector<int>>& adj, int v, int depth) {
    std::set<int> seen{v};
    std::vector<int> frontier{v};
    std::vector<int> stencil;
    for (int d = 0; d < depth; ++d) {
        std::vector<int> next;
        for (int u : frontier) {
            for (int w : adj[u]) {
                if (seen.insert(w).second) {
                    next.push_back(w);
                    stencil.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return stencil;
}

// Model-orthonormal tangent pair at a vertex, orthogonal to the stored
// surface normal (and to the position direction on the curved models).
Eigen::MatrixXd tangent_frame_at(const SurfaceMesh& mesh, int v) {
    const int dim = int(mesh.vertices.rows());
    std::vector<Eigen::VectorXd> avoid;
    if (mesh.model != AmbientModel::Euclidean) {
        avoid.push_back(mesh.vertices.col(v) * std::sqrt(std::abs(mesh.K)));
    }
    avoid.push_back(mesh.normals.col(v));
    Eigen::MatrixXd frame(dim, 2);
    int found = 0;
    for (int i = 0; i < dim && found < 2; ++i) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(dim);
        w(i) = 1.0;
        for (const auto& f : avoid) {
            const double ff = model_inner(mesh, f, f); // +1, or -1 for the hyperboloid point
            w -= (model_inner(mesh, w, f) / ff) * f;
        }
        for (int j = 0; j < found; ++j) w -= model_inner(mesh, w, frame.col(j)) * frame.col(j);
        const double n2 = model_inner(mesh, w, w);
        if (n2 > 1e-10) frame.col(found++) = w / std::sqrt(n2);
    }
    if (found < 2) throw std::runtime_error("tangent_frame_at: degenerate configuration");
    return frame;
}

struct QuadraticFit {
    double a = 0, b = 0, c = 0;
    bool ok = false;
};

QuadraticFit fit_at_vertex(const SurfaceMesh& mesh, const std::vector<std::vector<int>>& adj,
                           int v) {
    std::vector<int> stencil = ring_stencil(adj, v, 2);
    if (int(stencil.size()) < 8) stencil = ring_stencil(adj, v, 3);
    QuadraticFit fit;
    if (int(stencil.size()) < 6) return fit;

    const Eigen::MatrixXd frame = tangent_frame_at(mesh, v);
    const Eigen::VectorXd p = mesh.vertices.col(v);
    const Eigen::VectorXd nu = mesh.normals.col(v);
    const int m = int(stencil.size());
    Eigen::MatrixXd A(m, 6);
    Eigen::VectorXd h(m);
    for (int i = 0; i < m; ++i) {
        const Eigen::VectorXd l = model_log(mesh, p, mesh.vertices.col(stencil[size_t(i)]));
        const double x1 = model_inner(mesh, l, frame.col(0));
        const double x2 = model_inner(mesh, l, frame.col(1));
        A(i, 0) = 0.5 * x1 * x1;
        A(i, 1) = x1 * x2;
        A(i, 2) = 0.5 * x2 * x2;
        A(i, 3) = x1;
        A(i, 4) = x2;
        A(i, 5) = 1.0;
        h(i) = model_inner(mesh, l, nu);
    }
    const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(h);
    fit.a = coef(0);
    fit.b = coef(1);
    fit.c = coef(2);
    fit.ok = true;
    return fit;
}

// Flat corner angles from the three geodesic edge lengths.
std::array<double, 3> flattened_angles(double a, double b, double c) {
    auto corner = [](double opp, double s1, double s2) {
        return std::acos(clamp_unit((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2)));
    };
    return {corner(a, b, c), corner(b, c, a), corner(c, a, b)};
}

} // namespace

double model_inner(const SurfaceMesh& mesh, const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (mesh.model == AmbientModel::Hyperboloid) return lorentz_dot(u, v);
    return u.dot(v);
}

double model_distance(const SurfaceMesh& mesh, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    switch (mesh.model) {
    case AmbientModel::Euclidean:
        return (a - b).norm();
    case AmbientModel::Sphere: {
        const double s = std::sqrt(mesh.K);
        return std::acos(clamp_unit(a.dot(b) * mesh.K)) / s;
    }
    case AmbientModel::Hyperboloid: {
        const double s = std::sqrt(-mesh.K);
        const double c = std::max(1.0, lorentz_dot(a, b) * mesh.K);
        return std::acosh(c) / s;
    }
    }
    throw std::logic_error("model_distance: unknown model");
}

Eigen::VectorXd model_log(const SurfaceMesh& mesh, const Eigen::VectorXd& p,
                          const Eigen::VectorXd& q) {
    switch (mesh.model) {
    case AmbientModel::Euclidean:
        return q - p;
    case AmbientModel::Sphere: {
        const double s = std::sqrt(mesh.K);
        const Eigen::VectorXd u = p * s, v = q * s;
        const double c = clamp_unit(u.dot(v));
        const double theta = std::acos(c);
        const Eigen::VectorXd w = v - c * u;
        const double wn = w.norm();
        if (theta < 1e-14 || wn < 1e-300) return Eigen::VectorXd::Zero(p.size());
        return w * (theta / wn / s);
    }
    case AmbientModel::Hyperboloid: {
        const double s = std::sqrt(-mesh.K);
        const Eigen::VectorXd u = p * s, v = q * s;
        const double c = std::max(1.0, -lorentz_dot(u, v));
        const double theta = std::acosh(c);
        const Eigen::VectorXd w = v - c * u;
        const double wn2 = lorentz_dot(w, w);
        if (theta < 1e-14 || wn2 <= 0.0) return Eigen::VectorXd::Zero(p.size());
        return w * (theta / std::sqrt(wn2) / s);
    }
    }
    throw std::logic_error("model_log: unknown model");
}

Eigen::VectorXd model_exp(const SurfaceMesh& mesh, const Eigen::VectorXd& p,
                          const Eigen::VectorXd& w) {
    switch (mesh.model) {
    case AmbientModel::Euclidean:
        return p + w;
    case AmbientModel::Sphere: {
        const double s = std::sqrt(mesh.K);
        const double t = w.norm();
        if (t < 1e-300) return p;
        return std::cos(t * s) * p + (std::sin(t * s) / s) * (w / t);
    }
    case AmbientModel::Hyperboloid: {
        const double s = std::sqrt(-mesh.K);
        const double wn2 = lorentz_dot(w, w);
        if (wn2 <= 0.0) return p;
        const double t = std::sqrt(wn2);
        return std::cosh(t * s) * p + (std::sinh(t * s) / s) * (w / t);
    }
    }
    throw std::logic_error("model_exp: unknown model");
}

double model_radius(const SurfaceMesh& mesh, int vertex) {
    return model_distance(mesh, model_center(mesh), mesh.vertices.col(vertex));
}

SurfaceMesh geodesic_disk_mesh(Curvature K, double R, int rings) {
    if (rings < 1) throw std::invalid_argument("geodesic_disk_mesh: rings must be >= 1");
    SpaceFormBall ball{3, 2, R, K.K};
    ball.validate();

    const int dim = (K.K == 0.0) ? 3 : 4;
    const int nv = 1 + 3 * rings * (rings + 1);
    const int nt = 6 * rings * rings;

    SurfaceMesh mesh;
    mesh.model = (K.K == 0.0) ? AmbientModel::Euclidean
                              : (K.K > 0.0 ? AmbientModel::Sphere : AmbientModel::Hyperboloid);
    mesh.K = K.K;
    mesh.R = R;
    mesh.vertices.resize(dim, nv);
    mesh.normals.resize(dim, nv);
    mesh.triangles.resize(3, nt);
    mesh.boundary_vertex.assign(size_t(nv), 0);
    Eigen::VectorXd radius_field(nv);

    auto place = [&](int idx, double r, double theta) {
        radius_field(idx) = r;
        Eigen::VectorXd p = Eigen::VectorXd::Zero(dim);
        Eigen::VectorXd nu = Eigen::VectorXd::Zero(dim);
        if (mesh.model == AmbientModel::Euclidean) {
            p(0) = r * std::cos(theta);
            p(1) = r * std::sin(theta);
            nu(2) = 1.0;
        } else if (mesh.model == AmbientModel::Sphere) {
            const double s = std::sqrt(K.K);
            p(0) = std::cos(r * s) / s;
            p(1) = std::sin(r * s) / s * std::cos(theta);
            p(2) = std::sin(r * s) / s * std::sin(theta);
            nu(3) = 1.0;
        } else {
            const double s = std::sqrt(-K.K);
            p(0) = std::sinh(r * s) / s * std::cos(theta);
            p(1) = std::sinh(r * s) / s * std::sin(theta);
            p(3) = std::cosh(r * s) / s;
            nu(2) = 1.0;
        }
        mesh.vertices.col(idx) = p;
        mesh.normals.col(idx) = nu;
    };

    place(0, 0.0, 0.0);
    auto ring_base = [](int i) { return 1 + 3 * i * (i - 1); };
    for (int i = 1; i <= rings; ++i) {
        const int count = 6 * i;
        const double r = R * double(i) / double(rings);
        for (int j = 0; j < count; ++j) place(ring_base(i) + j, r, 2.0 * pi * j / count);
    }
    for (int j = 0; j < 6 * rings; ++j) mesh.boundary_vertex[size_t(ring_base(rings) + j)] = 1;

    int t = 0;
    for (int j = 0; j < 6; ++j) {
        mesh.triangles.col(t++) << 0, 1 + j, 1 + (j + 1) % 6;
    }
    for (int i = 2; i <= rings; ++i) {
        const int na = 6 * (i - 1), nb = 6 * i;
        const int a0 = ring_base(i - 1), b0 = ring_base(i);
        const double ta = 2.0 * pi / na, tb = 2.0 * pi / nb;
        int ja = 0, jb = 0;
        while (ja < na || jb < nb) {
            bool advance_b;
            if (jb == nb) advance_b = false;
            else if (ja == na) advance_b = true;
            else advance_b = (jb + 1) * tb <= (ja + 1) * ta + 1e-12;
            if (advance_b) {
                mesh.triangles.col(t++) << b0 + (jb % nb), b0 + ((jb + 1) % nb), a0 + (ja % na);
                ++jb;
            } else {
                mesh.triangles.col(t++) << a0 + (ja % na), b0 + (jb % nb), a0 + ((ja + 1) % na);
                ++ja;
            }
        }
    }
    if (t != nt) throw std::logic_error("geodesic_disk_mesh: triangulation count mismatch");

    mesh.fields["geodesic_r"] = radius_field;
    mesh.fields["abs_A2"] = Eigen::VectorXd::Zero(nv);
    mesh.fields["mean_curvature"] = Eigen::VectorXd::Zero(nv);
    return mesh;
}

CatenoidParameters critical_catenoid_parameters() {
    // boundary-orthogonality condition coth(T) = T, via T tanh(T) = 1
    double T = 1.2;
    for (int it = 0; it < 60; ++it) {
        const double th = std::tanh(T);
        const double g = T * th - 1.0;
        const double dg = th + T * (1.0 - th * th);
        const double step = g / dg;
        T -= step;
        if (std::abs(step) < 1e-15) break;
    }
    CatenoidParameters out;
    out.T = T;
    const double ch = std::cosh(T), sh = std::sinh(T);
    out.scale = 1.0 / std::sqrt(ch * ch + T * T);
    out.area = 2.0 * pi * out.scale * out.scale * (T + sh * ch);
    out.orthogonality_residual = std::abs(ch - T * sh) / ch;
    return out;
}

SurfaceMesh critical_catenoid_mesh(int n_theta, int n_s) {
    if (n_theta < 8) throw std::invalid_argument("critical_catenoid_mesh: n_theta must be >= 8");
    if (n_s < 3) throw std::invalid_argument("critical_catenoid_mesh: n_s must be >= 3");
    const CatenoidParameters P = critical_catenoid_parameters();
    const double a = P.scale, T = P.T;

    const int nv = n_theta * n_s;
    const int nt = 2 * n_theta * (n_s - 1);
    SurfaceMesh mesh;
    mesh.model = AmbientModel::Euclidean;
    mesh.K = 0.0;
    mesh.R = 1.0;
    mesh.vertices.resize(3, nv);
    mesh.normals.resize(3, nv);
    mesh.triangles.resize(3, nt);
    mesh.boundary_vertex.assign(size_t(nv), 0);
    Eigen::VectorXd abs_A2(nv);

    auto idx = [&](int i, int j) { return i * n_theta + (j % n_theta); };
    for (int i = 0; i < n_s; ++i) {
        const double s = -T + 2.0 * T * double(i) / double(n_s - 1);
        const double ch = std::cosh(s), sh = std::sinh(s);
        for (int j = 0; j < n_theta; ++j) {
            const double theta = 2.0 * pi * j / n_theta;
            const int v = idx(i, j);
            mesh.vertices.col(v) << a * ch * std::cos(theta), a * ch * std::sin(theta), a * s;
            mesh.normals.col(v) << std::cos(theta) / ch, std::sin(theta) / ch, -sh / ch;
            abs_A2(v) = 2.0 / (a * a * ch * ch * ch * ch);
            if (i == 0 || i == n_s - 1) mesh.boundary_vertex[size_t(v)] = 1;
        }
    }

    int t = 0;
    for (int i = 0; i + 1 < n_s; ++i) {
        for (int j = 0; j < n_theta; ++j) {
            mesh.triangles.col(t++) << idx(i, j), idx(i + 1, j), idx(i + 1, j + 1);
            mesh.triangles.col(t++) << idx(i, j), idx(i + 1, j + 1), idx(i, j + 1);
        }
    }

    mesh.fields["abs_A2"] = abs_A2;
    mesh.fields["mean_curvature"] = Eigen::VectorXd::Zero(nv);
    return mesh;
}

CurvatureFit fit_curvatures(const SurfaceMesh& mesh) {
    const auto adj = vertex_adjacency(mesh);
    CurvatureFit out;
    out.abs_A2 = Eigen::VectorXd::Zero(mesh.nv());
    out.mean_curvature = Eigen::VectorXd::Zero(mesh.nv());
    std::vector<char> have(size_t(mesh.nv()), 0);

    for (int v = 0; v < mesh.nv(); ++v) {
        if (mesh.boundary_vertex[size_t(v)]) continue;
        const QuadraticFit fit = fit_at_vertex(mesh, adj, v);
        if (!fit.ok) continue;
        out.abs_A2(v) = fit.a * fit.a + 2.0 * fit.b * fit.b + fit.c * fit.c;
        out.mean_curvature(v) = fit.a + fit.c;
        have[size_t(v)] = 1;
    }
    // boundary vertices inherit the average over interior neighbours; a
    // one-sided fit there is noticeably noisier than the copy.
    for (int v = 0; v < mesh.nv(); ++v) {
        if (!mesh.boundary_vertex[size_t(v)]) continue;
        double a2 = 0, h = 0;
        int cnt = 0;
        for (int u : adj[size_t(v)]) {
            if (have[size_t(u)]) {
                a2 += out.abs_A2(u);
                h += out.mean_curvature(u);
                ++cnt;
            }
        }
        if (cnt > 0) {
            out.abs_A2(v) = a2 / cnt;
            out.mean_curvature(v) = h / cnt;
        } else {
            const QuadraticFit fit = fit_at_vertex(mesh, adj, v);
            if (fit.ok) {
                out.abs_A2(v) = fit.a * fit.a + 2.0 * fit.b * fit.b + fit.c * fit.c;
                out.mean_curvature(v) = fit.a + fit.c;
            }
        }
    }
    return out;
}

double minimality_residual(const SurfaceMesh& mesh) {
    Eigen::VectorXd H;
    const auto it = mesh.fields.find("mean_curvature");
    if (it != mesh.fields.end() && it->second.size() == mesh.nv()) {
        H = it->second;
    } else {
        H = fit_curvatures(mesh).mean_curvature;
    }
    double worst = 0.0;
    for (int v = 0; v < mesh.nv(); ++v) {
        if (mesh.boundary_vertex[size_t(v)]) continue;
        worst = std::max(worst, std::abs(H(v)));
    }
    return worst;
}

double min_triangle_angle(const SurfaceMesh& mesh) {
    double worst = 180.0;
    for (int t = 0; t < mesh.nt(); ++t) {
        const int i = mesh.triangles(0, t), j = mesh.triangles(1, t), k = mesh.triangles(2, t);
        const double a = model_distance(mesh, mesh.vertices.col(j), mesh.vertices.col(k));
        const double b = model_distance(mesh, mesh.vertices.col(k), mesh.vertices.col(i));
        const double c = model_distance(mesh, mesh.vertices.col(i), mesh.vertices.col(j));
        for (double ang : flattened_angles(a, b, c)) {
            worst = std::min(worst, ang * 180.0 / pi);
        }
    }
    return worst;
}

Eigen::VectorXd triangle_areas(const SurfaceMesh& mesh) {
    Eigen::VectorXd areas(mesh.nt());
    for (int t = 0; t < mesh.nt(); ++t) {
        const int i = mesh.triangles(0, t), j = mesh.triangles(1, t), k = mesh.triangles(2, t);
        const double a = model_distance(mesh, mesh.vertices.col(j), mesh.vertices.col(k));
        const double b = model_distance(mesh, mesh.vertices.col(k), mesh.vertices.col(i));
        const double c = model_distance(mesh, mesh.vertices.col(i), mesh.vertices.col(j));
        if (mesh.K == 0.0) {
            // numerically stable Heron form
            std::array<double, 3> l{a, b, c};
            std::sort(l.begin(), l.end());
            const double x = l[2], y = l[1], z = l[0];
            const double q = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
            areas(t) = 0.25 * std::sqrt(std::max(0.0, q));
        } else if (mesh.K > 0.0) {
            const double s = std::sqrt(mesh.K);
            const auto corner = [&](double opp, double s1, double s2) {
                const double denom = std::sin(s1 * s) * std::sin(s2 * s);
                return std::acos(clamp_unit(
                    (std::cos(opp * s) - std::cos(s1 * s) * std::cos(s2 * s)) / denom));
            };
            const double A = corner(a, b, c), B = corner(b, c, a), C = corner(c, a, b);
            areas(t) = (A + B + C - pi) / mesh.K;
        } else {
            const double s = std::sqrt(-mesh.K);
            const auto corner = [&](double opp, double s1, double s2) {
                const double denom = std::sinh(s1 * s) * std::sinh(s2 * s);
                return std::acos(clamp_unit(
                    (std::cosh(s1 * s) * std::cosh(s2 * s) - std::cosh(opp * s)) / denom));
            };
            const double A = corner(a, b, c), B = corner(b, c, a), C = corner(c, a, b);
            areas(t) = (pi - A - B - C) / (-mesh.K);
        }
    }
    return areas;
}

double surface_area(const SurfaceMesh& mesh) { return triangle_areas(mesh).sum(); }

double boundary_length(const SurfaceMesh& mesh) {
    double total = 0.0;
    for (const auto& [i, j] : boundary_edges(mesh)) {
        total += model_distance(mesh, mesh.vertices.col(i), mesh.vertices.col(j));
    }
    return total;
}

std::vector<std::pair<int, int>> boundary_edges(const SurfaceMesh& mesh) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [edge, count] : edge_counts(mesh)) {
        if (count == 1) out.push_back(edge);
    }
    return out;
}

DiscreteVarifold mesh_to_varifold(const SurfaceMesh& mesh) {
    if (mesh.model != AmbientModel::Euclidean) {
        throw std::invalid_argument("mesh_to_varifold: flat ambient space required");
    }
    DiscreteVarifold V;
    V.n = 3;
    V.k = 2;
    V.atoms.reserve(size_t(mesh.nt()));
    double edge_sum = 0.0;
    int edge_cnt = 0;
    double max_reach = 0.0;
    for (int t = 0; t < mesh.nt(); ++t) {
        const Eigen::Vector3d p0 = mesh.vertices.col(mesh.triangles(0, t));
        const Eigen::Vector3d p1 = mesh.vertices.col(mesh.triangles(1, t));
        const Eigen::Vector3d p2 = mesh.vertices.col(mesh.triangles(2, t));
        const Eigen::Vector3d e1 = p1 - p0, e2 = p2 - p0;
        const double area = 0.5 * e1.cross(e2).norm();
        if (area <= 0.0) continue;
        Eigen::Matrix<double, 3, 2> span;
        span.col(0) = e1;
        span.col(1) = e2;
        const Eigen::HouseholderQR<Eigen::Matrix<double, 3, 2>> qr(span);
        const Eigen::Matrix3d Q = qr.householderQ();

        Atom atom;
        atom.x = VecN::Zero(3);
        atom.x.head<3>() = (p0 + p1 + p2) / 3.0;
        atom.frame = MatN::Zero(3, 2);
        atom.frame.col(0) = Q.col(0);
        atom.frame.col(1) = Q.col(1);
        atom.w = area;
        V.atoms.push_back(atom);

        edge_sum += e1.norm() + e2.norm() + (p2 - p1).norm();
        edge_cnt += 3;
        max_reach = std::max({max_reach, p0.norm(), p1.norm(), p2.norm()});
    }
    V.spacing = edge_cnt > 0 ? edge_sum / edge_cnt : 0.0;
    V.unit_ball = max_reach <= 1.0 + 1e-9;
    return V;
}

DiscreteVarifold critical_catenoid_fixture(int n_theta, int n_s) {
    return mesh_to_varifold(critical_catenoid_mesh(n_theta, n_s));
}

std::string to_off(const SurfaceMesh& mesh) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "WIDTHOFF model=" << model_name(mesh.model) << " K=" << mesh.K << " R=" << mesh.R
       << " dim=" << mesh.vertices.rows() << "\n";
    os << mesh.nv() << " " << mesh.nt() << "\n";
    for (int v = 0; v < mesh.nv(); ++v) {
        for (int d = 0; d < mesh.vertices.rows(); ++d) os << mesh.vertices(d, v) << " ";
        for (int d = 0; d < mesh.normals.rows(); ++d)
            os << mesh.normals(d, v) << (d + 1 == mesh.normals.rows() ? "" : " ");
        os << "\n";
    }
    for (int t = 0; t < mesh.nt(); ++t) {
        os << "3 " << mesh.triangles(0, t) << " " << mesh.triangles(1, t) << " "
           << mesh.triangles(2, t) << "\n";
    }
    os << "boundary";
    for (char b : mesh.boundary_vertex) os << " " << int(b);
    os << "\n";
    for (const auto& [name, values] : mesh.fields) {
        os << "field " << name;
        for (int v = 0; v < values.size(); ++v) os << " " << values(v);
        os << "\n";
    }
    return os.str();
}

SurfaceMesh from_off(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("from_off: empty input");
    std::istringstream hs(header);
    std::string magic;
    hs >> magic;
    if (magic != "WIDTHOFF") throw std::runtime_error("from_off: bad magic token");

    SurfaceMesh mesh;
    int dim = 3;
    std::string kv;
    while (hs >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "model") mesh.model = model_from_name(value);
        else if (key == "K") mesh.K = std::stod(value);
        else if (key == "R") mesh.R = std::stod(value);
        else if (key == "dim") dim = std::stoi(value);
    }

    int nv = 0, nt = 0;
    if (!(is >> nv >> nt) || nv <= 0 || nt < 0) throw std::runtime_error("from_off: bad counts");
    mesh.vertices.resize(dim, nv);
    mesh.normals.resize(dim, nv);
    mesh.triangles.resize(3, nt);
    mesh.boundary_vertex.assign(size_t(nv), 0);
    for (int v = 0; v < nv; ++v) {
        for (int d = 0; d < dim; ++d) is >> mesh.vertices(d, v);
        for (int d = 0; d < dim; ++d) is >> mesh.normals(d, v);
    }
    for (int t = 0; t < nt; ++t) {
        int lead = 0;
        is >> lead;
        if (lead != 3) throw std::runtime_error("from_off: only triangles supported");
        is >> mesh.triangles(0, t) >> mesh.triangles(1, t) >> mesh.triangles(2, t);
    }
    if (!is) throw std::runtime_error("from_off: truncated geometry block");

    std::string tag;
    while (is >> tag) {
        if (tag == "boundary") {
            for (int v = 0; v < nv; ++v) {
                int b = 0;
                is >> b;
                mesh.boundary_vertex[size_t(v)] = char(b != 0);
            }
        } else if (tag == "field") {
            std::string name;
            is >> name;
            Eigen::VectorXd values(nv);
            for (int v = 0; v < nv; ++v) is >> values(v);
            mesh.fields[name] = values;
        } else {
            throw std::runtime_error("from_off: unknown section " + tag);
        }
        if (!is) throw std::runtime_error("from_off: truncated section");
    }
    return mesh;
}

} // namespace widthlab
