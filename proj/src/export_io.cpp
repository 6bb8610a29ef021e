#include "wlat/export.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wlat {

using nlohmann::json;

json complex_to_json(const HomComplex& h) {
    json out;
    out["format_version"] = 1;
    json cells = json::array();
    for (int id = 0; id < h.size(); ++id) {
        const Cell& c = h.cell(id);
        json chain = json::array();
        for (ClassId cls : c.chain) chain.push_back(h.table().label(cls));
        json breaks = json::array();
        for (int p = 1; p < static_cast<int>(c.chain.size()); ++p)
            if (c.breaks & (1u << p)) breaks.push_back(p);
        cells.push_back({{"id", id}, {"dim", c.dim()}, {"chain", chain}, {"breaks", breaks}});
    }
    out["cells"] = std::move(cells);
    json faces = json::array();
    for (int id = 0; id < h.size(); ++id)
        for (const CellFaces& f : h.faces(id)) {
            faces.push_back({{"from", id}, {"to", f.zero}, {"kind", "zero"}, {"pos", f.pos}});
            faces.push_back({{"from", id}, {"to", f.one}, {"kind", "one"}, {"pos", f.pos}});
        }
    out["faces"] = std::move(faces);
    out["fvector"] = h.f_vector();
    return out;
}

bool json_matches_complex(const json& j, const HomComplex& h, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (!j.contains("format_version") || j["format_version"] != 1)
        return fail("format_version missing or not 1");
    if (!j.contains("cells") || !j["cells"].is_array()) return fail("cells missing");
    if (static_cast<int>(j["cells"].size()) != h.size())
        return fail("cell count differs: " + std::to_string(j["cells"].size()) + " vs " +
                    std::to_string(h.size()));
    const Lattice& lat = h.lattice();
    for (const json& jc : j["cells"]) {
        Cell cell;
        for (const json& entry : jc["chain"]) {
            auto path = lat.parse_path(entry.get<std::string>());
            if (!path) return fail("chain entry does not name arrows: " + entry.dump());
            cell.chain.push_back(h.table().class_of(*path));
        }
        for (const json& b : jc["breaks"]) cell.breaks |= 1u << b.get<int>();
        int id = h.index_of(cell);
        if (id != jc["id"].get<int>())
            return fail("cell " + jc["id"].dump() + " re-ingests to id " + std::to_string(id));
        if (cell.dim() != jc["dim"].get<int>())
            return fail("cell " + jc["id"].dump() + " dim mismatch");
    }
    json faces = json::array();
    for (int id = 0; id < h.size(); ++id)
        for (const CellFaces& f : h.faces(id)) {
            faces.push_back({{"from", id}, {"to", f.zero}, {"kind", "zero"}, {"pos", f.pos}});
            faces.push_back({{"from", id}, {"to", f.one}, {"kind", "one"}, {"pos", f.pos}});
        }
    if (!j.contains("faces") || j["faces"] != faces) return fail("face list differs");
    if (!j.contains("fvector") || j["fvector"] != json(h.f_vector()))
        return fail("f-vector differs");
    return true;
}

std::string lattice_to_dot(const Lattice& lat) {
    std::ostringstream os;
    os << "digraph \"" << (lat.name.empty() ? "lattice" : lat.name) << "\" {\n";
    os << "  rankdir=LR;\n";
    for (NodeId v = 0; v < static_cast<NodeId>(lat.nodes.size()); ++v) {
        os << "  \"" << lat.nodes[v] << "\"";
        if (v == lat.init || v == lat.fin) os << " [shape=doublecircle]";
        os << ";\n";
    }
    for (const Arrow& a : lat.arrows)
        os << "  \"" << lat.nodes[a.src] << "\" -> \"" << lat.nodes[a.dst] << "\" [label=\""
           << a.name << "\"];\n";
    for (const Relation& r : lat.relations)
        os << "  // rel: " << lat.path_label(r.lhs) << " = " << lat.path_label(r.rhs) << "\n";
    for (const Path& p : lat.null_marks) os << "  // null: " << lat.path_label(p) << "\n";
    os << "}\n";
    return os.str();
}

namespace {

using Rat = boost::multiprecision::cpp_rational;
using Vec3 = std::array<double, 3>;

// orthonormal basis of the sum(x)=0 hyperplane in R^4, fixed once so output
// bytes are reproducible
Vec3 project4(const std::array<double, 4>& v) {
    static const double u1[4] = {1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0, 0};
    static const double u2[4] = {1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0), 0};
    static const double u3[4] = {1 / std::sqrt(12.0), 1 / std::sqrt(12.0), 1 / std::sqrt(12.0),
                                 -3 / std::sqrt(12.0)};
    double c = (v[0] + v[1] + v[2] + v[3]) / 4.0;
    Vec3 out{};
    for (int i = 0; i < 4; ++i) {
        out[0] += (v[i] - c) * u1[i];
        out[1] += (v[i] - c) * u2[i];
        out[2] += (v[i] - c) * u3[i];
    }
    return out;
}

std::vector<int> face_vertices(const FacePoset& poset, int face) {
    std::vector<int> stack{face}, verts;
    std::vector<char> seen(poset.size(), 0);
    seen[face] = 1;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        if (poset.elems[cur].dim == 0) verts.push_back(cur);
        for (int f : poset.covers[cur])
            if (!seen[f]) {
                seen[f] = 1;
                stack.push_back(f);
            }
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// vertices of a convex polygon, sorted by angle around the centroid
std::vector<int> polygon_cycle(const std::vector<int>& verts, const std::vector<Vec3>& pts) {
    Vec3 c{};
    for (int v : verts)
        for (int i = 0; i < 3; ++i) c[i] += pts[v][i] / static_cast<double>(verts.size());
    Vec3 a = sub(pts[verts[0]], c);
    Vec3 n{};
    for (size_t t = 1; t < verts.size(); ++t) {
        n = cross(a, sub(pts[verts[t]], c));
        if (norm(n) > 1e-9) break;
    }
    for (double& x : a) x /= norm(a);
    for (double& x : n) x /= norm(n);
    Vec3 b = cross(n, a);
    std::vector<std::pair<double, int>> ang;
    for (int v : verts) {
        Vec3 d = sub(pts[v], c);
        ang.push_back({std::atan2(dot(d, b), dot(d, a)), v});
    }
    std::sort(ang.begin(), ang.end());
    std::vector<int> out;
    for (auto& [_, v] : ang) out.push_back(v);
    return out;
}

std::string off_text(const FacePoset& poset, const std::vector<Vec3>& pts) {
    std::vector<int> fv = poset.f_vector();
    int nv = fv.size() > 0 ? fv[0] : 0;
    int ne = fv.size() > 1 ? fv[1] : 0;
    int nf = fv.size() > 2 ? fv[2] : 0;
    std::ostringstream os;
    os << "OFF\n" << nv << " " << nf << " " << ne << "\n";
    char buf[96];
    for (int v = 0; v < nv; ++v) {
        std::snprintf(buf, sizeof buf, "%.12g %.12g %.12g\n", pts[v][0], pts[v][1], pts[v][2]);
        os << buf;
    }
    for (int f = 0; f < poset.size(); ++f) {
        if (poset.elems[f].dim != 2) continue;
        std::vector<int> cycle = polygon_cycle(face_vertices(poset, f), pts);
        os << cycle.size();
        for (int v : cycle) os << " " << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string off_realization(const std::string& target, int n) {
    if (n != 3) throw std::invalid_argument("off export needs a 3-dimensional realization (n = 3)");
    if (target == "pe") {
        PermutohedronData pe = permutohedron_faces(3);
        std::vector<Vec3> pts(pe.poset.size());
        for (int v = 0; v < pe.poset.size(); ++v) {
            if (pe.poset.elems[v].dim != 0) break;
            std::array<double, 4> x{};
            for (int i = 0; i < 4; ++i) x[i] = pe.coords[v][i];
            pts[v] = project4(x);
        }
        return off_text(pe.poset, pts);
    }
    if (target == "assoc") {
        TonksMap map = tonks_collapse(3);
        int nv = map.assoc.poset.f_vector()[0];
        std::vector<std::array<Rat, 4>> sums(nv);
        std::vector<int> count(nv, 0);
        for (int v = 0; v < map.pe.poset.size(); ++v) {
            if (map.pe.poset.elems[v].dim != 0) break;
            int img = map.image[v];
            for (int i = 0; i < 4; ++i) sums[img][i] += map.pe.coords[v][i];
            ++count[img];
        }
        std::vector<Vec3> pts(map.assoc.poset.size());
        for (int v = 0; v < nv; ++v) {
            std::array<double, 4> x{};
            for (int i = 0; i < 4; ++i)
                x[i] = static_cast<double>(Rat(sums[v][i] / count[v]).convert_to<double>());
            pts[v] = project4(x);
        }
        return off_text(map.assoc.poset, pts);
    }
    throw std::invalid_argument("off export target must be pe or assoc");
}

}  // namespace wlat
