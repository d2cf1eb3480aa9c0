#include "covtype/complex.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "covtype/errors.hpp"

namespace covtype {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::malformed_input: return "malformed-input";
        case ErrorKind::not_found: return "not-found";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::property_a_violation: return "property-A-violation";
        case ErrorKind::inconsistency: return "inconsistency";
        case ErrorKind::domain: return "domain";
        case ErrorKind::parse: return "parse";
        case ErrorKind::unsupported_triangulation: return "unsupported-triangulation";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// VertexLabel / Simplex

VertexLabel::VertexLabel(std::string name) : name_(std::move(name)) {
    if (name_.empty()) throw MalformedInputError("empty vertex label");
    for (unsigned char c : name_) {
        if (!std::isgraph(c) && c < 0x80) {
            throw MalformedInputError("vertex label contains whitespace or control character");
        }
    }
}

Simplex::Simplex(std::initializer_list<VertexLabel> vertices)
    : Simplex(std::vector<VertexLabel>(vertices)) {}

Simplex::Simplex(std::vector<VertexLabel> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end()) {
        throw MalformedInputError("repeated vertex '" + dup->str() + "' in simplex");
    }
}

bool Simplex::contains(const VertexLabel& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a;
        else ++b;
    }
    return false;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        Simplex f;
        f.vertices_.reserve(vertices_.size() - 1);
        for (std::size_t j = 0; j < vertices_.size(); ++j) {
            if (j != i) f.vertices_.push_back(vertices_[j]);
        }
        out.push_back(std::move(f));
    }
    // omitting vertex i in ascending i gives descending lexicographic order
    std::reverse(out.begin(), out.end());
    return out;
}

Simplex Simplex::without(const VertexLabel& v) const {
    Simplex out;
    for (const auto& u : vertices_) {
        if (u != v) out.vertices_.push_back(u);
    }
    return out;
}

Simplex Simplex::with(const VertexLabel& v) const {
    auto verts = vertices_;
    verts.push_back(v);
    return Simplex(std::move(verts));
}

std::string Simplex::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out += ',';
        out += vertices_[i].str();
    }
    return out + "}";
}

std::string to_string(const FVector& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// SimplicialComplex

namespace {

void sort_unique(std::vector<Simplex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void trim(std::vector<std::vector<Simplex>>& by_dim) {
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
}

const std::vector<Simplex> kNoSimplices;

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Simplex>> by_dim)
    : by_dim_(std::move(by_dim)) {}

SimplicialComplex SimplicialComplex::closure_of(std::vector<Simplex> simplices) {
    std::vector<std::vector<Simplex>> by_dim;
    for (auto& s : simplices) {
        if (s.empty()) continue;
        auto d = static_cast<std::size_t>(s.dimension());
        if (by_dim.size() <= d) by_dim.resize(d + 1);
        by_dim[d].push_back(std::move(s));
    }
    for (std::size_t d = by_dim.size(); d-- > 0;) {
        sort_unique(by_dim[d]);
        if (d == 0) break;
        auto& below = by_dim[d - 1];
        for (const auto& s : by_dim[d]) {
            for (auto& f : s.facets()) below.push_back(std::move(f));
        }
    }
    return SimplicialComplex(std::move(by_dim));
}

SimplicialComplex SimplicialComplex::from_closed(std::vector<std::vector<Simplex>> by_dim) {
    for (auto& level : by_dim) sort_unique(level);
    trim(by_dim);
    SimplicialComplex k(std::move(by_dim));
    for (int d = 1; d <= k.dim(); ++d) {
        for (const auto& s : k.simplices(d)) {
            if (static_cast<int>(s.size()) != d + 1) {
                throw InconsistencyError("simplex " + s.to_string() + " stored at wrong dimension");
            }
            for (const auto& f : s.facets()) {
                if (!k.contains(f)) {
                    throw InconsistencyError("face " + f.to_string() + " of " + s.to_string() +
                                             " missing: not downward closed");
                }
            }
        }
    }
    return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
    if (d < 0 || d > dim()) return kNoSimplices;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::vector<VertexLabel> SimplicialComplex::vertices() const {
    std::vector<VertexLabel> out;
    out.reserve(vertex_count());
    for (const auto& s : simplices(0)) out.push_back(s[0]);
    return out;
}

std::size_t SimplicialComplex::size() const {
    std::size_t n = 0;
    for (const auto& level : by_dim_) n += level.size();
    return n;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    for (const auto& level : by_dim_) f.push_back(level.size());
    return f;
}

std::optional<std::size_t> SimplicialComplex::find(const Simplex& s) const {
    const auto& level = simplices(s.dimension());
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const { return find(s).has_value(); }

bool SimplicialComplex::has_vertex(const VertexLabel& v) const { return contains(Simplex{v}); }

std::size_t SimplicialComplex::index_of(const Simplex& s) const {
    auto i = find(s);
    if (!i) throw NotFoundError("simplex " + s.to_string() + " not in complex");
    return *i;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
        auto counts = coface_counts(*this, d);
        const auto& level = simplices(d);
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (counts[i] == 0) out.push_back(level[i]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::string> invariant_violation(const SimplicialComplex& k) {
    for (int d = 0; d <= k.dim(); ++d) {
        const auto& level = k.simplices(d);
        if (level.empty()) return "no simplices of dimension " + std::to_string(d);
        if (!std::is_sorted(level.begin(), level.end()) ||
            std::adjacent_find(level.begin(), level.end()) != level.end()) {
            return "dimension " + std::to_string(d) + " not strictly sorted";
        }
        for (const auto& s : level) {
            if (s.dimension() != d) return s.to_string() + " stored at wrong dimension";
            for (std::size_t i = 1; i < s.size(); ++i) {
                if (!(s[i - 1] < s[i])) return s.to_string() + " not strictly ascending";
            }
            for (const auto& f : s.facets()) {
                if (!k.contains(f)) return "missing face " + f.to_string() + " of " + s.to_string();
            }
        }
    }
    std::size_t a0 = k.count(0);
    if (k.count(1) > a0 * (a0 - (a0 ? 1 : 0)) / 2) return "more edges than vertex pairs";
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Queries

SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& maximal_simplices) {
    std::vector<Simplex> simplices;
    simplices.reserve(maximal_simplices.size());
    for (const auto& labels : maximal_simplices) {
        if (labels.empty()) throw MalformedInputError("empty simplex");
        std::vector<VertexLabel> verts(labels.begin(), labels.end());
        simplices.emplace_back(std::move(verts));
    }
    return SimplicialComplex::closure_of(std::move(simplices));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int n) {
    if (n < 0) throw PreconditionError("skeleton dimension must be non-negative");
    std::vector<std::vector<Simplex>> by_dim;
    for (int d = 0; d <= std::min(n, k.dim()); ++d) by_dim.push_back(k.simplices(d));
    return SimplicialComplex::from_closed(std::move(by_dim));
}

long euler_characteristic(const SimplicialComplex& k) {
    long chi = 0;
    for (int d = 0; d <= k.dim(); ++d) {
        long c = static_cast<long>(k.count(d));
        chi += (d % 2 == 0) ? c : -c;
    }
    return chi;
}

namespace {

void require_vertex(const SimplicialComplex& k, const VertexLabel& v) {
    if (!k.has_vertex(v)) throw NotFoundError("vertex '" + v.str() + "' not in complex");
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& k, const VertexLabel& v) {
    require_vertex(k, v);
    std::vector<std::vector<Simplex>> by_dim;
    for (int d = 1; d <= k.dim(); ++d) {
        std::vector<Simplex> level;
        for (const auto& s : k.simplices(d)) {
            if (s.contains(v)) level.push_back(s.without(v));
        }
        if (level.empty()) break;
        by_dim.push_back(std::move(level));
    }
    return SimplicialComplex::from_closed(std::move(by_dim));
}

std::vector<VertexLabel> neighbors(const SimplicialComplex& k, const VertexLabel& v) {
    require_vertex(k, v);
    std::vector<VertexLabel> out;
    for (const auto& e : k.simplices(1)) {
        if (e[0] == v) out.push_back(e[1]);
        else if (e[1] == v) out.push_back(e[0]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t vertex_degree(const SimplicialComplex& k, const VertexLabel& v) {
    return neighbors(k, v).size();
}

std::vector<std::size_t> coface_counts(const SimplicialComplex& k, int d) {
    std::vector<std::size_t> counts(k.count(d), 0);
    for (const auto& s : k.simplices(d + 1)) {
        for (const auto& f : s.facets()) ++counts[k.index_of(f)];
    }
    return counts;
}

std::vector<FreePair> free_faces(const SimplicialComplex& k) {
    std::vector<FreePair> out;
    for (int d = 0; d < k.dim(); ++d) {
        auto counts = coface_counts(k, d);
        auto above = coface_counts(k, d + 1);
        std::vector<std::optional<std::size_t>> unique_coface(counts.size());
        const auto& upper = k.simplices(d + 1);
        for (std::size_t j = 0; j < upper.size(); ++j) {
            for (const auto& f : upper[j].facets()) {
                auto i = k.index_of(f);
                if (counts[i] == 1) unique_coface[i] = j;
            }
        }
        const auto& level = k.simplices(d);
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (counts[i] == 1 && above[*unique_coface[i]] == 0) {
                out.push_back({level[i], upper[*unique_coface[i]]});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FreePair& a, const FreePair& b) { return a.face < b.face; });
    return out;
}

std::vector<Simplex> maximal_edges(const SimplicialComplex& k) {
    std::vector<Simplex> out;
    auto counts = coface_counts(k, 1);
    const auto& edges = k.simplices(1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (counts[i] == 0) out.push_back(edges[i]);
    }
    return out;
}

bool is_pure(const SimplicialComplex& k) {
    if (k.empty()) return false;
    for (const auto& s : k.maximal_simplices()) {
        if (s.dimension() != k.dim()) return false;
    }
    return true;
}

std::size_t edge_triangle_count(const SimplicialComplex& k, const Simplex& edge) {
    if (edge.dimension() != 1 || !k.contains(edge)) {
        throw NotFoundError(edge.to_string() + " is not an edge of the complex");
    }
    std::size_t n = 0;
    for (const auto& t : k.simplices(2)) {
        if (edge.is_face_of(t)) ++n;
    }
    return n;
}

bool path_exists(const SimplicialComplex& k, const VertexLabel& a, const VertexLabel& b,
                 const std::optional<Simplex>& forbidden) {
    require_vertex(k, a);
    require_vertex(k, b);
    if (forbidden && (forbidden->dimension() != 1 || !k.contains(*forbidden))) {
        throw PreconditionError("forbidden simplex " + forbidden->to_string() + " is not an edge");
    }
    if (a == b) return true;
    auto verts = k.vertices();
    auto idx = [&](const VertexLabel& v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) -
                                        verts.begin());
    };
    std::vector<std::vector<std::size_t>> adj(verts.size());
    for (const auto& e : k.simplices(1)) {
        if (forbidden && e == *forbidden) continue;
        auto i = idx(e[0]);
        auto j = idx(e[1]);
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<bool> seen(verts.size(), false);
    std::deque<std::size_t> queue{idx(a)};
    seen[idx(a)] = true;
    const auto target = idx(b);
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        if (u == target) return true;
        for (auto w : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return false;
}

std::vector<std::vector<Simplex>> strongly_connected_components(const SimplicialComplex& k) {
    const auto& tris = k.simplices(2);
    std::vector<std::size_t> parent(tris.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::optional<std::size_t>> first_on_edge(k.count(1));
    for (std::size_t t = 0; t < tris.size(); ++t) {
        for (const auto& e : tris[t].facets()) {
            auto& slot = first_on_edge[k.index_of(e)];
            if (!slot) {
                slot = t;
            } else {
                auto ra = root(*slot);
                auto rb = root(t);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
    }
    std::map<std::size_t, std::vector<Simplex>> classes;
    for (std::size_t t = 0; t < tris.size(); ++t) classes[root(t)].push_back(tris[t]);
    std::vector<std::vector<Simplex>> out;
    for (auto& [r, members] : classes) out.push_back(std::move(members));
    return out;
}

// ---------------------------------------------------------------------------
// Moves

std::string_view to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::collapse: return "collapse";
        case MoveKind::edge_contraction: return "edge-contraction";
        case MoveKind::simplex_excision: return "simplex-excision";
        case MoveKind::vertex_identification: return "vertex-identification";
    }
    return "unknown";
}

namespace {

SimplicialComplex without_simplices(const SimplicialComplex& k, const std::vector<Simplex>& drop) {
    std::vector<std::vector<Simplex>> by_dim;
    for (int d = 0; d <= k.dim(); ++d) {
        std::vector<Simplex> level;
        for (const auto& s : k.simplices(d)) {
            if (std::find(drop.begin(), drop.end(), s) == drop.end()) level.push_back(s);
        }
        by_dim.push_back(std::move(level));
    }
    return SimplicialComplex::from_closed(std::move(by_dim));
}

/// Image of k under the vertex map from -> to.
SimplicialComplex merge_vertex(const SimplicialComplex& k, const VertexLabel& from,
                               const VertexLabel& to) {
    std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(k.dim() + 1));
    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& s : k.simplices(d)) {
            if (!s.contains(from)) {
                by_dim[static_cast<std::size_t>(d)].push_back(s);
                continue;
            }
            auto t = s.without(from);
            if (!t.contains(to)) t = t.with(to);
            by_dim[static_cast<std::size_t>(t.dimension())].push_back(std::move(t));
        }
    }
    return SimplicialComplex::from_closed(std::move(by_dim));
}

MoveResult make_result(const SimplicialComplex& before, SimplicialComplex after, MoveKind kind,
                       std::vector<Simplex> data) {
    MoveRecord record{kind, std::move(data), before.f_vector(), after.f_vector()};
    return {std::move(after), std::move(record)};
}

}  // namespace

MoveResult elementary_collapse(const SimplicialComplex& k, const Simplex& face, const Simplex& coface) {
    auto pairs = free_faces(k);
    auto it = std::find(pairs.begin(), pairs.end(), FreePair{face, coface});
    if (it == pairs.end()) {
        throw PreconditionError(face.to_string() + " is not a free face with coface " +
                                coface.to_string());
    }
    return make_result(k, without_simplices(k, {face, coface}), MoveKind::collapse, {face, coface});
}

MoveResult remove_two_simplex(const SimplicialComplex& k, const Simplex& sigma) {
    if (sigma.dimension() != 2 || !k.contains(sigma)) {
        throw PreconditionError(sigma.to_string() + " is not a 2-simplex of the complex");
    }
    for (const auto& s : k.simplices(3)) {
        if (sigma.is_face_of(s)) {
            throw PreconditionError(sigma.to_string() + " has coface " + s.to_string());
        }
    }
    return make_result(k, without_simplices(k, {sigma}), MoveKind::simplex_excision, {sigma});
}

MoveResult contract_edge(const SimplicialComplex& k, const Simplex& edge) {
    if (edge.dimension() != 1 || !k.contains(edge)) {
        throw PreconditionError(edge.to_string() + " is not an edge of the complex");
    }
    for (const auto& t : k.simplices(2)) {
        if (edge.is_face_of(t)) {
            throw PreconditionError("edge " + edge.to_string() + " is not maximal: lies in " +
                                    t.to_string());
        }
    }
    if (path_exists(k, edge[0], edge[1], edge)) {
        throw PropertyAViolation("a path joins the endpoints of maximal edge " + edge.to_string() +
                                 " outside the edge");
    }
    auto merged = merge_vertex(k, edge[1], edge[0]);
    return make_result(k, std::move(merged), MoveKind::edge_contraction, {edge});
}

MoveResult identify_vertices(const SimplicialComplex& k, const VertexLabel& v, const VertexLabel& w) {
    if (k.dim() > 2) throw PreconditionError("identify_vertices requires dimension <= 2");
    require_vertex(k, v);
    require_vertex(k, w);
    if (v == w) throw PreconditionError("cannot identify a vertex with itself");
    if (k.contains(Simplex{v, w})) {
        throw PreconditionError("vertices '" + v.str() + "' and '" + w.str() +
                                "' are connected by an edge");
    }
    auto lv = link(k, v).vertices();
    auto lw = link(k, w).vertices();
    std::vector<VertexLabel> common;
    std::set_intersection(lv.begin(), lv.end(), lw.begin(), lw.end(), std::back_inserter(common));
    if (!common.empty()) {
        throw PreconditionError("links of '" + v.str() + "' and '" + w.str() +
                                "' share vertex '" + common.front().str() + "'");
    }
    const auto& keep = std::min(v, w);
    const auto& drop = std::max(v, w);
    return make_result(k, merge_vertex(k, drop, keep), MoveKind::vertex_identification,
                       {Simplex{v}, Simplex{w}});
}

SimplicialComplex add_simplex(const SimplicialComplex& k, const Simplex& s) {
    std::vector<Simplex> all;
    all.reserve(k.size() + 1);
    for (int d = 0; d <= k.dim(); ++d) {
        all.insert(all.end(), k.simplices(d).begin(), k.simplices(d).end());
    }
    all.push_back(s);
    return SimplicialComplex::closure_of(std::move(all));
}

MoveResult apply_move(const SimplicialComplex& k, const MoveRecord& record) {
    auto need = [&](std::size_t n) {
        if (record.data.size() != n) {
            throw InconsistencyError("move record of kind " + std::string(to_string(record.kind)) +
                                     " has " + std::to_string(record.data.size()) + " entries");
        }
    };
    MoveResult result;
    switch (record.kind) {
        case MoveKind::collapse:
            need(2);
            result = elementary_collapse(k, record.data[0], record.data[1]);
            break;
        case MoveKind::edge_contraction:
            need(1);
            result = contract_edge(k, record.data[0]);
            break;
        case MoveKind::simplex_excision:
            need(1);
            result = remove_two_simplex(k, record.data[0]);
            break;
        case MoveKind::vertex_identification: {
            if (record.data.size() != 2) need(3);
            result = identify_vertices(k, record.data[0][0], record.data[1][0]);
            if (record.data.size() == 3) {
                result.complex = add_simplex(result.complex, record.data[2]);
                result.record.data.push_back(record.data[2]);
                result.record.after = result.complex.f_vector();
            }
            break;
        }
    }
    if (result.record.before != record.before || result.record.after != record.after) {
        throw InconsistencyError("replayed " + std::string(to_string(record.kind)) +
                                 " gives f-vector " + to_string(result.record.after) + ", recorded " +
                                 to_string(record.after));
    }
    return result;
}

}  // namespace covtype
