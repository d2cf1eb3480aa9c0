#include "covtype/surface.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <deque>
#include <map>

#include "covtype/cohomology.hpp"
#include "covtype/errors.hpp"
#include "covtype/homology.hpp"

namespace covtype {

SurfaceClass SurfaceClass::orientable_genus(int g) {
    if (g < 0) throw DomainError("orientable genus must be non-negative");
    return SurfaceClass(true, g);
}

SurfaceClass SurfaceClass::nonorientable_genus(int k) {
    if (k < 1) throw DomainError("non-orientable genus must be at least 1");
    return SurfaceClass(false, k);
}

SurfaceClass SurfaceClass::parse(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (c != '^' && c != '_') key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (key == "S2") return orientable_genus(0);
    if (key == "T2") return orientable_genus(1);
    if (key == "RP2") return nonorientable_genus(1);
    if (key == "K") return nonorientable_genus(2);
    if (key.size() >= 2 && (key[0] == 'M' || key[0] == 'N')) {
        int genus = 0;
        auto [ptr, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), genus);
        if (ec == std::errc() && ptr == key.data() + key.size()) {
            return key[0] == 'M' ? orientable_genus(genus) : nonorientable_genus(genus);
        }
    }
    throw DomainError("unknown surface name '" + std::string(name) + "'");
}

std::string SurfaceClass::name() const {
    if (orientable_) {
        if (genus_ == 0) return "S^2";
        if (genus_ == 1) return "T^2";
        return "M_" + std::to_string(genus_);
    }
    return "N_" + std::to_string(genus_);
}

std::vector<std::size_t> SurfaceClass::betti() const {
    auto b1 = static_cast<std::size_t>(orientable_ ? 2 * genus_ : genus_);
    return {1, b1, 1};
}

// ---------------------------------------------------------------------------

namespace {

/// Connected and 2-regular.
bool is_single_circle(const SimplicialComplex& l) {
    if (l.dim() != 1) return false;
    for (const auto& v : l.vertices()) {
        if (vertex_degree(l, v) != 2) return false;
    }
    const auto verts = l.vertices();
    for (const auto& v : verts) {
        if (!path_exists(l, verts.front(), v)) return false;
    }
    return true;
}

}  // namespace

SurfaceCheckReport check_closed_surface(const SimplicialComplex& k) {
    SurfaceCheckReport r;
    r.pure2 = k.dim() == 2 && is_pure(k);
    if (!r.pure2) {
        for (const auto& s : k.maximal_simplices()) {
            if (s.dimension() != 2) r.witnesses.push_back({"pure2", s});
        }
    }

    auto counts = coface_counts(k, 1);
    r.every_edge_in_two_triangles = k.count(1) > 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 2) {
            r.every_edge_in_two_triangles = false;
            r.witnesses.push_back({"every_edge_in_two_triangles", k.simplices(1)[i]});
        }
    }

    auto components = strongly_connected_components(k);
    r.strongly_connected = components.size() == 1;
    for (std::size_t c = 1; c < components.size(); ++c) {
        r.witnesses.push_back({"strongly_connected", components[c].front()});
    }

    r.all_links_single_circles = !k.empty();
    for (const auto& v : k.vertices()) {
        if (!is_single_circle(link(k, v))) {
            r.all_links_single_circles = false;
            r.witnesses.push_back({"all_links_single_circles", Simplex{v}});
        }
    }

    r.verdict = r.pure2 && r.every_edge_in_two_triangles && r.strongly_connected &&
                r.all_links_single_circles;
    return r;
}

bool orientable(const SimplicialComplex& k) {
    if (!check_closed_surface(k).verdict) {
        throw PreconditionError("orientability requires a closed surface");
    }
    const auto& tris = k.simplices(2);
    // edge index -> (triangle, induced sign) for both incident triangles
    std::vector<std::vector<std::pair<std::size_t, bool>>> incident(k.count(1));
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto& s = tris[t];
        // ∂(abc) = bc - ac + ab
        incident[k.index_of(Simplex{s[1], s[2]})].emplace_back(t, false);
        incident[k.index_of(Simplex{s[0], s[2]})].emplace_back(t, true);
        incident[k.index_of(Simplex{s[0], s[1]})].emplace_back(t, false);
    }
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> edges_of(tris.size());
    for (std::size_t e = 0; e < incident.size(); ++e) {
        for (const auto& [t, sign] : incident[e]) edges_of[t].emplace_back(e, sign);
    }
    std::vector<int> orient(tris.size(), -1);
    orient[0] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        auto t = queue.front();
        queue.pop_front();
        for (const auto& [e, sign_t] : edges_of[t]) {
            for (const auto& [u, sign_u] : incident[e]) {
                if (u == t) continue;
                // neighbours must induce opposite orientations on the shared edge
                int want = orient[t] ^ static_cast<int>(sign_t) ^ static_cast<int>(sign_u) ^ 1;
                if (orient[u] < 0) {
                    orient[u] = want;
                    queue.push_back(u);
                } else if (orient[u] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

SurfaceClass classify_surface(const SimplicialComplex& k) {
    if (!check_closed_surface(k).verdict) {
        throw PreconditionError("classification requires a closed surface");
    }
    const long chi = euler_characteristic(k);
    if (orientable(k)) {
        if (chi > 2 || chi % 2 != 0) {
            throw InconsistencyError("orientable surface with chi = " + std::to_string(chi));
        }
        return SurfaceClass::orientable_genus(static_cast<int>((2 - chi) / 2));
    }
    if (chi > 1) throw InconsistencyError("non-orientable surface with chi = " + std::to_string(chi));
    return SurfaceClass::nonorientable_genus(static_cast<int>(2 - chi));
}

long rho(long chi) {
    if (chi > 2) throw DomainError("rho needs chi <= 2, got " + std::to_string(chi));
    if (chi < -1'000'000'000'000L) throw DomainError("chi out of supported range");
    const long long disc = 49 - 24LL * chi;
    auto root = static_cast<long long>(std::sqrt(static_cast<long double>(disc)));
    while (root * root < disc) ++root;
    while (root > 0 && (root - 1) * (root - 1) >= disc) --root;
    // root = ceil(sqrt(disc)); need 2n - 7 >= root
    long long n = (7 + root + 1) / 2;
    while (n > 0 && 2 * (n - 1) - 7 >= root) --n;
    return static_cast<long>(n);
}

bool is_exceptional(const SurfaceClass& s) {
    return (s.orientable() && s.genus() == 2) || (!s.orientable() && (s.genus() == 2 || s.genus() == 3));
}

long delta(const SurfaceClass& s) { return rho(s.chi()) + (is_exceptional(s) ? 1 : 0); }

long covering_type(const SurfaceClass& s) {
    if (s.orientable() && s.genus() == 2) return rho(s.chi());
    return delta(s);
}

// ---------------------------------------------------------------------------

MoveResult identify_and_cap(const SimplicialComplex& k, const VertexLabel& v, const VertexLabel& v2,
                        const VertexLabel& w, const VertexLabel& w2) {
    if (k.dim() > 2) throw PreconditionError("identify_and_cap requires dimension <= 2");
    for (const auto* x : {&v, &v2, &w, &w2}) {
        if (!k.has_vertex(*x)) throw PreconditionError("vertex '" + x->str() + "' not in complex");
    }
    if (!link(k, v).has_vertex(w)) {
        throw PreconditionError("'" + w.str() + "' is not in the link of '" + v.str() + "'");
    }
    if (!link(k, v2).has_vertex(w2)) {
        throw PreconditionError("'" + w2.str() + "' is not in the link of '" + v2.str() + "'");
    }
    if (!k.contains(Simplex{w, w2})) {
        throw PreconditionError("'" + w.str() + "' and '" + w2.str() + "' are not joined by an edge");
    }
    auto result = identify_vertices(k, v, v2);
    Simplex sigma{std::min(v, v2), w, w2};
    result.complex = add_simplex(result.complex, sigma);
    result.record.data.push_back(sigma);
    result.record.after = result.complex.f_vector();

    auto before = betti_numbers(k);
    auto after = betti_numbers(result.complex);
    if (before != after) {
        throw InconsistencyError("vertex identification changed mod-2 Betti numbers from " +
                                 to_string(before) + " to " + to_string(after));
    }
    return result;
}

std::vector<VertexPair> degree_four_pairs(const SimplicialComplex& t) {
    std::vector<VertexLabel> deg4;
    for (const auto& v : t.vertices()) {
        if (vertex_degree(t, v) == 4) deg4.push_back(v);
    }
    std::vector<VertexPair> out;
    for (std::size_t i = 0; i < deg4.size(); ++i) {
        for (std::size_t j = i + 1; j < deg4.size(); ++j) {
            const auto& a = deg4[i];
            const auto& b = deg4[j];
            if (t.contains(Simplex{a, b})) continue;
            auto la = neighbors(t, a);
            auto lb = neighbors(t, b);
            std::vector<VertexLabel> common;
            std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
            if (!common.empty()) continue;
            std::vector<VertexLabel> rest;
            for (const auto& v : t.vertices()) {
                if (v != a && v != b) rest.push_back(v);
            }
            bool complete = true;
            for (std::size_t x = 0; x < rest.size() && complete; ++x) {
                for (std::size_t y = x + 1; y < rest.size(); ++y) {
                    if (!t.contains(Simplex{rest[x], rest[y]})) {
                        complete = false;
                        break;
                    }
                }
            }
            if (complete) out.push_back({a, b});
        }
    }
    return out;
}

std::vector<VertexPair> cap_choices(const SimplicialComplex& t, const VertexLabel& v,
                                        const VertexLabel& v2) {
    std::vector<VertexPair> out;
    for (const auto& w : link(t, v).vertices()) {
        for (const auto& w2 : link(t, v2).vertices()) {
            if (w != w2 && t.contains(Simplex{w, w2})) out.push_back({w, w2});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex build_nine_vertex_m2(const SimplicialComplex& t) {
    if (!check_closed_surface(t).verdict) throw UnsupportedTriangulationError("input is not a closed surface");
    if (t.vertex_count() != 10) {
        throw UnsupportedTriangulationError("expected 10 vertices, found " + std::to_string(t.vertex_count()));
    }
    auto cls = classify_surface(t);
    if (cls != SurfaceClass::orientable_genus(2)) {
        throw UnsupportedTriangulationError("input is " + cls.name() + ", not M_2");
    }
    auto pairs = degree_four_pairs(t);
    if (pairs.empty()) {
        throw UnsupportedTriangulationError(
            "no pair of non-adjacent degree-4 vertices with disjoint links spanning a complement K_8");
    }
    if (pairs.size() > 1) {
        std::string list;
        for (const auto& p : pairs) list += " (" + p.first.str() + "," + p.second.str() + ")";
        throw UnsupportedTriangulationError("degree-4 vertex pair is not unique; candidates:" + list);
    }
    const auto& [v, v2] = pairs.front();
    auto choices = cap_choices(t, v, v2);
    if (choices.empty()) throw UnsupportedTriangulationError("no edge joins the links of the degree-4 pair");
    auto result = identify_and_cap(t, v, v2, choices.front().first, choices.front().second).complex;

    if (result.vertex_count() != 9 || betti_numbers(result) != std::vector<std::size_t>{1, 4, 1} ||
        !has_property_A(result)) {
        throw InconsistencyError("constructed complex lacks the genus-2 homotopy invariants");
    }
    return result;
}

}  // namespace covtype
