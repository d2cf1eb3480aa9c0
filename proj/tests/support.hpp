#pragma once

// Shared test helpers: bundled data access, brute-force oracles that do not
// touch the GF(2) kernel, and homotopy-preserving complex generators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/gf2.hpp"
#include "covtype/io.hpp"
#include "covtype/surface.hpp"

namespace covtype::testing {

inline std::string data_path(const std::string& name) { return std::string(COVTYPE_DATA_DIR) + "/" + name; }

inline SimplicialComplex load(const std::string& name) { return read_complex_file(data_path(name)).complex; }

inline SimplicialComplex tetra_boundary() { return build_complex({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}}); }
inline SimplicialComplex solid_tetra() { return build_complex({{"a", "b", "c", "d"}}); }
inline SimplicialComplex triangle() { return build_complex({{"a", "b", "c"}}); }
inline SimplicialComplex hollow_triangle() { return build_complex({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

struct BundledSurface {
    std::string file;
    SurfaceClass surface;
};

inline std::vector<BundledSurface> bundled_surfaces() {
    return {
        {"sphere_4.txt", SurfaceClass::orientable_genus(0)},
        {"rp2_6.txt", SurfaceClass::nonorientable_genus(1)},
        {"torus_7.txt", SurfaceClass::orientable_genus(1)},
        {"klein_8.txt", SurfaceClass::nonorientable_genus(2)},
        {"n3_9.txt", SurfaceClass::nonorientable_genus(3)},
        {"m2_10.txt", SurfaceClass::orientable_genus(2)},
    };
}

// ---------------------------------------------------------------------------
// Oracles: plain int matrices, reduced mod 2 by naive elimination.

using IntMatrix = std::vector<std::vector<int>>;

inline std::size_t oracle_rank(IntMatrix m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] % 2 == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && m[r][c] % 2 != 0) {
                for (std::size_t j = 0; j < cols; ++j) m[r][j] = (m[r][j] + m[rank][j]) % 2;
            }
        }
        ++rank;
    }
    return rank;
}

/// Boundary matrix d_n built from label lists only.
inline IntMatrix oracle_boundary(const SimplicialComplex& k, int n) {
    std::map<std::vector<std::string>, std::size_t> row_of;
    for (const auto& s : k.simplices(n - 1)) {
        std::vector<std::string> key;
        for (const auto& v : s.vertices()) key.push_back(v.str());
        row_of.emplace(key, row_of.size());
    }
    IntMatrix m(k.count(n - 1), std::vector<int>(k.count(n), 0));
    const auto& cols = k.simplices(n);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<std::string> labels;
        for (const auto& v : cols[j].vertices()) labels.push_back(v.str());
        for (std::size_t drop = 0; drop < labels.size(); ++drop) {
            auto face = labels;
            face.erase(face.begin() + static_cast<long>(drop));
            m[row_of.at(face)][j] = 1;
        }
    }
    return m;
}

inline std::vector<std::size_t> oracle_betti(const SimplicialComplex& k) {
    std::vector<std::size_t> ranks(static_cast<std::size_t>(k.dim() + 2), 0);
    for (int n = 1; n <= k.dim(); ++n) ranks[static_cast<std::size_t>(n)] = oracle_rank(oracle_boundary(k, n));
    std::vector<std::size_t> betti;
    for (int n = 0; n <= k.dim(); ++n) {
        auto i = static_cast<std::size_t>(n);
        betti.push_back(k.count(n) - ranks[i] - ranks[i + 1]);
    }
    return betti;
}

inline IntMatrix to_int(const Gf2Matrix& m) {
    IntMatrix out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    }
    return out;
}

/// Every vector of span(basis), by enumerating all 2^k combinations.
inline std::vector<std::uint64_t> enumerate_span(const std::vector<std::uint64_t>& basis) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (mask >> i & 1) v ^= basis[i];
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::uint64_t to_mask(const Gf2Vector& v) {
    std::uint64_t m = 0;
    for (auto i : v.support()) m |= std::uint64_t{1} << i;
    return m;
}

inline Gf2Vector from_mask(std::uint64_t m, std::size_t len) {
    Gf2Vector v(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (m >> i & 1) v.set(i);
    }
    return v;
}

inline Gf2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.4) {
    std::bernoulli_distribution bit(density);
    Gf2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Complex generators

inline std::vector<Simplex> all_simplices(const SimplicialComplex& k) {
    std::vector<Simplex> out;
    for (int d = 0; d <= k.dim(); ++d) out.insert(out.end(), k.simplices(d).begin(), k.simplices(d).end());
    return out;
}

/// Random complex on `n` vertices labelled v0.., built from random triangles and edges.
inline SimplicialComplex random_complex(std::mt19937& rng, int n, double tri_p, double edge_p) {
    std::bernoulli_distribution tri(tri_p), edge(edge_p);
    std::vector<Simplex> simplices;
    auto label = [](int i) { return VertexLabel("v" + std::to_string(i)); };
    for (int a = 0; a < n; ++a) {
        simplices.push_back(Simplex{label(a)});
        for (int b = a + 1; b < n; ++b) {
            if (edge(rng)) simplices.push_back(Simplex{label(a), label(b)});
            for (int c = b + 1; c < n; ++c) {
                if (tri(rng)) simplices.push_back(Simplex{label(a), label(b), label(c)});
            }
        }
    }
    return SimplicialComplex::closure_of(std::move(simplices));
}

/// Replaces every simplex containing s by the join of the new vertex with
/// the faces not containing s.
inline SimplicialComplex stellar_subdivide(const SimplicialComplex& k, const Simplex& s, const VertexLabel& x) {
    std::vector<Simplex> out;
    for (const auto& m : k.maximal_simplices()) {
        if (!s.is_face_of(m)) {
            out.push_back(m);
            continue;
        }
        for (const auto& v : s.vertices()) out.push_back(m.without(v).with(x));
    }
    return SimplicialComplex::closure_of(std::move(out));
}

/// Adds the cone with apex x over the closed star of v (a contractible subcomplex).
inline SimplicialComplex cone_over_star(const SimplicialComplex& k, const VertexLabel& v, const VertexLabel& x) {
    auto out = all_simplices(k);
    for (const auto& s : all_simplices(k)) {
        if (s.contains(v)) out.push_back(s.with(x));
    }
    return SimplicialComplex::closure_of(std::move(out));
}

/// Adds the cone with apex x over one simplex (an elementary expansion).
inline SimplicialComplex cone_over_simplex(const SimplicialComplex& k, const Simplex& s, const VertexLabel& x) {
    auto out = all_simplices(k);
    out.push_back(s.with(x));
    return SimplicialComplex::closure_of(std::move(out));
}

inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
    auto name = [](const Simplex& s) {
        std::string n;
        for (const auto& v : s.vertices()) n += (n.empty() ? "" : "_") + v.str();
        return VertexLabel(n);
    };
    std::vector<Simplex> chains;
    // maximal flags s0 < s1 < ... < s_top
    std::vector<std::vector<Simplex>> frontier;
    for (const auto& v : k.simplices(0)) frontier.push_back({v});
    while (!frontier.empty()) {
        std::vector<std::vector<Simplex>> next;
        for (const auto& flag : frontier) {
            bool extended = false;
            for (const auto& t : k.simplices(flag.back().dimension() + 1)) {
                if (flag.back().is_face_of(t)) {
                    auto f = flag;
                    f.push_back(t);
                    next.push_back(std::move(f));
                    extended = true;
                }
            }
            if (!extended) {
                std::vector<VertexLabel> verts;
                for (const auto& s : flag) verts.push_back(name(s));
                chains.emplace_back(std::move(verts));
            }
        }
        frontier = std::move(next);
    }
    return SimplicialComplex::closure_of(std::move(chains));
}

struct CorpusEntry {
    std::string name;
    SimplicialComplex complex;
    SurfaceClass surface;
};

/// Homotopy-preserving random modifications of the bundled surfaces:
/// stellar subdivisions of edges and triangles, cones over vertex stars and
/// cones over single simplices.
inline std::vector<CorpusEntry> surface_corpus(std::uint32_t seed, int per_surface) {
    std::mt19937 rng(seed);
    std::vector<CorpusEntry> out;
    for (const auto& b : bundled_surfaces()) {
        auto base = load(b.file);
        for (int i = 0; i < per_surface; ++i) {
            auto k = base;
            std::string name = b.file;
            std::uniform_int_distribution<int> steps(1, 4);
            int n = steps(rng);
            for (int s = 0; s < n; ++s) {
                VertexLabel x("z" + std::to_string(s));
                std::uniform_int_distribution<int> op(0, 3);
                int which = op(rng);
                auto pick = [&](int d) {
                    const auto& level = k.simplices(d);
                    std::uniform_int_distribution<std::size_t> at(0, level.size() - 1);
                    return level[at(rng)];
                };
                switch (which) {
                    case 0:
                        k = stellar_subdivide(k, pick(2), x);
                        name += "+st2";
                        break;
                    case 1:
                        k = stellar_subdivide(k, pick(1), x);
                        name += "+st1";
                        break;
                    case 2:
                        k = cone_over_star(k, pick(0)[0], x);
                        name += "+cstar";
                        break;
                    default:
                        k = cone_over_simplex(k, pick(2), x);
                        name += "+cone";
                        break;
                }
            }
            out.push_back({name, std::move(k), b.surface});
        }
    }
    return out;
}

}  // namespace covtype::testing
