#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covtype/complex.hpp"

namespace covtype {

/// A closed surface up to homeomorphism: orientable of genus g (M_g) or
/// non-orientable of genus k >= 1 (N_k).
class SurfaceClass {
public:
    static SurfaceClass orientable_genus(int g);
    static SurfaceClass nonorientable_genus(int k);
    /// Accepts S2, S^2, T2, T^2, RP2, RP^2, K, M_g, N_k (also without '_').
    static SurfaceClass parse(std::string_view name);

    bool orientable() const noexcept { return orientable_; }
    int genus() const noexcept { return genus_; }
    long chi() const noexcept { return orientable_ ? 2 - 2L * genus_ : 2L - genus_; }

    /// "S^2", "T^2", "M_g" for g >= 2, "N_k".
    std::string name() const;
    /// mod-2 Betti numbers (b0, b1, b2).
    std::vector<std::size_t> betti() const;

    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;

private:
    SurfaceClass(bool orientable, int genus) : orientable_(orientable), genus_(genus) {}

    bool orientable_;
    int genus_;
};

struct SurfaceWitness {
    std::string condition;
    Simplex simplex;
};

struct SurfaceCheckReport {
    bool pure2 = false;
    bool every_edge_in_two_triangles = false;
    bool strongly_connected = false;
    bool all_links_single_circles = false;
    bool verdict = false;
    std::vector<SurfaceWitness> witnesses;
};

SurfaceCheckReport check_closed_surface(const SimplicialComplex& k);

/// Coherent orientation by propagation across shared edges.
bool orientable(const SimplicialComplex& k);

SurfaceClass classify_surface(const SimplicialComplex& k);

/// Least n with n >= (7 + sqrt(49 - 24 chi)) / 2, in exact integer arithmetic.
long rho(long chi);
/// Vertex count of a minimal triangulation.
long delta(const SurfaceClass& s);
long covering_type(const SurfaceClass& s);
bool is_exceptional(const SurfaceClass& s);

/// Identifies v with v2 and adds the triangle {[v], w, w2}.
MoveResult identify_and_cap(const SimplicialComplex& k, const VertexLabel& v, const VertexLabel& v2,
                        const VertexLabel& w, const VertexLabel& w2);

struct VertexPair {
    VertexLabel first;
    VertexLabel second;

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Pairs of non-adjacent degree-4 vertices with vertex-disjoint links whose
/// removal leaves a complete graph on the remaining vertices.
std::vector<VertexPair> degree_four_pairs(const SimplicialComplex& t);

/// Valid (w, w2) choices for identify_and_cap at the pair (v, v2), sorted.
std::vector<VertexPair> cap_choices(const SimplicialComplex& t, const VertexLabel& v,
                                        const VertexLabel& v2);

/// Nine-vertex complex with the homotopy type of the genus-2 surface, built
/// from a ten-vertex genus-2 triangulation.
SimplicialComplex build_nine_vertex_m2(const SimplicialComplex& t);

}  // namespace covtype
