#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covtype {

/// Name of a vertex: a non-empty token of printable, non-whitespace
/// characters. Labels order lexicographically, which fixes the canonical
/// vertex order of every complex.
class VertexLabel {
public:
    VertexLabel(std::string name);
    VertexLabel(std::string_view name) : VertexLabel(std::string(name)) {}
    VertexLabel(const char* name) : VertexLabel(std::string(name)) {}

    const std::string& str() const noexcept { return name_; }

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;

private:
    std::string name_;
};

/// A simplex: strictly ascending list of vertex labels.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<VertexLabel> vertices);
    explicit Simplex(std::vector<VertexLabel> vertices);

    /// -1 for the empty simplex.
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    const std::vector<VertexLabel>& vertices() const noexcept { return vertices_; }
    const VertexLabel& operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(const VertexLabel& v) const;
    bool is_face_of(const Simplex& other) const;
    bool intersects(const Simplex& other) const;

    /// Codimension-one faces in canonical (ascending) order.
    std::vector<Simplex> facets() const;
    Simplex without(const VertexLabel& v) const;
    Simplex with(const VertexLabel& v) const;

    std::string to_string() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    std::vector<VertexLabel> vertices_;
};

using FVector = std::vector<std::size_t>;

std::string to_string(const FVector& f);

/// Finite abstract simplicial complex, closed under taking nonempty faces.
/// Values are immutable: every move returns a new complex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of an arbitrary list of simplices.
    static SimplicialComplex closure_of(std::vector<Simplex> simplices);
    /// Wraps simplices that are already closed under faces (grouped by
    /// dimension, any order). Throws InconsistencyError if they are not.
    static SimplicialComplex from_closed(std::vector<std::vector<Simplex>> by_dim);

    /// -1 for the empty complex.
    int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const noexcept { return by_dim_.empty(); }

    /// Simplices of dimension d in canonical order (empty outside [0, dim]).
    const std::vector<Simplex>& simplices(int d) const;
    std::vector<VertexLabel> vertices() const;
    std::size_t vertex_count() const { return count(0); }
    std::size_t count(int d) const { return simplices(d).size(); }
    std::size_t size() const;
    FVector f_vector() const;

    bool contains(const Simplex& s) const;
    bool has_vertex(const VertexLabel& v) const;
    /// Position of s within simplices(s.dimension()); throws NotFoundError.
    std::size_t index_of(const Simplex& s) const;
    std::optional<std::size_t> find(const Simplex& s) const;

    std::vector<Simplex> maximal_simplices() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    explicit SimplicialComplex(std::vector<std::vector<Simplex>> by_dim);

    std::vector<std::vector<Simplex>> by_dim_;
};

/// Checks downward closure, sortedness and the simple-graph edge bound.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> invariant_violation(const SimplicialComplex& k);

// ---------------------------------------------------------------------------
// Moves

enum class MoveKind { collapse, edge_contraction, simplex_excision, vertex_identification };

std::string_view to_string(MoveKind kind);

/// One step of a reduction or construction. The data layout depends on kind:
///   collapse               {free face, its unique coface}
///   edge_contraction       {edge}
///   simplex_excision       {removed 2-simplex}
///   vertex_identification  {{v}, {v'}} or {{v}, {v'}, added triangle}
struct MoveRecord {
    MoveKind kind;
    std::vector<Simplex> data;
    FVector before;
    FVector after;
};

struct MoveResult {
    SimplicialComplex complex;
    MoveRecord record;
};

/// Re-applies a recorded move; throws InconsistencyError if the f-vectors
/// do not match the record.
MoveResult apply_move(const SimplicialComplex& k, const MoveRecord& record);

// ---------------------------------------------------------------------------
// Construction and queries

SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& maximal_simplices);

SimplicialComplex skeleton(const SimplicialComplex& k, int n);
long euler_characteristic(const SimplicialComplex& k);
SimplicialComplex link(const SimplicialComplex& k, const VertexLabel& v);

/// Sorted neighbours of v in the 1-skeleton.
std::vector<VertexLabel> neighbors(const SimplicialComplex& k, const VertexLabel& v);
std::size_t vertex_degree(const SimplicialComplex& k, const VertexLabel& v);

/// Number of (d+1)-simplices containing each d-simplex, aligned with simplices(d).
std::vector<std::size_t> coface_counts(const SimplicialComplex& k, int d);

struct FreePair {
    Simplex face;
    Simplex coface;

    friend bool operator==(const FreePair&, const FreePair&) = default;
};

/// All free faces with their unique cofaces, lexicographic by face.
std::vector<FreePair> free_faces(const SimplicialComplex& k);

/// Edges contained in no 2-simplex.
std::vector<Simplex> maximal_edges(const SimplicialComplex& k);

/// True iff all maximal simplices have dimension dim(k) (and k is nonempty).
bool is_pure(const SimplicialComplex& k);

std::size_t edge_triangle_count(const SimplicialComplex& k, const Simplex& edge);

bool path_exists(const SimplicialComplex& k, const VertexLabel& a, const VertexLabel& b,
                 const std::optional<Simplex>& forbidden = std::nullopt);

/// Classes of 2-simplices under "share an edge", each sorted, ordered by
/// their smallest member.
std::vector<std::vector<Simplex>> strongly_connected_components(const SimplicialComplex& k);

// ---------------------------------------------------------------------------
// Moves returning a record

MoveResult elementary_collapse(const SimplicialComplex& k, const Simplex& face, const Simplex& coface);
MoveResult remove_two_simplex(const SimplicialComplex& k, const Simplex& sigma);
MoveResult contract_edge(const SimplicialComplex& k, const Simplex& edge);
MoveResult identify_vertices(const SimplicialComplex& k, const VertexLabel& v, const VertexLabel& w);

/// k together with s and all its faces.
SimplicialComplex add_simplex(const SimplicialComplex& k, const Simplex& s);

}  // namespace covtype
