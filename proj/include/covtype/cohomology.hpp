#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/gf2.hpp"
#include "covtype/homology.hpp"

namespace covtype {

/// Mod-2 cochain: one coefficient per n-simplex of a complex, in canonical order.
struct Cochain {
    int degree = 0;
    Gf2Vector values;

    friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// T[i][j][k] is the k-th coordinate of [a_i ∪ a_j] against the dual of the
/// H_2 cycle basis.
struct PairingTensor {
    std::size_t b1 = 0;
    std::size_t b2 = 0;
    std::vector<std::uint8_t> entries;

    bool at(std::size_t i, std::size_t j, std::size_t k) const { return entries[(i * b1 + j) * b2 + k]; }
    /// b1 x (b1 * b2) matrix, row i holding all (j, k) entries.
    Gf2Matrix flattened() const;
};

Gf2Matrix coboundary_matrix(const SimplicialComplex& k, int n);

/// Degree (1,1) -> 2 cup product of cochains on a fixed complex, with the
/// evaluation of 2-cocycles against H_2 that identifies H^2 with Hom(H_2, F_2).
class CupRing {
public:
    explicit CupRing(const SimplicialComplex& k);

    const SimplicialComplex& complex() const noexcept { return chains_.complex(); }
    const ChainData& chains() const noexcept { return chains_; }

    /// Front-face/back-face rule on v0 < v1 < v2: (a ∪ b)(v0v1v2) = a(v0v1) b(v1v2).
    Cochain cup(const Cochain& a, const Cochain& b) const;
    Cochain coboundary(const Cochain& c) const;

    const std::vector<Cochain>& h1_basis() const noexcept { return h1_basis_; }
    const std::vector<Gf2Vector>& h2_cycles() const noexcept { return h2_cycles_; }

    /// Coordinates of a 2-cocycle's class: its values on the H_2 cycle basis.
    Gf2Vector h2_class(const Cochain& c) const;

    PairingTensor pairing_tensor() const;
    bool has_property_a() const;
    /// Nonzero class in H^1 whose cup product with every class vanishes.
    std::optional<Cochain> property_a_witness() const;
    /// True iff a ∪ a = 0 in H^2 for every a in H^1.
    bool cup_squares_vanish() const;

private:
    ChainData chains_;
    std::vector<std::pair<std::size_t, std::size_t>> triangle_edges_;  // (v0v1, v1v2) edge indices
    std::vector<Cochain> h1_basis_;
    std::vector<Gf2Vector> h2_cycles_;
};

Cochain cup_1_1(const SimplicialComplex& k, const Cochain& a, const Cochain& b);
std::vector<Cochain> h1_cocycle_basis(const SimplicialComplex& k);
PairingTensor pairing_tensor(const SimplicialComplex& k);
bool has_property_A(const SimplicialComplex& k);
std::optional<Cochain> property_a_witness(const SimplicialComplex& k);

}  // namespace covtype
