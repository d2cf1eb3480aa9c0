#pragma once

#include <optional>
#include <vector>

#include "covtype/complex.hpp"
#include "covtype/gf2.hpp"

namespace covtype {

/// Mod-2 chain complex of a simplicial complex. Chain coordinates follow
/// the canonical simplex order of the complex the data was built from.
class ChainData {
public:
    explicit ChainData(const SimplicialComplex& k);

    const SimplicialComplex& complex() const noexcept { return complex_; }
    int dim() const noexcept { return complex_.dim(); }

    /// d_n : C_n -> C_{n-1}, a count(n-1) x count(n) matrix. For n <= 0 or
    /// n > dim this is the zero map with the matching shape.
    const Gf2Matrix& boundary(int n) const;

    std::size_t chain_length(int n) const { return complex_.count(n); }

private:
    SimplicialComplex complex_;
    std::vector<Gf2Matrix> boundary_;  // index n, for 0 <= n <= dim + 1
};

struct HomologyProfile {
    std::vector<std::size_t> betti;
    /// cycle_reps[n] holds betti[n] cycles whose classes form a basis of H_n.
    std::vector<std::vector<Gf2Vector>> cycle_reps;
};

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k);
std::vector<std::size_t> betti_numbers(const ChainData& chains);

/// Canonical basis of H_n as cycle representatives.
std::vector<Gf2Vector> homology_basis(const SimplicialComplex& k, int n);
std::vector<Gf2Vector> homology_basis(const ChainData& chains, int n);

HomologyProfile homology_profile(const SimplicialComplex& k);

/// Extends `fixed` (a basis of a subspace W) by members of `candidates`,
/// keeping each candidate that is independent modulo W and the candidates
/// already kept. Returns the kept candidates.
std::vector<Gf2Vector> complement_representatives(const std::vector<Gf2Vector>& fixed,
                                                  const std::vector<Gf2Vector>& candidates);

/// The subcomplex of skeleton(k, 2) with the full 1-skeleton and the given
/// 2-simplices.
SimplicialComplex two_subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& triangles);

/// Zero-padded embedding of n-chains of a subcomplex into n-chains of k.
Gf2Vector embed_chain(const SimplicialComplex& sub, const SimplicialComplex& k, int n,
                      const Gf2Vector& chain);

struct SurplusCycle {
    /// Nonzero 2-cycle of L that bounds in K, in K's 2-chain coordinates.
    Gf2Vector cycle;
    /// Smallest 2-simplex in its support.
    Simplex sigma;
};

/// First canonical vector of ker d2^L ∩ im d3^K, where L is the subcomplex
/// of K's 2-skeleton carrying the given 2-simplices.
std::optional<SurplusCycle> surplus_cycle(const SimplicialComplex& k,
                                          const std::vector<Simplex>& l_two_simplices);

/// A 2-cycle C supported on the subcomplex l with C + z a boundary in k.
/// z is in k's 2-chain coordinates; so is the result.
std::optional<Gf2Vector> h2_epi_witness(const SimplicialComplex& k, const SimplicialComplex& l,
                                        const Gf2Vector& z);

}  // namespace covtype
