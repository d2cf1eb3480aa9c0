#include "covtype/homology.hpp"

#include <map>

#include "covtype/errors.hpp"

namespace covtype {

ChainData::ChainData(const SimplicialComplex& k) : complex_(k) {
    const int top = k.dim();
    if (top < 0) return;
    boundary_.reserve(static_cast<std::size_t>(top) + 2);
    boundary_.emplace_back(0, k.count(0));
    for (int n = 1; n <= top; ++n) {
        Gf2Matrix d(k.count(n - 1), k.count(n));
        const auto& level = k.simplices(n);
        for (std::size_t j = 0; j < level.size(); ++j) {
            for (const auto& f : level[j].facets()) d.set(k.index_of(f), j);
        }
        boundary_.push_back(std::move(d));
    }
    boundary_.emplace_back(k.count(top), 0);
    for (int n = 2; n <= top; ++n) {
        if (!(boundary(n - 1) * boundary(n)).is_zero()) {
            throw InconsistencyError("d_" + std::to_string(n - 1) + " d_" + std::to_string(n) +
                                     " != 0");
        }
    }
}

const Gf2Matrix& ChainData::boundary(int n) const {
    static const Gf2Matrix empty;
    if (n < 0 || n >= static_cast<int>(boundary_.size())) return empty;
    return boundary_[static_cast<std::size_t>(n)];
}

std::vector<std::size_t> betti_numbers(const ChainData& chains) {
    const int top = chains.dim();
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= top + 1; ++n) ranks.push_back(rank(chains.boundary(n)));
    std::vector<std::size_t> betti;
    for (int n = 0; n <= top; ++n) {
        auto i = static_cast<std::size_t>(n);
        betti.push_back(chains.chain_length(n) - ranks[i] - ranks[i + 1]);
    }
    return betti;
}

std::vector<std::size_t> betti_numbers(const SimplicialComplex& k) { return betti_numbers(ChainData(k)); }

std::vector<Gf2Vector> complement_representatives(const std::vector<Gf2Vector>& fixed,
                                                  const std::vector<Gf2Vector>& candidates) {
    std::map<std::size_t, Gf2Vector> echelon;
    auto reduce = [&](Gf2Vector v) {
        while (auto p = v.first_set()) {
            auto it = echelon.find(*p);
            if (it == echelon.end()) break;
            v += it->second;
        }
        return v;
    };
    auto insert = [&](const Gf2Vector& v) {
        auto r = reduce(v);
        if (r.is_zero()) return false;
        echelon.emplace(*r.first_set(), std::move(r));
        return true;
    };
    for (const auto& v : fixed) insert(v);
    std::vector<Gf2Vector> kept;
    for (const auto& v : candidates) {
        if (insert(v)) kept.push_back(v);
    }
    return kept;
}

std::vector<Gf2Vector> homology_basis(const ChainData& chains, int n) {
    if (n < 0 || n > chains.dim()) return {};
    auto cycles = kernel_basis(chains.boundary(n));
    auto boundaries = image_basis(chains.boundary(n + 1));
    return complement_representatives(boundaries, cycles);
}

std::vector<Gf2Vector> homology_basis(const SimplicialComplex& k, int n) {
    return homology_basis(ChainData(k), n);
}

HomologyProfile homology_profile(const SimplicialComplex& k) {
    ChainData chains(k);
    HomologyProfile out;
    out.betti = betti_numbers(chains);
    for (int n = 0; n <= k.dim(); ++n) out.cycle_reps.push_back(homology_basis(chains, n));
    return out;
}

SimplicialComplex two_subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& triangles) {
    for (const auto& t : triangles) {
        if (t.dimension() != 2 || !k.contains(t)) {
            throw PreconditionError(t.to_string() + " is not a 2-simplex of the complex");
        }
    }
    std::vector<std::vector<Simplex>> by_dim{k.simplices(0), k.simplices(1), triangles};
    return SimplicialComplex::from_closed(std::move(by_dim));
}

Gf2Vector embed_chain(const SimplicialComplex& sub, const SimplicialComplex& k, int n,
                      const Gf2Vector& chain) {
    if (chain.size() != sub.count(n)) throw PreconditionError("chain length does not match subcomplex");
    Gf2Vector out(k.count(n));
    const auto& level = sub.simplices(n);
    for (auto i : chain.support()) out.set(k.index_of(level[i]));
    return out;
}

namespace {

std::vector<Gf2Vector> embedded_two_cycles(const SimplicialComplex& l, const SimplicialComplex& k) {
    ChainData lc(l);
    std::vector<Gf2Vector> out;
    for (const auto& c : kernel_basis(lc.boundary(2))) out.push_back(embed_chain(l, k, 2, c));
    return out;
}

}  // namespace

std::optional<SurplusCycle> surplus_cycle(const SimplicialComplex& k,
                                          const std::vector<Simplex>& l_two_simplices) {
    auto l = two_subcomplex(k, l_two_simplices);
    ChainData kc(k);
    auto inter = subspace_intersection(embedded_two_cycles(l, k), image_basis(kc.boundary(3)));
    if (inter.empty()) return std::nullopt;
    auto cycle = inter.front();
    auto sigma = k.simplices(2)[*cycle.first_set()];
    return SurplusCycle{std::move(cycle), std::move(sigma)};
}

std::optional<Gf2Vector> h2_epi_witness(const SimplicialComplex& k, const SimplicialComplex& l,
                                        const Gf2Vector& z) {
    for (int d = 0; d <= l.dim(); ++d) {
        for (const auto& s : l.simplices(d)) {
            if (!k.contains(s)) throw PreconditionError(s.to_string() + " of L is not in K");
        }
    }
    ChainData kc(k);
    if (z.size() != k.count(2)) throw PreconditionError("Z has the wrong length for K's 2-chains");
    if (!(kc.boundary(2) * z).is_zero()) throw PreconditionError("Z is not a 2-cycle of K");

    auto cycles = embedded_two_cycles(l, k);
    auto columns = cycles;
    auto boundaries = image_basis(kc.boundary(3));
    columns.insert(columns.end(), boundaries.begin(), boundaries.end());
    auto x = solve(Gf2Matrix::from_columns(columns, z.size()), z);
    if (!x) return std::nullopt;
    Gf2Vector c(z.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (x->get(i)) c += cycles[i];
    }
    return c;
}

}  // namespace covtype
