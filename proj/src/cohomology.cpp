#include "covtype/cohomology.hpp"

#include "covtype/errors.hpp"

namespace covtype {

Gf2Matrix PairingTensor::flattened() const {
    Gf2Matrix m(b1, b1 * b2);
    for (std::size_t i = 0; i < b1; ++i) {
        for (std::size_t j = 0; j < b1; ++j) {
            for (std::size_t k = 0; k < b2; ++k) {
                if (at(i, j, k)) m.set(i, j * b2 + k);
            }
        }
    }
    return m;
}

Gf2Matrix coboundary_matrix(const SimplicialComplex& k, int n) {
    return ChainData(k).boundary(n + 1).transpose();
}

CupRing::CupRing(const SimplicialComplex& k) : chains_(k) {
    for (const auto& t : k.simplices(2)) {
        triangle_edges_.emplace_back(k.index_of(Simplex{t[0], t[1]}), k.index_of(Simplex{t[1], t[2]}));
    }
    auto cocycles = kernel_basis(chains_.boundary(2).transpose());
    auto coboundaries = image_basis(chains_.boundary(1).transpose());
    for (auto& v : complement_representatives(coboundaries, cocycles)) {
        h1_basis_.push_back(Cochain{1, std::move(v)});
    }
    h2_cycles_ = homology_basis(chains_, 2);
}

Cochain CupRing::cup(const Cochain& a, const Cochain& b) const {
    const auto edges = complex().count(1);
    if (a.degree != 1 || b.degree != 1 || a.values.size() != edges || b.values.size() != edges) {
        throw PreconditionError("cup_1_1 needs two 1-cochains indexed by the complex's edges");
    }
    Cochain out{2, Gf2Vector(triangle_edges_.size())};
    for (std::size_t t = 0; t < triangle_edges_.size(); ++t) {
        const auto [front, back] = triangle_edges_[t];
        if (a.values.get(front) && b.values.get(back)) out.values.set(t);
    }
    return out;
}

Cochain CupRing::coboundary(const Cochain& c) const {
    const auto& d = chains_.boundary(c.degree + 1);
    if (c.values.size() != d.rows()) throw PreconditionError("cochain length does not match complex");
    // (δc)(σ) = c(∂σ): multiply by the transpose of d_{n+1}
    return Cochain{c.degree + 1, d.transpose() * c.values};
}

Gf2Vector CupRing::h2_class(const Cochain& c) const {
    if (c.degree != 2 || c.values.size() != complex().count(2)) {
        throw PreconditionError("h2_class needs a 2-cochain of the complex");
    }
    Gf2Vector out(h2_cycles_.size());
    for (std::size_t k = 0; k < h2_cycles_.size(); ++k) {
        if (c.values.dot(h2_cycles_[k])) out.set(k);
    }
    return out;
}

PairingTensor CupRing::pairing_tensor() const {
    PairingTensor t;
    t.b1 = h1_basis_.size();
    t.b2 = h2_cycles_.size();
    t.entries.assign(t.b1 * t.b1 * t.b2, 0);
    for (std::size_t i = 0; i < t.b1; ++i) {
        for (std::size_t j = 0; j < t.b1; ++j) {
            auto cls = h2_class(cup(h1_basis_[i], h1_basis_[j]));
            for (auto k : cls.support()) t.entries[(i * t.b1 + j) * t.b2 + k] = 1;
        }
    }
    return t;
}

bool CupRing::has_property_a() const {
    if (h1_basis_.empty()) return true;
    return rank(pairing_tensor().flattened()) == h1_basis_.size();
}

std::optional<Cochain> CupRing::property_a_witness() const {
    if (h1_basis_.empty()) return std::nullopt;
    auto left_kernel = kernel_basis(pairing_tensor().flattened().transpose());
    if (left_kernel.empty()) return std::nullopt;
    Cochain alpha{1, Gf2Vector(complex().count(1))};
    for (auto i : left_kernel.front().support()) alpha.values += h1_basis_[i].values;
    return alpha;
}

bool CupRing::cup_squares_vanish() const {
    for (const auto& a : h1_basis_) {
        if (!h2_class(cup(a, a)).is_zero()) return false;
    }
    return true;
}

Cochain cup_1_1(const SimplicialComplex& k, const Cochain& a, const Cochain& b) {
    return CupRing(k).cup(a, b);
}

std::vector<Cochain> h1_cocycle_basis(const SimplicialComplex& k) { return CupRing(k).h1_basis(); }

PairingTensor pairing_tensor(const SimplicialComplex& k) { return CupRing(k).pairing_tensor(); }

bool has_property_A(const SimplicialComplex& k) { return CupRing(k).has_property_a(); }

std::optional<Cochain> property_a_witness(const SimplicialComplex& k) {
    return CupRing(k).property_a_witness();
}

}  // namespace covtype
