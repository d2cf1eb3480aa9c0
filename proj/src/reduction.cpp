#include "covtype/reduction.hpp"

#include "covtype/cohomology.hpp"
#include "covtype/errors.hpp"
#include "covtype/homology.hpp"

namespace covtype {

namespace {

std::size_t betti_at(const std::vector<std::size_t>& b, std::size_t n) { return n < b.size() ? b[n] : 0; }

bool same_betti(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) {
        if (betti_at(a, n) != betti_at(b, n)) return false;
    }
    return true;
}

ReductionTrace start_trace(const SimplicialComplex& k) {
    ReductionTrace t;
    t.initial = k.f_vector();
    t.final = t.initial;
    t.betti.push_back(betti_numbers(k));
    return t;
}

/// Records a move, recomputes Betti numbers and checks them against the move kind.
void push_move(ReductionTrace& trace, const MoveResult& move) {
    auto betti = betti_numbers(move.complex);
    const auto& prev = trace.betti.back();
    if (move.record.kind == MoveKind::simplex_excision) {
        if (betti_at(betti, 0) != betti_at(prev, 0) || betti_at(betti, 1) != betti_at(prev, 1) ||
            betti_at(betti, 2) + 1 != betti_at(prev, 2)) {
            throw InconsistencyError("excision of " + move.record.data.front().to_string() +
                                     " changed Betti numbers from " + to_string(prev) + " to " +
                                     to_string(betti));
        }
    } else if (!same_betti(prev, betti)) {
        throw InconsistencyError(std::string(to_string(move.record.kind)) + " changed Betti numbers from " +
                                 to_string(prev) + " to " + to_string(betti));
    }
    trace.moves.push_back(move.record);
    trace.betti.push_back(std::move(betti));
    trace.final = move.record.after;
}

}  // namespace

void ReductionTrace::append(const ReductionTrace& other) {
    if (other.initial != final) throw InconsistencyError("appended trace does not start where this one ends");
    moves.insert(moves.end(), other.moves.begin(), other.moves.end());
    if (!other.betti.empty()) betti.insert(betti.end(), other.betti.begin() + 1, other.betti.end());
    final = other.final;
    final_property_a = other.final_property_a;
}

SimplicialComplex replay(const SimplicialComplex& initial, const ReductionTrace& trace) {
    if (initial.f_vector() != trace.initial) {
        throw InconsistencyError("replay start " + to_string(initial.f_vector()) +
                                 " does not match trace start " + to_string(trace.initial));
    }
    auto k = initial;
    for (const auto& move : trace.moves) k = apply_move(k, move).complex;
    return k;
}

std::optional<std::string> trace_violation(const ReductionTrace& trace) {
    if (trace.betti.size() != trace.moves.size() + 1) return "trace has mismatched Betti history";
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        const auto& a = trace.betti[i];
        const auto& b = trace.betti[i + 1];
        const auto& m = trace.moves[i];
        bool ok = m.kind == MoveKind::simplex_excision
                      ? betti_at(a, 0) == betti_at(b, 0) && betti_at(a, 1) == betti_at(b, 1) &&
                            betti_at(b, 2) + 1 == betti_at(a, 2)
                      : same_betti(a, b);
        if (!ok) {
            return "step " + std::to_string(i) + " (" + std::string(to_string(m.kind)) + ") took Betti " +
                   to_string(a) + " to " + to_string(b);
        }
    }
    return std::nullopt;
}

ReductionResult collapse_all(const SimplicialComplex& k) {
    ReductionResult out{k, start_trace(k)};
    while (true) {
        auto pairs = free_faces(out.complex);
        if (pairs.empty()) break;
        auto move = elementary_collapse(out.complex, pairs.front().face, pairs.front().coface);
        push_move(out.trace, move);
        out.complex = std::move(move.complex);
    }
    return out;
}

ReductionResult eliminate_maximal_edges(const SimplicialComplex& l, EliminationOptions options) {
    if (!free_faces(l).empty()) throw PreconditionError("complex has free faces; collapse first");
    if (options.require_property_a && !has_property_A(l)) {
        throw PreconditionError("cohomology ring lacks property A");
    }
    ReductionResult out{l, start_trace(l)};
    while (true) {
        auto edges = maximal_edges(out.complex);
        if (!options.require_property_a) {
            // relaxed mode: skip edges that lie on a cycle instead of failing
            std::erase_if(edges, [&](const Simplex& e) { return path_exists(out.complex, e[0], e[1], e); });
        }
        if (edges.empty()) break;
        auto move = contract_edge(out.complex, edges.front());
        push_move(out.trace, move);
        auto collapsed = collapse_all(move.complex);
        out.trace.append(collapsed.trace);
        out.complex = std::move(collapsed.complex);
    }
    return out;
}

ReductionResult excise_to_surface_homology(const SimplicialComplex& k) {
    const auto kb = betti_numbers(k);
    if (betti_at(kb, 2) != 1) {
        throw PreconditionError("b2 = " + std::to_string(betti_at(kb, 2)) + ", expected 1");
    }
    auto l = skeleton(k, 2);
    ReductionResult out{l, start_trace(l)};
    while (betti_at(out.trace.betti.back(), 2) > 1) {
        auto surplus = surplus_cycle(k, out.complex.simplices(2));
        if (!surplus) {
            throw InconsistencyError("b2(L) = " + std::to_string(betti_at(out.trace.betti.back(), 2)) +
                                     " but no 2-cycle of L bounds in K");
        }
        auto move = remove_two_simplex(out.complex, surplus->sigma);
        push_move(out.trace, move);
        out.complex = std::move(move.complex);
    }
    const auto& tb = out.trace.betti.back();
    for (std::size_t n = 0; n <= 2; ++n) {
        if (betti_at(tb, n) != betti_at(kb, n)) {
            throw InconsistencyError("excised complex has Betti " + to_string(tb) + ", K has " + to_string(kb));
        }
    }
    auto z = homology_basis(k, 2).front();
    if (!h2_epi_witness(k, out.complex, z)) {
        throw InconsistencyError("H_2 of the excised complex does not map onto H_2(K)");
    }
    return out;
}

bool BoundCertificate::holds() const noexcept { return no_free_faces_bound && edge_bound && euler_bound; }

BoundCertificate make_certificate(const SurfaceClass& s, const SimplicialComplex& final_complex,
                                  std::size_t input_vertices) {
    BoundCertificate c;
    c.surface = s.name();
    c.chi = s.chi();
    c.alpha0 = final_complex.count(0);
    c.alpha1 = final_complex.count(1);
    c.alpha2 = final_complex.count(2);
    c.input_vertices = input_vertices;
    const auto a0 = static_cast<long>(c.alpha0);
    c.no_free_faces_bound = 3 * c.alpha2 >= 2 * c.alpha1;
    c.edge_bound = 2 * c.alpha1 <= c.alpha0 * (c.alpha0 - (c.alpha0 ? 1 : 0));
    c.euler_bound = 6 * c.chi >= 6 * a0 - a0 * (a0 - 1);
    c.rho = rho(c.chi);
    return c;
}

namespace {

template <typename F>
auto in_stage(const char* stage, F&& f) {
    try {
        return f();
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(stage, e);
    }
}

}  // namespace

CertifiedReduction certify_lower_bound(const SimplicialComplex& k, const SurfaceClass& s) {
    in_stage("input", [&] {
        auto kb = betti_numbers(k);
        if (!same_betti(kb, s.betti())) {
            throw PreconditionError("Betti numbers " + to_string(kb) + " do not match " + s.name() + " " +
                                    to_string(s.betti()));
        }
        return 0;
    });
    auto excised = in_stage("excision", [&] { return excise_to_surface_homology(k); });
    auto collapsed = in_stage("collapse", [&] { return collapse_all(excised.complex); });
    auto reduced = in_stage("contraction", [&] { return eliminate_maximal_edges(collapsed.complex); });

    CertifiedReduction out{reduced.complex, excised.trace, {}};
    out.trace.append(collapsed.trace);
    out.trace.append(reduced.trace);

    out.certificate = in_stage("certificate", [&] {
        const auto& f = out.complex;
        if (f.dim() != 2 || !is_pure(f) || !free_faces(f).empty()) {
            throw InconsistencyError("final complex is not a pure 2-complex without free faces");
        }
        if (euler_characteristic(f) != s.chi()) {
            throw InconsistencyError("final chi = " + std::to_string(euler_characteristic(f)) +
                                     ", surface chi = " + std::to_string(s.chi()));
        }
        auto cert = make_certificate(s, f, k.vertex_count());
        if (!cert.holds()) throw InconsistencyError("counting inequalities fail on the final complex");
        if (static_cast<long>(cert.alpha0) < cert.rho || cert.alpha0 > cert.input_vertices) {
            throw InconsistencyError("final vertex count " + std::to_string(cert.alpha0) +
                                     " outside [rho, input vertices]");
        }
        return cert;
    });
    out.trace.final_property_a = has_property_A(out.complex);
    return out;
}

}  // namespace covtype
