#include "covtype/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <utility>

#include "covtype/cohomology.hpp"
#include "covtype/errors.hpp"
#include "covtype/homology.hpp"
#include "covtype/io.hpp"
#include "covtype/reduction.hpp"
#include "covtype/surface.hpp"

namespace covtype::cli {

namespace {

/// Ordered key/value report. Machine mode prints "key: value"; human mode
/// aligns the values in a column.
class Report {
public:
    explicit Report(std::string command) { add("command", std::move(command)); }

    void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
    void add(std::string key, long value) { add(std::move(key), std::to_string(value)); }
    void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }

    void print(std::ostream& out, bool machine) const {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        for (const auto& [k, v] : rows_) {
            if (machine) out << k << ": " << v << '\n';
            else out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string join_numbers(const std::vector<std::size_t>& xs) { return to_string(xs); }

std::string join_simplices(const std::vector<Simplex>& xs) {
    std::string out;
    for (const auto& s : xs) {
        if (!out.empty()) out += ' ';
        out += s.to_string();
    }
    return out;
}

struct Loaded {
    ComplexFile file;
    std::string digest;
};

Loaded load(const std::string& path) {
    auto text = read_text_file(path);
    return {parse_complex_file(text), input_digest(text)};
}

void write_output(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(0, "cannot write '" + path + "'");
    out << text;
}

struct Options {
    bool quiet = false;
    bool machine = false;
    std::string input;
    std::string output;
    std::string surface;
    std::optional<long> chi;
};

struct Result {
    Report report;
    int code;
};

Result cmd_homology(const Options& opt) {
    auto [file, digest] = load(opt.input);
    const auto& k = file.complex;
    Report r("homology");
    r.add("input_digest", digest);
    r.add("f_vector", to_string(k.f_vector()));
    r.add("euler_characteristic", euler_characteristic(k));
    r.add("betti", join_numbers(betti_numbers(k)));
    return {std::move(r), ok};
}

Result cmd_property_a(const Options& opt) {
    auto [file, digest] = load(opt.input);
    CupRing ring(file.complex);
    Report r("property-a");
    r.add("input_digest", digest);
    r.add("b1", ring.h1_basis().size());
    r.add("b2", ring.h2_cycles().size());
    bool verdict = ring.has_property_a();
    r.add("property_a", verdict);
    if (!verdict) {
        auto alpha = *ring.property_a_witness();
        std::vector<Simplex> support;
        for (auto i : alpha.values.support()) support.push_back(file.complex.simplices(1)[i]);
        r.add("witness", join_simplices(support));
    }
    return {std::move(r), verdict ? ok : negative};
}

/// Surface class from Betti numbers; b1 even and positive is split by
/// whether all cup squares vanish (they do exactly for orientable surfaces).
std::optional<SurfaceClass> infer_surface(const SimplicialComplex& k) {
    auto b = betti_numbers(k);
    if (b.size() < 3 || b[0] != 1 || b[2] != 1) return std::nullopt;
    for (std::size_t n = 3; n < b.size(); ++n) {
        if (b[n] != 0) return std::nullopt;
    }
    const auto b1 = static_cast<int>(b[1]);
    if (b1 == 0) return SurfaceClass::orientable_genus(0);
    if (b1 % 2 == 1) return SurfaceClass::nonorientable_genus(b1);
    if (CupRing(k).cup_squares_vanish()) return SurfaceClass::orientable_genus(b1 / 2);
    return SurfaceClass::nonorientable_genus(b1);
}

Result cmd_reduce(const Options& opt) {
    auto [file, digest] = load(opt.input);
    const auto& k = file.complex;
    Report r("reduce");
    r.add("input_digest", digest);
    std::optional<SurfaceClass> s;
    if (!opt.surface.empty()) {
        s = SurfaceClass::parse(opt.surface);
        r.add("surface", s->name());
        r.add("surface_source", std::string("flag"));
    } else {
        s = infer_surface(k);
        if (!s) throw DomainError("cannot infer the surface class from homology; pass --surface");
        r.add("surface", s->name());
        r.add("surface_source", std::string("inferred"));
    }
    r.add("initial_f_vector", to_string(k.f_vector()));
    try {
        auto result = certify_lower_bound(k, *s);
        std::size_t counts[4] = {};
        for (const auto& m : result.trace.moves) ++counts[static_cast<int>(m.kind)];
        const auto& c = result.certificate;
        r.add("status", std::string("certified"));
        r.add("final_f_vector", to_string(result.complex.f_vector()));
        r.add("moves", result.trace.moves.size());
        r.add("collapses", counts[static_cast<int>(MoveKind::collapse)]);
        r.add("contractions", counts[static_cast<int>(MoveKind::edge_contraction)]);
        r.add("excisions", counts[static_cast<int>(MoveKind::simplex_excision)]);
        r.add("chi", c.chi);
        r.add("alpha0", c.alpha0);
        r.add("alpha1", c.alpha1);
        r.add("alpha2", c.alpha2);
        r.add("ineq_3a2_ge_2a1", c.no_free_faces_bound);
        r.add("ineq_a1_le_pairs", c.edge_bound);
        r.add("ineq_euler", c.euler_bound);
        r.add("rho", c.rho);
        r.add("alpha0_ge_rho", static_cast<long>(c.alpha0) >= c.rho);
        r.add("property_a", result.trace.final_property_a.value_or(false));
        if (!opt.output.empty()) {
            write_output(opt.output, write_complex_file(result.complex));
            r.add("output", opt.output);
        }
        return {std::move(r), ok};
    } catch (const StageError& e) {
        r.add("status", std::string("failed"));
        r.add("stage", e.stage());
        r.add("error_kind", std::string(to_string(e.kind())));
        r.add("error", std::string(e.what()));
        return {std::move(r), negative};
    }
}

Result cmd_surface(const Options& opt) {
    auto [file, digest] = load(opt.input);
    const auto& k = file.complex;
    auto check = check_closed_surface(k);
    Report r("surface");
    r.add("input_digest", digest);
    r.add("pure2", check.pure2);
    r.add("every_edge_in_two_triangles", check.every_edge_in_two_triangles);
    r.add("strongly_connected", check.strongly_connected);
    r.add("all_links_single_circles", check.all_links_single_circles);
    r.add("verdict", check.verdict);
    if (!check.witnesses.empty()) {
        std::string w;
        for (const auto& x : check.witnesses) {
            if (!w.empty()) w += ' ';
            w += x.condition + "=" + x.simplex.to_string();
        }
        r.add("witnesses", w);
    }
    if (!check.verdict) return {std::move(r), negative};
    auto s = classify_surface(k);
    r.add("surface", s.name());
    r.add("orientable", s.orientable());
    r.add("chi", s.chi());
    r.add("rho", rho(s.chi()));
    r.add("delta", delta(s));
    r.add("ct", covering_type(s));
    return {std::move(r), ok};
}

Result cmd_construct_m2(const Options& opt) {
    auto [file, digest] = load(opt.input);
    Report r("construct-m2");
    r.add("input_digest", digest);
    try {
        auto k = build_nine_vertex_m2(file.complex);
        r.add("status", std::string("constructed"));
        r.add("f_vector", to_string(k.f_vector()));
        r.add("euler_characteristic", euler_characteristic(k));
        r.add("betti", join_numbers(betti_numbers(k)));
        r.add("property_a", has_property_A(k));
        r.add("surface_check", check_closed_surface(k).verdict);
        if (!opt.output.empty()) {
            write_output(opt.output, write_complex_file(k));
            r.add("output", opt.output);
        }
        return {std::move(r), ok};
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        r.add("status", std::string("failed"));
        r.add("error_kind", std::string(to_string(e.kind())));
        r.add("error", std::string(e.what()));
        return {std::move(r), negative};
    }
}

Result cmd_bounds(const Options& opt) {
    Report r("bounds");
    if (!opt.surface.empty()) {
        auto s = SurfaceClass::parse(opt.surface);
        r.add("surface", s.name());
        r.add("chi", s.chi());
        r.add("rho", rho(s.chi()));
        r.add("delta", delta(s));
        r.add("ct", covering_type(s));
    } else {
        r.add("chi", *opt.chi);
        r.add("rho", rho(*opt.chi));
    }
    return {std::move(r), ok};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covering type of closed surfaces: mod-2 homology, property A, reductions and bounds",
                 "covtype"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--quiet", opt.quiet, "Print nothing on success; errors still go to stderr");
    app.add_flag("--machine", opt.machine, "Print reports as key: value lines");

    std::function<Result(const Options&)> action;
    auto file_command = [&](const char* name, const char* help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", opt.input, "Complex file")->required();
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    file_command("homology", "Mod-2 Betti numbers and Euler characteristic", cmd_homology);
    file_command("property-a", "Decide property A of the mod-2 cup product", cmd_property_a);
    auto* reduce = file_command("reduce", "Run the reduction pipeline and certify the vertex bound", cmd_reduce);
    reduce->add_option("-o,--output", opt.output, "Write the reduced complex here");
    reduce->add_option("--surface", opt.surface, "Surface class (S2, T2, M_g, N_k)");
    file_command("surface", "Closed-surface recognition and classification", cmd_surface);
    auto* m2 = file_command("construct-m2", "Nine-vertex complex homotopy equivalent to M_2", cmd_construct_m2);
    m2->add_option("-o,--output", opt.output, "Write the constructed complex here");

    auto* bounds = app.add_subcommand("bounds", "rho, delta and covering type");
    auto* chi_opt = bounds->add_option("--chi", opt.chi, "Euler characteristic");
    auto* surf_opt = bounds->add_option("--surface", opt.surface, "Surface name (S2, T2, RP2, M_g, N_k)");
    chi_opt->excludes(surf_opt);
    bounds->callback([&] {
        if (!opt.chi && opt.surface.empty()) throw CLI::ValidationError("bounds", "give --chi or --surface");
        action = cmd_bounds;
    });

    std::vector<std::string> argv_storage{"covtype"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        auto result = action(opt);
        if (!opt.quiet) result.report.print(out, opt.machine);
        return result.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const MalformedInputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return negative;
    }
}

}  // namespace covtype::cli
