#include "covtype/io.hpp"

#include <fstream>
#include <sstream>

#include "covtype/errors.hpp"

namespace covtype {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace

ComplexFile parse_complex_file(std::string_view text) {
    ComplexFile file;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto hash = line.find('#');
        if (hash != std::string_view::npos) {
            auto comment = trim(line.substr(hash + 1));
            constexpr std::string_view key = "surface:";
            if (comment.starts_with(key)) file.surface = std::string(trim(comment.substr(key.size())));
            line = line.substr(0, hash);
        }
        std::istringstream tokens{std::string(line)};
        std::vector<std::string> labels;
        for (std::string tok; tokens >> tok;) labels.push_back(std::move(tok));
        if (labels.empty()) continue;
        try {
            std::vector<VertexLabel> verts(labels.begin(), labels.end());
            Simplex s(std::move(verts));
        } catch (const MalformedInputError& e) {
            throw ParseError(line_no, e.what());
        }
        file.simplices.push_back(std::move(labels));
    }
    if (file.simplices.empty()) throw ParseError(line_no, "file contains no simplices");
    file.complex = build_complex(file.simplices);
    return file;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ComplexFile read_complex_file(const std::filesystem::path& path) {
    return parse_complex_file(read_text_file(path));
}

std::string write_complex_file(const SimplicialComplex& k, const std::optional<std::string>& surface) {
    std::string out;
    if (surface) out += "# surface: " + *surface + "\n";
    for (const auto& s : k.maximal_simplices()) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += s[i].str();
        }
        out += '\n';
    }
    return out;
}

std::string input_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    return out;
}

}  // namespace covtype
