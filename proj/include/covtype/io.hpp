#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covtype/complex.hpp"

namespace covtype {

/// Contents of a complex file: one maximal simplex per line, labels
/// separated by whitespace, '#' to end of line is a comment. A comment of
/// the form "# surface: <name>" declares the surface the file triangulates.
struct ComplexFile {
    SimplicialComplex complex;
    std::vector<std::vector<std::string>> simplices;
    std::optional<std::string> surface;
};

ComplexFile parse_complex_file(std::string_view text);

/// Throws ParseError (line 0) if the file cannot be read.
ComplexFile read_complex_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Maximal simplices in canonical order, LF line endings.
std::string write_complex_file(const SimplicialComplex& k, const std::optional<std::string>& surface = {});

/// 64-bit FNV-1a digest, rendered as 16 hex digits.
std::string input_digest(std::string_view bytes);

}  // namespace covtype
