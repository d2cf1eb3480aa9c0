#pragma once

// Dense bit-packed linear algebra over the two-element field.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covtype {

class Gf2Vector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Gf2Vector() = default;
    explicit Gf2Vector(std::size_t len) : len_(len), words_((len + word_bits - 1) / word_bits, 0) {}

    static Gf2Vector unit(std::size_t len, std::size_t i);
    /// Parses a string of '0'/'1' characters, coordinate 0 first.
    static Gf2Vector from_string(std::string_view bits);
    static Gf2Vector from_support(std::size_t len, const std::vector<std::size_t>& support);

    std::size_t size() const noexcept { return len_; }

    bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i, bool value = true) {
        const Word mask = Word{1} << (i % word_bits);
        if (value) words_[i / word_bits] |= mask;
        else words_[i / word_bits] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / word_bits] ^= Word{1} << (i % word_bits); }

    /// XOR from word index `first_word` onwards; earlier words are assumed zero in rhs.
    void add_from(const Gf2Vector& rhs, std::size_t first_word);
    Gf2Vector& operator+=(const Gf2Vector& rhs);
    friend Gf2Vector operator+(Gf2Vector lhs, const Gf2Vector& rhs) { return lhs += rhs; }

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;
    /// Inner product over GF(2).
    bool dot(const Gf2Vector& rhs) const;
    std::optional<std::size_t> first_set() const noexcept;
    std::vector<std::size_t> support() const;

    /// Copy with coordinates [offset, offset + len) taken from this vector.
    Gf2Vector slice(std::size_t offset, std::size_t len) const;
    /// This vector followed by rhs.
    Gf2Vector concat(const Gf2Vector& rhs) const;

    std::span<const Word> words() const noexcept { return words_; }
    std::string to_string() const;

    friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

/// Row-major dense matrix over GF(2).
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    static Gf2Matrix identity(std::size_t n);
    static Gf2Matrix from_rows(std::vector<Gf2Vector> rows, std::size_t cols);
    static Gf2Matrix from_columns(const std::vector<Gf2Vector>& columns, std::size_t rows);
    /// Rows given as strings of '0'/'1'.
    static Gf2Matrix from_strings(const std::vector<std::string>& rows);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

    const Gf2Vector& row(std::size_t r) const { return rows_[r]; }
    Gf2Vector& row(std::size_t r) { return rows_[r]; }
    Gf2Vector column(std::size_t c) const;

    Gf2Matrix transpose() const;
    bool is_zero() const noexcept;

    Gf2Vector operator*(const Gf2Vector& x) const;
    Gf2Matrix operator*(const Gf2Matrix& rhs) const;

    /// [this | rhs]
    Gf2Matrix hstack(const Gf2Matrix& rhs) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<Gf2Vector> rows_;
};

struct RowEchelon {
    Gf2Matrix reduced;
    /// pivots[i] is the pivot column of row i, for i < rank.
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form by Gaussian elimination.
RowEchelon row_reduce(Gf2Matrix m);

std::size_t rank(const Gf2Matrix& m);

/// Canonical basis of span(vectors): the nonzero rows of the reduced row
/// echelon form, in ascending pivot order. All vectors must share a length.
std::vector<Gf2Vector> canonical_basis(const std::vector<Gf2Vector>& vectors);

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m);
std::vector<Gf2Vector> image_basis(const Gf2Matrix& m);

/// Some x with m x = b (free variables zero), or nullopt if inconsistent.
std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b);

/// Canonical basis of span(a) ∩ span(b).
std::vector<Gf2Vector> subspace_intersection(const std::vector<Gf2Vector>& a,
                                             const std::vector<Gf2Vector>& b);

bool in_span(const std::vector<Gf2Vector>& basis, const Gf2Vector& v);

}  // namespace covtype
