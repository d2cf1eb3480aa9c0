#include "covtype/gf2.hpp"

#include <algorithm>
#include <bit>

#include "covtype/errors.hpp"

namespace covtype {

Gf2Vector Gf2Vector::unit(std::size_t len, std::size_t i) {
    Gf2Vector v(len);
    v.set(i);
    return v;
}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i);
        else if (bits[i] != '0') throw MalformedInputError("bit string contains non-binary digit");
    }
    return v;
}

Gf2Vector Gf2Vector::from_support(std::size_t len, const std::vector<std::size_t>& support) {
    Gf2Vector v(len);
    for (auto i : support) v.set(i);
    return v;
}

void Gf2Vector::add_from(const Gf2Vector& rhs, std::size_t first_word) {
    for (std::size_t w = first_word; w < words_.size(); ++w) words_[w] ^= rhs.words_[w];
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& rhs) {
    if (rhs.len_ != len_) throw PreconditionError("GF(2) vector length mismatch");
    add_from(rhs, 0);
    return *this;
}

bool Gf2Vector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Gf2Vector::popcount() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool Gf2Vector::dot(const Gf2Vector& rhs) const {
    if (rhs.len_ != len_) throw PreconditionError("GF(2) vector length mismatch");
    Word acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & rhs.words_[w];
    return std::popcount(acc) & 1;
}

std::optional<std::size_t> Gf2Vector::first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return w * word_bits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
}

std::vector<std::size_t> Gf2Vector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits) {
            out.push_back(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

Gf2Vector Gf2Vector::slice(std::size_t offset, std::size_t len) const {
    if (offset + len > len_) throw PreconditionError("GF(2) slice out of range");
    Gf2Vector out(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (get(offset + i)) out.set(i);
    }
    return out;
}

Gf2Vector Gf2Vector::concat(const Gf2Vector& rhs) const {
    Gf2Vector out(len_ + rhs.len_);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    for (auto i : rhs.support()) out.set(len_ + i);
    return out;
}

std::string Gf2Vector::to_string() const {
    std::string out(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) out[i] = '1';
    }
    return out;
}

// ---------------------------------------------------------------------------

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vector(cols)) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::vector<Gf2Vector> rows, std::size_t cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) throw PreconditionError("row length does not match column count");
    }
    Gf2Matrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

Gf2Matrix Gf2Matrix::from_columns(const std::vector<Gf2Vector>& columns, std::size_t rows) {
    Gf2Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw PreconditionError("column length does not match row count");
        for (auto r : columns[c].support()) m.set(r, c);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<Gf2Vector> vs;
    for (const auto& r : rows) vs.push_back(Gf2Vector::from_string(r));
    std::size_t cols = vs.empty() ? 0 : vs.front().size();
    return from_rows(std::move(vs), cols);
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
    Gf2Vector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (get(r, c)) v.set(r);
    }
    return v;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (auto c : rows_[r].support()) t.set(c, r);
    }
    return t;
}

bool Gf2Matrix::is_zero() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [](const Gf2Vector& r) { return r.is_zero(); });
}

Gf2Vector Gf2Matrix::operator*(const Gf2Vector& x) const {
    if (x.size() != cols_) throw PreconditionError("matrix-vector dimension mismatch");
    Gf2Vector y(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (rows_[r].dot(x)) y.set(r);
    }
    return y;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
    if (rhs.rows() != cols_) throw PreconditionError("matrix-matrix dimension mismatch");
    Gf2Matrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (auto k : rows_[r].support()) out.rows_[r] += rhs.rows_[k];
    }
    return out;
}

Gf2Matrix Gf2Matrix::hstack(const Gf2Matrix& rhs) const {
    if (rhs.rows() != rows()) throw PreconditionError("hstack row count mismatch");
    std::vector<Gf2Vector> rows;
    rows.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) rows.push_back(rows_[r].concat(rhs.rows_[r]));
    return from_rows(std::move(rows), cols_ + rhs.cols_);
}

// ---------------------------------------------------------------------------

RowEchelon row_reduce(Gf2Matrix m) {
    RowEchelon out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        std::size_t p = next;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        std::swap(m.row(p), m.row(next));
        const auto& pivot = m.row(next);
        const std::size_t first_word = c / Gf2Vector::word_bits;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != next && m.get(r, c)) m.row(r).add_from(pivot, first_word);
        }
        out.pivots.push_back(c);
        ++next;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Gf2Matrix& m) { return row_reduce(m).rank(); }

std::vector<Gf2Vector> canonical_basis(const std::vector<Gf2Vector>& vectors) {
    if (vectors.empty()) return {};
    auto len = vectors.front().size();
    auto ech = row_reduce(Gf2Matrix::from_rows(vectors, len));
    std::vector<Gf2Vector> out;
    out.reserve(ech.rank());
    for (std::size_t i = 0; i < ech.rank(); ++i) out.push_back(ech.reduced.row(i));
    return out;
}

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& m) {
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    std::vector<Gf2Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Gf2Vector x = Gf2Vector::unit(m.cols(), f);
        for (std::size_t i = 0; i < ech.rank(); ++i) {
            if (ech.reduced.get(i, f)) x.set(ech.pivots[i]);
        }
        basis.push_back(std::move(x));
    }
    return canonical_basis(basis);
}

std::vector<Gf2Vector> image_basis(const Gf2Matrix& m) {
    if (m.cols() == 0) return {};
    auto t = m.transpose();
    std::vector<Gf2Vector> columns;
    columns.reserve(t.rows());
    for (std::size_t c = 0; c < t.rows(); ++c) columns.push_back(t.row(c));
    return canonical_basis(columns);
}

std::optional<Gf2Vector> solve(const Gf2Matrix& m, const Gf2Vector& b) {
    if (b.size() != m.rows()) throw PreconditionError("right-hand side length does not match rows");
    auto aug = m.hstack(Gf2Matrix::from_columns({b}, m.rows()));
    auto ech = row_reduce(std::move(aug));
    Gf2Vector x(m.cols());
    for (std::size_t i = 0; i < ech.rank(); ++i) {
        if (ech.pivots[i] == m.cols()) return std::nullopt;
        if (ech.reduced.get(i, m.cols())) x.set(ech.pivots[i]);
    }
    return x;
}

namespace {

std::size_t common_length(const std::vector<Gf2Vector>& a, const std::vector<Gf2Vector>& b) {
    std::optional<std::size_t> len;
    for (const auto* set : {&a, &b}) {
        for (const auto& v : *set) {
            if (!len) len = v.size();
            else if (*len != v.size()) throw PreconditionError("subspace vectors differ in length");
        }
    }
    return len.value_or(0);
}

}  // namespace

std::vector<Gf2Vector> subspace_intersection(const std::vector<Gf2Vector>& a,
                                             const std::vector<Gf2Vector>& b) {
    const auto len = common_length(a, b);
    if (a.empty() || b.empty()) return {};
    // Solutions of A x = B y give the intersection as A x.
    auto ma = Gf2Matrix::from_columns(a, len);
    auto stacked = ma.hstack(Gf2Matrix::from_columns(b, len));
    std::vector<Gf2Vector> out;
    for (const auto& k : kernel_basis(stacked)) {
        auto v = ma * k.slice(0, a.size());
        if (!v.is_zero()) out.push_back(std::move(v));
    }
    return canonical_basis(out);
}

bool in_span(const std::vector<Gf2Vector>& basis, const Gf2Vector& v) {
    if (v.is_zero()) return true;
    if (basis.empty()) return false;
    return solve(Gf2Matrix::from_columns(basis, v.size()), v).has_value();
}

}  // namespace covtype
