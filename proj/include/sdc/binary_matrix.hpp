#pragma once

// Dense GF(2) matrices packed 64 columns per uint64_t word, row-major.
// Column c of row r sits at bit (c % 64) of word (c / 64); bits past the
// column count are kept zero so whole-word xors and popcounts stay valid.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sdc {

class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);

    static BinaryMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return wpr_; }

    bool get(size_t r, size_t c) const;
    void set(size_t r, size_t c, bool v);

    std::span<uint64_t> row(size_t r) { return {w_.data() + r * wpr_, wpr_}; }
    std::span<const uint64_t> row(size_t r) const { return {w_.data() + r * wpr_, wpr_}; }

    void xor_rows(size_t dst, size_t src);
    void swap_rows(size_t r1, size_t r2);
    size_t row_weight(size_t r) const;
    bool row_is_zero(size_t r) const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

size_t word_weight(std::span<const uint64_t> w);
size_t dot_weight(std::span<const uint64_t> x, std::span<const uint64_t> y); // popcount of x & y
bool parity(std::span<const uint64_t> x, std::span<const uint64_t> y);       // GF(2) inner product

BinaryMatrix add(const BinaryMatrix& x, const BinaryMatrix& y);
BinaryMatrix mul(const BinaryMatrix& x, const BinaryMatrix& y);
BinaryMatrix transpose(const BinaryMatrix& m);
BinaryMatrix vstack(const BinaryMatrix& top, const BinaryMatrix& bottom);

// Reduced row echelon form.  Pivot columns are searched in the order given by
// col_order (natural order when omitted); pivots are reported as column
// indices in the order their rows appear.  Zero rows sink to the bottom.
struct RrefResult {
    BinaryMatrix mat;
    std::vector<size_t> pivots;
};
RrefResult rref_f2(const BinaryMatrix& m);
RrefResult rref_f2(const BinaryMatrix& m, std::span<const size_t> col_order);

size_t rank_f2(const BinaryMatrix& m);

// Basis of the right kernel {v : m v^T = 0}, one vector per row,
// (cols - rank) rows in total.
BinaryMatrix kernel_f2(const BinaryMatrix& m);

// Row-space intersection, computed through the kernels of the two inputs.
BinaryMatrix intersect_rowspaces(const BinaryMatrix& x, const BinaryMatrix& y);

} // namespace sdc
