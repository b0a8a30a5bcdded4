#pragma once

// Binary linear codes held as a canonical reduced-row-echelon generator.
// Two codes are equal iff their canonical generators agree, which makes
// equality a row-space test.

#include "sdc/binary_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sdc {

class BinaryCode {
public:
    BinaryCode() = default;

    // Row-reduces, drops zero rows.  A zero matrix yields the zero code (k = 0).
    static BinaryCode from_generator(const BinaryMatrix& rows);

    size_t length() const { return gen_.cols(); }
    size_t dim() const { return gen_.rows(); }
    const BinaryMatrix& generator() const { return gen_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Membership of a packed word (words_per_row() words).
    bool contains(std::span<const uint64_t> word) const;

    bool operator==(const BinaryCode&) const = default;

private:
    BinaryMatrix gen_;
    std::vector<size_t> pivots_;
};

// C = C-perp, i.e. k = length/2 and the generator is self-orthogonal.
bool is_self_dual(const BinaryCode& c);

enum class CodeType { TypeI, TypeII };

// Precondition: is_self_dual(c).  A self-dual code is Type II exactly when
// every generator row weight is divisible by four; the doubly-even property
// then propagates to all codewords because pairwise overlaps are even.
CodeType type_of(const BinaryCode& c);

// Self-dual neighbour of cstar along x: the code spanned by x together with
// the codewords of cstar orthogonal to x.  Requires x of even weight and
// x outside cstar; the result is again self-dual and meets cstar in a
// subcode of dimension k-1.
BinaryCode neighbour(const BinaryCode& cstar, const BinaryMatrix& x);

size_t intersection_dim(const BinaryCode& c1, const BinaryCode& c2);

} // namespace sdc
