#include "sdc/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdc {

BinaryCode BinaryCode::from_generator(const BinaryMatrix& rows)
{
    RrefResult red = rref_f2(rows);
    BinaryCode c;
    c.gen_ = BinaryMatrix(red.pivots.size(), rows.cols());
    for (size_t r = 0; r < c.gen_.rows(); ++r)
        std::copy(red.mat.row(r).begin(), red.mat.row(r).end(), c.gen_.row(r).begin());
    c.pivots_ = std::move(red.pivots);
    return c;
}

bool BinaryCode::contains(std::span<const uint64_t> word) const
{
    if (word.size() != gen_.words_per_row())
        throw std::invalid_argument("BinaryCode::contains(): word size mismatch");
    std::vector<uint64_t> w(word.begin(), word.end());
    for (size_t r = 0; r < gen_.rows(); ++r) {
        size_t p = pivots_[r];
        if ((w[p / 64] >> (p % 64)) & 1u) {
            auto g = gen_.row(r);
            for (size_t i = 0; i < w.size(); ++i)
                w[i] ^= g[i];
        }
    }
    return std::all_of(w.begin(), w.end(), [](uint64_t x) { return x == 0; });
}

bool is_self_dual(const BinaryCode& c)
{
    if (c.length() == 0 || c.length() % 2 != 0 || c.dim() * 2 != c.length())
        return false;
    const BinaryMatrix& g = c.generator();
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = i; j < g.rows(); ++j)
            if (parity(g.row(i), g.row(j)))
                return false;
    return true;
}

CodeType type_of(const BinaryCode& c)
{
    if (!is_self_dual(c))
        throw std::invalid_argument("type_of(): code is not self-dual");
    const BinaryMatrix& g = c.generator();
    for (size_t i = 0; i < g.rows(); ++i)
        if (g.row_weight(i) % 4 != 0)
            return CodeType::TypeI;
    // wt(x+y) = wt(x) + wt(y) - 2|x&y| and every overlap is even here, so
    // doubly-even generators span a doubly-even code.
    return CodeType::TypeII;
}

BinaryCode neighbour(const BinaryCode& cstar, const BinaryMatrix& x)
{
    if (!is_self_dual(cstar))
        throw std::invalid_argument("neighbour(): the starting code must be self-dual");
    if (x.rows() != 1 || x.cols() != cstar.length())
        throw std::invalid_argument("neighbour(): x must be a single row of matching length");
    if (x.row_weight(0) % 2 != 0)
        throw std::invalid_argument("neighbour(): x must have even weight");
    if (cstar.contains(x.row(0)))
        throw std::invalid_argument("neighbour(): x already lies in the code");

    const BinaryMatrix& g = cstar.generator();
    size_t k = cstar.dim();

    // Split the generators by their inner product with x.  Since the code is
    // self-dual and x lies outside it, at least one generator is not
    // orthogonal to x; adding one fixed such row to the others leaves k-1
    // generators of the orthogonal subcode, and x restores the dimension.
    size_t lead = k;
    for (size_t i = 0; i < k; ++i)
        if (parity(g.row(i), x.row(0))) {
            lead = i;
            break;
        }

    BinaryMatrix rows(k, cstar.length());
    size_t out = 0;
    for (size_t i = 0; i < k; ++i) {
        if (i == lead)
            continue;
        auto dst = rows.row(out);
        std::copy(g.row(i).begin(), g.row(i).end(), dst.begin());
        if (parity(g.row(i), x.row(0)))
            for (size_t w = 0; w < rows.words_per_row(); ++w)
                dst[w] ^= g.row(lead)[w];
        ++out;
    }
    std::copy(x.row(0).begin(), x.row(0).end(), rows.row(out).begin());

    return BinaryCode::from_generator(rows);
}

size_t intersection_dim(const BinaryCode& c1, const BinaryCode& c2)
{
    if (c1.length() != c2.length())
        throw std::invalid_argument("intersection_dim(): length mismatch");
    // dim(U meet V) = dim U + dim V - dim(U + V).
    size_t sum_rank = rank_f2(vstack(c1.generator(), c2.generator()));
    return c1.dim() + c2.dim() - sum_rank;
}

} // namespace sdc
