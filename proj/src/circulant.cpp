#include "sdc/circulant.hpp"

#include <stdexcept>

namespace sdc {

RingMatrix shift_matrix(RingId ring, size_t n, Elem lambda)
{
    if (lambda.ring != ring)
        throw std::invalid_argument("shift_matrix(): ring mismatch");
    if (n < 1)
        throw std::invalid_argument("shift_matrix(): n must be positive");
    RingMatrix p(ring, n, n);
    for (size_t i = 0; i + 1 < n; ++i)
        p.set(i, i + 1, one(ring));
    p.set(n - 1, 0, lambda);
    return p;
}

RingMatrix circulant(const CirculantSpec& s)
{
    const RingVector& a = s.first_row;
    if (s.lambda.ring != a.ring)
        throw std::invalid_argument("circulant(): ring mismatch");
    size_t n = a.size();
    if (n < 1)
        throw std::invalid_argument("circulant(): empty first row");
    RingMatrix m(a.ring, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.set(i, j, j >= i ? a[j - i] : mul(s.lambda, a[n - i + j]));
    return m;
}

bool is_lambda_circulant(const RingMatrix& m, Elem lambda)
{
    if (m.rows() != m.cols() || m.rows() == 0)
        return false;
    if (lambda.ring != m.ring())
        throw std::invalid_argument("is_lambda_circulant(): ring mismatch");
    CirculantSpec s{lambda, m.row_vector(0)};
    return circulant(s) == m;
}

RingVector product_first_row(const CirculantSpec& a, const CirculantSpec& b)
{
    if (!(a.lambda == b.lambda))
        throw std::invalid_argument("product_first_row(): twist mismatch");
    if (a.first_row.ring != b.first_row.ring || a.first_row.size() != b.first_row.size())
        throw std::invalid_argument("product_first_row(): shape or ring mismatch");
    size_t n = a.first_row.size();
    RingVector c(a.first_row.ring, n);
    for (size_t k = 0; k < n; ++k) {
        Elem acc = zero(c.ring);
        for (size_t i = 0; i < n; ++i) {
            size_t j = (k + n - i) % n;
            Elem t = mul(a.first_row[i], b.first_row[j]);
            if (i + j >= n)
                t = mul(a.lambda, t);
            acc = add(acc, t);
        }
        c[k] = acc;
    }
    return c;
}

CirculantSpec transpose_spec(const CirculantSpec& s)
{
    if (!is_unit(s.lambda))
        throw std::invalid_argument("transpose_spec(): twist must be a unit");
    size_t n = s.first_row.size();
    RingVector r(s.first_row.ring, n);
    r[0] = s.first_row[0];
    for (size_t i = 1; i < n; ++i)
        r[i] = mul(s.lambda, s.first_row[n - i]);
    return CirculantSpec{inverse(s.lambda), r};
}

} // namespace sdc
