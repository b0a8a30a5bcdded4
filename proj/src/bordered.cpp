#include "sdc/bordered.hpp"

#include "sdc/circulant.hpp"
#include "sdc/gray.hpp"

#include <sstream>

namespace sdc {

std::string ConditionReport::describe() const
{
    std::string s;
    auto note = [&s](bool ok, const char* name) {
        if (ok)
            return;
        if (!s.empty())
            s += ", ";
        s += name;
    };
    note(orth_ab, "orth_ab");
    note(orth_c, "orth_c");
    note(xi_squares, "xi_squares");
    note(xi_annihilate, "xi_annihilate");
    note(border_rank, "border_rank");
    return s.empty() ? "none" : s;
}

uint32_t n_prime(uint32_t n)
{
    return n % 2 == 0 ? 1 : 3;
}

void validate(const ConstructionParams& p)
{
    if (p.n < 2)
        throw std::invalid_argument("validate(): n must be at least 2");
    if (p.a.ring != p.ring || p.b.ring != p.ring || p.c.ring != p.ring)
        throw std::invalid_argument("validate(): first-row ring mismatch");
    if (p.a.size() != p.n || p.b.size() != p.n || p.c.size() != p.n)
        throw std::invalid_argument("validate(): first rows must have length n");
    if (p.lambda.ring != p.ring || p.mu.ring != p.ring)
        throw std::invalid_argument("validate(): twist ring mismatch");
    if (!is_involution(p.lambda) || !is_involution(p.mu))
        throw std::invalid_argument("validate(): lambda and mu must be involutory units");
    for (const Elem& x : p.xi)
        if (x.ring != p.ring)
            throw std::invalid_argument("validate(): xi ring mismatch");
}

std::pair<RingVector, RingVector> border_vectors(const ConstructionParams& p)
{
    validate(p);
    RingVector v1(p.ring, p.n), v2(p.ring, p.n);
    for (size_t i = 0; i + 1 < p.n; ++i)
        v1[i] = p.xi[0];
    v1[p.n - 1] = p.xi[1];
    for (size_t i = 0; i + 2 < p.n; ++i)
        v2[i] = p.xi[2];
    v2[p.n - 2] = p.xi[3];
    v2[p.n - 1] = p.xi[3];
    return {v1, v2};
}

RingMatrix build_X(const ConstructionParams& p)
{
    validate(p);
    size_t n = p.n;
    RingMatrix A = circulant({p.lambda, p.a});
    RingMatrix B = circulant({p.lambda, p.b});
    RingMatrix C = circulant({p.mu, p.c});
    RingMatrix AC = mul(A, C);
    RingMatrix At = transpose(A);
    RingMatrix Bt = transpose(B);
    RingMatrix BtC = mul(Bt, C);

    RingMatrix X(p.ring, 2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            X.set(i, j, AC.get(i, j));
            X.set(i, n + j, B.get(i, j));
            X.set(n + i, j, BtC.get(i, j));
            X.set(n + i, n + j, At.get(i, j));
        }
    return X;
}

RingMatrix build_G(const ConstructionParams& p)
{
    validate(p);
    size_t n = p.n;
    auto [v1, v2] = border_vectors(p);
    RingMatrix X = build_X(p);

    RingMatrix G(p.ring, 2 * n + 1, 4 * n + 2);
    for (size_t i = 0; i < n; ++i) {
        G.set(0, i, v1[i]);
        G.set(0, n + i, v2[i]);
    }
    G.set(0, 4 * n, p.xi[4]);
    G.set(0, 4 * n + 1, p.xi[5]);

    for (size_t r = 0; r < 2 * n; ++r) {
        G.set(1 + r, r, one(p.ring));
        for (size_t c = 0; c < 2 * n; ++c)
            G.set(1 + r, 2 * n + c, X.get(r, c));
        Elem vr = r < n ? v1[r] : v2[r - n];
        G.set(1 + r, 4 * n, vr);
        G.set(1 + r, 4 * n + 1, vr);
    }
    return G;
}

ConditionReport check_conditions(const ConstructionParams& p)
{
    validate(p);
    size_t n = p.n;
    ConditionReport rep;

    CirculantSpec sa{p.lambda, p.a}, sb{p.lambda, p.b}, sc{p.mu, p.c};

    RingVector e0(p.ring, n);
    e0[0] = one(p.ring);

    // Products of equal-twist circulants are circulant, so the two
    // orthogonality conditions reduce to first-row identities.
    RingVector aat = product_first_row(sa, transpose_spec(sa));
    RingVector bbt = product_first_row(sb, transpose_spec(sb));
    rep.orth_ab = add(aat, bbt) == e0;
    rep.orth_c = product_first_row(sc, transpose_spec(sc)) == e0;

    Elem sq = add(add(square(p.xi[n_prime(p.n) - 1]), square(p.xi[1])),
                  add(square(p.xi[4]), square(p.xi[5])));
    rep.xi_squares = is_zero(sq);

    Elem t = add(add(p.xi[4], p.xi[5]), one(p.ring));
    rep.xi_annihilate = true;
    for (int j = 0; j < 4; ++j)
        if (!is_zero(mul(p.xi[j], t)))
            rep.xi_annihilate = false;

    // Border row datum (v1 A + v2 B^T | v1 B + v2 A^T | xi5 | xi6); the
    // construction needs it to span a free rank-1 module, i.e. to contain a
    // unit somewhere.
    auto [v1, v2] = border_vectors(p);
    RingMatrix A = circulant(sa), B = circulant(sb);
    RingMatrix At = transpose(A), Bt = transpose(B);
    RingVector w1 = add(vec_mat_mul(v1, A), vec_mat_mul(v2, Bt));
    RingVector w2 = add(vec_mat_mul(v1, B), vec_mat_mul(v2, At));

    RingMatrix row(p.ring, 1, 2 * n + 2);
    for (size_t i = 0; i < n; ++i) {
        row.set(0, i, w1[i]);
        row.set(0, n + i, w2[i]);
    }
    row.set(0, 2 * n, p.xi[4]);
    row.set(0, 2 * n + 1, p.xi[5]);
    rep.border_rank = free_rank(row) == 1;

    return rep;
}

uint32_t binary_length(const ConstructionParams& p)
{
    uint32_t base = 2 * (2 * p.n + 1);
    return p.ring == RingId::F2 ? base : 2 * base;
}

BinaryMatrix binary_image(const ConstructionParams& p)
{
    RingMatrix G = build_G(p);
    if (p.ring == RingId::F2)
        return G.a_plane();
    return gray_generator(G);
}

BinaryCode build_selfdual(const ConstructionParams& p)
{
    ConditionReport rep = check_conditions(p);
    if (!rep.all())
        throw BuildError("build_selfdual(): conditions failed: " + rep.describe(), rep);

    BinaryCode c = BinaryCode::from_generator(binary_image(p));
    // With the conditions verified neither of these can fail; tripping
    // here means corrupted arithmetic, not bad input.
    if (c.length() != binary_length(p) || c.dim() * 2 != c.length() || !is_self_dual(c))
        throw std::logic_error("build_selfdual(): produced code is not self-dual");
    return c;
}

std::string to_record(const ConstructionParams& p)
{
    std::ostringstream os;
    os << ring_name(p.ring) << ' ' << p.n << ' ' << to_symbol(p.lambda) << ' ' << to_symbol(p.mu)
       << ' ' << to_string(p.a) << ' ' << to_string(p.b) << ' ' << to_string(p.c) << ' ';
    for (const Elem& x : p.xi)
        os << to_symbol(x);
    return os.str();
}

ConstructionParams parse_record(const std::string& line)
{
    std::istringstream is(line);
    std::string ring_tag, lam, mu, a, b, c, xi;
    uint32_t n = 0;
    if (!(is >> ring_tag >> n >> lam >> mu >> a >> b >> c >> xi))
        throw std::invalid_argument("parse_record(): malformed params record");
    std::string tail;
    if (is >> tail)
        throw std::invalid_argument("parse_record(): trailing tokens in params record");

    ConstructionParams p;
    p.ring = parse_ring(ring_tag);
    p.n = n;
    if (lam.size() != 1 || mu.size() != 1)
        throw std::invalid_argument("parse_record(): lambda and mu must be single symbols");
    p.lambda = from_symbol(lam[0], p.ring);
    p.mu = from_symbol(mu[0], p.ring);
    p.a = parse_vector(a, p.ring);
    p.b = parse_vector(b, p.ring);
    p.c = parse_vector(c, p.ring);
    if (xi.size() != 6)
        throw std::invalid_argument("parse_record(): xi must have six symbols");
    for (size_t i = 0; i < 6; ++i)
        p.xi[i] = from_symbol(xi[i], p.ring);
    validate(p);
    return p;
}

} // namespace sdc
