#include "sdc/ring.hpp"

#include <stdexcept>

namespace sdc {

std::string ring_name(RingId r)
{
    return r == RingId::F2 ? "F2" : "F2u";
}

RingId parse_ring(const std::string& name)
{
    if (name == "F2")
        return RingId::F2;
    if (name == "F2u")
        return RingId::F2u;
    throw std::invalid_argument("parse_ring(): unknown ring tag '" + name + "'");
}

Elem make_elem(RingId r, unsigned a, unsigned b)
{
    if (a > 1 || b > 1)
        throw std::invalid_argument("make_elem(): parts must be 0 or 1");
    if (r == RingId::F2 && b != 0)
        throw std::invalid_argument("make_elem(): F2 element with nonzero u-part");
    return Elem{r, static_cast<uint8_t>(a), static_cast<uint8_t>(b)};
}

Elem zero(RingId r) { return Elem{r, 0, 0}; }
Elem one(RingId r) { return Elem{r, 1, 0}; }

static void require_same_ring(Elem x, Elem y, const char* fn)
{
    if (x.ring != y.ring)
        throw std::invalid_argument(std::string(fn) + "(): ring mismatch");
}

Elem add(Elem x, Elem y)
{
    require_same_ring(x, y, "add");
    return Elem{x.ring, static_cast<uint8_t>(x.a ^ y.a), static_cast<uint8_t>(x.b ^ y.b)};
}

Elem mul(Elem x, Elem y)
{
    require_same_ring(x, y, "mul");
    // (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + b1 a2) u, since u^2 = 0.
    uint8_t a = static_cast<uint8_t>(x.a & y.a);
    uint8_t b = static_cast<uint8_t>((x.a & y.b) ^ (x.b & y.a));
    return Elem{x.ring, a, b};
}

Elem square(Elem x) { return mul(x, x); }

bool is_zero(Elem x) { return x.a == 0 && x.b == 0; }

bool is_unit(Elem x)
{
    // Units are exactly the elements outside the maximal ideal (u), i.e. those
    // with nonzero constant part; in F2+uF2 that is {1, 1+u}.
    return x.a == 1;
}

bool is_involution(Elem x) { return square(x) == one(x.ring); }

Elem inverse(Elem x)
{
    if (!is_unit(x))
        throw std::invalid_argument("inverse(): element is not a unit");
    // Both units of F2+uF2 square to 1, as does 1 in F2.
    return x;
}

char to_symbol(Elem x)
{
    static const char tab[4] = {'0', '1', '2', '3'};
    return tab[(x.b << 1) | x.a];
}

Elem from_symbol(char c, RingId r)
{
    switch (c) {
    case '0': return Elem{r, 0, 0};
    case '1': return Elem{r, 1, 0};
    case '2':
        if (r == RingId::F2)
            break;
        return Elem{r, 0, 1};
    case '3':
        if (r == RingId::F2)
            break;
        return Elem{r, 1, 1};
    default: break;
    }
    throw std::invalid_argument(std::string("from_symbol(): bad symbol '") + c + "' for ring " + ring_name(r));
}

RingVector parse_vector(const std::string& symbols, RingId r)
{
    RingVector v(r, symbols.size());
    for (size_t i = 0; i < symbols.size(); ++i)
        v[i] = from_symbol(symbols[i], r);
    return v;
}

std::string to_string(const RingVector& v)
{
    std::string s(v.size(), '0');
    for (size_t i = 0; i < v.size(); ++i)
        s[i] = to_symbol(v[i]);
    return s;
}

static void require_same_shape(const RingVector& x, const RingVector& y, const char* fn)
{
    if (x.ring != y.ring)
        throw std::invalid_argument(std::string(fn) + "(): ring mismatch");
    if (x.size() != y.size())
        throw std::invalid_argument(std::string(fn) + "(): length mismatch");
}

RingVector add(const RingVector& x, const RingVector& y)
{
    require_same_shape(x, y, "add");
    RingVector r(x.ring, x.size());
    for (size_t i = 0; i < x.size(); ++i)
        r[i] = add(x[i], y[i]);
    return r;
}

Elem dot(const RingVector& x, const RingVector& y)
{
    require_same_shape(x, y, "dot");
    Elem acc = zero(x.ring);
    for (size_t i = 0; i < x.size(); ++i)
        acc = add(acc, mul(x[i], y[i]));
    return acc;
}

RingVector scale(Elem s, const RingVector& v)
{
    RingVector r(v.ring, v.size());
    for (size_t i = 0; i < v.size(); ++i)
        r[i] = mul(s, v[i]);
    return r;
}

} // namespace sdc
