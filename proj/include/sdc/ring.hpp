#pragma once

// Coefficient alphabets for the code constructions: the binary field F2 and
// the four-element chain ring F2+uF2, where u^2 = 0.  An element is written
// a + b*u with a, b in {0,1}; addition is componentwise xor (characteristic 2)
// and multiplication follows (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + b1 a2) u.
//
// Transport symbols are the quaternary digits 0, 1, 2, 3 standing for
// 0, 1, u, 1+u; F2 data uses the {0,1} subset of the same codec.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sdc {

enum class RingId : uint8_t { F2, F2u };

std::string ring_name(RingId r);
RingId parse_ring(const std::string& name);

// Immutable alphabet element.  The u-part is always zero for F2 elements.
struct Elem {
    RingId ring = RingId::F2;
    uint8_t a = 0;
    uint8_t b = 0;

    bool operator==(const Elem&) const = default;
};

Elem make_elem(RingId r, unsigned a, unsigned b = 0);
Elem zero(RingId r);
Elem one(RingId r);

// Mixed-ring operands are a programming error and throw std::invalid_argument.
Elem add(Elem x, Elem y);
Elem mul(Elem x, Elem y);
Elem square(Elem x);
bool is_zero(Elem x);
bool is_unit(Elem x);
bool is_involution(Elem x);   // x*x == 1
Elem inverse(Elem x);         // throws for non-units

char to_symbol(Elem x);
Elem from_symbol(char c, RingId r);

// Coordinate vector over a single ring, with string transport in the symbol codec.
struct RingVector {
    RingId ring = RingId::F2;
    std::vector<Elem> coords;

    RingVector() = default;
    RingVector(RingId r, size_t n) : ring(r), coords(n, zero(r)) {}

    size_t size() const { return coords.size(); }
    Elem& operator[](size_t i) { return coords[i]; }
    const Elem& operator[](size_t i) const { return coords[i]; }
    bool operator==(const RingVector&) const = default;
};

RingVector parse_vector(const std::string& symbols, RingId r);
std::string to_string(const RingVector& v);

RingVector add(const RingVector& x, const RingVector& y);
Elem dot(const RingVector& x, const RingVector& y);
RingVector scale(Elem s, const RingVector& v);

} // namespace sdc
