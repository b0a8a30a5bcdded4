#pragma once

// The bordered two-block construction.  From a ring R (F2 or F2+uF2), a
// block size n >= 2, involutory units lambda and mu, three first rows a, b, c
// and six border constants xi_1..xi_6, form the (2n+1) x (4n+2) matrix
//
//         [ v1 v2 | 0  0 | xi5 xi6 ]          [ AC  B  ]
//     G = [               |  v  v  ],    X =  [         ]
//         [ I_2n  |   X   |  v  v  ]          [ B^T C  A^T ]
//
// where A = sigma_lambda(a), B = sigma_lambda(b), C = sigma_mu(c), and the
// border v = (v1, v2) repeats xi_1 down the first block with xi_2 last, and
// xi_3 down the second block with xi_4 in the last two places.
//
// G generates a self-dual code over R of length 4n+2 exactly when the five
// conditions reported by check_conditions() all hold; the binary code is the
// row space itself for F2 and the Gray image for F2+uF2.

#include "sdc/code.hpp"
#include "sdc/ring.hpp"
#include "sdc/ring_matrix.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace sdc {

struct ConstructionParams {
    RingId ring = RingId::F2;
    uint32_t n = 2;
    Elem lambda, mu;
    RingVector a, b, c;
    std::array<Elem, 6> xi{};
};

struct ConditionReport {
    bool orth_ab = false;       // A A^T + B B^T = I_n
    bool orth_c = false;        // C C^T = I_n
    bool xi_squares = false;    // xi_{n'}^2 + xi_2^2 + xi_5^2 + xi_6^2 = 0
    bool xi_annihilate = false; // xi_j (xi_5 + xi_6 + 1) = 0 for j = 1..4
    bool border_rank = false;   // free rank of the border row datum is 1

    bool all() const { return orth_ab && orth_c && xi_squares && xi_annihilate && border_rank; }
    std::string describe() const; // comma list of the failed conditions
};

class BuildError : public std::runtime_error {
public:
    BuildError(const std::string& msg, ConditionReport rep)
        : std::runtime_error(msg), report_(rep)
    {
    }
    const ConditionReport& report() const { return report_; }

private:
    ConditionReport report_;
};

// Index (1 or 3) of the border constant entering the square-sum condition;
// it tracks the parity of n.
uint32_t n_prime(uint32_t n);

// Shape and unit checks; throws std::invalid_argument on violation.
void validate(const ConstructionParams& p);

std::pair<RingVector, RingVector> border_vectors(const ConstructionParams& p);
RingMatrix build_X(const ConstructionParams& p);
RingMatrix build_G(const ConstructionParams& p);

ConditionReport check_conditions(const ConstructionParams& p);

// Length of the binary code the params produce: 2(2n+1) over F2 and twice
// that over F2+uF2 (the Gray image doubles the length).
uint32_t binary_length(const ConstructionParams& p);

// Generator of the binary code obtained from G, with no condition check;
// usable on failing params to inspect what the construction would give.
BinaryMatrix binary_image(const ConstructionParams& p);

// Full pipeline; throws BuildError when a condition fails.  The result is
// checked to be self-dual of the stated length before it is returned.
BinaryCode build_selfdual(const ConstructionParams& p);

// One-line transport format: ring n lambda mu a b c xi, space separated,
// vectors and xi in the symbol codec.
std::string to_record(const ConstructionParams& p);
ConstructionParams parse_record(const std::string& line);

} // namespace sdc
