#include "sdc/catalog.hpp"

// Embedded catalog text.  Keep kCatalogChecksum in sync with any edit; the
// loader refuses a mismatch.

namespace sdc {

const char* const kCatalogText = R"CAT(# Recorded codes: construction parameters and neighbour chains.
#
#   <id> construction <ring> <n> <lambda> <mu> <a> <b> <c> <xi> d= j= alpha= beta= aut=
#   <id> neighbour <parent> <x0> d= j= alpha= beta= aut=
#
# Vectors use the symbol codec 0 1 2 3 for 0, 1, u, 1+u; '-' marks a field
# with no recorded value.  j indexes the weight enumerator family at the
# code's length.  Seed entries (suffix s) exist to parent neighbour records;
# C34s.1 lives over F2+uF2 and its recorded values are those of its binary
# image of length 68.
C54s.1 construction F2 13 1 1 0111000101101 1101110000100 0101111110011 001101 d=- j=- alpha=- beta=- aut=-
C54.1 neighbour C54s.1 000001100101001000111101101 d=10 j=1 alpha=23 beta=- aut=3
C68.1 construction F2u 8 1 1 22120031 02331100 33331213 101132 d=12 j=1 alpha=110 beta=- aut=2
C68.2 construction F2u 8 1 1 10021300 31232012 30313131 120023 d=12 j=1 alpha=124 beta=- aut=2
C68.3 construction F2u 8 1 1 01323103 20022123 00300222 013332 d=12 j=2 alpha=20 beta=1 aut=2
C68.4 construction F2u 8 1 3 01230200 13010312 22003002 102232 d=12 j=2 alpha=28 beta=1 aut=2
C68.5 construction F2u 8 1 1 31221023 30003111 13012103 233310 d=12 j=2 alpha=32 beta=1 aut=2
C68.6 construction F2u 8 1 1 03210210 32221121 13331101 122201 d=12 j=2 alpha=34 beta=1 aut=2
C68.7 construction F2u 8 1 1 00030320 21031233 32100012 122201 d=12 j=2 alpha=36 beta=1 aut=2
C34s.1 construction F2u 8 1 1 01323103 20022123 00300222 013332 d=12 j=2 alpha=20 beta=1 aut=-
C68.8 neighbour C34s.1 0101010011111010001101100011011100 d=12 j=1 alpha=113 beta=- aut=1
C68.9 neighbour C34s.1 1110010011100001110010110111100100 d=12 j=1 alpha=114 beta=- aut=1
C68.10 neighbour C34s.1 1010100100010111000000100111010111 d=12 j=1 alpha=116 beta=- aut=1
C68.11 neighbour C34s.1 0011000011011101010101010100010000 d=12 j=1 alpha=118 beta=- aut=1
C68.12 neighbour C34s.1 0101010001111010000101100011011111 d=12 j=1 alpha=121 beta=- aut=1
C68.13 neighbour C34s.1 0011001001011000000110010111110101 d=12 j=1 alpha=123 beta=- aut=1
C68.14 neighbour C34s.1 0101110101111010001101100011011101 d=12 j=2 alpha=37 beta=1 aut=1
C82.1 construction F2 20 1 1 00110011100000000110 00100110011101010011 00010010010001000001 101010 d=14 j=2 alpha=-738 beta=18 aut=1
C82.2 construction F2 20 1 1 11001011011010110101 10011010011011010000 01010011100101001010 101010 d=14 j=2 alpha=-736 beta=18 aut=1
C82.3 construction F2 20 1 1 00011110011001011110 01010101010011110100 10101110111000111011 101010 d=14 j=2 alpha=-734 beta=18 aut=1
C82.4 construction F2 20 1 1 00000110100111111111 00110110000111101000 11111011010111011000 101001 d=14 j=2 alpha=-714 beta=18 aut=1
C82.5 construction F2 20 1 1 11100011011110101011 11110001101100110011 00100010100000001010 101010 d=14 j=2 alpha=-706 beta=18 aut=1
C82.6 construction F2 20 1 1 11111110010110010010 10001001101001001110 01111010111110011001 101001 d=14 j=2 alpha=-688 beta=18 aut=1
C82.7 construction F2 20 1 1 00111010001011010100 11001010111101110001 10001100011010110001 101010 d=14 j=2 alpha=-662 beta=18 aut=1
C82.8 construction F2 20 1 1 00110011011011110001 00101110100101000100 10110001110000000001 101110 d=14 j=3 alpha=-828 beta=0 aut=1
C82.9 construction F2 20 1 1 10000011001000100011 00110001010001110100 00010001110001000101 101101 d=14 j=3 alpha=-816 beta=0 aut=1
C82.10 construction F2 20 1 1 11101110100101100010 01110011001100110001 00010100000110011010 101101 d=14 j=3 alpha=-812 beta=0 aut=1
C82.11 construction F2 20 1 1 00011011111101000011 11000000001100111001 10100000101010010010 101110 d=14 j=3 alpha=-798 beta=0 aut=1
C82.12 construction F2 20 1 1 00011110101110000110 11000011010011000101 01001010001111101110 101110 d=14 j=3 alpha=-786 beta=0 aut=1
C82.13 construction F2 20 1 1 00100000101100010000 11010101010010100011 01011101110000111001 101101 d=14 j=3 alpha=-778 beta=0 aut=1
C82.14 construction F2 20 1 1 10001111010001011100 00000001010010011000 01101011111010000110 101101 d=14 j=3 alpha=-776 beta=0 aut=1
C82.15 construction F2 20 1 1 10011111001010110001 11000010101110010110 01000011001011110111 101110 d=14 j=3 alpha=-818 beta=1 aut=1
C82.16 construction F2 20 1 1 11100100001011100001 00101100110000110100 00011111001001111100 101101 d=14 j=3 alpha=-838 beta=2 aut=1
C82.17 construction F2 20 1 1 10001110110000101100 00111010000111110010 01110111101001100001 101110 d=14 j=3 alpha=-818 beta=2 aut=1
C82.18 construction F2 20 1 1 00001101111100100101 00011001110100011111 01001100001011101111 101110 d=14 j=3 alpha=-854 beta=5 aut=1
C94.1 construction F2 23 1 1 01111111111001110101110 01101101000111011010001 00001000000000000000000 001110 d=16 j=1 alpha=4646 beta=-92 aut=46
C94.2 construction F2 23 1 1 10010111111101010000010 11100100111001001111001 00001000000000000000000 001110 d=16 j=1 alpha=3450 beta=-46 aut=46
C94.3 construction F2 23 1 1 01100111001001011111010 10110101001111101000010 11010111010100010110011 001110 d=16 j=1 alpha=3680 beta=-46 aut=23
C94.4 construction F2 23 1 1 10010101100111000001101 11010000110110110000001 01010001111011001010111 110010 d=16 j=1 alpha=3772 beta=-46 aut=23
C94.5 construction F2 23 1 1 00000111101001000010100 11110100110110100111000 01001111001111101100100 001101 d=16 j=1 alpha=4186 beta=-46 aut=23
C94.6 construction F2 23 1 1 11011110010100111000000 01110100011001101101111 01110000001111000111111 001101 d=16 j=1 alpha=2944 beta=-23 aut=23
C94.7 construction F2 23 1 1 01011011110110010001110 10010110110110001100101 00000100000000000000000 110010 d=16 j=1 alpha=3680 beta=-23 aut=23
C94.8 construction F2 23 1 1 01100001100001100101010 11111101000110000010101 00100000000000000000000 001101 d=16 j=1 alpha=2346 beta=0 aut=46
C94.9 construction F2 23 1 1 00000111001111011011110 11100000000100010011010 01101111110111000010001 110010 d=16 j=1 alpha=2530 beta=0 aut=23
C94.10 construction F2 23 1 1 01101101011111000010001 10100110011101001101101 01011000110000010010101 110010 d=16 j=1 alpha=2576 beta=0 aut=23
C94.11 construction F2 23 1 1 11010010011100001111011 10001110000000010001110 11101110011100011101000 110010 d=16 j=1 alpha=3496 beta=0 aut=23
C94.12 construction F2 23 1 1 10101100011011001010111 00010010000011111000010 00111100000011101111110 001101 d=16 j=1 alpha=3588 beta=0 aut=23
)CAT";

const uint64_t kCatalogChecksum = 0x3cb6911c52bcd648ULL;

} // namespace sdc
