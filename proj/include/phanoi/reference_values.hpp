#pragma once

// Reference values the library is checked against.

#include <array>
#include <cstdint>

namespace phanoi::reference {

// Rows h3, h4, a, b, c, d for n = 0..14.
inline constexpr std::array<std::array<std::uint64_t, 15>, 6> kCounts = {{
    {0, 1, 3, 7, 15, 31, 63, 127, 255, 511, 1023, 2047, 4095, 8191, 16383},
    {0, 1, 3, 5, 9, 13, 17, 25, 33, 41, 49, 65, 81, 97, 113},
    {0, 1, 3, 5, 9, 15, 23, 35, 53, 77, 113, 163, 235, 335, 481},
    {0, 1, 2, 4, 7, 11, 17, 26, 38, 56, 81, 117, 167, 240, 340},
    {0, 1, 2, 5, 6, 13, 15, 30, 34, 65, 72, 135, 149, 276, 304},
    {0, 1, 2, 4, 7, 11, 18, 25, 40, 54, 85, 113, 176, 231, 358},
}};

// Edge counts of H3^n, H4^n and the parity graph for n = 0..10.
inline constexpr std::array<std::uint64_t, 11> kEdgesH3 = {0, 3, 12, 39, 120, 363, 1092, 3279, 9840, 29523, 88572};
inline constexpr std::array<std::uint64_t, 11> kEdgesH4 = {0,      6,      36,     168,    720,   2976,
                                                           12096,  48768,  195840, 784896, 3142656};
inline constexpr std::array<std::uint64_t, 11> kEdgesParity = {0,    3,    14,    47,    150,  459,
                                                               1394, 4199, 12630, 37923, 113834};

}  // namespace phanoi::reference
