#pragma once

// Published exact values used as acceptance targets.

#include <array>

namespace reference {

// Transition matrix of the composition map for K3 x K3 at order 4, times
// 729, in the basis K4, A4, T4, S4, M4, C4, Q4, V4, D4, E4, P4.
inline constexpr std::array<std::array<int, 11>, 11> kTransitionK3K3 = {{
    {53, 0, 16, 12, 12, 24, 24, 8, 36, 4, 16},
    {0, 53, 12, 16, 24, 12, 8, 24, 4, 36, 16},
    {112, 0, 53, 48, 32, 64, 68, 32, 88, 16, 48},
    {0, 112, 48, 53, 64, 32, 32, 68, 16, 88, 48},
    {84, 24, 48, 48, 45, 64, 60, 40, 72, 32, 52},
    {24, 84, 48, 48, 64, 45, 40, 60, 32, 72, 52},
    {192, 96, 156, 144, 144, 160, 165, 136, 176, 120, 152},
    {96, 192, 144, 156, 160, 144, 136, 165, 120, 176, 152},
    {48, 24, 48, 60, 32, 56, 56, 44, 57, 32, 48},
    {24, 48, 60, 48, 56, 32, 44, 56, 32, 57, 48},
    {96, 96, 96, 96, 96, 96, 96, 96, 96, 96, 97},
}};

// Stationary type vector of the same map, times 728.
inline constexpr std::array<int, 11> kStationaryK3K3 = {17, 17, 50, 50, 51, 51, 150, 150, 48, 48, 96};

}  // namespace reference
