#pragma once

// Length-optimal sorting networks for 2..16 channels, in execution order.
// Every table is checked by exhaustive 0-1 validation in tests/unit/network_test.cpp.

#include <array>
#include <span>

#include "smallsort/comparator.hpp"

namespace smallsort::detail {

inline constexpr std::array<Comparator, 1> kBest2{{
    {0, 1},
}};

inline constexpr std::array<Comparator, 3> kBest3{{
    {1, 2}, {0, 2}, {0, 1},
}};

inline constexpr std::array<Comparator, 5> kBest4{{
    {0, 1}, {2, 3}, {0, 2}, {1, 3}, {1, 2},
}};

inline constexpr std::array<Comparator, 9> kBest5{{
    {0, 1}, {3, 4}, {2, 4}, {2, 3}, {0, 3}, {0, 2},
    {1, 4}, {1, 3}, {1, 2},
}};

inline constexpr std::array<Comparator, 12> kBest6{{
    {1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4},
    {0, 3}, {1, 4}, {2, 5}, {2, 4}, {1, 3}, {2, 3},
}};

inline constexpr std::array<Comparator, 16> kBest7{{
    {1, 2}, {0, 2}, {0, 1}, {3, 4}, {5, 6}, {3, 5},
    {4, 6}, {4, 5}, {0, 4}, {0, 3}, {1, 5}, {2, 6},
    {2, 5}, {1, 3}, {2, 4}, {2, 3},
}};

inline constexpr std::array<Comparator, 19> kBest8{{
    {0, 1}, {2, 3}, {0, 2}, {1, 3}, {1, 2}, {4, 5},
    {6, 7}, {4, 6}, {5, 7}, {5, 6}, {0, 4}, {1, 5},
    {1, 4}, {2, 6}, {3, 7}, {3, 6}, {2, 4}, {3, 5},
    {3, 4},
}};

inline constexpr std::array<Comparator, 25> kBest9{{
    {0, 1}, {3, 4}, {6, 7}, {1, 2}, {4, 5}, {7, 8},
    {0, 1}, {3, 4}, {6, 7}, {0, 3}, {3, 6}, {0, 3},
    {1, 4}, {4, 7}, {1, 4}, {2, 5}, {5, 8}, {2, 5},
    {1, 3}, {5, 7}, {2, 6}, {4, 6}, {2, 4}, {2, 3},
    {5, 6},
}};

inline constexpr std::array<Comparator, 29> kBest10{{
    {4, 9}, {3, 8}, {2, 7}, {1, 6}, {0, 5}, {1, 4},
    {6, 9}, {0, 3}, {5, 8}, {0, 2}, {3, 6}, {7, 9},
    {0, 1}, {2, 4}, {5, 7}, {8, 9}, {1, 2}, {4, 6},
    {7, 8}, {3, 5}, {2, 5}, {6, 8}, {1, 3}, {4, 7},
    {2, 3}, {6, 7}, {3, 4}, {5, 6}, {4, 5},
}};

inline constexpr std::array<Comparator, 35> kBest11{{
    {0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {1, 3},
    {5, 7}, {0, 2}, {4, 6}, {8, 10}, {1, 2}, {5, 6},
    {9, 10}, {1, 5}, {6, 10}, {5, 9}, {2, 6}, {1, 5},
    {6, 10}, {0, 4}, {3, 7}, {4, 8}, {0, 4}, {1, 4},
    {7, 10}, {3, 8}, {2, 3}, {8, 9}, {2, 4}, {7, 9},
    {3, 5}, {6, 8}, {3, 4}, {5, 6}, {7, 8},
}};

inline constexpr std::array<Comparator, 39> kBest12{{
    {0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11},
    {1, 3}, {5, 7}, {9, 11}, {0, 2}, {4, 6}, {8, 10},
    {1, 2}, {5, 6}, {9, 10}, {1, 5}, {6, 10}, {5, 9},
    {2, 6}, {1, 5}, {6, 10}, {0, 4}, {7, 11}, {3, 7},
    {4, 8}, {0, 4}, {7, 11}, {1, 4}, {7, 10}, {3, 8},
    {2, 3}, {8, 9}, {2, 4}, {7, 9}, {3, 5}, {6, 8},
    {3, 4}, {5, 6}, {7, 8},
}};

inline constexpr std::array<Comparator, 45> kBest13{{
    {1, 7}, {9, 11}, {3, 4}, {5, 8}, {0, 12}, {2, 6},
    {0, 1}, {2, 3}, {4, 6}, {8, 11}, {7, 12}, {5, 9},
    {0, 2}, {3, 7}, {10, 11}, {1, 4}, {6, 12}, {7, 8},
    {11, 12}, {4, 9}, {6, 10}, {3, 4}, {5, 6}, {8, 9},
    {10, 11}, {1, 7}, {2, 6}, {9, 11}, {1, 3}, {4, 7},
    {8, 10}, {0, 5}, {2, 5}, {6, 8}, {9, 10}, {1, 2},
    {3, 5}, {7, 8}, {4, 6}, {2, 3}, {4, 5}, {6, 7},
    {8, 9}, {3, 4}, {5, 6},
}};

inline constexpr std::array<Comparator, 51> kBest14{{
    {0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11},
    {12, 13}, {0, 2}, {4, 6}, {8, 10}, {1, 3}, {5, 7},
    {9, 11}, {0, 4}, {8, 12}, {1, 5}, {9, 13}, {2, 6},
    {3, 7}, {0, 8}, {1, 9}, {2, 10}, {3, 11}, {4, 12},
    {5, 13}, {5, 10}, {6, 9}, {3, 12}, {7, 11}, {1, 2},
    {4, 8}, {1, 4}, {7, 13}, {2, 8}, {2, 4}, {5, 6},
    {9, 10}, {11, 13}, {3, 8}, {7, 12}, {6, 8}, {10, 12},
    {3, 5}, {7, 9}, {3, 4}, {5, 6}, {7, 8}, {9, 10},
    {11, 12}, {6, 7}, {8, 9},
}};

inline constexpr std::array<Comparator, 56> kBest15{{
    {0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11},
    {12, 13}, {0, 2}, {4, 6}, {8, 10}, {12, 14}, {1, 3},
    {5, 7}, {9, 11}, {0, 4}, {8, 12}, {1, 5}, {9, 13},
    {2, 6}, {10, 14}, {3, 7}, {0, 8}, {1, 9}, {2, 10},
    {3, 11}, {4, 12}, {5, 13}, {6, 14}, {5, 10}, {6, 9},
    {3, 12}, {13, 14}, {7, 11}, {1, 2}, {4, 8}, {1, 4},
    {7, 13}, {2, 8}, {11, 14}, {2, 4}, {5, 6}, {9, 10},
    {11, 13}, {3, 8}, {7, 12}, {6, 8}, {10, 12}, {3, 5},
    {7, 9}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12},
    {6, 7}, {8, 9},
}};

inline constexpr std::array<Comparator, 60> kBest16{{
    {0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11},
    {12, 13}, {14, 15}, {0, 2}, {4, 6}, {8, 10}, {12, 14},
    {1, 3}, {5, 7}, {9, 11}, {13, 15}, {0, 4}, {8, 12},
    {1, 5}, {9, 13}, {2, 6}, {10, 14}, {3, 7}, {11, 15},
    {0, 8}, {1, 9}, {2, 10}, {3, 11}, {4, 12}, {5, 13},
    {6, 14}, {7, 15}, {5, 10}, {6, 9}, {3, 12}, {13, 14},
    {7, 11}, {1, 2}, {4, 8}, {1, 4}, {7, 13}, {2, 8},
    {11, 14}, {2, 4}, {5, 6}, {9, 10}, {11, 13}, {3, 8},
    {7, 12}, {6, 8}, {10, 12}, {3, 5}, {7, 9}, {3, 4},
    {5, 6}, {7, 8}, {9, 10}, {11, 12}, {6, 7}, {8, 9},
}};

constexpr std::span<const Comparator> best_comparators(std::size_t n) {
    switch (n) {
    case 2: return kBest2;
    case 3: return kBest3;
    case 4: return kBest4;
    case 5: return kBest5;
    case 6: return kBest6;
    case 7: return kBest7;
    case 8: return kBest8;
    case 9: return kBest9;
    case 10: return kBest10;
    case 11: return kBest11;
    case 12: return kBest12;
    case 13: return kBest13;
    case 14: return kBest14;
    case 15: return kBest15;
    case 16: return kBest16;
    default: return {};
    }
}

} // namespace smallsort::detail
