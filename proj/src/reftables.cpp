#include "lacb/reftables.hpp"

namespace lacb::ref {

const std::array<std::uint64_t, 26> kTrinomialPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

const std::array<std::array<int, 14>, 26> kTrinomialCounts = {{
    // n =      2  3  4  5  6  7  8  9 10 11 12 13 14 15
    /* p=2   */ {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    /* p=3   */ {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    /* p=5   */ {1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0},
    /* p=7   */ {0, 0, 1, 2, 0, 1, 0, 0, 1, 2, 0, 1, 0, 0},
    /* p=11  */ {2, 1, 1, 1, 0, 1, 1, 0, 0, 1, 2, 1, 1, 1},
    /* p=13  */ {0, 1, 1, 2, 1, 0, 0, 0, 0, 2, 0, 1, 0, 1},
    /* p=17  */ {0, 1, 2, 1, 1, 0, 0, 1, 0, 1, 2, 1, 1, 0},
    /* p=19  */ {2, 0, 0, 3, 1, 0, 1, 1, 0, 3, 1, 0, 1, 1},
    /* p=23  */ {0, 1, 1, 0, 0, 2, 2, 2, 0, 0, 1, 0, 1, 1},
    /* p=29  */ {2, 1, 1, 1, 2, 0, 0, 2, 0, 1, 1, 0, 1, 0},
    /* p=31  */ {2, 2, 0, 0, 1, 1, 1, 1, 1, 3, 0, 1, 1, 0},
    /* p=37  */ {0, 1, 2, 0, 1, 0, 0, 0, 0, 2, 1, 0, 1, 1},
    /* p=41  */ {2, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1},
    /* p=43  */ {0, 1, 0, 1, 1, 2, 0, 1, 0, 2, 1, 0, 0, 1},
    /* p=47  */ {0, 3, 0, 0, 2, 2, 1, 0, 2, 2, 0, 2, 0, 2},
    /* p=53  */ {0, 1, 2, 0, 1, 0, 0, 1, 0, 2, 0, 0, 0, 0},
    /* p=59  */ {2, 0, 1, 1, 1, 2, 1, 0, 2, 1, 0, 0, 2, 1},
    /* p=61  */ {2, 1, 1, 1, 1, 1, 1, 1, 0, 2, 0, 1, 0, 1},
    /* p=67  */ {0, 3, 2, 0, 1, 0, 0, 0, 0, 3, 0, 1, 1, 1},
    /* p=71  */ {2, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 2, 1},
    /* p=73  */ {0, 1, 0, 1, 0, 0, 0, 0, 2, 3, 0, 0, 1, 0},
    /* p=79  */ {2, 1, 2, 0, 2, 1, 1, 0, 2, 2, 1, 1, 0, 0},
    /* p=83  */ {0, 1, 4, 0, 3, 3, 2, 1, 0, 1, 0, 0, 2, 1},
    /* p=89  */ {2, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1, 2, 0},
    /* p=97  */ {0, 0, 1, 0, 1, 1, 2, 0, 0, 3, 1, 1, 1, 0},
    /* p=101 */ {2, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0},
}};

const std::array<TrinomialCellNote, 15> kTrinomialKnownCells = {{
    {23, 5, 0, 2},
    {29, 5, 1, 0},
    {31, 5, 0, 2},
    {37, 5, 0, 3},
    {41, 5, 1, 0},
    {43, 5, 1, 3},
    {53, 5, 0, 1},
    {59, 5, 1, 3},
    {61, 5, 1, 3},
    {67, 5, 0, 3},
    {73, 5, 1, 2},
    {79, 5, 0, 3},
    {83, 5, 0, 1},
    {97, 5, 0, 3},
    {101, 5, 1, 3},
}};

const std::array<BiasRef, 3> kBiasCheckpoints = {{
    {101, 14, 11, 26},
    {1001, 89, 78, 168},
    {10001, 619, 609, 1229},
}};

const std::array<std::uint64_t, 14> kSectionPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};

const std::array<std::array<int, 14>, 7> kSectionCounts = {{
    /* j=0 */ {0, 0, 0, 0, 2, 0, 2, 1, 1, 1, 0, 1, 0, 1},
    /* j=1 */ {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1, 2, 1},
    /* j=2 */ {0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 2, 2, 2, 0},
    /* j=3 */ {1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1, 0, 1, 1},
    /* j=4 */ {0, 0, 1, 0, 0, 1, 2, 2, 0, 1, 0, 3, 0, 1},
    /* j=5 */ {0, 0, 0, 0, 0, 1, 1, 0, 0, 2, 1, 0, 0, 0},
    /* j=6 */ {0, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0, 3, 1},
}};

const std::array<std::array<int, 14>, 3> kSectionCycCounts = {{
    /* x^2+x+1   */ {0, 1, 0, 2, 0, 2, 0, 2, 0, 0, 2, 2, 0, 2},
    /* x^2+1     */ {1, 0, 2, 0, 0, 2, 2, 0, 0, 2, 0, 2, 2, 0},
    /* x^4-x^2+1 */ {0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 4, 0, 0},
}};

const std::array<long, 3> kSectionCycIndex = {3, 4, 12};

const std::set<long> kSection1Phi = {4, 12};
const std::set<long> kSection5Phi = {3, 4, 12};

const std::array<FamilyRowRef, 27> kFamilyRows = {{
    {1, 3, 5, true, 192, {3, 6}, true},
    {2, 3, 6, true, 224, {3, 6}, true},
    {3, 3, 7, true, 256, {10}, true},
    {4, 3, 8, false, 288, {3}, true},
    {5, 3, 9, true, 320, {3, 10}, true},
    {6, 3, 10, true, 352, {18}, true},
    {7, 3, 11, true, 384, {3, 6}, true},
    {8, 3, 12, false, 416, {3, 6}, true},
    {9, 3, 13, true, 448, {}, true},
    {10, 3, 17, true, 576, {3, 6, 10}, true},
    {11, 4, 7, false, 256, {6, 9}, true},
    {12, 4, 8, false, 288, {}, true},
    {13, 4, 9, true, 320, {9}, true},
    {14, 4, 10, false, 352, {}, true},
    {15, 4, 11, false, 384, {6}, true},
    {16, 4, 12, false, 416, {}, true},
    {17, 4, 13, true, 448, {6, 24}, true},
    {18, 4, 17, true, 576, {6}, true},
    {19, 5, 9, true, 320, {3, 6, 12}, true},
    {20, 5, 10, true, 352, {6}, true},
    {21, 5, 11, true, 384, {6}, true},
    {22, 5, 12, true, 416, {3, 6, 12}, true},
    {23, 5, 13, true, 448, {6}, true},
    {24, 5, 14, true, 480, {6}, true},
    {25, 5, 15, true, 512, {3, 6}, true},
    {26, 5, 16, false, 544, {6, 30}, true},
    {27, 5, 17, true, 576, {6}, true},
}};

const std::array<long, 8> kTauExponents = {1, 12, 31, 44, 63, 86, 105, 118};

const std::array<std::uint64_t, 2> kN7Witnesses = {41143, 82883};

}  // namespace lacb::ref
