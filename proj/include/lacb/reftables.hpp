#ifndef LACB_REFTABLES_HPP
#define LACB_REFTABLES_HPP

// Reference values the `reproduce` subcommand and the acceptance suite diff
// against. Everything here is data, embedded so lookups never depend on
// install paths.

#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace lacb::ref {

// --- trinomial root counts N_p(-1+x+x^n), p <= 101, n = 2..15 -------------

inline constexpr int kTrinomialNMin = 2;
inline constexpr int kTrinomialNMax = 15;
extern const std::array<std::uint64_t, 26> kTrinomialPrimes;
// row i = prime kTrinomialPrimes[i], column j = n = 2+j
extern const std::array<std::array<int, 14>, 26> kTrinomialCounts;

// Known bad cells in the reference grid: the n = 5 column for p >= 23.
// -1+x+x^5 = (x^2-x+1)(x^3+x^2-1), so N_p >= 2 whenever p = 1 (mod 6)
// (up to a shared root), yet the printed tail carries only 0s and 1s there;
// brute-force evaluation confirms the corrected values below. The other
// reducible column (n = 11) is printed correctly.
struct TrinomialCellNote {
    std::uint64_t p;
    int n;
    int reference;
    int computed;
};
extern const std::array<TrinomialCellNote, 15> kTrinomialKnownCells;

// --- bias checkpoints for -1+x+x^2 -----------------------------------------

struct BiasRef {
    std::uint64_t x, count0, count2, pi_x;
};
extern const std::array<BiasRef, 3> kBiasCheckpoints;

// --- section table: N_p rows for S_0..S_6 and the cyclotomic rows ----------

// Column labels as printed in the source table; the 10th label "27" is not
// prime and is reproduced as 29 (flagged).
extern const std::array<std::uint64_t, 14> kSectionPrimes;
inline constexpr int kSectionBogusColumn = 9;  // index of the "27" label
extern const std::array<std::array<int, 14>, 7> kSectionCounts;      // j = 0..6
extern const std::array<std::array<int, 14>, 3> kSectionCycCounts;   // Phi3, Phi4, Phi12
extern const std::array<long, 3> kSectionCycIndex;                   // {3, 4, 12}

// Known bad cell in the reference grid, in the same bogus column as the "27"
// header: the direct root count of C_1 mod 29 is 2, but the source prints 1
// (the value obtained by subtracting the cyclotomic rows from N_29(S_1) = 3,
// which undercounts because C_1 shares a root with Phi_4 mod 29). Reproduced
// as the correct count with a warning.
struct SectionCellNote {
    int row_j;
    int col;
    int reference;
    int computed;
};
inline constexpr SectionCellNote kSectionKnownCell = {1, 9, 1, 2};
// sections S_1 and S_5 are the reducible ones, with these cyclotomic factors
extern const std::set<long> kSection1Phi;  // {4, 12}
extern const std::set<long> kSection5Phi;  // {3, 4, 12}

// --- pentanomial family sweep rows ------------------------------------------

struct FamilyRowRef {
    int exp_num;
    long n, m1;
    bool quad_irred;
    long n4;
    std::set<long> phi_set;
    bool conj_b;
};
extern const std::array<FamilyRowRef, 27> kFamilyRows;

// --- the worked bound example (c = 1, d = -1+x+x^5+x^14) --------------------

inline constexpr long kBoundsExampleN1 = 292;
inline constexpr long kBoundsExampleN4 = 480;
// N3 to one significant digit: 6 * 10^17
inline constexpr int kBoundsExampleN3LeadDigit = 6;
inline constexpr int kBoundsExampleN3Exp10 = 17;
inline constexpr long kBoundsExampleN2Log10 = 4553919;
inline constexpr long kBoundsExampleN2Log10Tol = 10;

// --- expansion of 1 in base tau ---------------------------------------------

extern const std::array<long, 8> kTauExponents;  // 1, 12, 31, 44, 63, 86, 105, 118

// --- n = 7 maximality witnesses below 10^5 ----------------------------------

extern const std::array<std::uint64_t, 2> kN7Witnesses;  // 41143, 82883

}  // namespace lacb::ref

#endif
