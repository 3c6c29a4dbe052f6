#ifndef HWV_CONTRACTION_HPP
#define HWV_CONTRACTION_HPP

#include <vector>

#include "hwv/sympoly.hpp"
#include "hwv/tableau.hpp"

namespace hwv {

// Rank-one tensor X_{s(1)} (x) ... (x) X_{s(dn)} encoded by its index map;
// position blocks are B_u = {(u-1)n+1, ..., un}.
struct IndexMap {
    std::vector<int> s;  // values are 1-based variable indices
};

// Bijection boxes -> positions, boxes listed row-major; tau is the induced
// block permutation (class u of T goes to block tau(u)).
struct Assignment {
    std::vector<int> theta;  // box index (row-major) -> position in [dn], 1-based
    std::vector<int> tau;    // letter -> block, 1-based
};

// Product over columns of sgn of the value list read down the column;
// sgn is 0 unless the list is a permutation of 1..len.
int valTheta(const Tableau& t, const Assignment& theta, const IndexMap& s);

// Reference path: explicit sum over all assignments respecting T.
// Guarded to small tableaux; exact agreement with the grouped path is a
// tested invariant.
Rat contractRankOneNaive(const Tableau& t, const IndexMap& s);

// Per-block value contents: contents[u-1] lists (variable index, count),
// summing to n for each block.
using BlockContents = std::vector<std::vector<std::pair<int, long>>>;

BlockContents contentsOfIndexMap(const Tableau& t, const IndexMap& s);

struct GroupedResult {
    Int positive = 0;  // total weight of val=+1 assignments
    Int negative = 0;  // total weight of val=-1 assignments
    Rat value;         // (positive - negative) / (d! n!^d)
};

// Grouped path: sum over block permutations (pruned and grouped by equal
// block contents) and over memoized column fillings; integer accumulators,
// one division at the end.
GroupedResult contractRankOneGrouped(const Tableau& t, const BlockContents& contents,
                                     CostMeter* meter = nullptr);

Rat contractRankOne(const Tableau& t, const IndexMap& s, CostMeter* meter = nullptr);

// <v_T, p^{(x)d}> for homogeneous p of degree n: expansion of the d-th
// tensor power over monomial multisets, each summand a grouped rank-one
// contraction. Exact rational.
Rat contractPower(const Tableau& t, const SymPoly& p, CostMeter* meter = nullptr);
Rat contractPower(const Tableau& t, const PowerSumPoint& pt, CostMeter* meter = nullptr);

// Shape-level vanishing from the padding restriction: true iff every
// <v_T, (X_1^{n-m} p)^{(x)d}> with p in m^2 variables vanishes, i.e.
// length(shape) > m^2 or lambda_1 < (n-m)d.
bool klVanishes(const Tableau& t, long m);

}  // namespace hwv

#endif
