#ifndef HWV_ORACLE_HPP
#define HWV_ORACLE_HPP

#include "hwv/contraction.hpp"

namespace hwv {

// All partitions of D, optionally with at most maxLen parts.
std::vector<std::vector<long>> partitionsOf(long D, long maxLen = -1);

// Plethysm coefficient a_lambda(d[n]) as <h_d[h_n], s_lambda>, computed by
// expanding the complete homogeneous plethysm in numVars variables and
// stripping lex-leading Schur polynomials. Correct whenever
// numVars >= length(lambda); numVars = 0 picks that minimum.
long plethysmCoeffSF(const Partition& lambda, long d, long n, long numVars = 0);

// Ground truth by explicit linear algebra in the tensor power: rank of the
// wreath-symmetrized spanning vectors of HWV_lambda. Capped at d*n <= 12.
long plethysmCoeffTensor(const Partition& lambda, long d, long n);

// Certified lower bound via exact evaluations of all tableau classes at
// seeded random power-sum points; equals the coefficient on generic points.
long hwvRankByEvaluation(const Partition& lambda, long d, long n, std::uint64_t seed);

Int schurDimension(const Partition& lambda, long N);  // hook content formula
Int plethysmSpaceDim(long d, long n, long N);         // dim Sym^d Sym^n C^N

}  // namespace hwv

#endif
