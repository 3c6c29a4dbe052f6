#ifndef HWV_LIFTING_HPP
#define HWV_LIFTING_HPP

#include "hwv/contraction.hpp"

namespace hwv {

// Formal rational combination sum_i c_i v_{T_i} of one weight; the tableaux
// share shape, d and n.
struct HwvCombo {
    long d = 0;
    long n = 0;
    std::vector<std::pair<Rat, TableauClass>> terms;

    Partition weight() const;
};

HwvCombo makeCombo(long d, long n, std::vector<std::pair<Rat, TableauClass>> terms);

// Termwise inner lift: every letter gains nNew-n first-row boxes; the weight
// becomes lambda + (d(nNew-n)).
HwvCombo innerLift(const HwvCombo& f, long nNew);

// Termwise outer lift: dNew-d fresh letters, n first-row boxes each.
HwvCombo outerLift(const HwvCombo& f, long dNew);

// q = X_1^{n-m} S_{m,n}(p) + r with deg_{X_1} r < n-m.
SymPoly liftedPoint(const SymPoly& p, long m, long n, const SymPoly& r);

// Exact check of <kappa(f), q^{(x)d}> == <f, p^{(x)d}>; the right-hand side
// is the cheap route for evaluating lifted vectors.
bool checkLiftIdentity(const HwvCombo& f, const SymPoly& p, long nNew, const SymPoly& r,
                       CostMeter* meter = nullptr);

Rat evalCombo(const HwvCombo& f, const SymPoly& p, CostMeter* meter = nullptr);

}  // namespace hwv

#endif
