#include "hwv/lifting.hpp"

namespace hwv {

Partition HwvCombo::weight() const {
    if (terms.empty()) return {};
    return terms[0].second.rep.shapePartition();
}

HwvCombo makeCombo(long d, long n, std::vector<std::pair<Rat, TableauClass>> terms) {
    HwvCombo f{d, n, std::move(terms)};
    const Partition* shape = nullptr;
    Partition first;
    for (const auto& [c, cls] : f.terms) {
        if (cls.zero) throw std::invalid_argument("combo terms must be nonzero classes");
        if (cls.rep.d != d || cls.rep.n != n)
            throw std::invalid_argument("combo terms must share d and n");
        if (!shape) {
            first = cls.rep.shapePartition();
            shape = &first;
        } else if (cls.rep.shapePartition() != *shape) {
            throw std::invalid_argument("combo terms must share one shape");
        }
    }
    return f;
}

HwvCombo innerLift(const HwvCombo& f, long nNew) {
    if (nNew < f.n) throw std::invalid_argument("inner lift target below current n");
    HwvCombo out{f.d, nNew, {}};
    for (const auto& [c, cls] : f.terms)
        out.terms.emplace_back(c, canonicalize(innerLiftTableau(cls.rep, nNew)));
    return out;
}

HwvCombo outerLift(const HwvCombo& f, long dNew) {
    if (dNew < f.d) throw std::invalid_argument("outer lift target below current d");
    HwvCombo out{dNew, f.n, {}};
    for (const auto& [c, cls] : f.terms)
        out.terms.emplace_back(c, canonicalize(outerLiftTableau(cls.rep, dNew)));
    return out;
}

SymPoly liftedPoint(const SymPoly& p, long m, long n, const SymPoly& r) {
    if (!p.isZero() && p.degree() != m) throw std::invalid_argument("p must be homogeneous of degree m");
    if (!r.isZero()) {
        if (r.degree() != n) throw std::invalid_argument("r must be homogeneous of degree n");
        auto dx = degInX1(r);
        if (dx && *dx >= n - m)
            throw std::invalid_argument("deg_X1 r must be < n-m");
    }
    SymPoly q = padMultiply(scalingMap(p, m, n), n - m);
    q += r;
    return q;
}

Rat evalCombo(const HwvCombo& f, const SymPoly& p, CostMeter* meter) {
    Rat total = 0;
    for (const auto& [c, cls] : f.terms) total += c * contractPower(cls.rep, p, meter);
    return total;
}

bool checkLiftIdentity(const HwvCombo& f, const SymPoly& p, long nNew, const SymPoly& r,
                       CostMeter* meter) {
    SymPoly q = liftedPoint(p, f.n, nNew, r);
    Rat rhs = evalCombo(f, p, meter);
    Rat lhs = 0;
    for (const auto& [c, cls] : f.terms)
        lhs += c * contractPower(innerLiftTableau(cls.rep, nNew), q, meter);
    return lhs == rhs;
}

}  // namespace hwv
