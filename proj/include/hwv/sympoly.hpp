#ifndef HWV_SYMPOLY_HPP
#define HWV_SYMPOLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hwv/basics.hpp"

namespace hwv {

// Sparse exponent vector; variable indices are 1-based and unbounded (the
// number of variables is never fixed globally).
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<std::pair<int, long>> entries);
    static Exponent ofVar(int var, long exp);

    const std::vector<std::pair<int, long>>& entries() const { return e_; }
    long degree() const;
    long expOf(int var) const;
    Exponent plus(const Exponent& o) const;
    Exponent shiftFirst(long k) const;  // alpha + (k) on variable 1
    int maxVar() const { return e_.empty() ? 0 : e_.back().first; }

    // multinomial(deg; alpha) = number of arrangements of the letter multiset
    Int arrangements() const;

    auto operator<=>(const Exponent&) const = default;
    std::string toString() const;

private:
    std::vector<std::pair<int, long>> e_;  // sorted by var, no zero exps
};

// Homogeneous element of Sym^deg V in the monomial basis X^alpha.
class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(long degree) : degree_(degree) {}
    static SymPoly monomial(const Exponent& a, const Rat& c = Rat(1));

    long degree() const { return degree_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<Exponent, Rat>& terms() const { return terms_; }
    Rat coeff(const Exponent& a) const;

    void add(const Exponent& a, const Rat& c);
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Rat& c);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);  // symmetric product
    bool operator==(const SymPoly&) const = default;

    SymPoly pow(long k) const;
    Rat evaluate(const std::map<int, Rat>& coords) const;
    std::string toString() const;

private:
    long degree_ = 0;
    std::map<Exponent, Rat> terms_;
};

// <X^a, X^b> = [a==b] / multinomial(deg; a), extended bilinearly: the inner
// product induced from the orthonormal X_I basis of the tensor power.
Rat innerProduct(const SymPoly& p, const SymPoly& q);

// Scaling by n-m: X^a -> binom(n,m)/binom(a_1+n-m, n-m) * X^a.
SymPoly scalingMap(const SymPoly& p, long m, long n, bool inverse = false);

std::optional<long> degInX1(const SymPoly& p);  // nullopt encodes -infinity
SymPoly padMultiply(const SymPoly& p, long e);

// Structured point X_1^pad * sum_j c_j (v_j)^s.
struct PowerSumPoint {
    long padExp = 0;
    long innerDeg = 0;
    std::vector<std::pair<Rat, std::vector<std::pair<int, Rat>>>> summands;

    long degree() const { return padExp + innerDeg; }
};

SymPoly powerSumExpand(const PowerSumPoint& pt);
SymPoly powerSumExpandInner(const PowerSumPoint& pt);  // without the X_1^pad factor

// f*(w_1 (x) ... (x) w_d) = (1/d!) sum_{I subset [d]} (-1)^{d-|I|} F(sum_{i in I} w_i)
Rat polarize(long d, const std::function<Rat(const SymPoly&)>& F, std::span<const SymPoly> ws);

// Diagonal evaluation F(w) = <f, w^{(x)d}> for a fully symmetric tensor f
// of degree d*deg(w), e.g. a product of X_1-powers.
Rat diagonalEval(const SymPoly& fTensor, const SymPoly& w, long d);

}  // namespace hwv

#endif
