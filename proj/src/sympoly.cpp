#include "hwv/sympoly.hpp"

#include <algorithm>
#include <sstream>

namespace hwv {

Exponent::Exponent(std::vector<std::pair<int, long>> entries) : e_(std::move(entries)) {
    std::sort(e_.begin(), e_.end());
    std::size_t w = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i].second < 0) throw std::invalid_argument("negative exponent");
        if (e_[i].first < 1) throw std::invalid_argument("variable indices are 1-based");
        if (e_[i].second == 0) continue;
        if (w > 0 && e_[w - 1].first == e_[i].first)
            e_[w - 1].second += e_[i].second;
        else
            e_[w++] = e_[i];
    }
    e_.resize(w);
}

Exponent Exponent::ofVar(int var, long exp) {
    return Exponent(std::vector<std::pair<int, long>>{{var, exp}});
}

long Exponent::degree() const {
    long d = 0;
    for (const auto& [v, e] : e_) d += e;
    return d;
}

long Exponent::expOf(int var) const {
    for (const auto& [v, e] : e_)
        if (v == var) return e;
    return 0;
}

Exponent Exponent::plus(const Exponent& o) const {
    auto es = e_;
    es.insert(es.end(), o.e_.begin(), o.e_.end());
    return Exponent(std::move(es));
}

Exponent Exponent::shiftFirst(long k) const {
    return plus(Exponent::ofVar(1, k));
}

Int Exponent::arrangements() const {
    std::vector<long> ks;
    for (const auto& [v, e] : e_) ks.push_back(e);
    return multinomial(ks);
}

std::string Exponent::toString() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    for (const auto& [v, e] : e_) {
        os << "X" << v;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

SymPoly SymPoly::monomial(const Exponent& a, const Rat& c) {
    SymPoly p(a.degree());
    p.add(a, c);
    return p;
}

Rat SymPoly::coeff(const Exponent& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymPoly::add(const Exponent& a, const Rat& c) {
    if (c == 0) return;
    if (a.degree() != degree_) {
        if (terms_.empty() && degree_ == 0)
            degree_ = a.degree();
        else
            throw std::invalid_argument("mixed degrees in homogeneous polynomial");
    }
    auto [it, fresh] = terms_.emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (!o.isZero() && !isZero() && degree_ != o.degree_)
        throw std::invalid_argument("degree mismatch in addition");
    if (isZero()) degree_ = o.degree_;
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (!o.isZero() && !isZero() && degree_ != o.degree_)
        throw std::invalid_argument("degree mismatch in subtraction");
    if (isZero()) degree_ = o.degree_;
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
}

SymPoly& SymPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, v] : terms_) v *= c;
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out(a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add(ea.plus(eb), ca * cb);
    return out;
}

SymPoly SymPoly::pow(long k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    SymPoly out = SymPoly::monomial(Exponent{}, Rat(1));
    for (long i = 0; i < k; ++i) out = out * *this;
    return out;
}

Rat SymPoly::evaluate(const std::map<int, Rat>& coords) const {
    Rat total = 0;
    for (const auto& [a, c] : terms_) {
        Rat term = c;
        for (const auto& [v, e] : a.entries()) {
            auto it = coords.find(v);
            if (it == coords.end()) {
                term = 0;
                break;
            }
            term *= intPow(it->second, static_cast<unsigned long>(e));
        }
        total += term;
    }
    return total;
}

std::string SymPoly::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        os << c.get_str() << "*" << a.toString();
        first = false;
    }
    return os.str();
}

Rat innerProduct(const SymPoly& p, const SymPoly& q) {
    if (!p.isZero() && !q.isZero() && p.degree() != q.degree())
        throw std::invalid_argument("inner product needs equal degrees");
    const auto& small = p.terms().size() <= q.terms().size() ? p : q;
    const auto& large = p.terms().size() <= q.terms().size() ? q : p;
    Rat total = 0;
    for (const auto& [a, c] : small.terms()) {
        Rat other = large.coeff(a);
        if (other == 0) continue;
        total += c * other / Rat(a.arrangements());
    }
    return total;
}

SymPoly scalingMap(const SymPoly& p, long m, long n, bool inverse) {
    if (n < m) throw std::invalid_argument("scaling needs n >= m");
    if (!p.isZero() && p.degree() != m) throw std::invalid_argument("scaling input must have degree m");
    SymPoly out(m);
    Int top = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m));
    for (const auto& [a, c] : p.terms()) {
        Int bottom = binomial(static_cast<unsigned long>(a.expOf(1) + n - m),
                              static_cast<unsigned long>(n - m));
        Rat factor(top, bottom);
        factor.canonicalize();
        if (inverse) factor = 1 / factor;
        out.add(a, c * factor);
    }
    return out;
}

std::optional<long> degInX1(const SymPoly& p) {
    if (p.isZero()) return std::nullopt;
    long best = 0;
    for (const auto& [a, c] : p.terms()) best = std::max(best, a.expOf(1));
    return best;
}

SymPoly padMultiply(const SymPoly& p, long e) {
    if (e < 0) throw std::invalid_argument("pad exponent must be >= 0");
    SymPoly out(p.degree() + e);
    for (const auto& [a, c] : p.terms()) out.add(a.shiftFirst(e), c);
    return out;
}

namespace {

// (sum_i v_i X_i)^s by iterated multiplication over the sparse support
SymPoly linearFormPower(const std::vector<std::pair<int, Rat>>& vec, long s) {
    SymPoly base(1);
    for (const auto& [var, val] : vec)
        if (val != 0) base.add(Exponent::ofVar(var, 1), val);
    if (base.isZero()) return SymPoly(s);
    return base.pow(s);
}

}  // namespace

SymPoly powerSumExpandInner(const PowerSumPoint& pt) {
    SymPoly out(pt.innerDeg);
    for (const auto& [c, vec] : pt.summands) {
        SymPoly p = linearFormPower(vec, pt.innerDeg);
        p *= c;
        out += p;
    }
    return out;
}

SymPoly powerSumExpand(const PowerSumPoint& pt) {
    return padMultiply(powerSumExpandInner(pt), pt.padExp);
}

Rat polarize(long d, const std::function<Rat(const SymPoly&)>& F, std::span<const SymPoly> ws) {
    if (static_cast<long>(ws.size()) != d)
        throw std::invalid_argument("polarize needs exactly d arguments");
    long deg = 0;
    for (const auto& w : ws)
        if (!w.isZero()) deg = w.degree();
    Rat total = 0;
    for (unsigned long mask = 0; mask < (1ul << ws.size()); ++mask) {
        SymPoly sum(deg);
        int bits = 0;
        for (std::size_t i = 0; i < ws.size(); ++i)
            if (mask >> i & 1) {
                sum += ws[i];
                ++bits;
            }
        Rat v = F(sum);
        if ((d - bits) % 2) v = -v;
        total += v;
    }
    return total / Rat(factorial(static_cast<unsigned long>(d)));
}

Rat diagonalEval(const SymPoly& fTensor, const SymPoly& w, long d) {
    return innerProduct(fTensor, w.pow(d));
}

}  // namespace hwv
