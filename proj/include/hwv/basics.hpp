#ifndef HWV_BASICS_HPP
#define HWV_BASICS_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hwv {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat makeRat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string ratToString(const Rat& q) { return q.get_str(); }

inline Rat ratFromString(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// multinomial(m; k_1,...,k_r) with m = sum k_i
inline Int multinomial(const std::vector<long>& ks) {
    Int r = 1;
    unsigned long seen = 0;
    for (long k : ks) {
        if (k < 0) throw std::invalid_argument("negative multinomial entry");
        seen += static_cast<unsigned long>(k);
        r *= binomial(seen, static_cast<unsigned long>(k));
    }
    return r;
}

inline Rat intPow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Deterministic source for witness sampling; a fixed seed replays the run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long intIn(long lo, long hi) {
        std::uniform_int_distribution<long> dist(lo, hi);
        return dist(eng_);
    }

    long nonzeroIn(long bound) {
        long v = 0;
        while (v == 0) v = intIn(-bound, bound);
        return v;
    }

    Rat rational(long bound) {
        return makeRat(nonzeroIn(bound), intIn(1, bound));
    }

private:
    std::mt19937_64 eng_;
};

// Node budget for the grouped enumeration; certify falls back to a
// structural report when a contraction would blow past the cap.
struct CostMeter {
    std::uint64_t nodes = 0;
    std::uint64_t cap = 0;  // 0 = unlimited

    void tick(std::uint64_t k = 1) {
        nodes += k;
        if (cap && nodes > cap) throw CostExceeded{};
    }

    struct CostExceeded {};
};

}  // namespace hwv

#endif
