#include "hwv/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hwv {

std::vector<std::vector<long>> partitionsOf(long D, long maxLen) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxPart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (maxLen >= 0 && static_cast<long>(cur.size()) == maxLen) return;
        for (long p = std::min(rest, maxPart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, D, D);
    return out;
}

namespace {

// dense exponent vectors over a fixed variable count; lex order = map order
using Expo = std::vector<int>;
using DensePoly = std::map<Expo, Int>;

std::vector<Expo> monomialsOfDegree(long n, long numVars) {
    std::vector<Expo> out;
    Expo cur(static_cast<std::size_t>(numVars), 0);
    auto rec = [&](auto&& self, long var, long rest) -> void {
        if (var == numVars) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        for (long e = rest; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = static_cast<int>(e);
            self(self, var + 1, rest - e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, n);
    return out;
}

DensePoly plethysmHH(long d, long n, long numVars) {
    auto mons = monomialsOfDegree(n, numVars);
    std::vector<DensePoly> h(static_cast<std::size_t>(d) + 1);
    h[0][Expo(static_cast<std::size_t>(numVars), 0)] = 1;
    for (const auto& m : mons) {
        for (long k = 1; k <= d; ++k) {
            // in-place: h[k] += h[k-1] * X^m, repeats allowed
            DensePoly add;
            for (const auto& [e, c] : h[static_cast<std::size_t>(k - 1)]) {
                Expo f = e;
                for (std::size_t v = 0; v < f.size(); ++v) f[v] += m[v];
                add[f] = c;
            }
            for (const auto& [e, c] : add) h[static_cast<std::size_t>(k)][e] += c;
        }
    }
    return h[static_cast<std::size_t>(d)];
}

// s_shape(x_1..x_numVars) by semistandard tableau enumeration
DensePoly schurPolynomial(const std::vector<long>& shape, long numVars) {
    static std::map<std::pair<std::vector<long>, long>, DensePoly> cache;
    auto key = std::make_pair(shape, numVars);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    DensePoly out;
    std::vector<std::vector<int>> fill(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) fill[r].assign(static_cast<std::size_t>(shape[r]), 0);
    Expo content(static_cast<std::size_t>(numVars), 0);
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == shape.size()) {
            out[content] += 1;
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (nc == fill[r].size()) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);                          // rows weakly increase
        if (r > 0 && c < fill[r - 1].size()) lo = std::max(lo, fill[r - 1][c] + 1);  // columns strictly
        for (int v = lo; v <= numVars; ++v) {
            fill[r][c] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, nr, nc);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    if (shape.empty())
        out[content] = 1;
    else
        rec(rec, 0, 0);
    cache.emplace(std::move(key), out);
    return out;
}

std::vector<long> shapeOf(const Partition& p) {
    std::vector<long> out;
    for (const Int& x : p.parts()) {
        if (!x.fits_slong_p()) throw std::domain_error("partition part too large");
        out.push_back(x.get_si());
    }
    return out;
}

// exact rank of sparse rational rows
template <typename Key>
long sparseRank(std::vector<std::map<Key, Rat>> rows) {
    std::vector<std::map<Key, Rat>> pivots;
    long rank = 0;
    for (auto& row : rows) {
        for (const auto& pivot : pivots) {
            if (row.empty()) break;
            auto lead = pivot.begin()->first;
            auto it = row.find(lead);
            if (it == row.end()) continue;
            Rat factor = it->second;  // pivot lead is normalized to 1
            for (const auto& [k, v] : pivot) {
                auto slot = row.find(k);
                if (slot == row.end()) {
                    row.emplace(k, -factor * v);
                } else {
                    slot->second -= factor * v;
                    if (slot->second == 0) row.erase(slot);
                }
            }
        }
        if (row.empty()) continue;
        Rat lead = row.begin()->second;
        for (auto& [k, v] : row) v /= lead;
        pivots.push_back(std::move(row));
        std::sort(pivots.begin(), pivots.end(),
                  [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
        ++rank;
    }
    return rank;
}

}  // namespace

long plethysmCoeffSF(const Partition& lambda, long d, long n, long numVars) {
    if (lambda.size() != Int(d) * Int(n)) throw std::invalid_argument("need |lambda| = d*n");
    long len = static_cast<long>(lambda.length());
    if (numVars == 0) numVars = std::max<long>(len, 1);
    if (numVars < len) throw std::invalid_argument("numVars below length(lambda)");

    Expo target(static_cast<std::size_t>(numVars), 0);
    auto shape = shapeOf(lambda);
    for (std::size_t i = 0; i < shape.size(); ++i) target[i] = static_cast<int>(shape[i]);

    DensePoly poly = plethysmHH(d, n, numVars);
    while (!poly.empty()) {
        auto lead = std::prev(poly.end());  // lex-greatest monomial
        Expo alpha = lead->first;
        Int c = lead->second;
        if (alpha < target) return 0;  // target can no longer appear
        for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
            if (alpha[i] < alpha[i + 1]) throw std::logic_error("leading exponent not a partition");
        if (alpha == target) {
            if (!c.fits_slong_p()) throw std::overflow_error("coefficient too large");
            return c.get_si();
        }
        std::vector<long> mu;
        for (int e : alpha)
            if (e > 0) mu.push_back(e);
        DensePoly s = schurPolynomial(mu, numVars);
        for (const auto& [e, k] : s) {
            auto it = poly.find(e);
            if (it == poly.end()) {
                poly.emplace(e, -c * k);
            } else {
                it->second -= c * k;
                if (it->second == 0) poly.erase(it);
            }
        }
    }
    return 0;
}

long plethysmCoeffTensor(const Partition& lambda, long d, long n) {
    long D = d * n;
    if (D > 12) throw std::invalid_argument("tensor oracle capped at d*n <= 12");
    if (lambda.size() != Int(D)) throw std::invalid_argument("need |lambda| = d*n");
    auto shape = shapeOf(lambda);
    if (static_cast<long>(shape.size()) > D) return 0;

    // column lengths of lambda, longest first
    std::vector<long> colLen;
    long width = shape.empty() ? 0 : shape[0];
    for (long c = 1; c <= width; ++c) {
        long len = 0;
        for (long rl : shape)
            if (rl >= c) ++len;
        colLen.push_back(len);
    }

    // one spanning vector per way of splitting [D] into the columns
    // (equal-length columns unordered: blocks ordered by minimum)
    std::vector<std::vector<int>> columnSets(colLen.size());
    std::vector<bool> usedNum(static_cast<std::size_t>(D) + 1, false);
    std::vector<std::map<std::vector<int>, Rat>> rows;

    auto emit = [&]() {
        // expand the wedge product over per-column permutations and
        // project onto the plethysm: collapse each term to sorted blocks
        std::map<std::vector<int>, Rat> acc;
        std::vector<int> seq(static_cast<std::size_t>(D) + 1, 0);
        auto expand = [&](auto&& self, std::size_t ci, int sign) -> void {
            if (ci == columnSets.size()) {
                std::vector<std::vector<int>> blocks;
                for (long u = 0; u < d; ++u) {
                    std::vector<int> b(seq.begin() + 1 + u * n, seq.begin() + 1 + (u + 1) * n);
                    std::sort(b.begin(), b.end());
                    blocks.push_back(std::move(b));
                }
                std::sort(blocks.begin(), blocks.end());
                std::vector<int> key;
                for (const auto& b : blocks) key.insert(key.end(), b.begin(), b.end());
                acc[key] += sign;
                return;
            }
            const auto& set = columnSets[ci];
            std::vector<int> rho(set.size());
            std::iota(rho.begin(), rho.end(), 1);
            do {
                int inv = 0;
                for (std::size_t i = 0; i < rho.size(); ++i)
                    for (std::size_t j = i + 1; j < rho.size(); ++j)
                        if (rho[i] > rho[j]) ++inv;
                for (std::size_t k = 0; k < set.size(); ++k)
                    seq[static_cast<std::size_t>(set[k])] = rho[k];
                self(self, ci + 1, inv % 2 ? -sign : sign);
            } while (std::next_permutation(rho.begin(), rho.end()));
        };
        expand(expand, 0, 1);
        for (auto it = acc.begin(); it != acc.end();)
            it = it->second == 0 ? acc.erase(it) : std::next(it);
        if (!acc.empty()) rows.push_back(std::move(acc));
    };

    // equal-length columns are unordered: within a run, block minima increase
    auto rec = [&](auto&& self, std::size_t ci, int prevMin) -> void {
        if (ci == columnSets.size()) {
            emit();
            return;
        }
        long len = colLen[ci];
        int lo = (ci > 0 && colLen[ci - 1] == len) ? prevMin + 1 : 1;
        for (int m = lo; m <= D; ++m) {
            if (usedNum[static_cast<std::size_t>(m)]) continue;
            std::vector<int> chosen{m};
            usedNum[static_cast<std::size_t>(m)] = true;
            auto pick = [&](auto&& pickSelf, int from, long need) -> void {
                if (need == 0) {
                    columnSets[ci] = chosen;
                    self(self, ci + 1, m);
                    columnSets[ci].clear();
                    return;
                }
                for (int v = from; v <= D; ++v) {
                    if (usedNum[static_cast<std::size_t>(v)]) continue;
                    usedNum[static_cast<std::size_t>(v)] = true;
                    chosen.push_back(v);
                    pickSelf(pickSelf, v + 1, need - 1);
                    chosen.pop_back();
                    usedNum[static_cast<std::size_t>(v)] = false;
                }
            };
            pick(pick, m + 1, len - 1);
            usedNum[static_cast<std::size_t>(m)] = false;
        }
    };
    rec(rec, 0, 0);

    return sparseRank(std::move(rows));
}

long hwvRankByEvaluation(const Partition& lambda, long d, long n, std::uint64_t seed) {
    auto shape = shapeOf(lambda);
    if (lambda.size() != Int(d) * Int(n)) throw std::invalid_argument("need |lambda| = d*n");
    auto classes = enumerateClasses(shape, d, n);
    if (classes.empty()) return 0;

    Rng rng(seed);
    long vars = std::max<long>(static_cast<long>(shape.size()), 1);
    std::size_t points = classes.size() + 4;
    std::vector<SymPoly> expanded;
    for (std::size_t j = 0; j < points; ++j) {
        PowerSumPoint pt;
        pt.padExp = 0;
        pt.innerDeg = n;
        for (long k = 0; k < d; ++k) {
            std::vector<std::pair<int, Rat>> vec;
            for (long v = 1; v <= vars; ++v) vec.emplace_back(static_cast<int>(v), Rat(rng.intIn(-5, 5)));
            pt.summands.emplace_back(Rat(rng.nonzeroIn(5)), std::move(vec));
        }
        expanded.push_back(powerSumExpand(pt));
    }

    std::vector<std::map<std::size_t, Rat>> rows;
    for (const auto& cls : classes) {
        std::map<std::size_t, Rat> row;
        for (std::size_t j = 0; j < points; ++j) {
            Rat v = contractPower(cls.rep, expanded[j]);
            if (v != 0) row.emplace(j, v);
        }
        rows.push_back(std::move(row));
    }
    return sparseRank(std::move(rows));
}

Int schurDimension(const Partition& lambda, long N) {
    auto shape = shapeOf(lambda);
    if (static_cast<long>(shape.size()) > N) return 0;
    Rat dim = 1;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        for (long j = 1; j <= shape[i]; ++j) {
            long arm = shape[i] - j;
            long leg = 0;
            for (std::size_t r = i + 1; r < shape.size(); ++r)
                if (shape[r] >= j) ++leg;
            long hook = arm + leg + 1;
            dim *= Rat(Int(N + j - static_cast<long>(i) - 1), Int(hook));
        }
    }
    dim.canonicalize();
    if (dim.get_den() != 1) throw std::logic_error("hook content formula must give an integer");
    return dim.get_num();
}

Int plethysmSpaceDim(long d, long n, long N) {
    Int M = binomial(static_cast<unsigned long>(N + n - 1), static_cast<unsigned long>(n));
    Int MM = M + d - 1;
    return binomial(MM, static_cast<unsigned long>(d));
}

}  // namespace hwv
