#include "hwv/contraction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hwv {

namespace {

struct Box {
    int row;  // 1-based
    int col;
};

std::vector<std::vector<Box>> boxesByLetter(const Tableau& t) {
    std::vector<std::vector<Box>> out(static_cast<std::size_t>(t.d) + 1);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c)
            out[static_cast<std::size_t>(t.rows[r][c])].push_back(
                {static_cast<int>(r + 1), static_cast<int>(c + 1)});
    return out;
}

Int wreathOrder(long d, long n) {
    Int w = factorial(static_cast<unsigned long>(d));
    Int nf = factorial(static_cast<unsigned long>(n));
    for (long i = 0; i < d; ++i) w *= nf;
    return w;
}

int signOfList(const std::vector<int>& vals) {
    long len = static_cast<long>(vals.size());
    std::vector<bool> seen(static_cast<std::size_t>(len) + 1, false);
    for (int v : vals) {
        if (v < 1 || v > len || seen[static_cast<std::size_t>(v)]) return 0;
        seen[static_cast<std::size_t>(v)] = true;
    }
    int inversions = 0;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            if (vals[i] > vals[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

}  // namespace

int valTheta(const Tableau& t, const Assignment& theta, const IndexMap& s) {
    long dn = t.boxCount();
    if (static_cast<long>(s.s.size()) != dn) throw std::invalid_argument("index map has wrong length");
    // box index, row-major
    std::vector<std::vector<int>> colVals(static_cast<std::size_t>(t.columnCountTotal()));
    std::size_t box = 0;
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            int pos = theta.theta.at(box++);
            colVals[c].push_back(s.s.at(static_cast<std::size_t>(pos - 1)));
        }
    int prod = 1;
    for (const auto& vals : colVals) {
        prod *= signOfList(vals);
        if (prod == 0) return 0;
    }
    return prod;
}

Rat contractRankOneNaive(const Tableau& t, const IndexMap& s) {
    long d = t.d, n = t.n, dn = t.boxCount();
    if (dn > 12) throw std::invalid_argument("naive contraction capped at 12 boxes");
    if (static_cast<long>(s.s.size()) != dn) throw std::invalid_argument("index map has wrong length");

    auto letters = boxesByLetter(t);
    // box index (row-major) per letter, in order
    std::vector<std::vector<std::size_t>> boxIdx(static_cast<std::size_t>(d) + 1);
    {
        std::size_t idx = 0;
        for (const auto& row : t.rows)
            for (int u : row) boxIdx[static_cast<std::size_t>(u)].push_back(idx++);
    }

    std::vector<int> tau(static_cast<std::size_t>(d));
    std::iota(tau.begin(), tau.end(), 1);
    long total = 0;
    std::vector<int> theta(static_cast<std::size_t>(dn), 0);
    do {
        // positions of block tau(u), permuted per class independently
        std::vector<std::vector<int>> pos(static_cast<std::size_t>(d) + 1);
        for (long u = 1; u <= d; ++u) {
            long b = tau[static_cast<std::size_t>(u - 1)];
            for (long v = 1; v <= n; ++v) pos[static_cast<std::size_t>(u)].push_back(static_cast<int>((b - 1) * n + v));
        }
        auto rec = [&](auto&& self, long u) -> void {
            if (u > d) {
                Assignment a{theta, tau};
                total += valTheta(t, a, s);
                return;
            }
            auto& ps = pos[static_cast<std::size_t>(u)];
            std::sort(ps.begin(), ps.end());
            do {
                for (std::size_t k = 0; k < ps.size(); ++k)
                    theta[boxIdx[static_cast<std::size_t>(u)][k]] = ps[k];
                self(self, u + 1);
            } while (std::next_permutation(ps.begin(), ps.end()));
        };
        rec(rec, 1);
    } while (std::next_permutation(tau.begin(), tau.end()));

    Rat result(Int(total), wreathOrder(d, n));
    result.canonicalize();
    return result;
}

BlockContents contentsOfIndexMap(const Tableau& t, const IndexMap& s) {
    if (static_cast<long>(s.s.size()) != t.boxCount())
        throw std::invalid_argument("index map has wrong length");
    BlockContents out;
    for (long u = 0; u < t.d; ++u) {
        std::map<int, long> m;
        for (long v = 0; v < t.n; ++v) ++m[s.s[static_cast<std::size_t>(u * t.n + v)]];
        out.emplace_back(m.begin(), m.end());
    }
    return out;
}

namespace {

using DenseContent = std::vector<long>;  // count per value id

struct GroupedEngine {
    long d, n;
    std::vector<long> lambda;  // shape
    std::vector<std::vector<int>> columns;  // letters per non-singleton column, by row
    std::vector<long> singles;              // per letter
    std::vector<int> values;                // distinct variable indices, ascending
    std::vector<int> idOfSmallValue;        // variable index (<= maxColLen) -> id or -1
    std::vector<DenseContent> blockDense;
    CostMeter* meter;

    // per letter: #boxes in columns of length >= v, for v = 0..maxColLen
    std::vector<std::vector<long>> capAtLeast;

    std::map<std::vector<long>, std::pair<Int, Int>> memo;
    std::vector<long> state;  // flattened per-letter remaining contents
    long stateWidth = 0;

    bool setUp(const Tableau& t, const BlockContents& contents) {
        d = t.d;
        n = t.n;
        meterTick();
        lambda = t.shape();
        // weight of v_T is the shape: contents must match it exactly
        std::map<int, long> total;
        for (const auto& block : contents)
            for (const auto& [v, c] : block) total[v] += c;
        for (const auto& [v, c] : total) {
            long lam = (v >= 1 && v <= static_cast<int>(lambda.size())) ? lambda[static_cast<std::size_t>(v - 1)] : 0;
            if (c != lam) return false;
        }
        Int expected = 0;
        for (long lam : lambda) expected += lam;
        Int got = 0;
        for (const auto& [v, c] : total) got += c;
        if (got != expected) return false;

        singles.assign(static_cast<std::size_t>(d) + 1, 0);
        long maxLen = 0;
        long width = t.columnCountTotal();
        for (long c = 1; c <= width; ++c) {
            auto col = t.column(c);
            maxLen = std::max<long>(maxLen, static_cast<long>(col.size()));
            if (col.size() == 1)
                ++singles[static_cast<std::size_t>(col[0])];
            else
                columns.push_back(std::move(col));
        }
        std::sort(columns.begin(), columns.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });

        for (const auto& block : contents)
            for (const auto& [v, c] : block)
                if (c > 0) values.push_back(v);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        idOfSmallValue.assign(static_cast<std::size_t>(maxLen) + 1, -1);
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] <= maxLen) idOfSmallValue[static_cast<std::size_t>(values[i])] = static_cast<int>(i);
        // every non-singleton column needs the full value range 1..len
        for (const auto& col : columns)
            for (long v = 1; v <= static_cast<long>(col.size()); ++v)
                if (idOfSmallValue[static_cast<std::size_t>(v)] < 0) return false;

        blockDense.assign(contents.size(), DenseContent(values.size(), 0));
        for (std::size_t b = 0; b < contents.size(); ++b)
            for (const auto& [v, c] : contents[b]) {
                auto it = std::lower_bound(values.begin(), values.end(), v);
                blockDense[b][static_cast<std::size_t>(it - values.begin())] = c;
            }

        capAtLeast.assign(static_cast<std::size_t>(d) + 1,
                          std::vector<long>(static_cast<std::size_t>(maxLen) + 2, 0));
        for (const auto& col : columns)
            for (std::size_t r = 0; r < col.size(); ++r)
                for (long v = 0; v <= static_cast<long>(col.size()); ++v)
                    ++capAtLeast[static_cast<std::size_t>(col[r])][static_cast<std::size_t>(v)];
        for (long u = 1; u <= d; ++u) {
            capAtLeast[static_cast<std::size_t>(u)][0] += singles[static_cast<std::size_t>(u)];
            capAtLeast[static_cast<std::size_t>(u)][1] += singles[static_cast<std::size_t>(u)];
        }
        stateWidth = static_cast<long>(values.size());
        return true;
    }

    void meterTick() {
        if (meter) meter->tick();
    }

    bool compatible(long u, const DenseContent& content) const {
        // values >= v need boxes in columns of length >= v
        const auto& cap = capAtLeast[static_cast<std::size_t>(u)];
        long suffix = 0;
        for (std::size_t i = values.size(); i-- > 0;) {
            suffix += content[i];
            long v = values[i];
            if (v <= 1) break;
            long capacity = v < static_cast<long>(cap.size()) ? cap[static_cast<std::size_t>(v)] : 0;
            if (suffix > capacity) return false;
        }
        return true;
    }

    std::pair<Int, Int> fillColumns(std::size_t ci) {
        if (ci == columns.size()) return {Int(1), Int(0)};
        auto it = memo.find(state);
        if (it != memo.end()) return it->second;
        const auto& col = columns[ci];
        long len = static_cast<long>(col.size());
        Int pos = 0, neg = 0;
        std::vector<bool> used(static_cast<std::size_t>(len) + 1, false);
        std::vector<int> placed;
        auto rec = [&](auto&& self, long row, int parity) -> void {
            meterTick();
            if (row > len) {
                auto sub = fillColumns(ci + 1);
                if (parity >= 0) {
                    pos += sub.first;
                    neg += sub.second;
                } else {
                    pos += sub.second;
                    neg += sub.first;
                }
                return;
            }
            long letter = col[static_cast<std::size_t>(row - 1)];
            for (long v = 1; v <= len; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                int vid = idOfSmallValue[static_cast<std::size_t>(v)];
                long& slot = state[static_cast<std::size_t>((letter - 1) * stateWidth + vid)];
                if (slot == 0) continue;
                int inv = 0;
                for (int w : placed)
                    if (w > v) ++inv;
                --slot;
                used[static_cast<std::size_t>(v)] = true;
                placed.push_back(static_cast<int>(v));
                self(self, row + 1, inv % 2 ? -parity : parity);
                placed.pop_back();
                used[static_cast<std::size_t>(v)] = false;
                ++slot;
            }
        };
        rec(rec, 1, 1);
        memo.emplace(state, std::make_pair(pos, neg));
        return {pos, neg};
    }
};

}  // namespace

GroupedResult contractRankOneGrouped(const Tableau& t, const BlockContents& contents, CostMeter* meter) {
    if (static_cast<long>(contents.size()) != t.d)
        throw std::invalid_argument("one content multiset per block required");
    for (const auto& block : contents) {
        long sum = 0;
        for (const auto& [v, c] : block) {
            if (c < 0 || v < 1) throw std::invalid_argument("bad block content");
            sum += c;
        }
        if (sum != t.n) throw std::invalid_argument("block content must have n entries");
    }

    GroupedResult result;
    result.value = 0;
    GroupedEngine eng;
    eng.meter = meter;
    if (!eng.setUp(t, contents)) return result;

    long d = t.d;
    // group equal block contents
    std::vector<DenseContent> groupContent;
    std::vector<long> groupCount;
    std::vector<Int> groupFact;  // product of count! over the content
    for (const auto& dense : eng.blockDense) {
        auto it = std::find(groupContent.begin(), groupContent.end(), dense);
        if (it == groupContent.end()) {
            groupContent.push_back(dense);
            groupCount.push_back(1);
            Int f = 1;
            for (long c : dense) f *= factorial(static_cast<unsigned long>(c));
            groupFact.push_back(f);
        } else {
            ++groupCount[static_cast<std::size_t>(it - groupContent.begin())];
        }
    }
    std::size_t g = groupContent.size();

    std::vector<std::vector<bool>> compat(static_cast<std::size_t>(d) + 1, std::vector<bool>(g, false));
    for (long u = 1; u <= d; ++u) {
        bool any = false;
        for (std::size_t j = 0; j < g; ++j) {
            DenseContent c = groupContent[j];
            int oneId = eng.idOfSmallValue.size() > 1 ? eng.idOfSmallValue[1] : -1;
            long have1 = oneId >= 0 ? c[static_cast<std::size_t>(oneId)] : 0;
            if (have1 < eng.singles[static_cast<std::size_t>(u)]) continue;
            if (!eng.compatible(u, c)) continue;
            compat[static_cast<std::size_t>(u)][j] = true;
            any = true;
        }
        if (!any) return result;
    }

    // assign classes to content groups, fewest options first
    std::vector<long> order;
    for (long u = 1; u <= d; ++u) order.push_back(u);
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        long ca = std::count(compat[static_cast<std::size_t>(a)].begin(), compat[static_cast<std::size_t>(a)].end(), true);
        long cb = std::count(compat[static_cast<std::size_t>(b)].begin(), compat[static_cast<std::size_t>(b)].end(), true);
        return ca < cb;
    });

    eng.state.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(eng.stateWidth), 0);
    std::vector<long> used(g, 0);
    int oneId = eng.idOfSmallValue.size() > 1 ? eng.idOfSmallValue[1] : -1;

    Int pos = 0, neg = 0;
    auto assign = [&](auto&& self, std::size_t k, Int weight) -> void {
        eng.meterTick();
        if (k == order.size()) {
            auto fills = eng.fillColumns(0);
            pos += weight * fills.first;
            neg += weight * fills.second;
            return;
        }
        long u = order[k];
        for (std::size_t j = 0; j < g; ++j) {
            if (!compat[static_cast<std::size_t>(u)][j] || used[j] == groupCount[j]) continue;
            ++used[j];
            for (long i = 0; i < eng.stateWidth; ++i)
                eng.state[static_cast<std::size_t>((u - 1) * eng.stateWidth + i)] = groupContent[j][static_cast<std::size_t>(i)];
            if (oneId >= 0)
                eng.state[static_cast<std::size_t>((u - 1) * eng.stateWidth + oneId)] -= eng.singles[static_cast<std::size_t>(u)];
            Int w = weight * Int(groupCount[j] - used[j] + 1) * groupFact[j];
            self(self, k + 1, w);
            --used[j];
        }
    };
    assign(assign, 0, Int(1));

    result.positive = pos;
    result.negative = neg;
    result.value = Rat(pos - neg, wreathOrder(t.d, t.n));
    result.value.canonicalize();
    return result;
}

Rat contractRankOne(const Tableau& t, const IndexMap& s, CostMeter* meter) {
    return contractRankOneGrouped(t, contentsOfIndexMap(t, s), meter).value;
}

Rat contractPower(const Tableau& t, const SymPoly& p, CostMeter* meter) {
    if (p.isZero()) return 0;
    if (p.degree() != t.n) throw std::invalid_argument("point degree must equal the inner degree n");
    std::vector<long> lambda = t.shape();
    auto lamOf = [&](int v) -> long {
        return (v >= 1 && v <= static_cast<int>(lambda.size())) ? lambda[static_cast<std::size_t>(v - 1)] : 0;
    };

    // monomials that cannot sit under the weight are dead
    std::vector<std::pair<Exponent, Rat>> mons;
    for (const auto& [a, c] : p.terms()) {
        bool ok = true;
        for (const auto& [v, e] : a.entries())
            if (e > lamOf(v)) {
                ok = false;
                break;
            }
        if (ok) mons.emplace_back(a, c);
    }
    if (mons.empty()) return 0;

    long d = t.d;
    int maxVar = 0;
    for (const auto& [a, c] : mons) maxVar = std::max(maxVar, a.maxVar());
    // suffix maxima of per-variable exponents, for pruning
    std::vector<std::vector<long>> sufMax(mons.size() + 1, std::vector<long>(static_cast<std::size_t>(maxVar) + 1, 0));
    for (std::size_t i = mons.size(); i-- > 0;) {
        sufMax[i] = sufMax[i + 1];
        for (const auto& [v, e] : mons[i].first.entries())
            sufMax[i][static_cast<std::size_t>(v)] = std::max(sufMax[i][static_cast<std::size_t>(v)], e);
    }

    // variables carrying weight but absent from every usable monomial
    for (std::size_t v = static_cast<std::size_t>(maxVar) + 1; v <= lambda.size(); ++v)
        if (lambda[v - 1] > 0) return 0;

    std::vector<long> content(static_cast<std::size_t>(maxVar) + 1, 0);
    std::vector<long> counts(mons.size(), 0);
    Rat total = 0;

    auto feasible = [&](std::size_t i, long slots) {
        for (int v = 1; v <= maxVar; ++v) {
            long deficit = lamOf(v) - content[static_cast<std::size_t>(v)];
            if (deficit > slots * sufMax[i][static_cast<std::size_t>(v)]) return false;
        }
        return true;
    };

    // multiset over monomials: weight d!/prod(c_j!) * prod coeff^{c_j}
    auto rec = [&](auto&& self, std::size_t i, long slots, Rat weight) -> void {
        if (meter) meter->tick();
        if (slots == 0) {
            BlockContents blocks;
            for (std::size_t j = 0; j < mons.size(); ++j)
                for (long k = 0; k < counts[j]; ++k)
                    blocks.emplace_back(mons[j].first.entries().begin(), mons[j].first.entries().end());
            total += weight * contractRankOneGrouped(t, blocks, meter).value;
            return;
        }
        if (i == mons.size() || !feasible(i, slots)) return;
        self(self, i + 1, slots, weight);  // zero copies
        Rat w = weight;
        long added = 0;
        for (long c = 1; c <= slots; ++c) {
            bool ok = true;
            for (const auto& [v, e] : mons[i].first.entries()) {
                content[static_cast<std::size_t>(v)] += e;
                if (content[static_cast<std::size_t>(v)] > lamOf(v)) ok = false;
            }
            ++added;
            if (!ok) break;
            w *= Rat(Int(slots - c + 1), Int(c));  // running binom(slots, c)
            w *= mons[i].second;
            counts[i] = c;
            self(self, i + 1, slots - c, w);
        }
        for (long k = 0; k < added; ++k)
            for (const auto& [v, e] : mons[i].first.entries()) content[static_cast<std::size_t>(v)] -= e;
        counts[i] = 0;
    };
    rec(rec, 0, d, Rat(1));
    return total;
}

Rat contractPower(const Tableau& t, const PowerSumPoint& pt, CostMeter* meter) {
    return contractPower(t, powerSumExpand(pt), meter);
}

bool klVanishes(const Tableau& t, long m) {
    long len = static_cast<long>(t.rows.size());
    long lam1 = t.columnCountTotal();
    return len > m * m || lam1 < (t.n - m) * t.d;
}

}  // namespace hwv
