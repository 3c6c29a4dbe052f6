#include "hwv/tableau.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hwv {

std::vector<long> Tableau::shape() const {
    std::vector<long> s;
    s.reserve(rows.size());
    for (const auto& r : rows) s.push_back(static_cast<long>(r.size()));
    return s;
}

Partition Tableau::shapePartition() const {
    std::vector<Int> ps;
    for (const auto& r : rows) ps.emplace_back(static_cast<long>(r.size()));
    return Partition(std::move(ps));
}

int Tableau::letterAt(std::size_t row, std::size_t col) const {
    return rows.at(row - 1).at(col - 1);
}

std::vector<int> Tableau::column(long c) const {
    std::vector<int> out;
    for (const auto& r : rows) {
        if (static_cast<long>(r.size()) < c) break;
        out.push_back(r[static_cast<std::size_t>(c - 1)]);
    }
    return out;
}

long Tableau::columnLength(long c) const {
    long len = 0;
    for (const auto& r : rows) {
        if (static_cast<long>(r.size()) < c) break;
        ++len;
    }
    return len;
}

long Tableau::columnCountTotal() const {
    return rows.empty() ? 0 : static_cast<long>(rows[0].size());
}

std::string Tableau::toString() const {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "[";
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << " ";
            os << r[i];
        }
        os << "]";
    }
    return os.str();
}

Tableau makeTableau(long d, long n, std::vector<std::vector<int>> rows) {
    if (d < 1 || n < 1) throw std::invalid_argument("tableau needs d,n >= 1");
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    std::vector<long> counts(static_cast<std::size_t>(d) + 1, 0);
    long boxes = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 < rows.size() && rows[i].size() < rows[i + 1].size())
            throw std::invalid_argument("row lengths must be weakly decreasing");
        for (int u : rows[i]) {
            if (u < 1 || u > d) throw std::invalid_argument("letter out of range");
            ++counts[static_cast<std::size_t>(u)];
            ++boxes;
        }
    }
    if (boxes != d * n) throw std::invalid_argument("tableau must have d*n boxes");
    for (long u = 1; u <= d; ++u)
        if (counts[static_cast<std::size_t>(u)] != n)
            throw std::invalid_argument("letter " + std::to_string(u) + " does not appear exactly n times");
    return Tableau{d, n, std::move(rows)};
}

ValidationResult validate(const Tableau& t) {
    long cols = t.columnCountTotal();
    for (long c = 1; c <= cols; ++c) {
        std::set<int> seen;
        long len = t.columnLength(c);
        for (long r = 1; r <= len; ++r) {
            int u = t.letterAt(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            if (!seen.insert(u).second) return {false, u, c};
        }
        if (len == 1) break;  // all remaining columns are singletons
    }
    return {};
}

namespace {

// Sorted column tuples grouped by length; singleton columns kept as counts.
struct ColumnView {
    std::vector<std::vector<int>> cols;  // length >= 2, letters sorted
    std::vector<long> singles;           // index = letter, count of singleton boxes
};

ColumnView viewOf(const Tableau& t) {
    ColumnView v;
    v.singles.assign(static_cast<std::size_t>(t.d) + 1, 0);
    long cols = t.columnCountTotal();
    for (long c = 1; c <= cols; ++c) {
        auto col = t.column(c);
        if (col.size() == 1) {
            ++v.singles[static_cast<std::size_t>(col[0])];
        } else {
            std::sort(col.begin(), col.end());
            v.cols.push_back(std::move(col));
        }
    }
    return v;
}

// Rebuild a tableau from sorted columns: equal-length runs sorted
// lexicographically, singletons sorted by letter.
Tableau rebuild(long d, long n, ColumnView v) {
    std::stable_sort(v.cols.begin(), v.cols.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::size_t height = v.cols.empty() ? 1 : v.cols[0].size();
    std::vector<std::vector<int>> rows(height);
    for (const auto& col : v.cols)
        for (std::size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
    for (int u = 1; u <= d; ++u)
        for (long k = 0; k < v.singles[static_cast<std::size_t>(u)]; ++k) rows[0].push_back(u);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    return makeTableau(d, n, std::move(rows));
}

std::vector<int> wordOf(const Tableau& t) {
    std::vector<int> w;
    long cols = t.columnCountTotal();
    for (long c = 1; c <= cols; ++c)
        for (int u : t.column(c)) w.push_back(u);
    return w;
}

ColumnView relabel(const ColumnView& v, const std::vector<int>& sigma, long d) {
    ColumnView out;
    out.singles.assign(static_cast<std::size_t>(d) + 1, 0);
    out.cols = v.cols;
    for (auto& col : out.cols) {
        for (int& u : col) u = sigma[static_cast<std::size_t>(u)];
        std::sort(col.begin(), col.end());
    }
    for (int u = 1; u <= d; ++u)
        out.singles[static_cast<std::size_t>(sigma[static_cast<std::size_t>(u)])] =
            v.singles[static_cast<std::size_t>(u)];
    return out;
}

std::vector<int> wordOfView(const ColumnView& v, long d) {
    auto cols = v.cols;
    std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<int> w;
    for (const auto& col : cols) w.insert(w.end(), col.begin(), col.end());
    for (int u = 1; u <= d; ++u)
        w.insert(w.end(), static_cast<std::size_t>(v.singles[static_cast<std::size_t>(u)]), u);
    return w;
}

// Relabel-minimal canonical form. Full orbit search is affordable for
// d <= 8, which covers every enumeration path; for larger d the letters
// either sit in singleton columns only (word independent of labels) or
// come from the explicit constructions, where we keep the given labels.
Tableau canonicalRep(const Tableau& t) {
    ColumnView v = viewOf(t);
    if (t.d > 8) return rebuild(t.d, t.n, v);
    std::vector<int> sigma(static_cast<std::size_t>(t.d) + 1);
    std::iota(sigma.begin(), sigma.end(), 0);
    ColumnView bestView = relabel(v, sigma, t.d);
    std::vector<int> bestWord = wordOfView(bestView, t.d);
    std::vector<int> perm(sigma.begin() + 1, sigma.end());
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (long u = 1; u <= t.d; ++u) sigma[static_cast<std::size_t>(u)] = perm[static_cast<std::size_t>(u - 1)];
        ColumnView cand = relabel(v, sigma, t.d);
        std::vector<int> w = wordOfView(cand, t.d);
        if (w < bestWord) {
            bestWord = std::move(w);
            bestView = std::move(cand);
        }
    }
    return rebuild(t.d, t.n, std::move(bestView));
}

}  // namespace

std::vector<int> TableauClass::word() const { return zero ? std::vector<int>{} : wordOf(rep); }

bool TableauClass::operator==(const TableauClass& o) const {
    if (zero || o.zero) return zero == o.zero;
    return rep == o.rep;
}

TableauClass canonicalize(const Tableau& t) {
    auto vr = validate(t);
    if (!vr.ok) return TableauClass{true, t};
    return TableauClass{false, canonicalRep(t)};
}

std::vector<TableauClass> enumerateClasses(const std::vector<long>& shape, long d, long n) {
    std::vector<TableauClass> out;
    long boxes = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        boxes += shape[i];
        if (shape[i] <= 0 || (i + 1 < shape.size() && shape[i] < shape[i + 1]))
            throw std::invalid_argument("bad shape");
    }
    if (boxes != d * n || static_cast<long>(shape.size()) > d) return out;

    // column lengths, longest first
    std::vector<long> colLen;
    long width = shape.empty() ? 0 : shape[0];
    for (long c = 1; c <= width; ++c) {
        long len = 0;
        for (long rl : shape)
            if (rl >= c) ++len;
        colLen.push_back(len);
    }
    std::size_t firstSingle = 0;
    while (firstSingle < colLen.size() && colLen[firstSingle] >= 2) ++firstSingle;

    std::vector<long> budget(static_cast<std::size_t>(d) + 1, n);
    std::vector<std::vector<int>> chosen;
    std::set<std::vector<int>> seen;

    auto emit = [&](const std::vector<long>& singles) {
        ColumnView v;
        v.cols = chosen;
        v.singles = singles;
        Tableau t = rebuild(d, n, std::move(v));
        TableauClass cls = canonicalize(t);
        if (!cls.zero && seen.insert(cls.word()).second) out.push_back(std::move(cls));
    };

    // pick strictly increasing letter tuples column by column; letters are
    // introduced in order 1,2,... to cut relabel duplicates before the
    // canonical-form dedup
    auto rec = [&](auto&& self, std::size_t ci, int maxUsed) -> void {
        if (ci == firstSingle) {
            (void)maxUsed;  // letters beyond maxUsed live in the sorted singleton tail
            std::vector<long> singles(budget.begin(), budget.end());
            singles[0] = 0;
            emit(singles);
            return;
        }
        long len = colLen[ci];
        std::vector<int> tuple;
        auto pick = [&](auto&& pickSelf, int minLetter, long slots) -> void {
            if (slots == 0) {
                bool newOk = true;
                int hi = maxUsed;
                for (int u : tuple)
                    if (u > hi) {
                        if (u != hi + 1) newOk = false;
                        hi = u;
                    }
                if (newOk) {
                    if (ci > 0 && colLen[ci - 1] == len && tuple < chosen.back()) return;
                    chosen.push_back(tuple);
                    self(self, ci + 1, hi);
                    chosen.pop_back();
                }
                return;
            }
            for (int u = minLetter; u <= static_cast<int>(d) - static_cast<int>(slots) + 1; ++u) {
                if (budget[static_cast<std::size_t>(u)] == 0) continue;
                --budget[static_cast<std::size_t>(u)];
                tuple.push_back(u);
                pickSelf(pickSelf, u + 1, slots - 1);
                tuple.pop_back();
                ++budget[static_cast<std::size_t>(u)];
            }
        };
        pick(pick, 1, len);
    };
    rec(rec, 0, 0);

    std::sort(out.begin(), out.end(),
              [](const TableauClass& a, const TableauClass& b) { return a.word() < b.word(); });
    return out;
}

Tableau rowTableau(long d, long n) {
    std::vector<std::vector<int>> rows;
    for (long u = 1; u <= d; ++u) rows.emplace_back(static_cast<std::size_t>(n), static_cast<int>(u));
    return makeTableau(d, n, std::move(rows));
}

Tableau innerLiftTableau(const Tableau& t, long nNew) {
    if (nNew < t.n) throw std::invalid_argument("inner lift target below current n");
    if (nNew == t.n) return t;
    auto rows = t.rows;
    if (rows.empty()) rows.emplace_back();
    for (int u = 1; u <= t.d; ++u)
        rows[0].insert(rows[0].end(), static_cast<std::size_t>(nNew - t.n), u);
    return makeTableau(t.d, nNew, std::move(rows));
}

Tableau outerLiftTableau(const Tableau& t, long dNew) {
    if (dNew < t.d) throw std::invalid_argument("outer lift target below current d");
    if (dNew == t.d) return t;
    auto rows = t.rows;
    if (rows.empty()) rows.emplace_back();
    for (long u = t.d + 1; u <= dNew; ++u)
        rows[0].insert(rows[0].end(), static_cast<std::size_t>(t.n), static_cast<int>(u));
    return makeTableau(dNew, t.n, std::move(rows));
}

Tableau shortColumnTableau(long t, long r, long i, long n, long d) {
    if (!(t >= r && r >= 1)) throw std::invalid_argument("shortColumnTableau needs t >= r >= 1");
    if (i < 2 * t + 3) throw std::invalid_argument("shortColumnTableau needs i >= 2t+3");
    if (n < i) throw std::invalid_argument("shortColumnTableau needs n >= i");
    if (d < 2 * t + i + 1) throw std::invalid_argument("shortColumnTableau needs d >= 2t+i+1");

    long j = d * n - (t + 1) * i - (r + 1);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(t + 1));
    for (long k = 1; k <= t; ++k) {
        auto& row = rows[static_cast<std::size_t>(k)];
        row.insert(row.end(), static_cast<std::size_t>(k + 1), static_cast<int>(k));
        long other = (k <= r) ? i - k : i - k - 1;
        row.insert(row.end(), static_cast<std::size_t>(other), static_cast<int>(2 * t + 1 - k));
    }
    auto& top = rows[0];
    for (long u = 2 * t + 1; u <= 2 * t + i + 1; ++u) top.push_back(static_cast<int>(u));

    std::vector<long> count(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& row : rows)
        for (int u : row) ++count[static_cast<std::size_t>(u)];
    long placedSingles = 0;
    for (long u = 1; u <= d; ++u) {
        long rest = n - count[static_cast<std::size_t>(u)];
        if (rest < 0) throw std::invalid_argument("letter multiplicity exceeds n");
        top.insert(top.end(), static_cast<std::size_t>(rest), static_cast<int>(u));
        placedSingles += rest;
    }
    if (placedSingles != j) throw std::logic_error("singleton count mismatch in short-column construction");
    return makeTableau(d, n, std::move(rows));
}

long longColumnE(long t, long r) { return 2 * ((r - 1) / (2 * t) + 1); }

long longColumnIPrime(long t, long r) {
    long e = longColumnE(t, r);
    return (t * e + 1) * e / 2;
}

Tableau longColumnTableau(long t, long r, long i, long n, long d) {
    if (t < 1 || r < 1) throw std::invalid_argument("longColumnTableau needs t,r >= 1");
    if (t >= r && i >= 2 * t + 3 && n >= i && d >= 2 * t + i + 1)
        return shortColumnTableau(t, r, i, n, d);

    long e = longColumnE(t, r);
    long te = t * e;
    long iPrime = longColumnIPrime(t, r);
    if (i < iPrime) throw std::invalid_argument("longColumnTableau needs i >= (te+1)e/2");
    if (n < te + 2) throw std::invalid_argument("longColumnTableau needs n >= te+2");
    if (d < te + i + 1) throw std::invalid_argument("longColumnTableau needs d >= te+i+1");
    long extras = i - iPrime;  // added to each of the t largest labels, one row each

    long height = std::max(t, r) + 1;
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(height));

    // first column below the top row: te, te-1, ..., te-r+1
    for (long k = 1; k <= r; ++k)
        rows[static_cast<std::size_t>(k)].push_back(static_cast<int>(te - k + 1));

    // t x i subtableau: label s sits in row min(l, 2t-l+1), s = l (mod 2t),
    // appearing s times (plus the surplus for the t largest labels)
    for (long rho = 1; rho <= t; ++rho) {
        auto& row = rows[static_cast<std::size_t>(rho)];
        long placed = 0;
        for (long s = 1; s <= te; ++s) {
            long l = (s - 1) % (2 * t) + 1;
            if (std::min(l, 2 * t - l + 1) != rho) continue;
            long mult = s + ((s > te - t) ? extras : 0);
            row.insert(row.end(), static_cast<std::size_t>(mult), static_cast<int>(s));
            placed += mult;
        }
        if (placed != i) throw std::logic_error("subtableau row length mismatch in long-column construction");
    }

    auto& top = rows[0];
    for (long u = te + 1; u <= te + i + 1; ++u) top.push_back(static_cast<int>(u));

    long j = d * n - (t + 1) * i - (r + 1);
    std::vector<long> count(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& row : rows)
        for (int u : row) ++count[static_cast<std::size_t>(u)];
    long placedSingles = 0;
    for (long u = 1; u <= d; ++u) {
        long rest = n - count[static_cast<std::size_t>(u)];
        if (rest < 0)
            throw std::invalid_argument("letter " + std::to_string(u) + " multiplicity exceeds n");
        top.insert(top.end(), static_cast<std::size_t>(rest), static_cast<int>(u));
        placedSingles += rest;
    }
    if (placedSingles != j) throw std::logic_error("singleton count mismatch in long-column construction");
    return makeTableau(d, n, std::move(rows));
}

std::vector<std::vector<std::pair<int, long>>> structuredWitnessContents(const Tableau& t) {
    std::vector<std::map<int, long>> acc(static_cast<std::size_t>(t.d) + 1);
    for (std::size_t ri = 0; ri < t.rows.size(); ++ri)
        for (int u : t.rows[ri]) ++acc[static_cast<std::size_t>(u)][static_cast<int>(ri + 1)];
    std::vector<std::vector<std::pair<int, long>>> out;
    for (long u = 1; u <= t.d; ++u)
        out.emplace_back(acc[static_cast<std::size_t>(u)].begin(), acc[static_cast<std::size_t>(u)].end());
    return out;
}

}  // namespace hwv
