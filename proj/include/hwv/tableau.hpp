#ifndef HWV_TABLEAU_HPP
#define HWV_TABLEAU_HPP

#include <optional>
#include <string>
#include <vector>

#include "hwv/partition.hpp"

namespace hwv {

// A tableau of shape lambda |- d*n with content d x n: the boxes are split
// into d letter classes of size n each. Letters are 1..d. Rows are stored
// top to bottom; the shape is the row-length sequence.
struct Tableau {
    long d = 0;
    long n = 0;
    std::vector<std::vector<int>> rows;

    std::vector<long> shape() const;
    Partition shapePartition() const;
    long boxCount() const { return d * n; }
    int letterAt(std::size_t row, std::size_t col) const;  // 1-based coords

    // column c (1-based), letters top to bottom
    std::vector<int> column(long c) const;
    long columnLength(long c) const;
    long columnCountTotal() const;  // lambda_1

    bool operator==(const Tableau&) const = default;
    std::string toString() const;
};

// Throws on structural violations (letter out of range, class size != n,
// row lengths not weakly decreasing).
Tableau makeTableau(long d, long n, std::vector<std::vector<int>> rows);

struct ValidationResult {
    bool ok = true;
    int letter = 0;  // witness for a column repeat
    long col = 0;
};

// ok iff no letter occurs twice in any column (Lemma: repeats force v_T = 0).
ValidationResult validate(const Tableau& t);

// Equivalence class of a tableau. Two tableaux are identified when they
// differ by reordering singleton columns, swapping equal-length columns,
// permuting letters inside a column (sign only, irrelevant for spans), or
// renaming letters; all of these leave the spanned line C*v_T unchanged.
// A tableau with a column repeat canonicalizes to the zero marker.
struct TableauClass {
    bool zero = false;
    Tableau rep;  // canonical representative (meaningless when zero)

    std::vector<int> word() const;  // column-word of the representative
    bool operator==(const TableauClass& o) const;
};

TableauClass canonicalize(const Tableau& t);

// All classes of the given shape with no column repeats, each exactly once,
// ordered lexicographically by canonical column-word. Empty when |shape|
// != d*n or the first column is longer than d.
std::vector<TableauClass> enumerateClasses(const std::vector<long>& shape, long d, long n);

Tableau rowTableau(long d, long n);
Tableau innerLiftTableau(const Tableau& t, long nNew);
Tableau outerLiftTableau(const Tableau& t, long dNew);

// Explicit constructions behind the hook-shaped building blocks.
// shortColumnTableau: t >= r >= 1, i >= 2t+3, n >= i, d >= 2t+i+1.
Tableau shortColumnTableau(long t, long r, long i, long n, long d);
// longColumnTableau: delegates to the short construction when that one's
// parameter domain applies; otherwise builds the general filling with
// e = 2(floor((r-1)/2t)+1) and per-label multiplicities 1..te.
Tableau longColumnTableau(long t, long r, long i, long n, long d);

long longColumnE(long t, long r);       // the even parameter e
long longColumnIPrime(long t, long r);  // minimal subtableau width i'

// Monomial tensor paired with v_T in the positivity proofs: block u holds
// one factor X_row per box of letter u. Returned as per-block value counts.
std::vector<std::vector<std::pair<int, long>>> structuredWitnessContents(const Tableau& t);

}  // namespace hwv

#endif
