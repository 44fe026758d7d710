#include "lincode/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace lincode {

namespace {

struct EliminationResult {
    std::vector<Vec> rows;
    std::vector<Vec> transform;
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form with the pivot columns tried in the order given by
// column_order. Row r of the result has a 1 in column pivots[r] and zeros in
// every other pivot column. The same row operations are mirrored on an
// identity matrix to obtain the transform.
EliminationResult eliminate(const Field& f, std::vector<Vec> rows,
                            const std::vector<std::size_t>& column_order) {
    std::size_t k = rows.size();
    EliminationResult out;
    out.transform.assign(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) out.transform[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t c : column_order) {
        if (r == k) break;
        std::size_t pivot = k;
        for (std::size_t i = r; i < k; ++i) {
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == k) continue;
        std::swap(rows[r], rows[pivot]);
        std::swap(out.transform[r], out.transform[pivot]);
        Elem s = f.inv(rows[r][c]);
        if (s != 1) {
            for (Elem& x : rows[r]) x = f.mul(s, x);
            for (Elem& x : out.transform[r]) x = f.mul(s, x);
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Elem m = rows[i][c];
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
            for (std::size_t j = 0; j < k; ++j)
                out.transform[i][j] = f.sub(out.transform[i][j], f.mul(m, out.transform[r][j]));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rows = std::move(rows);
    return out;
}

std::vector<std::size_t> natural_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t(0));
    return order;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(const Field& f, std::size_t k, std::size_t n,
                                 std::vector<Vec> rows)
    : field_(f), k_(k), n_(n), rows_(std::move(rows)) {
    if (k_ == 0 || n_ == 0)
        throw DimensionMismatch("GeneratorMatrix(): k and n must be positive");
    if (rows_.size() != k_)
        throw DimensionMismatch("GeneratorMatrix(): expected " + std::to_string(k_) + " rows");
    for (const Vec& r : rows_) {
        if (r.size() != n_)
            throw DimensionMismatch("GeneratorMatrix(): expected rows of length " +
                                    std::to_string(n_));
        for (Elem x : r)
            if (x >= field_.q())
                throw SymbolOutOfRange("GeneratorMatrix(): entry " + std::to_string(int(x)) +
                                       " is not an element of GF(" + std::to_string(field_.q()) +
                                       ")");
    }
    auto elim = eliminate(field_, rows_, natural_order(n_));
    if (elim.pivots.size() != k_)
        throw RankDeficient("GeneratorMatrix(): rank " + std::to_string(elim.pivots.size()) +
                            " < k = " + std::to_string(k_));
}

Codeword encode(const GeneratorMatrix& g, const Vec& v) {
    if (v.size() != g.k())
        throw DimensionMismatch("encode(): message length " + std::to_string(v.size()) +
                                " != k = " + std::to_string(g.k()));
    const Field& f = g.field();
    Codeword c{Vec(g.n(), 0), 0};
    for (std::size_t i = 0; i < g.k(); ++i) {
        if (v[i] == 0) continue;
        const Vec& row = g.row(i);
        for (std::size_t j = 0; j < g.n(); ++j)
            c.coords[j] = f.add(c.coords[j], f.mul(v[i], row[j]));
    }
    c.weight = hamming_weight(c.coords);
    return c;
}

SystematicForm systematic_on(const GeneratorMatrix& g, std::span<const std::size_t> preferred) {
    std::vector<std::size_t> order;
    order.reserve(g.n());
    std::vector<bool> used(g.n(), false);
    for (std::size_t c : preferred) {
        if (c >= g.n())
            throw DimensionMismatch("systematic_on(): column index " + std::to_string(c) +
                                    " out of range");
        if (!used[c]) {
            used[c] = true;
            order.push_back(c);
        }
    }
    std::size_t preferred_count = order.size();
    for (std::size_t c = 0; c < g.n(); ++c)
        if (!used[c]) order.push_back(c);

    auto elim = eliminate(g.field(), g.rows(), order);
    if (elim.pivots.size() != g.k())
        throw RankDeficient("systematic_on(): matrix is rank deficient");

    std::set<std::size_t> pref_set(order.begin(), order.begin() + preferred_count);
    std::size_t in_pref = 0;
    for (std::size_t c : elim.pivots)
        if (pref_set.count(c)) ++in_pref;

    return SystematicForm{GeneratorMatrix(g.field(), g.k(), g.n(), std::move(elim.rows)),
                          std::move(elim.pivots), in_pref, std::move(elim.transform)};
}

std::vector<std::size_t> InformationSetCollection::relative_ranks() const {
    std::vector<std::size_t> r;
    r.reserve(entries.size());
    for (const auto& e : entries) r.push_back(e.relative_rank);
    return r;
}

InformationSetCollection build_information_set_collection(const GeneratorMatrix& g) {
    InformationSetCollection coll;
    std::vector<std::size_t> cover_count(g.n(), 0);
    std::size_t covered = 0;
    while (covered < g.n()) {
        std::vector<std::size_t> order = natural_order(g.n());
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return cover_count[a] < cover_count[b];
        });
        SystematicForm form = systematic_on(g, order);
        std::size_t rel = g.k();
        for (std::size_t c : form.pivots)
            if (cover_count[c] > 0) --rel;
        if (rel == 0) break;
        for (std::size_t c : form.pivots) {
            if (cover_count[c] == 0) ++covered;
            ++cover_count[c];
        }
        coll.entries.push_back(InformationSet{std::move(form.pivots), std::move(form.matrix), rel});
    }
    return coll;
}

GeneratorMatrix append_columns(const GeneratorMatrix& g, const std::vector<Vec>& columns) {
    for (const Vec& col : columns)
        if (col.size() != g.k())
            throw DimensionMismatch("append_columns(): columns must have length k");
    std::vector<Vec> rows = g.rows();
    for (std::size_t i = 0; i < g.k(); ++i)
        for (const Vec& col : columns) rows[i].push_back(col[i]);
    return GeneratorMatrix(g.field(), g.k(), g.n() + columns.size(), std::move(rows));
}

}  // namespace lincode
