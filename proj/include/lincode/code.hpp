#ifndef LINCODE_CODE_HPP
#define LINCODE_CODE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lincode/field.hpp"

namespace lincode {

// Full-rank k x n generator matrix over GF(q). Rank is enforced at
// construction; RankDeficient is thrown otherwise (this also covers k > n).
class GeneratorMatrix {
public:
    GeneratorMatrix(const Field& f, std::size_t k, std::size_t n, std::vector<Vec> rows);

    const Field& field() const { return field_; }
    std::size_t k() const { return k_; }
    std::size_t n() const { return n_; }
    const Vec& row(std::size_t i) const { return rows_[i]; }
    const std::vector<Vec>& rows() const { return rows_; }
    Elem at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    bool operator==(const GeneratorMatrix& o) const {
        return field_.q() == o.field_.q() && rows_ == o.rows_;
    }

private:
    Field field_;
    std::size_t k_, n_;
    std::vector<Vec> rows_;
};

struct Codeword {
    Vec coords;
    std::size_t weight;
};

// c = v G. Throws DimensionMismatch unless |v| = k.
Codeword encode(const GeneratorMatrix& g, const Vec& v);

// Row-equivalent matrix in reduced form: row r carries a 1 in column pivots[r]
// and every other row is 0 there. Pivot columns are chosen by scanning
// `preferred` first (in the given order), then the remaining columns in
// ascending index order. rank_in_preferred counts pivots that landed inside
// `preferred`. transform is the k x k row map T with matrix = T * original.
struct SystematicForm {
    GeneratorMatrix matrix;
    std::vector<std::size_t> pivots;
    std::size_t rank_in_preferred;
    std::vector<Vec> transform;
};

SystematicForm systematic_on(const GeneratorMatrix& g, std::span<const std::size_t> preferred);

struct InformationSet {
    std::vector<std::size_t> columns;  // pivot columns, in pivot-row order
    GeneratorMatrix matrix;            // systematic on those columns
    std::size_t relative_rank;         // k - |columns ∩ union of earlier sets|
};

struct InformationSetCollection {
    std::vector<InformationSet> entries;

    std::size_t mu() const { return entries.size(); }
    std::vector<std::size_t> relative_ranks() const;
};

// Deterministic greedy construction: each round pivots preferentially on the
// least-covered columns (ties by lowest index) and stops once every column is
// covered or no uncovered column can become a pivot. The first set always has
// relative rank k; zero columns never become pivots.
InformationSetCollection build_information_set_collection(const GeneratorMatrix& g);

// Appends the given columns (each of length k) on the right: G -> (G | X).
GeneratorMatrix append_columns(const GeneratorMatrix& g, const std::vector<Vec>& columns);

}  // namespace lincode

#endif
