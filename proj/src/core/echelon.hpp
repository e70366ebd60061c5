#pragma once

#include <cstddef>
#include <vector>

#include "core/matrix.hpp"

namespace wfa {

// Incrementally maintained basis in reduced row-echelon form. Each stored
// row has leading entry 1 at its pivot column, that column is zero in all
// other rows, and pivot columns are strictly increasing.
class EchelonBasis {
public:
    explicit EchelonBasis(size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    // Inserts v if it is independent of the stored rows; returns true in
    // that case. One elimination pass against the stored rows.
    bool insert(const Vec& v);

    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    // The residue of v after eliminating all stored pivots.
    Vec reduce(Vec v) const;

    size_t dimension() const { return rows_.size(); }
    size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<size_t>& pivot_cols() const { return pivot_cols_; }

private:
    size_t ambient_dim_;
    std::vector<Vec> rows_;
    std::vector<size_t> pivot_cols_;
};

} // namespace wfa
