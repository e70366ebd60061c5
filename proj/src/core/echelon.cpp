#include "core/echelon.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace wfa {

Vec EchelonBasis::reduce(Vec v) const {
    if (v.size() != ambient_dim_)
        throw Error(ErrorCode::Dimension, "vector length does not match ambient dimension");
    for (size_t k = 0; k < rows_.size(); k++) {
        const Rational& coeff = v[pivot_cols_[k]];
        if (coeff.is_zero())
            continue;
        Rational f = coeff;
        const Vec& row = rows_[k];
        for (size_t j = 0; j < ambient_dim_; j++)
            v[j] -= f * row[j];
    }
    return v;
}

bool EchelonBasis::insert(const Vec& v) {
    Vec residue = reduce(v);
    size_t pivot = ambient_dim_;
    for (size_t j = 0; j < ambient_dim_; j++) {
        if (!residue[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == ambient_dim_)
        return false;

    Rational inv = Rational(1) / residue[pivot];
    for (size_t j = pivot; j < ambient_dim_; j++)
        residue[j] *= inv;
    // Clear the new pivot column from the existing rows to stay fully reduced.
    for (auto& row : rows_) {
        if (row[pivot].is_zero())
            continue;
        Rational f = row[pivot];
        for (size_t j = pivot; j < ambient_dim_; j++)
            row[j] -= f * residue[j];
    }
    auto pos = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), pivot);
    size_t idx = static_cast<size_t>(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(residue));
    return true;
}

} // namespace wfa
