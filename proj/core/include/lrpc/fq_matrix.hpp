#pragma once

#include <cstdint>
#include <vector>

#include "lrpc/small_field.hpp"

namespace lrpc {

/// Dense matrix over a small field, row-major bytes. Row reduction has a
/// bit-packed fast path for q = 2; everything else goes through the field
/// tables.
class FqMatrix {
public:
    FqMatrix() : fq_(nullptr), rows_(0), cols_(0) {}
    FqMatrix(const SmallField& fq, size_t rows, size_t cols)
        : fq_(&fq), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const SmallField& field() const { return *fq_; }

    uint8_t at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint8_t v) { data_[i * cols_ + j] = v; }
    uint8_t* row(size_t i) { return data_.data() + i * cols_; }
    const uint8_t* row(size_t i) const { return data_.data() + i * cols_; }

    /// In-place reduced row echelon form; returns the rank and, if
    /// pivot_cols is non-null, the pivot column indices.
    size_t rref(std::vector<size_t>* pivot_cols = nullptr);
    size_t rank() const;

    /// Inverse of a square matrix; returns false if singular.
    bool invert(FqMatrix& out) const;

    FqMatrix multiply(const FqMatrix& other) const;

    /// Basis of the right kernel, one solution per row of the result.
    FqMatrix kernel() const;

    /// Solve A x = b for one x (any solution); returns false if inconsistent.
    bool solve(const std::vector<uint8_t>& b, std::vector<uint8_t>& x) const;

    bool operator==(const FqMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    size_t rref_generic(std::vector<size_t>* pivot_cols);
    size_t rref_gf2(std::vector<size_t>* pivot_cols);

    const SmallField* fq_;
    size_t rows_, cols_;
    std::vector<uint8_t> data_;
};

}  // namespace lrpc
