#pragma once

#include <vector>

#include "lrpc/field.hpp"
#include "lrpc/fq_matrix.hpp"

namespace lrpc {

/// Dense matrix over F_{q^m}, row-major.
class ExtMatrix {
public:
    ExtMatrix() : ctx_(nullptr), rows_(0), cols_(0) {}
    ExtMatrix(const FieldContext& ctx, size_t rows, size_t cols)
        : ctx_(&ctx), rows_(rows), cols_(cols), data_(rows * cols, ctx.zero()) {}

    const FieldContext& ctx() const { return *ctx_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    ExtElement& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const ExtElement& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    /// y = M v (length cols -> length rows).
    ExtVector apply(const ExtVector& v) const;

    /// Rank as a matrix over F_{q^m}.
    size_t rank() const;

private:
    const FieldContext* ctx_;
    size_t rows_, cols_;
    std::vector<ExtElement> data_;
};

/// m x n matrix over F_q whose column j holds the coordinates of v[j].
FqMatrix unfold(const FieldContext& ctx, const ExtVector& v);

}  // namespace lrpc
