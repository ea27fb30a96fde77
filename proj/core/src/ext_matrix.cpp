#include "lrpc/ext_matrix.hpp"

namespace lrpc {

ExtVector ExtMatrix::apply(const ExtVector& v) const {
    ExtVector out(rows_, ctx_->zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            const ExtElement& h = at(i, j);
            if (ctx_->is_zero(h) || ctx_->is_zero(v[j])) continue;
            ctx_->add_in_place(out[i], ctx_->mul(h, v[j]));
        }
    return out;
}

size_t ExtMatrix::rank() const {
    // Gaussian elimination over F_{q^m}
    std::vector<ExtElement> work = data_;
    auto el = [&](size_t i, size_t j) -> ExtElement& { return work[i * cols_ + j]; };
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t sel = rows_;
        for (size_t i = rank; i < rows_; ++i)
            if (!ctx_->is_zero(el(i, col))) { sel = i; break; }
        if (sel == rows_) continue;
        if (sel != rank)
            for (size_t j = 0; j < cols_; ++j) std::swap(el(sel, j), el(rank, j));
        ExtElement pinv = ctx_->inv(el(rank, col));
        for (size_t i = rank + 1; i < rows_; ++i) {
            if (ctx_->is_zero(el(i, col))) continue;
            ExtElement f = ctx_->mul(el(i, col), pinv);
            for (size_t j = col; j < cols_; ++j) {
                ExtElement t = ctx_->mul(f, el(rank, j));
                el(i, j) = ctx_->sub(el(i, j), t);
            }
        }
        ++rank;
    }
    return rank;
}

FqMatrix unfold(const FieldContext& ctx, const ExtVector& v) {
    FqMatrix mat(ctx.base(), ctx.m(), v.size());
    for (size_t j = 0; j < v.size(); ++j)
        for (unsigned i = 0; i < ctx.m(); ++i) mat.set(i, j, v[j].coords[i]);
    return mat;
}

}  // namespace lrpc
