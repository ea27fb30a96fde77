#include "lrpc/fq_matrix.hpp"

#include <cstring>
#include <stdexcept>

namespace lrpc {

size_t FqMatrix::rref(std::vector<size_t>* pivot_cols) {
    if (rows_ == 0 || cols_ == 0) {
        if (pivot_cols) pivot_cols->clear();
        return 0;
    }
    return fq_->q() == 2 ? rref_gf2(pivot_cols) : rref_generic(pivot_cols);
}

size_t FqMatrix::rref_gf2(std::vector<size_t>* pivot_cols) {
    const size_t words = (cols_ + 63) / 64;
    std::vector<uint64_t> packed(rows_ * words, 0);
    for (size_t i = 0; i < rows_; ++i) {
        const uint8_t* r = row(i);
        uint64_t* pr = packed.data() + i * words;
        for (size_t j = 0; j < cols_; ++j)
            if (r[j]) pr[j >> 6] |= uint64_t(1) << (j & 63);
    }

    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t w = col >> 6;
        uint64_t mask = uint64_t(1) << (col & 63);
        size_t sel = rows_;
        for (size_t i = rank; i < rows_; ++i)
            if (packed[i * words + w] & mask) { sel = i; break; }
        if (sel == rows_) continue;
        if (sel != rank)
            for (size_t t = 0; t < words; ++t)
                std::swap(packed[sel * words + t], packed[rank * words + t]);
        uint64_t* pr = packed.data() + rank * words;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == rank) continue;
            uint64_t* pi = packed.data() + i * words;
            if (pi[w] & mask)
                for (size_t t = w; t < words; ++t) pi[t] ^= pr[t];
        }
        pivots.push_back(col);
        ++rank;
    }

    for (size_t i = 0; i < rows_; ++i) {
        const uint64_t* pr = packed.data() + i * words;
        uint8_t* r = row(i);
        for (size_t j = 0; j < cols_; ++j)
            r[j] = uint8_t((pr[j >> 6] >> (j & 63)) & 1);
    }
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return rank;
}

size_t FqMatrix::rref_generic(std::vector<size_t>* pivot_cols) {
    const SmallField& fq = *fq_;
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t sel = rows_;
        for (size_t i = rank; i < rows_; ++i)
            if (at(i, col)) { sel = i; break; }
        if (sel == rows_) continue;
        if (sel != rank)
            for (size_t t = 0; t < cols_; ++t)
                std::swap(data_[sel * cols_ + t], data_[rank * cols_ + t]);
        uint8_t inv = fq.inv(at(rank, col));
        if (inv != 1) {
            uint8_t* r = row(rank);
            for (size_t t = col; t < cols_; ++t) r[t] = fq.mul(inv, r[t]);
        }
        const uint8_t* pr = row(rank);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == rank) continue;
            uint8_t c = at(i, col);
            if (!c) continue;
            uint8_t* ri = row(i);
            for (size_t t = col; t < cols_; ++t)
                ri[t] = fq.sub(ri[t], fq.mul(c, pr[t]));
        }
        pivots.push_back(col);
        ++rank;
    }
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return rank;
}

size_t FqMatrix::rank() const {
    FqMatrix copy = *this;
    return copy.rref();
}

bool FqMatrix::invert(FqMatrix& out) const {
    if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
    FqMatrix aug(*fq_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        std::memcpy(aug.row(i), row(i), cols_);
        aug.set(i, cols_ + i, 1);
    }
    std::vector<size_t> pivots;
    size_t rk = aug.rref(&pivots);
    if (rk < rows_ || pivots[rows_ - 1] >= cols_) return false;
    out = FqMatrix(*fq_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        std::memcpy(out.row(i), aug.row(i) + cols_, cols_);
    return true;
}

FqMatrix FqMatrix::multiply(const FqMatrix& other) const {
    if (cols_ != other.rows_) throw std::domain_error("dimension mismatch");
    const SmallField& fq = *fq_;
    FqMatrix out(fq, rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        uint8_t* ro = out.row(i);
        for (size_t t = 0; t < cols_; ++t) {
            uint8_t a = at(i, t);
            if (!a) continue;
            const uint8_t* rb = other.row(t);
            if (fq.q() == 2) {
                for (size_t j = 0; j < other.cols_; ++j) ro[j] ^= rb[j];
            } else {
                for (size_t j = 0; j < other.cols_; ++j)
                    ro[j] = fq.add(ro[j], fq.mul(a, rb[j]));
            }
        }
    }
    return out;
}

FqMatrix FqMatrix::kernel() const {
    FqMatrix red = *this;
    std::vector<size_t> pivots;
    size_t rk = red.rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    FqMatrix ker(*fq_, cols_ - rk, cols_);
    size_t kr = 0;
    for (size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        ker.set(kr, free_col, 1);
        for (size_t pi = 0; pi < rk; ++pi)
            ker.set(kr, pivots[pi], fq_->neg(red.at(pi, free_col)));
        ++kr;
    }
    return ker;
}

bool FqMatrix::solve(const std::vector<uint8_t>& b, std::vector<uint8_t>& x) const {
    if (b.size() != rows_) throw std::domain_error("dimension mismatch");
    FqMatrix aug(*fq_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        std::memcpy(aug.row(i), row(i), cols_);
        aug.set(i, cols_, b[i]);
    }
    std::vector<size_t> pivots;
    size_t rk = aug.rref(&pivots);
    if (rk > 0 && pivots[rk - 1] == cols_) return false;  // inconsistent
    x.assign(cols_, 0);
    for (size_t pi = 0; pi < rk; ++pi) x[pivots[pi]] = aug.at(pi, cols_);
    return true;
}

}  // namespace lrpc
