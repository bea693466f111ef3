#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsrg {

// Error raised on malformed input, violated preconditions and arithmetic
// overflow. Negative mathematical verdicts are ordinary return values, not
// errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) fail("integer overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) fail("integer overflow in multiplication");
    return r;
}

// Dense 0/1 matrix with bit-packed rows. Entry counting reduces to
// word-parallel AND + popcount, which keeps verification of graphs with a
// few hundred vertices well below a second.
class DenseBinaryMatrix {
public:
    DenseBinaryMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          bits_(static_cast<std::size_t>(rows) * wpr_, 0) {
        if (rows < 1 || cols < 1) fail("matrix dimensions must be >= 1");
    }

    static DenseBinaryMatrix identity(int n) {
        DenseBinaryMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static DenseBinaryMatrix ones(int rows, int cols) {
        DenseBinaryMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) m.set(r, c, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const {
        return (bits_[word_index(r, c)] >> (c & 63)) & 1u;
    }

    void set(int r, int c, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            bits_[word_index(r, c)] |= mask;
        else
            bits_[word_index(r, c)] &= ~mask;
    }

    const std::uint64_t* row(int r) const {
        return bits_.data() + static_cast<std::size_t>(r) * wpr_;
    }

    int row_popcount(int r) const {
        const std::uint64_t* w = row(r);
        int s = 0;
        for (int i = 0; i < wpr_; ++i) s += std::popcount(w[i]);
        return s;
    }

    // popcount(this->row(r) AND other.row(other_r)); both matrices must have
    // the same column count.
    int and_popcount(int r, const DenseBinaryMatrix& other, int other_r) const {
        const std::uint64_t* a = row(r);
        const std::uint64_t* b = other.row(other_r);
        int s = 0;
        for (int i = 0; i < wpr_; ++i) s += std::popcount(a[i] & b[i]);
        return s;
    }

    bool operator==(const DenseBinaryMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

private:
    std::size_t word_index(int r, int c) const {
        return static_cast<std::size_t>(r) * wpr_ + (c >> 6);
    }

    int rows_, cols_, wpr_;
    std::vector<std::uint64_t> bits_;
};

DenseBinaryMatrix transpose(const DenseBinaryMatrix& m);

// Exact signed integer matrix; holds products such as A^2 and H*Q.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> v;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c)
        : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const IntegerMatrix&) const = default;
};

// Exact integer product of two 0/1 matrices; entry (i,j) counts common
// positions of row i of a and column j of b.
IntegerMatrix matmul(const DenseBinaryMatrix& a, const DenseBinaryMatrix& b);

// Exact product with overflow detection.
IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b);

std::string format(const IntegerMatrix& m);

}  // namespace dsrg
