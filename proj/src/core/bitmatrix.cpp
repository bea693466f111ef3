#include "dsrg/bitmatrix.hpp"

#include <sstream>

namespace dsrg {

DenseBinaryMatrix transpose(const DenseBinaryMatrix& m) {
    DenseBinaryMatrix t(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) t.set(c, r, true);
    return t;
}

IntegerMatrix matmul(const DenseBinaryMatrix& a, const DenseBinaryMatrix& b) {
    if (a.cols() != b.rows()) fail("matmul: dimension mismatch");
    DenseBinaryMatrix bt = transpose(b);
    IntegerMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            out.at(i, j) = a.and_popcount(i, bt, j);
    return out;
}

IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols != b.rows) fail("matmul: dimension mismatch");
    IntegerMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            std::int64_t x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = checked_add(out.at(i, j), checked_mul(x, b.at(k, j)));
        }
    return out;
}

std::string format(const IntegerMatrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace dsrg
