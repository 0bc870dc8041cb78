#include "rsb/matrix.hpp"

namespace rsb {

MatrixK to_ratfunc(const MatrixQ& m) {
    MatrixK r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RatFunc(m(i, j));
    return r;
}

}  // namespace rsb
