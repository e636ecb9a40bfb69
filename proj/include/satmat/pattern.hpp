#pragma once

#include "satmat/matrix.hpp"

namespace satmat {

// A pattern is a 0-1 matrix with at least one 1-entry. `strict` additionally
// asserts that no row or column is empty; several constructions require it.
class Pattern {
public:
    explicit Pattern(Matrix m, bool strict = false);

    const Matrix& matrix() const { return m_; }
    bool strict() const { return strict_; }
    int rows() const { return m_.rows(); }
    int cols() const { return m_.cols(); }

private:
    Matrix m_;
    bool strict_;
};

}  // namespace satmat
