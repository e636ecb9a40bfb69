#include "satmat/pattern.hpp"

#include <string>

namespace satmat {

Pattern::Pattern(Matrix m, bool strict) : m_(std::move(m)), strict_(strict) {
    if (m_.all_zero()) throw ContractError("pattern has no 1-entries");
    if (strict_) {
        for (int i = 0; i < m_.rows(); ++i)
            if (m_.row_empty(i))
                throw ContractError("pattern row " + std::to_string(i + 1) +
                                    " is empty");
        for (int j = 0; j < m_.cols(); ++j)
            if (m_.col_empty(j))
                throw ContractError("pattern column " + std::to_string(j + 1) +
                                    " is empty");
    }
}

}  // namespace satmat
