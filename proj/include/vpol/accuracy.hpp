#ifndef VPOL_ACCURACY_HPP
#define VPOL_ACCURACY_HPP

#include "vpol/errors.hpp"

namespace vpol {

// Tolerance bundle threaded through every numerical kernel.
struct EvalAccuracy {
    double rel_tol = 1e-12;   // target relative tolerance
    double abs_tol = 0.0;     // absolute floor (0 = purely relative)
    int max_subdivisions = 12; // refinement levels / bisection depth

    void validate() const {
        if (!(rel_tol > 0.0))
            throw DomainError("EvalAccuracy: rel_tol must be > 0");
        if (abs_tol < 0.0)
            throw DomainError("EvalAccuracy: abs_tol must be >= 0");
        if (max_subdivisions < 1)
            throw DomainError("EvalAccuracy: max_subdivisions must be >= 1");
    }
};

} // namespace vpol

#endif
