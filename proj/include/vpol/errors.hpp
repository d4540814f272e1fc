#ifndef VPOL_ERRORS_HPP
#define VPOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vpol {

// Precondition violations (bad argument values, unsupported orders, poles).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the declared working range of an implementation.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// An iterative scheme (quadrature, series, ODE, root find) failed to reach
// the requested tolerance.  `achieved` carries the best error estimate so
// callers can report diagnostics instead of a bare failure.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double achieved_tol)
        : std::runtime_error(what), achieved(achieved_tol) {}
    double achieved;
};

} // namespace vpol

#endif
