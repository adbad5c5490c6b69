#include "eisenspec/errors.hpp"

#include <cmath>

namespace eisenspec {

std::complex<double> require_finite(std::complex<double> value, const char* what) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw NonFiniteError(std::string(what) + ": result is not finite");
    }
    return value;
}

double require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw NonFiniteError(std::string(what) + ": result is not finite");
    }
    return value;
}

}  // namespace eisenspec
