// errors.hpp — Exception types thrown across the library

#pragma once

#include <stdexcept>
#include <string>

namespace namrqed {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numerics
struct SingularMatrix : Error {
    using Error::Error;
};
struct DefectiveMatrix : Error {
    using Error::Error;
};
struct AmbiguousKernel : Error {
    using Error::Error;
};

// model / dynamics / correlations
struct InvalidDevice : Error {
    using Error::Error;
};
struct BasisMismatch : Error {
    using Error::Error;
};

// analytic
struct ExceptionalPoint : Error {
    using Error::Error;
};

// spectrum
struct TailTooFat : Error {
    using Error::Error;
};
struct SingularResolvent : Error {
    using Error::Error;
};
struct NoPeaks : Error {
    using Error::Error;
};

// run configuration
struct InvalidConfig : Error {
    using Error::Error;
};

} // namespace namrqed
