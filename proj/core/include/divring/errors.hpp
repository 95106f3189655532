#ifndef DIVRING_ERRORS_HPP
#define DIVRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divring {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DuplicateConstantEntry : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class SingularTransform : public Error {
public:
    using Error::Error;
};

class UnitNotInNewBasis : public Error {
public:
    using Error::Error;
};

class DegenerateParams : public Error {
public:
    using Error::Error;
};

class WrongAlgebra : public Error {
public:
    using Error::Error;
};

class NonRealProduct : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class EvaluationFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace divring

#endif
