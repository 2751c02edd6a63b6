#pragma once

#include <stdexcept>
#include <string>

namespace mubcoh {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& what) : Error("NotHermitian: " + what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("DomainError: " + what) {}
};

struct BadDimension : Error {
    explicit BadDimension(const std::string& what) : Error("BadDimension: " + what) {}
};

struct BadRank : Error {
    explicit BadRank(const std::string& what) : Error("BadRank: " + what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch: " + what) {}
};

struct UnsupportedDimension : Error {
    explicit UnsupportedDimension(const std::string& what) : Error("UnsupportedDimension: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

struct NotUnbiased : Error {
    explicit NotUnbiased(const std::string& what) : Error("NotUnbiased: " + what) {}
};

struct NegativeRadicand : Error {
    explicit NegativeRadicand(const std::string& what) : Error("NegativeRadicand: " + what) {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& what) : Error("BadIndex: " + what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("IoError: " + what) {}
};

}  // namespace mubcoh
