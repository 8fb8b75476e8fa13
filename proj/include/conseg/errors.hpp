#pragma once

#include <stdexcept>
#include <string>

namespace conseg {

// Error taxonomy maps onto CLI exit codes:
//   UsageError -> 1 (bad command line / config)
//   DataError  -> 2 (bad input files, geometry mismatches, format violations)
//   anything else -> 3 (internal)
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class DataError : public Error {
public:
    using Error::Error;
};

}  // namespace conseg
