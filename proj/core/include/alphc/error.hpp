#pragma once

#include <stdexcept>
#include <string>

namespace alphc {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bitstream ended in the middle of a value.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Serialized data is structurally invalid (bad magic, failed integrity
/// check, impossible field value).
class CorruptionError : public Error {
public:
    using Error::Error;
};

/// Invalid or unsupported configuration (bad flag combination, unknown
/// syllabifier id, symbol outside a letter table).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File could not be read or parsed; message carries the location.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace alphc
