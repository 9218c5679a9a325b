#pragma once

#include <stdexcept>
#include <string>

namespace logfold {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Varint stream without a terminating byte, or terminator beyond 10 bytes.
struct MalformedVarint : Error {
    using Error::Error;
};

struct CorruptArchive : Error {
    using Error::Error;
};

struct UnsupportedVersion : Error {
    using Error::Error;
};

struct BackendUnavailable : Error {
    using Error::Error;
};

/// An internal invariant failed during decoding; no output is produced.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct IoFailure : Error {
    using Error::Error;
};

}  // namespace logfold
