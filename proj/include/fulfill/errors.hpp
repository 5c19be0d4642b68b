#pragma once

#include <stdexcept>
#include <string>

namespace fulfill {

// Malformed or invariant-violating input data. CLI exit code 2.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Training could not proceed or diverged. CLI exit code 3.
struct TrainingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad command-line usage. CLI exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fulfill
