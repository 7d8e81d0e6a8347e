#pragma once

#include <stdexcept>

namespace verlinde {

// A resource limit was hit (Weyl group size, weight enumeration, ...).
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity that must be an exact integer (or an identity that must hold)
// came out wrong beyond tolerance. Always indicates a bug or corrupted data,
// never legitimate numerical noise.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace verlinde
