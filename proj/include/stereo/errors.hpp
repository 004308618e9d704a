#pragma once

#include <stdexcept>

namespace stereo {

/// A mathematical invariant that should be unconditionally true failed.
/// The CLI maps this to its own exit code, distinct from usage errors.
class invariant_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace stereo
