#pragma once

#include "bv/errors.hpp"

#include <doctest.h>

#include <functional>

namespace support {

/// Code of the bv::Error thrown by f; fails the test when nothing is thrown.
inline bv::ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const bv::Error& e) {
        return e.code();
    }
    FAIL("expected a bv::Error");
    return bv::ErrorCode::InternalInvariant;
}

}  // namespace support
