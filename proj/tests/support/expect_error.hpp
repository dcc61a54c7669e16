#pragma once

#include "aieo/error.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace aieo::testing {

inline void expect_code(ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace aieo::testing
