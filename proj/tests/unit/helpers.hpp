#pragma once

#include "whad/core.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <functional>

namespace testing {

inline whad::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const whad::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return whad::ErrorCode::InternalConsistency;
}

inline whad::ExactMatrix p1() {
  whad::ExactMatrix p(4, 4);
  p << 1, 1, 1, 0,
       1, -1, 1, 0,
       1, 0, -1, 1,
       1, 0, -1, -1;
  return p;
}

}  // namespace testing
