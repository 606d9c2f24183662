#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "mopuc/errors.hpp"
#include "mopuc/laurent.hpp"

namespace support {

template <typename Fn>
void expect_error(mopuc::errc code, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected " << mopuc::errc_name(code) << ", nothing thrown");
  } catch (const mopuc::Error& e) {
    CHECK_MESSAGE(e.code() == code, "expected " << mopuc::errc_name(code)
                                                << ", got " << e.what());
  }
}

inline bool close(mopuc::cplx a, mopuc::cplx b, double tol = 1e-13) {
  return std::abs(a - b) <= tol;
}

inline mopuc::MultiIndex mi(std::vector<int> e) {
  return mopuc::MultiIndex(std::move(e));
}

}  // namespace support
