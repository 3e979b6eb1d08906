#pragma once

#include <doctest.h>

#include "paleytype/error.hpp"

template <class F>
paleytype::Errc error_code_of(F&& f) {
  try {
    f();
  } catch (const paleytype::Error& e) {
    return e.code();
  }
  FAIL("expected paleytype::Error");
  return paleytype::Errc::InvalidArgument;
}

#define CHECK_ERRC(expr, errc) CHECK(error_code_of([&] { (void)(expr); }) == (errc))
