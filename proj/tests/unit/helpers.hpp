#pragma once

#include <gtest/gtest.h>

#include "symbreak/error.hpp"

#define EXPECT_CODE(stmt, expected)                                        \
  do {                                                                     \
    try {                                                                  \
      stmt;                                                                \
      ADD_FAILURE() << "no exception from " #stmt;                         \
    } catch (const symbreak::Error& e) {                                   \
      EXPECT_EQ(e.code(), symbreak::ErrorCode::expected) << e.what();      \
    }                                                                      \
  } while (0)
