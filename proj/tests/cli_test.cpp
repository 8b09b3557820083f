#include <gtest/gtest.h>
#include "circlelab/verify.hpp"
TEST(Stub, cli) { SUCCEED(); }
