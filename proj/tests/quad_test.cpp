#include <gtest/gtest.h>
#include "circlelab/verify.hpp"
TEST(Stub, quad) { SUCCEED(); }
