#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

#define CHECK_REL(a, b, tol)                                                        \
    do {                                                                            \
        const double va_ = (a), vb_ = (b);                                          \
        INFO("got " << va_ << " want " << vb_ << " rel " << rel_err(va_, vb_));     \
        CHECK(rel_err(va_, vb_) <= (tol));                                          \
    } while (0)
