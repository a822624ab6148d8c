#pragma once

// Dimension of the GL_n(Z)-submodule of the depth-c tuple layer generated by
// a list of seed tuples: orbit closure under a fixed generating set of
// GL_n(Z), with exact integer row reduction.  span_dim runs the closure with
// OpenMP batches; span_dim_serial is the plain reference loop.

#include "mbg/graded.hpp"

namespace mbg {

// elementary transvections with +-1, the (1 2) swap, and diag(-1, 1, ..., 1)
std::vector<IntMat> gl_generators(int n);

int span_dim(int n, int c, const std::vector<GrTuple>& seeds);
int span_dim_serial(int n, int c, const std::vector<GrTuple>& seeds);

}  // namespace mbg
