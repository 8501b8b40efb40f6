#pragma once

#include "convexo/linalg.hpp"

/// Fixed tuples used throughout the test corpus and the example catalog.
namespace convexo::standard {

/// Matrix unit e_ij of size n x n (0-indexed).
Matrix unit(Index i, Index j, Index n);

/// E = (I_2, e_12): spans the algebra of 2x2 upper-triangular Toeplitz
/// matrices (the two-dimensional type IV algebra).
MatrixTuple tuple_e();

/// F = (S, S^2) with S the 3x3 upper shift; nilpotent, type I.
MatrixTuple tuple_f();

/// (e_11, e_12), type II.
MatrixTuple type_ii();

/// (e_11, e_21), type III.
MatrixTuple type_iii();

/// e_12 + e_21 in M_2.
Matrix swap2();

/// [[0, -1], [1, 0]]
Matrix rotation2();

} // namespace convexo::standard
