#pragma once

#include <cstdint>
#include <random>

#include "convexo/linalg.hpp"

namespace convexo {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Seeded source of standard complex Gaussians, (N(0,1) + i N(0,1)) / sqrt(2).
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

    Complex gaussian();
    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi);
    Complex unimodular();

    Matrix gaussian_matrix(Index rows, Index cols);
    Vector gaussian_vector(Index n);
    /// g-tuple of n x n Gaussian matrices.
    MatrixTuple gaussian_tuple(std::size_t g, Index n);
    /// Gaussian tuple normalized to unit norm (MatrixTuple::norm).
    MatrixTuple direction(std::size_t g, Index n);
    /// Haar-distributed unitary via QR with phase correction.
    Matrix unitary(Index n);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace convexo
