// oracle.hpp -- dense-matrix reference model for the walk step
//
// Builds the 2N x 2N step unitary explicitly from Kronecker-product factors
// (block-diagonal coin matrix, shift permutation matrices) and applies it by
// naive matrix-vector multiplication.  Independent of the in-place swap/loop
// implementation in walk.cpp; test-only.
#pragma once

#include <complex>
#include <vector>

#include "caqwbh/walk.hpp"

namespace caqwbh::oracle {

using Mat = std::vector<std::vector<std::complex<double>>>;

inline Mat zero_matrix(std::size_t n) {
    return Mat(n, std::vector<std::complex<double>>(n));
}

inline Mat identity(std::size_t n) {
    Mat m = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat out = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> sum = 0.0;
            for (std::size_t l = 0; l < n; ++l) sum += a[i][l] * b[l][j];
            out[i][j] = sum;
        }
    }
    return out;
}

inline std::vector<std::complex<double>> matvec(
    const Mat& m, const std::vector<std::complex<double>>& v) {
    std::vector<std::complex<double>> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::complex<double> sum = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) sum += m[i][j] * v[j];
        out[i] = sum;
    }
    return out;
}

/// sum_x |x><x| (x) C2(select[x]): 2x2 blocks [[c, s], [s, -c]] on the
/// position-major layout (index 2x + c).
inline Mat coin_matrix(std::span<const std::uint8_t> select, const Coin2& coin0,
                       const Coin2& coin1) {
    const std::size_t n = select.size();
    Mat m = zero_matrix(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        const Coin2& coin = select[x] ? coin1 : coin0;
        m[2 * x][2 * x] = coin.c();
        m[2 * x][2 * x + 1] = coin.s();
        m[2 * x + 1][2 * x] = coin.s();
        m[2 * x + 1][2 * x + 1] = -coin.c();
    }
    return m;
}

/// S_i: permutation sending (x, c) to (x XOR (c << (i-1)), c).
inline Mat shift_matrix(unsigned q, unsigned i) {
    const std::size_t n = std::size_t{1} << q;
    Mat m = zero_matrix(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        m[2 * x][2 * x] = 1.0;
        const std::size_t flipped = x ^ (std::size_t{1} << (i - 1));
        m[2 * flipped + 1][2 * x + 1] = 1.0;
    }
    return m;
}

/// U = S_q C S_{q-1} C ... S_1 C.
inline Mat step_matrix(unsigned q, std::span<const std::uint8_t> select,
                       const Coin2& coin0, const Coin2& coin1) {
    const Mat coin = coin_matrix(select, coin0, coin1);
    Mat u = identity(std::size_t{2} << q);
    for (unsigned i = 1; i <= q; ++i) {
        u = matmul(coin, u);
        u = matmul(shift_matrix(q, i), u);
    }
    return u;
}

} // namespace caqwbh::oracle
