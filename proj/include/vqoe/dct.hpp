#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace vqoe {

namespace detail {

// cos(k*pi/16) for k = 0..7, written out so the transform does not depend
// on the platform's libm and is bit-identical everywhere.
inline constexpr double kCosPi16[8] = {
    1.0,
    0.98078528040323044912,
    0.92387953251128675612,
    0.83146961230254523707,
    0.70710678118654752440,
    0.55557023301960222474,
    0.38268343236508977172,
    0.19509032201612826784,
};

// cos(m*pi/16) for any integer m, by quadrant symmetry.
constexpr double cos_pi16(int m) {
    m = ((m % 32) + 32) % 32;
    if (m > 16) m = 32 - m;
    if (m == 8) return 0.0;
    if (m < 8) return kCosPi16[m];
    return -kCosPi16[16 - m];
}

// Orthonormal 1-D DCT-II basis: B[k][n] = s(k) * cos((2n+1)k*pi/16),
// s(0) = sqrt(1/8), s(k>0) = 1/2.
inline constexpr std::array<std::array<double, 8>, 8> kDctBasis = [] {
    std::array<std::array<double, 8>, 8> b{};
    for (int k = 0; k < 8; ++k) {
        const double scale = k == 0 ? 0.35355339059327376220 : 0.5;
        for (int n = 0; n < 8; ++n) b[k][n] = scale * cos_pi16((2 * n + 1) * k);
    }
    return b;
}();

}  // namespace detail

/// 2-D orthonormal 8x8 DCT-II. in/out are row-major [y*8+x], v-major out.
/// A constant block of value c maps to a single DC coefficient 8c.
inline void forward_dct_8x8(const double (&in)[64], double (&out)[64]) {
    const auto& b = detail::kDctBasis;
    double tmp[64];
    for (int y = 0; y < 8; ++y)
        for (int u = 0; u < 8; ++u) {
            double acc = 0.0;
            for (int x = 0; x < 8; ++x) acc += b[u][x] * in[y * 8 + x];
            tmp[y * 8 + u] = acc;
        }
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            double acc = 0.0;
            for (int y = 0; y < 8; ++y) acc += b[v][y] * tmp[y * 8 + u];
            out[v * 8 + u] = acc;
        }
}

/// Inverse of forward_dct_8x8.
inline void inverse_dct_8x8(const double (&in)[64], double (&out)[64]) {
    const auto& b = detail::kDctBasis;
    double tmp[64];
    for (int v = 0; v < 8; ++v)
        for (int x = 0; x < 8; ++x) {
            double acc = 0.0;
            for (int u = 0; u < 8; ++u) acc += b[u][x] * in[v * 8 + u];
            tmp[v * 8 + x] = acc;
        }
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            double acc = 0.0;
            for (int v = 0; v < 8; ++v) acc += b[v][y] * tmp[v * 8 + x];
            out[y * 8 + x] = acc;
        }
}

/// Scalar quantizer step for a QP in [0, 51]: 2^((qp-4)/6), the
/// doubling-every-6 convention. Exact power-of-two scaling via ldexp keeps
/// the value platform-independent.
inline double q_step_for_qp(int qp) {
    static constexpr double kSixthPow[6] = {
        1.0,
        1.12246204830937298143,
        1.25992104989487316476,
        1.41421356237309504880,
        1.58740105196819947475,
        1.78179743628067860948,
    };
    const int k = qp - 4;
    int e = k / 6;
    int r = k - 6 * e;
    if (r < 0) {
        r += 6;
        e -= 1;
    }
    return std::ldexp(kSixthPow[r], e);
}

/// Round-half-away-from-zero quantization.
inline std::int32_t quantize(double coeff, double q_step) {
    const double scaled = coeff / q_step;
    return static_cast<std::int32_t>(
        scaled >= 0.0 ? std::floor(scaled + 0.5) : std::ceil(scaled - 0.5));
}

/// Raster offsets of the 8x8 zigzag scan, DC first.
inline constexpr std::uint8_t kZigzag[64] = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63,
};

}  // namespace vqoe
