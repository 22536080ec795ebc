#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>

#include "vqoe/dct.hpp"
#include "vqoe/expgolomb.hpp"
#include "vqoe/rng.hpp"

using namespace vqoe;

TEST_CASE("unsigned exp-golomb bit lengths", "[dct]") {
    // hand-derived: code for k is 1 zero-prefix bit per magnitude doubling
    CHECK(ue_bits(0) == 1);
    CHECK(ue_bits(1) == 3);
    CHECK(ue_bits(2) == 3);
    CHECK(ue_bits(3) == 5);
    CHECK(ue_bits(6) == 5);
    CHECK(ue_bits(7) == 7);
    CHECK(ue_bits(62) == 11);
    CHECK(ue_bits(63) == 13);
}

TEST_CASE("signed exp-golomb bit lengths", "[dct]") {
    CHECK(se_bits(0) == 1);
    CHECK(se_bits(1) == 3);
    CHECK(se_bits(-1) == 3);
    CHECK(se_bits(2) == 5);
    CHECK(se_bits(-2) == 5);
    CHECK(se_bits(3) == 5);
    CHECK(se_bits(-3) == 7);
}

TEST_CASE("constant block transforms to a single DC coefficient", "[dct]") {
    double in[64];
    std::fill(std::begin(in), std::end(in), 57.0);
    double out[64];
    forward_dct_8x8(in, out);
    CHECK(out[0] == Catch::Approx(8.0 * 57.0).margin(1e-9));
    for (int i = 1; i < 64; ++i) CHECK(std::abs(out[i]) < 1e-9);
}

TEST_CASE("forward then inverse DCT reconstructs samples", "[dct]") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        double in[64], freq[64], back[64];
        for (double& v : in) v = static_cast<double>(rng.below(256)) - 128.0;
        forward_dct_8x8(in, freq);
        inverse_dct_8x8(freq, back);
        for (int i = 0; i < 64; ++i) CHECK(std::abs(back[i] - in[i]) < 1e-9);

        // orthonormal transform preserves energy
        double e_in = 0.0, e_out = 0.0;
        for (int i = 0; i < 64; ++i) {
            e_in += in[i] * in[i];
            e_out += freq[i] * freq[i];
        }
        CHECK(e_out == Catch::Approx(e_in).epsilon(1e-12));
    }
}

TEST_CASE("quantizer step follows the doubling-every-6 convention", "[dct]") {
    CHECK(q_step_for_qp(4) == 1.0);
    CHECK(q_step_for_qp(10) == 2.0);
    CHECK(q_step_for_qp(30) == Catch::Approx(20.158736798317971).epsilon(1e-15));
    CHECK(q_step_for_qp(36) == 2.0 * q_step_for_qp(30));  // exact: ldexp scaling
    for (int qp = 0; qp < 51; ++qp) CHECK(q_step_for_qp(qp) < q_step_for_qp(qp + 1));
    CHECK(q_step_for_qp(0) > 0.0);
}

TEST_CASE("quantize rounds half away from zero", "[dct]") {
    CHECK(quantize(10.0, 4.0) == 3);   // 2.5 -> 3
    CHECK(quantize(-10.0, 4.0) == -3);
    CHECK(quantize(9.9, 4.0) == 2);    // 2.475 -> 2
    CHECK(quantize(-9.9, 4.0) == -2);
    CHECK(quantize(1.9, 4.0) == 0);
    CHECK(quantize(2.0, 4.0) == 1);    // exactly half
}

TEST_CASE("zigzag table is a permutation visiting low frequencies first", "[dct]") {
    std::array<int, 64> seen{};
    for (int z = 0; z < 64; ++z) ++seen[kZigzag[z]];
    for (int i = 0; i < 64; ++i) CHECK(seen[static_cast<std::size_t>(i)] == 1);
    CHECK(kZigzag[0] == 0);
    CHECK(kZigzag[1] == 1);
    CHECK(kZigzag[2] == 8);
    CHECK(kZigzag[3] == 16);
    CHECK(kZigzag[63] == 63);
}
