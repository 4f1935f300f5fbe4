#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gauge.hpp"
#include "mat2.hpp"

namespace bigcenter {

// Deterministic source of small rational test points.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long pick(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    Rational small_rational(bool nonzero = false) {
        for (;;) {
            Rational r = rat(pick(-9, 9), pick(1, 4));
            if (!nonzero || r != 0) return r;
        }
    }

    Mat2<Rational> traceless_mat2() {
        Rational p = small_rational(), q = small_rational(), r = small_rational();
        return mat2(p, q, r, -p);
    }

    // Random point of the determinant-one group: D is solved from the
    // other three entries.
    Mat2<Rational> unimodular_mat2() {
        Rational a = small_rational(true), b = small_rational(), c = small_rational();
        return mat2(a, b, c, (1 + b * c) / a);
    }

    // Traceless polynomial connection of the given degree.
    Connection random_connection(int degree, int order) {
        std::vector<Mat2<Rational>> coeffs;
        for (int k = 0; k <= degree; ++k) coeffs.push_back(traceless_mat2());
        return make_connection(coeffs, order);
    }

  private:
    std::mt19937_64 eng_;
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

} // namespace bigcenter
