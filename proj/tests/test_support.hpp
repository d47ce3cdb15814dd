#pragma once

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "tiltwall/chern.hpp"
#include "tiltwall/rational.hpp"

// Minimal assertion kit: print file:line on the first failure and exit hard,
// so ctest shows exactly where a run died.
#define REQUIRE(cond)                                                         \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__,    \
                         #cond);                                              \
            std::exit(1);                                                     \
        }                                                                     \
    } while (0)

#define REQUIRE_MSG(cond, msg)                                                \
    do {                                                                      \
        if (!(cond)) {                                                        \
            std::fprintf(stderr, "[FAIL] %s:%d: %s (%s)\n", __FILE__,         \
                         __LINE__, #cond, std::string(msg).c_str());          \
            std::exit(1);                                                     \
        }                                                                     \
    } while (0)

#define REQUIRE_THROWS(expr, ExType)                                          \
    do {                                                                      \
        bool caught_ = false;                                                 \
        try {                                                                 \
            (void)(expr);                                                     \
        } catch (const ExType&) {                                             \
            caught_ = true;                                                   \
        }                                                                     \
        if (!caught_) {                                                       \
            std::fprintf(stderr, "[FAIL] %s:%d: %s did not throw %s\n",       \
                         __FILE__, __LINE__, #expr, #ExType);                 \
            std::exit(1);                                                     \
        }                                                                     \
    } while (0)

namespace testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x7a11c0de);  // fixed seed: runs are reproducible
    return gen;
}

inline long rand_long(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline tiltwall::Rational rand_rational(long lo, long hi, long max_den = 4) {
    long den = rand_long(1, max_den);
    long num = rand_long(lo * den, hi * den);
    return tiltwall::Rational(num, den);
}

// Random class on the half-integer lattice: deg integral, 2*ch2 integral.
inline tiltwall::ChernClass rand_lattice_class(long lo = -6, long hi = 6) {
    tiltwall::ChernClass c;
    c.rank = tiltwall::Integer(rand_long(lo, hi));
    c.deg = tiltwall::Rational(rand_long(lo, hi));
    c.ch2 = tiltwall::Rational(rand_long(2 * lo, 2 * hi), 2);
    return c;
}

// Same, but with 2*ch2 matching the parity of deg so that Riemann-Roch on a
// del Pezzo surface gives an integer Euler characteristic.
inline tiltwall::ChernClass rand_parity_class(long lo = -6, long hi = 6) {
    tiltwall::ChernClass c;
    c.rank = tiltwall::Integer(rand_long(lo, hi));
    long d = rand_long(lo, hi);
    c.deg = tiltwall::Rational(d);
    long twice = 2 * rand_long(lo, hi) + (d % 2 != 0 ? 1 : 0);
    c.ch2 = tiltwall::Rational(twice, 2);
    return c;
}

}  // namespace testing
