#pragma once

#include <array>
#include <cstdint>

#include "context.hpp"

namespace euob {

// Exponent vector, fixed width.  Exponents are capped at 255 which is far
// beyond anything these computations produce; hitting the cap is reported as
// a resource problem rather than silent wraparound.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    static Monomial one() { return {}; }

    static Monomial var(int i, std::uint8_t k = 1) {
        Monomial m;
        m.e[i] = k;
        m.deg = k;
        return m;
    }

    bool is_one() const { return deg == 0; }

    std::uint32_t deg_span(int lo, int hi) const {
        std::uint32_t s = 0;
        for (int i = lo; i < hi; ++i) s += e[i];
        return s;
    }

    Monomial mul(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            unsigned v = unsigned(e[i]) + unsigned(o.e[i]);
            if (v > 255) throw_resource("monomial exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(v);
        }
        r.deg = deg + o.deg;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // this / o, assuming o divides this
    Monomial div(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        r.deg = deg - o.deg;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        std::uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= e[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace euob
