#include "genlin.hpp"

#include <random>

namespace euob {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

const int kNumCoeffs = 16;

mpq_class coeff_from_index(std::uint64_t k) {
    static const char* kTable[kNumCoeffs] = {"1",   "-1",  "2",   "-2",  "3",    "-3",
                                             "5",   "-5",  "7",   "-7",  "1/2",  "-1/2",
                                             "3/2", "-3/2", "7/2", "-7/2"};
    mpq_class q(kTable[k % kNumCoeffs]);
    q.canonicalize();
    return q;
}

std::int64_t wide_entry(std::mt19937_64& rng) {
    for (;;) {
        std::int64_t v = static_cast<std::int64_t>(rng() >> 32) - (1ll << 31);
        if (v != 0) return v;
    }
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ (salt * 0xC2B2AE3D27D4EB4Full));
}

std::uint64_t hash_name(const std::string& name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Polynomial generic_linear_form(const CtxPtr& ctx, int block, std::uint64_t seed,
                               std::uint64_t draw_index, bool with_constant) {
    const Block& b = ctx->block(block);
    std::mt19937_64 rng(mix_seed(mix_seed(seed, hash_name(b.name)), draw_index));
    Polynomial f(ctx);
    for (int v = b.lo; v < b.hi; ++v)
        f = f + Polynomial::variable(ctx, v).scaled(coeff_from_index(rng()));
    if (with_constant) f = f + Polynomial::constant(ctx, coeff_from_index(rng()));
    return f;
}

Polynomial generic_wide_form(const CtxPtr& ctx, int block, std::uint64_t seed,
                             std::uint64_t draw_index) {
    const Block& b = ctx->block(block);
    std::mt19937_64 rng(mix_seed(mix_seed(seed, hash_name(b.name)), draw_index));
    Polynomial f(ctx);
    for (int v = b.lo; v < b.hi; ++v) {
        mpq_class c(static_cast<long>(wide_entry(rng)));
        f = f + Polynomial::variable(ctx, v).scaled(c);
    }
    return f;
}

}  // namespace euob
