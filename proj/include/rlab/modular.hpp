#pragma once

#include <cstdint>
#include <vector>

#include "rlab/errors.hpp"
#include "rlab/rng.hpp"

namespace rlab {

// Default prime: 2^31 - 1. Fits products of two residues in 64 bits and
// admits a branch-light Mersenne reduction in the elimination inner loop.
constexpr uint32_t kDefaultPrime = 2147483647u;

inline uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p) {
    uint64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

inline uint64_t mod_inverse(uint64_t a, uint64_t p) { return mod_pow(a, p - 2, p); }

// Dense matrix over GF(p), row-major. p must be prime and < 2^31 + 1 so that
// products of residues stay within 64 bits.
struct PrimeFieldMatrix {
    int rows = 0;
    int cols = 0;
    uint32_t prime = kDefaultPrime;
    std::vector<uint32_t> entries; // rows * cols

    PrimeFieldMatrix() = default;
    PrimeFieldMatrix(int r, int c, uint32_t p = kDefaultPrime)
        : rows(r), cols(c), prime(p), entries(static_cast<size_t>(r) * c, 0) {
        require(p >= 2, "StructuralError", "modulus must be a prime >= 2");
    }

    uint32_t& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    uint32_t at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

    // Signed value reduced into [0, p).
    void set_signed(int r, int c, long long value) {
        long long m = value % static_cast<long long>(prime);
        if (m < 0) m += prime;
        at(r, c) = static_cast<uint32_t>(m);
    }
};

// Exact rank over GF(p) by fraction-free (division only by pivots) Gaussian
// elimination. Destroys no input; the work happens on a copy.
int rank_mod_p(const PrimeFieldMatrix& m);

// In-place rank of a row-major buffer over GF(2^31-1); entries must be < p.
// This is the hot path used by the rigidity certificate.
int rank_m31_inplace(std::vector<uint32_t>& data, int rows, int cols);

uint32_t random_residue(Rng& rng, uint32_t p);

} // namespace rlab
