#include "rlab/modular.hpp"

namespace rlab {

namespace {

constexpr uint32_t kM31 = 2147483647u;

// Branchless reduction of x < 2^63 into [0, 2^31+2]; entries stay lazily
// reduced through the elimination and are canonicalized only where a pivot
// or zero test needs the true residue. The lazy bound keeps the next
// f*entry product below 2^63.
inline uint32_t fold_lazy(uint64_t x) {
    x = (x & kM31) + (x >> 31);
    x = (x & kM31) + (x >> 31);
    return static_cast<uint32_t>(x);
}

inline uint32_t canonical(uint32_t x) { return x >= kM31 ? x - kM31 : x; }

} // namespace

uint32_t random_residue(Rng& rng, uint32_t p) {
    return static_cast<uint32_t>(rng.next_below(p));
}

int rank_m31_inplace(std::vector<uint32_t>& data, int rows, int cols) {
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            uint32_t v = data[static_cast<size_t>(r) * cols + col];
            if (v != 0 && v != kM31) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = col; c < cols; ++c)
                std::swap(data[static_cast<size_t>(pivot) * cols + c],
                          data[static_cast<size_t>(rank) * cols + c]);
        }
        uint32_t* prow = &data[static_cast<size_t>(rank) * cols];
        uint64_t inv = mod_inverse(canonical(prow[col]), kM31);
        for (int r = rank + 1; r < rows; ++r) {
            uint32_t* trow = &data[static_cast<size_t>(r) * cols];
            uint64_t lead = canonical(trow[col]);
            if (lead == 0) continue;
            // factor f with trow += f * prow makes trow[col] vanish mod p
            uint64_t f = kM31 - static_cast<uint32_t>(lead * inv % kM31);
            if (f == kM31) f = 0;
            trow[col] = 0;
            int c = col + 1;
            for (; c + 4 <= cols; c += 4) {
                uint64_t t0 = trow[c + 0] + f * prow[c + 0];
                uint64_t t1 = trow[c + 1] + f * prow[c + 1];
                uint64_t t2 = trow[c + 2] + f * prow[c + 2];
                uint64_t t3 = trow[c + 3] + f * prow[c + 3];
                trow[c + 0] = fold_lazy(t0);
                trow[c + 1] = fold_lazy(t1);
                trow[c + 2] = fold_lazy(t2);
                trow[c + 3] = fold_lazy(t3);
            }
            for (; c < cols; ++c) trow[c] = fold_lazy(trow[c] + f * prow[c]);
        }
        ++rank;
    }
    return rank;
}

int rank_mod_p(const PrimeFieldMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (m.prime == kM31) {
        std::vector<uint32_t> work = m.entries;
        return rank_m31_inplace(work, m.rows, m.cols);
    }
    const uint64_t p = m.prime;
    std::vector<uint64_t> work(m.entries.begin(), m.entries.end());
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r) {
            if (work[static_cast<size_t>(r) * m.cols + col] % p != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = col; c < m.cols; ++c)
                std::swap(work[static_cast<size_t>(pivot) * m.cols + c],
                          work[static_cast<size_t>(rank) * m.cols + c]);
        }
        uint64_t* prow = &work[static_cast<size_t>(rank) * m.cols];
        uint64_t inv = mod_inverse(prow[col] % p, p);
        for (int r = rank + 1; r < m.rows; ++r) {
            uint64_t* trow = &work[static_cast<size_t>(r) * m.cols];
            uint64_t lead = trow[col] % p;
            if (lead == 0) continue;
            uint64_t f = (p - lead * inv % p) % p;
            for (int c = col; c < m.cols; ++c)
                trow[c] = (trow[c] % p + f * (prow[c] % p)) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace rlab
