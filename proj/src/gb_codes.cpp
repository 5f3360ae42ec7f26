#include "ftre/gb_codes.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace ftre {

namespace {

const std::array<CodeSpec, 5> kFamily = {{
    {4, 30, 8, 4, 15, {0, 6, 13}, {0, 1, 4}, {60, 13, 7}},
    {5, 62, 10, 6, 31, {0, 6, 15}, {0, 5, 7}, {124, 19, 11}},
    {6, 126, 12, 10, 63, {0, 4, 37}, {0, 29, 49}, {252, 31, 19}},
    {7, 254, 14, 16, 127, {0, 32, 100}, {0, 28, 49}, {508, 57, 31}},
    {8, 510, 16, 24, 255, {0, 39, 55}, {0, 70, 127}, {1020, 99, 51}},
}};

int claimed_distance(std::size_t l, const std::vector<std::size_t>& a,
                     const std::vector<std::size_t>& b) {
    for (const auto& spec : kFamily) {
        if (spec.l != l)
            continue;
        if (std::equal(a.begin(), a.end(), spec.shift_a.begin(), spec.shift_a.end()) &&
            std::equal(b.begin(), b.end(), spec.shift_b.begin(), spec.shift_b.end()))
            return spec.d;
    }
    return -1;
}

} // namespace

GBCode build_code(std::size_t l, const std::vector<std::size_t>& a,
                  const std::vector<std::size_t>& b) {
    if (l < 2)
        throw std::invalid_argument("lift size must be at least 2");
    for (std::size_t s : a)
        if (s >= l)
            throw std::invalid_argument("shift in A outside Z_l");
    for (std::size_t s : b)
        if (s >= l)
            throw std::invalid_argument("shift in B outside Z_l");

    GBCode code;
    code.l = l;
    code.shift_a = a;
    code.shift_b = b;
    code.n = 2 * l;
    code.hx = BitMatrix(l, 2 * l);
    code.hz = BitMatrix(l, 2 * l);
    for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t s : a) {
            code.hx.set(j, (j + s) % l, true);              // X on L sector
            code.hz.set(j, l + (j + l - s % l) % l, true);  // Z on R sector
        }
        for (std::size_t s : b) {
            code.hx.set(j, l + (j + s) % l, true);          // X on R sector
            code.hz.set(j, (j + l - s % l) % l, true);      // Z on L sector
        }
    }
    if (!code.hx.times_transpose(code.hz).is_zero())
        throw std::logic_error("CSS condition violated for GB construction");
    code.d_claimed = claimed_distance(l, a, b);
    code.k = compute_k(code);
    return code;
}

std::size_t compute_k(const GBCode& code) {
    return code.n - code.hx.rank() - code.hz.rank();
}

namespace {

int exhaustive_distance(const GBCode& code) {
    BitMatrix kernel = code.hz.kernel_basis();
    std::size_t dim = kernel.rows();
    if (dim > 26)
        throw std::invalid_argument("kernel dimension too large for exhaustive enumeration");
    Echelon stab(code.hx);
    std::size_t wpr = (code.n + 63) / 64;
    std::vector<word_t> current(wpr, 0);
    auto weight_of = [&](const std::vector<word_t>& v) {
        std::size_t w = 0;
        for (word_t x : v)
            w += std::popcount(x);
        return w;
    };

    int best = static_cast<int>(code.n) + 1;
    // Gray-code walk over all kernel combinations: one basis-row XOR per step.
    std::uint64_t total = std::uint64_t(1) << dim;
    std::uint64_t gray_prev = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        std::uint64_t flipped = gray ^ gray_prev;
        gray_prev = gray;
        std::size_t idx = std::countr_zero(flipped);
        const auto row = kernel.row_words(idx);
        for (std::size_t w = 0; w < wpr; ++w)
            current[w] ^= row[w];
        int wt = static_cast<int>(weight_of(current));
        if (wt < best && !stab.contains(current))
            best = wt;
    }
    if (best > static_cast<int>(code.n))
        throw std::logic_error("no logical operator found; code has k = 0");
    return best;
}

int randomized_distance(const GBCode& code, std::uint64_t budget, std::uint64_t seed,
                        int stop_at_weight) {
    BitMatrix kernel = code.hz.kernel_basis();
    std::size_t dim = kernel.rows();
    std::size_t cols = code.n;
    std::size_t wpr = (cols + 63) / 64;
    Echelon stab(code.hx);
    std::mt19937_64 rng(seed);

    std::vector<std::size_t> colperm(cols);
    for (std::size_t i = 0; i < cols; ++i)
        colperm[i] = i;

    int best = static_cast<int>(cols) + 1;
    std::vector<std::vector<word_t>> work(dim);
    for (std::uint64_t it = 0; it < budget; ++it) {
        for (std::size_t i = cols; i > 1; --i)
            std::swap(colperm[i - 1], colperm[rng() % i]);
        for (std::size_t r = 0; r < dim; ++r)
            work[r] = kernel.row_words(r);
        // Eliminate in permuted column order; surviving rows are codewords in
        // reduced form w.r.t. a random information set.
        std::size_t next = 0;
        for (std::size_t ci = 0; ci < cols && next < dim; ++ci) {
            std::size_t c = colperm[ci];
            std::size_t wi = c / 64;
            word_t mask = word_t(1) << (c % 64);
            std::size_t p = next;
            while (p < dim && !(work[p][wi] & mask))
                ++p;
            if (p == dim)
                continue;
            std::swap(work[next], work[p]);
            for (std::size_t r = 0; r < dim; ++r)
                if (r != next && (work[r][wi] & mask))
                    for (std::size_t w = 0; w < wpr; ++w)
                        work[r][w] ^= work[next][w];
            ++next;
        }
        for (std::size_t r = 0; r < dim; ++r) {
            int wt = 0;
            for (std::size_t w = 0; w < wpr; ++w)
                wt += std::popcount(work[r][w]);
            if (wt > 0 && wt < best && !stab.contains(work[r]))
                best = wt;
        }
        if (stop_at_weight > 0 && best <= stop_at_weight)
            break;
    }
    if (best > static_cast<int>(cols))
        throw std::logic_error("no logical operator found; code has k = 0");
    return best;
}

} // namespace

int distance_upper_bound(const GBCode& code, DistanceMethod method, std::uint64_t budget,
                         std::uint64_t seed, int stop_at_weight) {
    if (code.k == 0)
        throw std::invalid_argument("code has no logical qubits");
    switch (method) {
        case DistanceMethod::Exhaustive:
            return exhaustive_distance(code);
        case DistanceMethod::Randomized:
            return randomized_distance(code, budget, seed, stop_at_weight);
    }
    throw std::invalid_argument("unknown distance method");
}

const std::array<CodeSpec, 5>& code_family() {
    return kFamily;
}

const CodeSpec& family_code(int m) {
    if (m < 4 || m > 8)
        throw std::invalid_argument("family index m must be in 4..8");
    return kFamily[m - 4];
}

BlockCosts table_costs(int m) {
    return family_code(m).costs;
}

GBCode build_family_code(int m) {
    const CodeSpec& spec = family_code(m);
    return build_code(spec.l,
                      {spec.shift_a.begin(), spec.shift_a.end()},
                      {spec.shift_b.begin(), spec.shift_b.end()});
}

} // namespace ftre
