#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ftre/bitmat.hpp"

namespace ftre {

/*
 * Generalised bicycle code over Z_l defined by shift sets A and B. Qubits are
 * laid out as the L sector (columns 0..l-1) followed by the R sector
 * (columns l..2l-1). X check j touches X_{(j+a),L} and X_{(j+b),R}; Z check j
 * touches Z_{(j-b),L} and Z_{(j-a),R}, indices mod l.
 */
struct GBCode {
    std::size_t l = 0;
    std::vector<std::size_t> shift_a, shift_b;
    BitMatrix hx, hz;          // l x 2l each
    std::size_t n = 0;         // 2l
    std::size_t k = 0;         // n - rank(hx) - rank(hz), fixed at build
    int d_claimed = -1;        // catalogue distance when known

    int dt() const { return d_claimed + 2; }   // code cycles per logical cycle
};

GBCode build_code(std::size_t l, const std::vector<std::size_t>& a,
                  const std::vector<std::size_t>& b);

std::size_t compute_k(const GBCode& code);

enum class DistanceMethod { Exhaustive, Randomized };

/*
 * Upper bound on the code distance via the X side (the family is X/Z
 * symmetric). Exhaustive enumerates the whole X-type kernel and is exact;
 * it is rejected when the kernel dimension exceeds 26. Randomized runs
 * information-set sampling for `budget` rounds; `stop_at_weight` > 0 ends the
 * search early once a logical of that weight (or less) is found.
 */
int distance_upper_bound(const GBCode& code, DistanceMethod method, std::uint64_t budget,
                         std::uint64_t seed = 1, int stop_at_weight = 0);

// Per-block physical qubit budget: code block, gadgets, bridges.
struct BlockCosts {
    std::size_t n_cb = 0, n_g = 0, n_b = 0;
    std::size_t n_pb() const { return n_cb + 4 * n_g + 4 * n_b; }
};

/*
 * Catalogue entry for one member of the simplex-generated GB family,
 * parameterised by m (lift l = 2^m - 1).
 */
struct CodeSpec {
    int m = 0;
    std::size_t n = 0, k = 0;
    int d = 0;
    std::size_t l = 0;
    std::array<std::size_t, 3> shift_a{}, shift_b{};
    BlockCosts costs;

    int dt() const { return d + 2; }
    std::size_t n_pb() const { return costs.n_pb(); }
    std::size_t window() const { return k / 2; }
    std::size_t port_qubits() const { return costs.n_g + costs.n_b; }
};

const std::array<CodeSpec, 5>& code_family();   // m = 4..8
const CodeSpec& family_code(int m);
BlockCosts table_costs(int m);
GBCode build_family_code(int m);

} // namespace ftre
