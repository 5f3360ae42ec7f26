#include "doctest.h"

#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftre/cleaning.hpp"
#include "ftre/gf2.hpp"

using namespace ftre;

namespace {

// Independent check: replay the emitted rotations onto the input and compare
// with the reported residual.
bool replay_matches(const SymplecticMat& input, const CleaningResult& res) {
    SymplecticMat m = input;
    for (const PauliVec& rot : res.rotations)
        m.apply_transvection(rot);
    return m == res.residual;
}

// Port-form generator: CNOTs controlled on the first w qubits composed with
// an arbitrary Clifford on the remaining qubits.
SymplecticMat random_port_frame(std::size_t n, std::size_t w, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SymplecticMat m = SymplecticMat::identity(n);
    if (n > w) {
        SymplecticMat tail = random_symplectic(n - w, rng());
        SymplecticMat embedded = SymplecticMat::identity(n);
        for (std::size_t i = 0; i < 2 * (n - w); ++i) {
            std::size_t dst = i < n - w ? w + i : n + w + (i - (n - w));
            PauliVec row(n);
            for (std::size_t q = 0; q < n - w; ++q) {
                row.set_x(w + q, tail.row(i).x(q));
                row.set_z(w + q, tail.row(i).z(q));
            }
            embedded.row(dst) = row;
        }
        m = compose(m, embedded);
    }
    std::size_t cnots = 1 + rng() % (3 * n);
    for (std::size_t i = 0; i < cnots && n > w; ++i) {
        std::size_t c = rng() % w;
        std::size_t t = w + rng() % (n - w);
        m = compose(m, cnot_mat(n, c, t));
    }
    return m;
}

} // namespace

TEST_CASE("clean_general on the identity emits nothing") {
    for (std::size_t n : {1, 3, 6}) {
        for (std::size_t w = 1; w <= n; ++w) {
            CleaningResult res = clean_general(SymplecticMat::identity(n), w);
            CHECK(res.emitted_count == 0);
            CHECK(res.rotations.empty());
            CHECK(res.residual == SymplecticMat::identity(n));
        }
    }
}

TEST_CASE("clean_general on a single-qubit Hadamard") {
    CleaningResult res = clean_general(hadamard_mat(1, 0), 1);
    CHECK(res.emitted_count <= 4);
    CHECK(res.residual == SymplecticMat::identity(1));
    CHECK(replay_matches(hadamard_mat(1, 0), res));
}

TEST_CASE("clean_general property sweep") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        std::size_t n = 1 + seed % 8;
        SymplecticMat m = random_symplectic(n, seed);
        for (std::size_t w = 1; w <= n; ++w) {
            CleaningResult res = clean_general(m, w);
            CHECK(res.emitted_count <= 4 * w);
            CHECK(res.emitted_count == res.rotations.size());
            CHECK(acts_trivially_on_prefix(res.residual, w));
            CHECK(is_symplectic(res.residual));
            CHECK(replay_matches(m, res));
            ++checked;
        }
    }
    CHECK(checked > 400);
}

TEST_CASE("every intermediate transvection preserves symplecticity") {
    for (std::uint64_t seed = 500; seed < 520; ++seed) {
        std::size_t n = 2 + seed % 6;
        SymplecticMat m = random_symplectic(n, seed);
        CleaningResult res = clean_general(m, n);
        SymplecticMat replay = m;
        for (const PauliVec& rot : res.rotations) {
            replay.apply_transvection(rot);
            CHECK(is_symplectic(replay));
        }
    }
}

TEST_CASE("clean_general rejects bad input") {
    SymplecticMat zero = SymplecticMat::from_rows(std::vector<PauliVec>(4, PauliVec(2)));
    CHECK_THROWS_AS(clean_general(zero, 1), std::invalid_argument);
    CHECK_THROWS_AS(clean_general(SymplecticMat::identity(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(clean_general(SymplecticMat::identity(2), 3), std::invalid_argument);
}

TEST_CASE("clean_port on the identity emits nothing") {
    for (std::size_t w = 1; w <= 3; ++w) {
        CleaningResult res = clean_port(SymplecticMat::identity(3), w);
        CHECK(res.rotations.empty());
    }
}

TEST_CASE("clean_port handles a CNOT controlled on the port qubit") {
    SymplecticMat cx = cnot_mat(2, 0, 1);
    CleaningResult res = clean_port(cx, 1);
    CHECK(res.emitted_count <= 2);
    CHECK(acts_trivially_on_prefix(res.residual, 1));
    CHECK(replay_matches(cx, res));
}

TEST_CASE("clean_port property sweep over control-only frames") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::size_t n = 2 + seed % 7;  // up to 8
        std::size_t w = 1 + seed % (n - 1);
        SymplecticMat m = random_port_frame(n, w, seed);
        REQUIRE(is_symplectic(m));
        REQUIRE(has_port_form(m, w));
        CleaningResult res = clean_port(m, w);
        CHECK(res.emitted_count <= 2 * w);
        CHECK(acts_trivially_on_prefix(res.residual, w));
        CHECK(replay_matches(m, res));
    }
}

TEST_CASE("clean_port rejects frames without port form") {
    // Hadamard on the port qubit does not commute with Z there.
    SymplecticMat h = hadamard_mat(2, 0);
    std::string diag;
    CHECK_FALSE(has_port_form(h, 1, &diag));
    CHECK(diag.find("row") != std::string::npos);
    CHECK_THROWS_WITH_AS(clean_port(h, 1), doctest::Contains("port form"),
                         std::invalid_argument);
}

namespace {

// Breadth-first closure of the transvection generators: the full symplectic
// group for small n.
std::vector<SymplecticMat> whole_symplectic_group(std::size_t n) {
    std::vector<PauliVec> gens;
    for (std::size_t mask = 1; mask < (std::size_t(1) << (2 * n)); ++mask) {
        PauliVec u(n);
        for (std::size_t i = 0; i < 2 * n; ++i)
            u.set_bit(i, (mask >> i) & 1);
        gens.push_back(u);
    }
    auto key_of = [&](const SymplecticMat& m) {
        std::string key;
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (std::size_t j = 0; j < 2 * n; ++j)
                key.push_back(m.entry(i, j) ? '1' : '0');
        return key;
    };
    std::vector<SymplecticMat> group{SymplecticMat::identity(n)};
    std::set<std::string> seen{key_of(group[0])};
    for (std::size_t head = 0; head < group.size(); ++head) {
        SymplecticMat current = group[head];
        for (const PauliVec& g : gens) {
            SymplecticMat next = current;
            next.apply_transvection(g);
            if (seen.insert(key_of(next)).second)
                group.push_back(next);
        }
    }
    return group;
}

} // namespace

TEST_CASE("cleaning is exact over the whole symplectic group for n <= 2") {
    // |Sp(2,2)| = 6 and |Sp(4,2)| = 720; every element cleans to the
    // identity block within the stated bounds.
    for (std::size_t n = 1; n <= 2; ++n) {
        std::vector<SymplecticMat> group = whole_symplectic_group(n);
        CHECK(group.size() == (n == 1 ? 6 : 720));
        std::size_t port_count = 0;
        for (const SymplecticMat& m : group) {
            for (std::size_t w = 1; w <= n; ++w) {
                CleaningResult res = clean_general(m, w);
                CHECK(res.emitted_count <= 4 * w);
                CHECK(acts_trivially_on_prefix(res.residual, w));
                CHECK(replay_matches(m, res));
            }
            if (has_port_form(m, 1)) {
                ++port_count;
                CleaningResult res = clean_port(m, 1);
                CHECK(res.emitted_count <= 2);
                CHECK(acts_trivially_on_prefix(res.residual, 1));
                CHECK(replay_matches(m, res));
            }
        }
        CHECK(port_count >= 1);
    }
}

TEST_CASE("general cleaning also handles port-form inputs within the 4w bound") {
    for (std::uint64_t seed = 300; seed < 330; ++seed) {
        std::size_t n = 3 + seed % 5;
        std::size_t w = 1 + seed % (n - 1);
        SymplecticMat m = random_port_frame(n, w, seed);
        CleaningResult res = clean_general(m, w);
        CHECK(res.emitted_count <= 4 * w);
        CHECK(acts_trivially_on_prefix(res.residual, w));
    }
}
