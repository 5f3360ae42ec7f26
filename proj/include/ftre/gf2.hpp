#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ftre {

using word_t = std::uint64_t;

/*
 * Pauli operator on n qubits, phases dropped: a vector in Z_2^{2n} stored as
 * packed X and Z bit rows. Index convention for the flat 2n-bit view: the
 * first n bits are the X part, the last n bits the Z part.
 */
class PauliVec {
  public:
    PauliVec() = default;
    explicit PauliVec(std::size_t n);

    static PauliVec x_on(std::size_t n, std::size_t q);
    static PauliVec z_on(std::size_t n, std::size_t q);
    static PauliVec y_on(std::size_t n, std::size_t q);
    static PauliVec unit(std::size_t n, std::size_t index);  // basis vector of Z_2^{2n}
    static PauliVec from_bits(const std::vector<int>& bits); // length 2n
    static PauliVec from_pauli_string(const std::string& s); // e.g. "XIZY"

    std::size_t qubits() const { return n_; }

    bool x(std::size_t q) const;
    bool z(std::size_t q) const;
    void set_x(std::size_t q, bool v);
    void set_z(std::size_t q, bool v);
    bool bit(std::size_t i) const;         // i in [0, 2n)
    void set_bit(std::size_t i, bool v);

    bool is_zero() const;
    std::size_t weight() const;            // number of supported qubits
    std::size_t first_nonzero() const;     // flat index, 2n when zero

    PauliVec& operator^=(const PauliVec& o);
    friend PauliVec operator^(PauliVec a, const PauliVec& b) {
        a ^= b;
        return a;
    }
    bool operator==(const PauliVec& o) const = default;

    std::string str() const;               // IXYZ string

  private:
    std::size_t n_ = 0;
    std::vector<word_t> xs_, zs_;

    friend int symplectic_product(const PauliVec& u, const PauliVec& v);
};

// u J v^T over GF(2); 1 iff the operators anticommute.
int symplectic_product(const PauliVec& u, const PauliVec& v);

// E_u(v) = v + <u,v> u, the action of the pi/4 rotation about P_u.
PauliVec transvection(const PauliVec& u, const PauliVec& v);

/*
 * Clifford operator as a 2n x 2n GF(2) matrix acting on row vectors from the
 * right. Row i is the image of the ith symplectic basis vector.
 */
class SymplecticMat {
  public:
    SymplecticMat() = default;
    explicit SymplecticMat(std::size_t n);  // identity
    static SymplecticMat identity(std::size_t n);
    static SymplecticMat from_rows(std::vector<PauliVec> rows);

    std::size_t qubits() const { return n_; }
    const PauliVec& row(std::size_t i) const { return rows_[i]; }
    PauliVec& row(std::size_t i) { return rows_[i]; }
    bool entry(std::size_t i, std::size_t j) const { return rows_[i].bit(j); }

    // Right-multiply by the transvection matrix of u (apply E_u to each row).
    void apply_transvection(const PauliVec& u);

    bool operator==(const SymplecticMat& o) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<PauliVec> rows_;
};

// v M over GF(2): conjugation of P_v by the Clifford M represents.
PauliVec apply_clifford(const SymplecticMat& m, const PauliVec& v);

// Matrix of "apply first, then second": first * second in the row convention,
// so apply_clifford(compose(a, b), v) == apply_clifford(b, apply_clifford(a, v)).
SymplecticMat compose(const SymplecticMat& first, const SymplecticMat& second);

bool is_symplectic(const SymplecticMat& m);

// Matrix whose rows are E_u(e_i).
SymplecticMat transvection_matrix(const PauliVec& u);

/*
 * Deterministic pseudo-random symplectic matrix: a product of `transvections`
 * uniformly sampled transvection matrices (default 2n^2) and one random qubit
 * permutation. Not uniform over the symplectic group; adequate for property
 * tests.
 */
SymplecticMat random_symplectic(std::size_t n, std::uint64_t seed);
SymplecticMat random_symplectic(std::size_t n, std::uint64_t seed, std::size_t transvections);

// Symplectic matrices of common gates (phase-free tableaus).
SymplecticMat hadamard_mat(std::size_t n, std::size_t q);
SymplecticMat phase_mat(std::size_t n, std::size_t q);    // S and Sdg coincide mod phase
SymplecticMat sqrtx_mat(std::size_t n, std::size_t q);
SymplecticMat cnot_mat(std::size_t n, std::size_t control, std::size_t target);
SymplecticMat cz_mat(std::size_t n, std::size_t a, std::size_t b);
SymplecticMat swap_mat(std::size_t n, std::size_t a, std::size_t b);
SymplecticMat permutation_mat(const std::vector<std::size_t>& perm); // qubit i -> perm[i]

} // namespace ftre
