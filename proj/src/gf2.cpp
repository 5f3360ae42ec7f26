#include "ftre/gf2.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace ftre {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

int parity_of_and(const std::vector<word_t>& a, const std::vector<word_t>& b) {
    word_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc ^= a[i] & b[i];
    return std::popcount(acc) & 1;
}

void require_same_n(const PauliVec& u, const PauliVec& v) {
    if (u.qubits() != v.qubits())
        throw std::invalid_argument("Pauli vectors act on different qubit counts");
}

} // namespace

PauliVec::PauliVec(std::size_t n) : n_(n), xs_(words_for(n), 0), zs_(words_for(n), 0) {}

PauliVec PauliVec::x_on(std::size_t n, std::size_t q) {
    PauliVec p(n);
    p.set_x(q, true);
    return p;
}

PauliVec PauliVec::z_on(std::size_t n, std::size_t q) {
    PauliVec p(n);
    p.set_z(q, true);
    return p;
}

PauliVec PauliVec::y_on(std::size_t n, std::size_t q) {
    PauliVec p(n);
    p.set_x(q, true);
    p.set_z(q, true);
    return p;
}

PauliVec PauliVec::unit(std::size_t n, std::size_t index) {
    PauliVec p(n);
    p.set_bit(index, true);
    return p;
}

PauliVec PauliVec::from_bits(const std::vector<int>& bits) {
    if (bits.size() % 2 != 0)
        throw std::invalid_argument("bit vector length must be even");
    PauliVec p(bits.size() / 2);
    for (std::size_t i = 0; i < bits.size(); ++i)
        p.set_bit(i, bits[i] != 0);
    return p;
}

PauliVec PauliVec::from_pauli_string(const std::string& s) {
    PauliVec p(s.size());
    for (std::size_t q = 0; q < s.size(); ++q) {
        switch (s[q]) {
            case 'I': case 'i': case '_': break;
            case 'X': case 'x': p.set_x(q, true); break;
            case 'Z': case 'z': p.set_z(q, true); break;
            case 'Y': case 'y': p.set_x(q, true); p.set_z(q, true); break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli character '") + s[q] + "'");
        }
    }
    return p;
}

bool PauliVec::x(std::size_t q) const {
    return (xs_[q / kWordBits] >> (q % kWordBits)) & 1;
}

bool PauliVec::z(std::size_t q) const {
    return (zs_[q / kWordBits] >> (q % kWordBits)) & 1;
}

void PauliVec::set_x(std::size_t q, bool v) {
    if (q >= n_)
        throw std::out_of_range("qubit index out of range");
    word_t mask = word_t(1) << (q % kWordBits);
    if (v)
        xs_[q / kWordBits] |= mask;
    else
        xs_[q / kWordBits] &= ~mask;
}

void PauliVec::set_z(std::size_t q, bool v) {
    if (q >= n_)
        throw std::out_of_range("qubit index out of range");
    word_t mask = word_t(1) << (q % kWordBits);
    if (v)
        zs_[q / kWordBits] |= mask;
    else
        zs_[q / kWordBits] &= ~mask;
}

bool PauliVec::bit(std::size_t i) const {
    return i < n_ ? x(i) : z(i - n_);
}

void PauliVec::set_bit(std::size_t i, bool v) {
    if (i < n_)
        set_x(i, v);
    else
        set_z(i - n_, v);
}

bool PauliVec::is_zero() const {
    for (word_t w : xs_)
        if (w) return false;
    for (word_t w : zs_)
        if (w) return false;
    return true;
}

std::size_t PauliVec::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < xs_.size(); ++i)
        w += std::popcount(xs_[i] | zs_[i]);
    return w;
}

std::size_t PauliVec::first_nonzero() const {
    for (std::size_t i = 0; i < xs_.size(); ++i)
        if (xs_[i])
            return i * kWordBits + std::countr_zero(xs_[i]);
    for (std::size_t i = 0; i < zs_.size(); ++i)
        if (zs_[i])
            return n_ + i * kWordBits + std::countr_zero(zs_[i]);
    return 2 * n_;
}

PauliVec& PauliVec::operator^=(const PauliVec& o) {
    require_same_n(*this, o);
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        xs_[i] ^= o.xs_[i];
        zs_[i] ^= o.zs_[i];
    }
    return *this;
}

std::string PauliVec::str() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) {
        bool xb = x(q), zb = z(q);
        if (xb && zb)
            s[q] = 'Y';
        else if (xb)
            s[q] = 'X';
        else if (zb)
            s[q] = 'Z';
    }
    return s;
}

int symplectic_product(const PauliVec& u, const PauliVec& v) {
    require_same_n(u, v);
    return parity_of_and(u.xs_, v.zs_) ^ parity_of_and(u.zs_, v.xs_);
}

PauliVec transvection(const PauliVec& u, const PauliVec& v) {
    PauliVec out = v;
    if (symplectic_product(u, v))
        out ^= u;
    return out;
}

SymplecticMat::SymplecticMat(std::size_t n) : n_(n) {
    rows_.reserve(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        rows_.push_back(PauliVec::unit(n, i));
}

SymplecticMat SymplecticMat::identity(std::size_t n) {
    return SymplecticMat(n);
}

SymplecticMat SymplecticMat::from_rows(std::vector<PauliVec> rows) {
    if (rows.empty() || rows.size() % 2 != 0)
        throw std::invalid_argument("a symplectic matrix needs 2n rows");
    std::size_t n = rows.size() / 2;
    for (const auto& r : rows)
        if (r.qubits() != n)
            throw std::invalid_argument("row width does not match row count");
    SymplecticMat m;
    m.n_ = n;
    m.rows_ = std::move(rows);
    return m;
}

void SymplecticMat::apply_transvection(const PauliVec& u) {
    for (auto& r : rows_)
        if (symplectic_product(u, r))
            r ^= u;
}

PauliVec apply_clifford(const SymplecticMat& m, const PauliVec& v) {
    if (m.qubits() != v.qubits())
        throw std::invalid_argument("matrix and vector qubit counts differ");
    std::size_t n = m.qubits();
    PauliVec out(n);
    for (std::size_t i = 0; i < 2 * n; ++i)
        if (v.bit(i))
            out ^= m.row(i);
    return out;
}

SymplecticMat compose(const SymplecticMat& first, const SymplecticMat& second) {
    if (first.qubits() != second.qubits())
        throw std::invalid_argument("matrix qubit counts differ");
    std::vector<PauliVec> rows;
    rows.reserve(2 * first.qubits());
    for (std::size_t i = 0; i < 2 * first.qubits(); ++i)
        rows.push_back(apply_clifford(second, first.row(i)));
    return SymplecticMat::from_rows(std::move(rows));
}

bool is_symplectic(const SymplecticMat& m) {
    std::size_t n = m.qubits();
    for (std::size_t i = 0; i < 2 * n; ++i) {
        for (std::size_t j = i; j < 2 * n; ++j) {
            int want = (j == i + n) ? 1 : 0;
            if (symplectic_product(m.row(i), m.row(j)) != want)
                return false;
        }
    }
    return true;
}

SymplecticMat transvection_matrix(const PauliVec& u) {
    SymplecticMat m(u.qubits());
    m.apply_transvection(u);
    return m;
}

SymplecticMat random_symplectic(std::size_t n, std::uint64_t seed) {
    return random_symplectic(n, seed, 2 * n * n);
}

SymplecticMat random_symplectic(std::size_t n, std::uint64_t seed, std::size_t transvections) {
    if (n < 1)
        throw std::invalid_argument("need at least one qubit");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng() % i]);
    SymplecticMat m = permutation_mat(perm);
    for (std::size_t t = 0; t < transvections; ++t) {
        PauliVec u(n);
        do {
            for (std::size_t i = 0; i < 2 * n; ++i)
                u.set_bit(i, rng() & 1);
        } while (u.is_zero());
        m.apply_transvection(u);
    }
    return m;
}

SymplecticMat hadamard_mat(std::size_t n, std::size_t q) {
    SymplecticMat m(n);
    std::swap(m.row(q), m.row(n + q));
    return m;
}

SymplecticMat phase_mat(std::size_t n, std::size_t q) {
    SymplecticMat m(n);
    m.row(q) ^= PauliVec::z_on(n, q);       // X -> Y
    return m;
}

SymplecticMat sqrtx_mat(std::size_t n, std::size_t q) {
    SymplecticMat m(n);
    m.row(n + q) ^= PauliVec::x_on(n, q);   // Z -> Y
    return m;
}

SymplecticMat cnot_mat(std::size_t n, std::size_t control, std::size_t target) {
    if (control == target)
        throw std::invalid_argument("CNOT control equals target");
    SymplecticMat m(n);
    m.row(control) ^= PauliVec::x_on(n, target);     // X_c -> X_c X_t
    m.row(n + target) ^= PauliVec::z_on(n, control); // Z_t -> Z_c Z_t
    return m;
}

SymplecticMat cz_mat(std::size_t n, std::size_t a, std::size_t b) {
    if (a == b)
        throw std::invalid_argument("CZ qubits coincide");
    SymplecticMat m(n);
    m.row(a) ^= PauliVec::z_on(n, b);
    m.row(b) ^= PauliVec::z_on(n, a);
    return m;
}

SymplecticMat swap_mat(std::size_t n, std::size_t a, std::size_t b) {
    SymplecticMat m(n);
    std::swap(m.row(a), m.row(b));
    std::swap(m.row(n + a), m.row(n + b));
    return m;
}

SymplecticMat permutation_mat(const std::vector<std::size_t>& perm) {
    std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm) {
        if (p >= n || seen[p])
            throw std::invalid_argument("not a permutation");
        seen[p] = true;
    }
    std::vector<PauliVec> rows(2 * n, PauliVec(n));
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = PauliVec::x_on(n, perm[i]);
        rows[n + i] = PauliVec::z_on(n, perm[i]);
    }
    return SymplecticMat::from_rows(std::move(rows));
}

} // namespace ftre
