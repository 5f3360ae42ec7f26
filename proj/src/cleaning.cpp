#include "ftre/cleaning.hpp"

#include <cassert>
#include <stdexcept>

namespace ftre {

namespace {

void emit(CleaningResult& res, SymplecticMat& work, const PauliVec& axis) {
    work.apply_transvection(axis);
    res.rotations.push_back(axis);
    assert(is_symplectic(work));
}

// Basis vector paired with flat index i under the symplectic form: the
// partner of e_i is f_i and vice versa.
PauliVec partner_unit(std::size_t n, std::size_t i) {
    return PauliVec::unit(n, (n + i) % (2 * n));
}

void check_args(const SymplecticMat& m, std::size_t w) {
    if (w < 1 || w > m.qubits())
        throw std::invalid_argument("prefix width out of range");
    if (!is_symplectic(m))
        throw std::invalid_argument("input matrix is not symplectic");
}

} // namespace

bool acts_trivially_on_prefix(const SymplecticMat& m, std::size_t w) {
    std::size_t n = m.qubits();
    for (std::size_t k = 0; k < w; ++k) {
        if (m.row(k) != PauliVec::x_on(n, k))
            return false;
        if (m.row(n + k) != PauliVec::z_on(n, k))
            return false;
    }
    for (std::size_t i = 0; i < 2 * n; ++i) {
        bool identity_row = (i < w) || (i >= n && i < n + w);
        if (identity_row)
            continue;
        for (std::size_t k = 0; k < w; ++k)
            if (m.row(i).x(k) || m.row(i).z(k))
                return false;
    }
    return true;
}

CleaningResult clean_general(const SymplecticMat& m, std::size_t w) {
    check_args(m, w);
    std::size_t n = m.qubits();
    CleaningResult res{{}, m, 0};
    SymplecticMat& work = res.residual;

    for (std::size_t k = 0; k < w; ++k) {
        const PauliVec ek = PauliVec::x_on(n, k);
        const PauliVec fk = PauliVec::z_on(n, k);

        // Map row k to e_k with up to two rotations.
        if (work.row(k) != ek) {
            const PauliVec v = work.row(k);
            if (symplectic_product(v, ek)) {
                emit(res, work, v ^ ek);
            } else {
                PauliVec u = fk;
                if (!symplectic_product(v, fk)) {
                    std::size_t delta = v.first_nonzero();
                    assert(delta < 2 * n && delta > k);
                    u = fk ^ partner_unit(n, delta);
                }
                emit(res, work, v ^ u);
                emit(res, work, ek ^ u);
            }
            assert(work.row(k) == ek);
        }

        // Map row n+k to f_k, fixing e_k.
        if (work.row(n + k) != fk) {
            const PauliVec v = work.row(n + k);
            if (symplectic_product(v, fk)) {
                emit(res, work, v ^ fk);
            } else {
                emit(res, work, v ^ ek ^ fk);
                emit(res, work, ek);
            }
            assert(work.row(n + k) == fk);
        }
    }
    res.emitted_count = res.rotations.size();
    assert(res.emitted_count <= 4 * w);
    return res;
}

bool has_port_form(const SymplecticMat& m, std::size_t w, std::string* diagnostic) {
    std::size_t n = m.qubits();
    auto fail = [&](std::size_t row, const char* what) {
        if (diagnostic)
            *diagnostic = "row " + std::to_string(row) + ": " + what;
        return false;
    };
    for (std::size_t k = 0; k < w; ++k)
        if (m.row(n + k) != PauliVec::z_on(n, k))
            return fail(n + k, "expected the Z image of a prefix qubit to be itself");
    // Zero blocks implied by the form: no other row may touch the X part of
    // the prefix, and prefix X rows carry the identity there.
    for (std::size_t k = 0; k < w; ++k) {
        for (std::size_t j = 0; j < w; ++j)
            if (m.row(k).x(j) != (j == k))
                return fail(k, "expected identity on the prefix X block");
    }
    for (std::size_t i = w; i < n; ++i)
        for (std::size_t j = 0; j < w; ++j)
            if (m.row(i).x(j))
                return fail(i, "unexpected prefix X support");
    for (std::size_t i = n + w; i < 2 * n; ++i)
        for (std::size_t j = 0; j < w; ++j)
            if (m.row(i).x(j))
                return fail(i, "unexpected prefix X support");
    return true;
}

CleaningResult clean_port(const SymplecticMat& m, std::size_t w) {
    check_args(m, w);
    std::string diag;
    if (!has_port_form(m, w, &diag))
        throw std::invalid_argument("matrix is not of port form (" + diag + ")");

    std::size_t n = m.qubits();
    CleaningResult res{{}, m, 0};
    SymplecticMat& work = res.residual;

    for (std::size_t k = 0; k < w; ++k) {
        const PauliVec ek = PauliVec::x_on(n, k);
        const PauliVec fk = PauliVec::z_on(n, k);
        if (work.row(k) == ek)
            continue;
        const PauliVec v = work.row(k);
        if (symplectic_product(v, ek)) {
            emit(res, work, v ^ ek);
        } else {
            // Two rotations that fix f_j for j >= k and still map v to e_k.
            emit(res, work, v ^ ek ^ fk);
            emit(res, work, fk);
        }
        assert(work.row(k) == ek);
        assert(work.row(n + k) == fk);
    }
    res.emitted_count = res.rotations.size();
    assert(res.emitted_count <= 2 * w);
    return res;
}

} // namespace ftre
