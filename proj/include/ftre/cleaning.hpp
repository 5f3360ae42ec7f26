#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ftre/gf2.hpp"

namespace ftre {

/*
 * Result of cleaning a Clifford frame off a prefix of qubits: the pi/4
 * rotation axes emitted (in application order) and the residual frame, which
 * acts trivially on the cleaned prefix.
 */
struct CleaningResult {
    std::vector<PauliVec> rotations;
    SymplecticMat residual;
    std::size_t emitted_count = 0;
};

// General frame cleaning: at most 4w rotations make the frame trivial on the
// first w qubits. Rotations that would act as the identity are skipped.
CleaningResult clean_general(const SymplecticMat& m, std::size_t w);

/*
 * Port cleaning: for frames built only from Cliffords that act trivially or
 * as CNOT controls on the first w qubits, at most 2w rotations suffice. The
 * required block structure is validated before running.
 */
CleaningResult clean_port(const SymplecticMat& m, std::size_t w);

// Rows k and n+k equal e_k and f_k for all k < w, and the matching columns
// are trivial (checked literally).
bool acts_trivially_on_prefix(const SymplecticMat& m, std::size_t w);

// Rows n..n+w-1 equal f_1..f_w and the implied zero blocks hold. On failure
// `diagnostic`, when given, names the first violated row.
bool has_port_form(const SymplecticMat& m, std::size_t w, std::string* diagnostic = nullptr);

} // namespace ftre
