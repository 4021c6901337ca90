#pragma once

// Text grammars used by the CLI: state specifications and polynomial
// spectra. Errors carry the offending position.
//
//   state:        "fock:<n>" | "split:<n>" | "phase:<r>" | "amps:<path>"
//   hamiltonian:  polynomial in the token n with real coefficients,
//                 e.g. "1.5*n", "n^2 - 0.25*n", "0"

#include <stdexcept>
#include <string>

#include "qps/aawigner.hpp"
#include "qps/wk.hpp"

namespace qps::parse {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// normalized state of the given dimension; "amps:" loads a JSON array of
// [re, im] pairs and normalizes (zero vector rejected)
wk::StateVec parse_state_spec(const std::string& text, int dim);

// coefficient list, degree <= 4 enforced
aa::SpectrumFn parse_hamiltonian(const std::string& text);

}  // namespace qps::parse
