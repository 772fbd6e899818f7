#pragma once

#include <string>

#include "fdrc/constructions.hpp"

namespace fdrc {

// Code file, text form: a "ferrers-rank-code" marker, header lines for the
// diagram, field, claimed distance, provenance and dimension, then one
// "matrix:" block per basis element in the matrix text format.
std::string render_code(const FerrersCode& code);
FerrersCode parse_code(const std::string& text);

// The same content as one JSON object, basis matrices as nested integer
// arrays.
std::string code_json(const FerrersCode& code);
FerrersCode code_from_json(const std::string& text);

// Diagram summary: m, n, gamma, rho, theta, dot count.
std::string diagram_json(const FerrersDiagram& f);

}  // namespace fdrc
