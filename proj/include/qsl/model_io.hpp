#pragma once

#include "qsl/dynamics.hpp"

#include <string>
#include <string_view>

namespace qsl {

// Model document:
//   {"name": "...", "dim": n,
//    "hamiltonian": M,
//    "jumps": [{"matrix": M, "rate": g}, ...]}
// where M is row-major [re, im] pairs, either flat (n*n pairs) or nested
// (n rows of n pairs). "name" and "jumps" are optional. Errors are FormatError
// naming the line/column (syntax) or the field path (content).
LindbladModel parse_model_json(std::string_view text);
LindbladModel load_model_file(const std::string& path);

// State document: {"matrix": M} or a bare M.
DensityMatrix parse_state_json(std::string_view text);
DensityMatrix load_state_file(const std::string& path);

std::string model_to_json(const LindbladModel& model);

}  // namespace qsl
