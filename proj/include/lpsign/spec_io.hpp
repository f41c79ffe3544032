#pragma once

#include <string>

#include "lpsign/functions.hpp"

namespace lpsign {

/// Parses a JSON spec document into a validated FunctionSpec. Numeric fields
/// are decimal/fraction strings (or plain integers) parsed exactly; JSON
/// floats are rejected to keep inputs lossless. Unknown keys are rejected
/// with the offending path. Throws ParseError.
FunctionSpec parse_spec_json(const std::string& text);

/// Canonical JSON rendering; parse_spec_json(emit_spec_json(s)) == s.
std::string emit_spec_json(const FunctionSpec& spec);

/// FNV-1a 64-bit digest (hex) used to fingerprint input documents.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace lpsign
