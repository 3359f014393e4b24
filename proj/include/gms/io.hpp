#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gms/instance.hpp"

namespace gms {

/// Parses the line-based instance format:
///
///     p gms <problem> <n> <tau> <k> <ell>
///     a <key> <value...>     keys: s, t, q, colors
///     l <i>                  starts layer i (1-based, ascending; omitted layers are empty)
///     e <u> <v>              edge in the current layer
///
/// `#` starts a comment; lines beginning with `#@` are kept as the instance legend.
/// Errors are reported as ParseError carrying the offending line number.
ProblemInstance parse_instance(std::string_view text);

/// Canonical text: attributes in fixed order, every layer listed, edges sorted.
std::string serialize_instance(const ProblemInstance& inst);

/// Solution format: one line `S <i> <elem>*` per layer, i = 1..tau.
SolutionSequence parse_solution(std::string_view text, std::size_t tau);
std::string serialize_solution(const SolutionSequence& sol);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace gms
