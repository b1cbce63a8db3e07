#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flagcodes/bounds.hpp"
#include "flagcodes/constructions.hpp"
#include "flagcodes/flags.hpp"

namespace flagcodes {

/// Line-oriented code file:
///   q=<q> v=<v> type=<k_1,...,k_m> [cartesian=true]
///   one word per line, subspaces '|'-separated, rows ';', entries ','.
struct CodeFile {
    std::uint32_t q = 0, v = 0;
    std::vector<std::uint32_t> type;
    bool cartesian = false;
    std::vector<std::vector<Subspace>> words;
};

void write_code(std::ostream& out, const FlagCode& code);
void write_code(std::ostream& out, const CartesianCode& code);
void write_code_file(const std::string& path, const FlagCode& code);
void write_code_file(const std::string& path, const CartesianCode& code);

CodeFile read_code(std::istream& in);
CodeFile read_code_file(const std::string& path);

/// Nested flags from a parsed code file (throws unless cartesian=false).
FlagCode to_flag_code(const CodeFile& file);

/// Generator matrices, one per line in the subspace text form; '#' comments.
std::vector<MatrixFq> read_group_generators(std::istream& in, std::uint32_t q, std::uint32_t v);
std::vector<MatrixFq> read_group_generators_file(const std::string& path, std::uint32_t q,
                                                 std::uint32_t v);

/// Results cache, append-only: "v d q type size source" per line, type as
/// comma list or '-' for full; '#' comments.
std::vector<KnownValue> read_results_cache(std::istream& in);
std::vector<KnownValue> read_results_cache_file(const std::string& path);

Subspace parse_subspace(const std::string& text, const Field& field, std::uint32_t v);

}  // namespace flagcodes
