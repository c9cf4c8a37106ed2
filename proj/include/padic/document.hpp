#pragma once

#include <optional>
#include <string>

#include "padic/frame_builder.hpp"

namespace padic {

/// Malformed or inconsistent on-disk document.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Provenance of a frame document: the tree recipe that produced it.
 */
struct Provenance {
    std::vector<std::pair<char, long>> transforms;  ///< ('i', j) or ('l', l) for kind ii
    std::vector<long> padding;                      ///< padded node indices
};

/**
 * The on-disk FrameDocument (schema_version "1").  Serialization is
 * canonical: object keys sorted, complex numbers as [re, im] pairs with
 * shortest round-trip decimals, words as sorted [index, exponent] pairs.
 * Save/load round-trips bit-identically.
 */
struct FrameDocument {
    FrameSystem frame;
    Provenance provenance;
    std::optional<std::string> verification_json;  ///< embedded report, if any
};

std::string save_document(const FrameDocument& doc);
FrameDocument load_document(const std::string& text);

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

/**
 * Tree literal: {"params": {p, N, M}, "nodes": [[index, "0" | [re,im] | "free"], ...]}.
 * Unspecified nodes default to symbolic-nonzero; node 0 may only carry 1.
 */
MaskTree load_tree_literal(const std::string& text);
std::string save_tree_literal(const MaskTree& t);

}  // namespace padic
