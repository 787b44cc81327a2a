#pragma once

// JSON text forms. A scalar is {"num": [c0, c1, ...], "den": [...]} with
// coefficients in ascending degree of v; coefficients beyond 64 bits are
// written as decimal strings. An element is
//   {"system": {"rank": n, "affine": b}, "basis": "g", "terms": [{"word": [...], "coeff": {...}}]}
// with the empty word for the identity.

#include <string>

#include "tlhat/markov.hpp"

namespace tlhat {

inline constexpr int kJsonSchemaVersion = 1;

std::string ring_to_json(const RingElem& c);
RingElem ring_from_json(const std::string& text);

std::string element_to_json(const Element& a);
Element element_from_json(const std::string& text);

/// {"n1": .., "terms": [{"coeff", "A_preimage", "epsilon", "B_preimage"}], "audit": [{"kind", "text"}]}
std::string markov_combination_to_json(const MarkovCombination& m);

/// Cache directory: $TLHAT_CACHE_DIR, else $XDG_CACHE_HOME/tlhat, else ~/.cache/tlhat.
std::string cache_directory();
/// Writes the heap-times-letter cache for one system; returns the entry count.
std::size_t save_product_cache(const std::string& path, const System& sys);
/// Seeds the cache from a file written by save_product_cache; a missing file
/// or another schema version loads nothing.
std::size_t load_product_cache(const std::string& path);

}  // namespace tlhat
