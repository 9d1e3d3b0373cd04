#pragma once

// JSON readers and writers for root data and semiring dumps.

#include "satake/lattice_core.hpp"
#include "satake/reconstruction.hpp"

#include <stdexcept>
#include <string>

namespace satake {

/// Malformed input text (bad JSON, wrong shapes, unknown ids).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);

/// {"name"?, "rank", "simple_roots", "simple_coroots"}. Shape problems throw
/// ParseError; a well-formed but invalid datum throws DatumError.
RootDatum parse_datum_json(const std::string& text);
std::string datum_to_json(const RootDatum& rd);

/// {"unit", "ids", "products": [{"a", "b", "terms": [{"id", "mult"}], "complete"}]}.
/// Pairs may be listed in either order or twice (identically).
AbstractSemiring parse_semiring_json(const std::string& text);
/// Canonical form: ids sorted, each unordered pair once with a <= b, terms sorted.
std::string semiring_to_json(const AbstractSemiring& sr);

}  // namespace satake
