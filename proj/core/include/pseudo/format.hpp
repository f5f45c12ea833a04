#pragma once

#include "pseudo/catalog.hpp"

#include <string_view>

namespace pseudo {

// Definition files. Line oriented, '#' starts a comment.
//
//   [lie_algebra]
//   dim = 1
//   [pseudoalgebra]
//   rank = 2
//   bracket 1 2 = 1 (d1 | 1) 2          # rat (h | l) k  means  rat (h (x) l) (x)_H a_k
//   [cobracket]
//   delta 2 = 1 (-d1 | 1) 1 2  -1 (1 | -d1) 2 1
//   [r]
//   r = 1/2 (1 | d1) 1 1  -1/2 (d1 | 1) 1 1
//   [options]
//   sample_degree = 4
//
// In an hexpr, d1^e is the divided power D_1^(e), so D^n = n! d1^n. A missing bracket j i is
// filled in by skew-symmetry; other missing brackets are zero unless `partial = true`, in
// which case they are outside the stored window.

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& msg);
  int line;
  int column;
};

struct DefinitionDocument {
  LieAlgebraPresentation lie;
  HopfPtr H;
  PseudoTable table;
  std::optional<Cobracket> cobracket;
  std::optional<LTensor> r;
  std::map<std::string, std::string> options;

  int option_int(const std::string& key, int fallback) const;
  bool option_bool(const std::string& key, bool fallback) const;
  // `window = 1 2 3`, 0-based on return; empty when absent.
  std::vector<int> window() const;
};

DefinitionDocument parse_definition(std::string_view text);
std::string serialize_definition(const DefinitionDocument& doc);

DefinitionDocument to_document(const CatalogEntry& e);
// Same algebra, cobracket and r, compared entry by entry.
bool same_definition(const DefinitionDocument& a, const DefinitionDocument& b);

// Parses a single hexpr; columns in errors are 1-based offsets into `text`.
HopfElement parse_hexpr(const HopfAlgebra& H, std::string_view text);
std::string hexpr_to_string(const HopfElement& h);

}  // namespace pseudo
