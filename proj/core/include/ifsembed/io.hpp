#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ifsembed/bounds.hpp"
#include "ifsembed/chains.hpp"
#include "ifsembed/embedding.hpp"
#include "ifsembed/ifs.hpp"
#include "ifsembed/openness.hpp"
#include "ifsembed/symmetry1d.hpp"

namespace ifsembed::io {

using nlohmann::json;

/// Parses JSON text; malformed input raises ParseError.
json parse_document(std::string_view text);

/// Reads and parses a file; I/O failures raise ParseError as well.
json read_document(const std::string& path);

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const RationalVector& v);
RationalVector vector_from_json(const json& j);

json to_json(const Box& b);
Box box_from_json(const json& j);

/// {"ratio": "p/q", "orth": {"perm": [...], "signs": [...]}, "trans": [...]}
json to_json(const Similitude& s);
Similitude similitude_from_json(const json& j);

/// {"dimension": d, "maps": [...], "invariant_box": {...}?}
json to_json(const Ifs& ifs);
Ifs ifs_from_json(const json& j);

/// {"phi": IFS, "psi": IFS}
json to_json(const SymmetryProblem& problem);
SymmetryProblem problem_from_json(const json& j);

/// 64-bit FNV-1a of `data`.
std::uint64_t fnv1a64(std::string_view data);

/// "fnv1a64:" followed by 16 hex digits, computed over the compact dump of `j`.
std::string digest(const json& j);

/// Standalone certificate document. It records a digest of the IFS it refers
/// to and a digest of its own relation table.
json to_json(const EmbeddingCertificate& cert, const Ifs& ifs);

/// Reads a certificate and checks both digests; mismatches raise ParseError.
/// Exactness is not re-checked here (see verify_certificate).
EmbeddingCertificate certificate_from_json(const json& j, const Ifs& ifs);

json to_json(const GapBounds& g);
json to_json(const DiameterBounds& d);
json to_json(const SscResult& r, std::size_t alphabet);
json to_json(const ChainStructure& cs, std::size_t alphabet);
json to_json(const OpennessCertificate& cert, std::size_t base_alphabet);
json to_json(const SymmetryResult& result);
json to_json(const CounterevidenceReport& report);

}  // namespace ifsembed::io
