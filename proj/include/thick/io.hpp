#ifndef THICK_IO_HPP
#define THICK_IO_HPP

#include <string>

#include <json.hpp>

#include "thick/complex.hpp"
#include "thick/module.hpp"
#include "thick/ring.hpp"

namespace thick {

using Json = nlohmann::ordered_json;

/// Ring description: {"field": {"char": p}, "vars": [...], "relations": [...],
/// "primes": [{"name", "gens"}], "flags": {"gorenstein", "lci_punctured"}}
/// plus an optional "weights" array and "name".
RingRef ring_from_json(const Json& j, const std::string& fallback_name = "ring");

/// Rows of polynomial strings. An empty row list is the 0 x 0 matrix and a
/// row list of empty rows has zero columns.
Matrix matrix_from_json(const Json& j, const RingPtr& base);
Json matrix_to_json(const Matrix& m);

/// `catalog:NAME` or a path to a ring description.
RingRef resolve_ring(const std::string& ref);

/// A module is a `catalog:NAME/sample` reference, a file path, or an object
/// {"ring": <ring>, "matrix": [...]}. `ctx` supplies the ring when omitted.
ModulePres module_from_json(const Json& j, const RingRef& ctx);
ModulePres resolve_module(const std::string& ref, const RingRef& ctx);

/// {"kind": "delta" | "free" | "shift" | "cone", ...}.
ComplexHandle complex_from_json(const Json& j, const RingRef& ctx);

Json read_json_file(const std::string& path);

Json to_json(const SpecSubset& s);

}  // namespace thick

#endif
