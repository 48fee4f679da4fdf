#pragma once

#include "nilgeo/catalog.hpp"

#include <map>
#include <optional>
#include <string>

namespace nilgeo {

/// Schema or syntax violation in a document, with the line it occurred on.
class DocumentError : public std::runtime_error {
public:
    DocumentError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// On-disk description of an algebra with optional structures and metric.
/// Indices are 1-based in the text form (matching the e_1..e_n naming)
/// and 0-based here. The exact byte grammar lives in docs/format.md.
struct AlgebraDocument {
    int version = 1;
    std::string name;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<BracketSpec> brackets;               // x < y, 0-based
    std::map<std::string, RationalMatrix> endos;     // keys among I, J, K
    std::optional<RationalMatrix> metric;

    LieAlgebra to_algebra() const;
    std::optional<HypercomplexStructure> triple() const;
    std::optional<RationalMatrix> single_structure() const; // I when no full triple

    static AlgebraDocument from_entry(const CatalogEntry& entry);
};

AlgebraDocument parse_document(const std::string& text);
std::string emit_document(const AlgebraDocument& doc);

} // namespace nilgeo
