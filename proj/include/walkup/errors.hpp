#pragma once

#include <stdexcept>
#include <string>

namespace walkup {

// Base class for all toolkit errors. Every failure mode the library can
// signal has its own type so callers (and the CLI) can map them to exit
// codes without string matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyComplex : Error {
    EmptyComplex() : Error("empty facet collection") {}
};

struct FaceNotFound : Error {
    explicit FaceNotFound(const std::string& face)
        : Error("face not in complex: " + face) {}
};

struct NotPure : Error {
    NotPure() : Error("complex is not pure") {}
};

struct NotWeak : Error {
    explicit NotWeak(const std::string& ridge)
        : Error("ridge in three or more facets: " + ridge) {}
};

struct NotClosed : Error {
    NotClosed() : Error("complex has non-empty boundary") {}
};

struct NotConnected : Error {
    NotConnected() : Error("complex is not connected") {}
};

struct DimOutOfRange : Error {
    explicit DimOutOfRange(const std::string& what) : Error(what) {}
};

struct UnknownVertex : Error {
    explicit UnknownVertex(int label)
        : Error("vertex not in complex: " + std::to_string(label)) {}
};

struct NotFacet : Error {
    explicit NotFacet(const std::string& face)
        : Error("not a facet: " + face) {}
};

struct NotDisjoint : Error {
    NotDisjoint() : Error("gluing faces are not disjoint") {}
};

// Carries the offending pair and their common neighbor as a witness.
struct InadmissibleGluing : Error {
    int source_vertex;
    int target_vertex;
    int common_neighbor;
    InadmissibleGluing(int u, int pu, int v)
        : Error("inadmissible gluing: " + std::to_string(u) + " and " +
                std::to_string(pu) + " share neighbor " + std::to_string(v)),
          source_vertex(u), target_vertex(pu), common_neighbor(v) {}
};

struct LabelMismatch : Error {
    explicit LabelMismatch(int n)
        : Error("vertex labels are not exactly {0.." + std::to_string(n - 1) + "}") {}
};

struct ConeNotSupported : Error {
    explicit ConeNotSupported(int apex)
        : Error("complex is a cone with apex " + std::to_string(apex)) {}
};

struct NotClosedManifoldLike : Error {
    explicit NotClosedManifoldLike(const std::string& ridge)
        : Error("ridge not in exactly two facets: " + ridge) {}
};

struct HypothesesNotVerified : Error {
    explicit HypothesesNotVerified(const std::string& which)
        : Error("tree-family hypotheses not verified: " + which) {}
};

struct ConstructionBug : Error {
    explicit ConstructionBug(const std::string& what)
        : Error("internal construction violated its own invariant: " + what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

struct OrderCapExceeded : Error {
    explicit OrderCapExceeded(unsigned long long cap)
        : Error("group order exceeds cap " + std::to_string(cap)) {}
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace walkup
