#pragma once

#include <iosfwd>
#include <string>

#include "walkup/complex.hpp"

namespace walkup {

// Facet-list text format: one facet per line as whitespace-separated
// non-negative integers; '#' starts a comment, blank lines are skipped.
Complex read_facet_list(std::istream& in);
Complex read_facet_file(const std::string& path);

// Writes facets in lexicographic order; `comment` lines (if any) go first.
void write_facet_list(std::ostream& out, const Complex& X,
                      const std::string& comment = "");
void write_facet_file(const std::string& path, const Complex& X,
                      const std::string& comment = "");

// FNV-1a content digest, used as the certificate subject for file inputs.
std::string file_digest(const std::string& path);

} // namespace walkup
