#include "walkup/io.hpp"

#include <fstream>
#include <sstream>

#include "walkup/errors.hpp"

namespace walkup {

Complex read_facet_list(std::istream& in) {
    std::vector<std::vector<Label>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tok(line);
        std::vector<Label> facet;
        std::string word;
        while (tok >> word) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(word, &used);
                if (used != word.size() || v < 0)
                    throw std::invalid_argument(word);
                facet.push_back(static_cast<Label>(v));
            } catch (const std::exception&) {
                throw ParseError(lineno, "not a non-negative integer: '" + word + "'");
            }
        }
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw ParseError(lineno, "no facets in input");
    return Complex::from_facets(facets);
}

Complex read_facet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_facet_list(in);
}

void write_facet_list(std::ostream& out, const Complex& X, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << "\n";
    }
    for (const Face& f : X.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out << ' ';
            out << f[i];
        }
        out << "\n";
    }
}

void write_facet_file(const std::string& path, const Complex& X,
                      const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_facet_list(out, X, comment);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::uint64_t h = 1469598103934665603ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

} // namespace walkup
