#include "oracle.hpp"

#include <algorithm>
#include <map>

#include "walkup/errors.hpp"

namespace walkup::oracle {

namespace {

void expand(const std::vector<Label>& facet, std::size_t from, std::vector<Label>& prefix,
            std::set<std::vector<Label>>& out) {
    for (std::size_t i = from; i < facet.size(); ++i) {
        prefix.push_back(facet[i]);
        out.insert(prefix);
        expand(facet, i + 1, prefix, out);
        prefix.pop_back();
    }
}

std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> M) {
    if (M.empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (M[r][col]) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(M[pivot], M[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || !M[r][col]) continue;
            for (std::size_t c = 0; c < cols; ++c) M[r][c] ^= M[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::set<std::vector<Label>> naive_faces(const Complex& X) {
    std::set<std::vector<Label>> out;
    std::vector<Label> prefix;
    for (const Face& f : X.facets()) expand(f.labels(), 0, prefix, out);
    return out;
}

FVector naive_f_vector(const Complex& X) {
    FVector fv;
    if (X.empty()) return fv;
    fv.counts.assign(static_cast<std::size_t>(X.dim()) + 1, 0);
    for (const auto& f : naive_faces(X)) ++fv.counts[f.size() - 1];
    for (std::size_t j = 0; j < fv.counts.size(); ++j)
        fv.euler += (j % 2 == 0) ? fv.counts[j] : -fv.counts[j];
    return fv;
}

BettiVector naive_betti(const Complex& X, std::size_t cap) {
    auto all = naive_faces(X);
    if (all.size() > cap)
        throw TooLarge("naive_betti cap of " + std::to_string(cap) + " faces exceeded");
    std::map<int, std::vector<std::vector<Label>>> by_dim;
    for (const auto& f : all) by_dim[static_cast<int>(f.size()) - 1].push_back(f);

    auto index_of = [](const std::vector<std::vector<Label>>& faces,
                       const std::vector<Label>& f) {
        return static_cast<std::size_t>(
            std::lower_bound(faces.begin(), faces.end(), f) - faces.begin());
    };

    const int d = X.dim();
    std::vector<std::size_t> rank(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k) {
        if (!by_dim.count(k) || !by_dim.count(k - 1)) continue;
        const auto& lower = by_dim[k - 1];
        const auto& upper = by_dim[k];
        std::vector<std::vector<std::uint8_t>> M(
            lower.size(), std::vector<std::uint8_t>(upper.size(), 0));
        for (std::size_t c = 0; c < upper.size(); ++c) {
            std::vector<Label> sub(upper[c]);
            for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                M[index_of(lower, sub)][c] = 1;
                sub.insert(sub.begin() + static_cast<std::ptrdiff_t>(drop),
                           upper[c][drop]);
            }
        }
        rank[static_cast<std::size_t>(k)] = dense_rank(std::move(M));
    }

    BettiVector b;
    for (int k = 0; k <= d; ++k) {
        const std::int64_t fk =
            by_dim.count(k) ? static_cast<std::int64_t>(by_dim[k].size()) : 0;
        b.beta.push_back(fk - static_cast<std::int64_t>(rank[static_cast<std::size_t>(k)]) -
                         static_cast<std::int64_t>(rank[static_cast<std::size_t>(k) + 1]));
    }
    return b;
}

namespace {

struct ShellSearch {
    const std::vector<Face>& facets;
    std::set<std::uint32_t> dead; // masks known not to extend to a full order

    bool extend(std::uint32_t mask, const std::set<Label>& used_vertices) {
        if (mask == (1u << facets.size()) - 1) return true;
        if (dead.count(mask)) return false;
        for (std::size_t j = 0; j < facets.size(); ++j) {
            if (mask & (1u << j)) continue;
            // exactly one fresh vertex, and the remaining ridge must lie in
            // exactly one already-used facet (a boundary ridge)
            Label fresh = -1;
            bool ok = true;
            for (Label v : facets[j]) {
                if (!used_vertices.count(v)) {
                    if (fresh != -1) {
                        ok = false;
                        break;
                    }
                    fresh = v;
                }
            }
            if (!ok || fresh == -1) continue;
            const Face ridge = facets[j].without(fresh);
            int carriers = 0;
            for (std::size_t i = 0; i < facets.size(); ++i)
                if ((mask & (1u << i)) && ridge.subset_of(facets[i])) ++carriers;
            if (carriers != 1) continue;
            auto next_used = used_vertices;
            next_used.insert(fresh);
            if (extend(mask | (1u << j), next_used)) return true;
        }
        dead.insert(mask);
        return false;
    }
};

} // namespace

bool naive_stacked_ball(const Complex& X) {
    if (X.empty() || !X.pure()) return false;
    const auto& facets = X.facets();
    if (facets.size() > 12) throw TooLarge("naive_stacked_ball needs f_d <= 12");
    if (facets.size() == 1) return true;
    ShellSearch search{facets, {}};
    for (std::size_t start = 0; start < facets.size(); ++start) {
        std::set<Label> used(facets[start].begin(), facets[start].end());
        if (search.extend(1u << start, used)) return true;
    }
    return false;
}

} // namespace walkup::oracle
