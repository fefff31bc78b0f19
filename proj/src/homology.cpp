#include "walkup/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "walkup/errors.hpp"

namespace walkup {

namespace {

// C(n, k) with saturation at 2^63-1.
std::uint64_t choose_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr std::uint64_t cap = ~0ULL >> 1;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (r > cap / (n - i)) return cap;
        r = r * (n - i) / (i + 1);
    }
    return r;
}

// Row index lookup within a lexicographically sorted face list.
std::int64_t face_index(const std::vector<Face>& faces, const Face& f) {
    auto it = std::lower_bound(faces.begin(), faces.end(), f);
    if (it == faces.end() || !(*it == f)) return -1;
    return static_cast<std::int64_t>(it - faces.begin());
}

bool complex_connected(const Complex& X) {
    if (X.vertex_count() <= 1) return true;
    std::vector<int> parent(X.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    const auto& verts = X.vertices();
    auto vid = [&](Label v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (const Face& f : X.facets()) {
        int root = find(vid(f[0]));
        for (Label v : f) parent[static_cast<std::size_t>(find(vid(v)))] = root;
    }
    int r0 = find(0);
    for (std::size_t i = 1; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) != r0) return false;
    return true;
}

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace

gf2::Matrix boundary_matrix(const Complex& X, int k) {
    if (k < 1 || k > X.dim())
        throw DimOutOfRange("boundary operator degree " + std::to_string(k) +
                            " outside 1.." + std::to_string(X.dim()));
    auto faces = faces_by_dim(X);
    const auto& rows = faces[static_cast<std::size_t>(k - 1)];
    const auto& cols = faces[static_cast<std::size_t>(k)];
    gf2::Matrix A(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (Label v : cols[c]) {
            std::int64_t r = face_index(rows, cols[c].without(v));
            A.set(static_cast<std::size_t>(r), c);
        }
    }
    return A;
}

ChainContext::ChainContext(const Complex& X, std::uint64_t cap) : X_(X) {
    if (X.dim() >= 1) {
        const auto mid = static_cast<std::uint64_t>((X.dim() + 1) / 2);
        if (choose_saturating(X.vertex_count(), mid) > cap)
            throw TooLarge("face enumeration would exceed cap of " + std::to_string(cap));
    }
    if (!X.empty()) faces_ = faces_by_dim(X, cap);

    // rank of boundary_k, computed by streaming the (sparse) columns of the
    // operator into an echelon accumulator.
    ranks_.assign(faces_.size() + 1, 0);
    std::vector<std::uint64_t> rowbuf;
    for (int k = 1; k <= dim(); ++k) {
        const auto& lower = faces_[static_cast<std::size_t>(k - 1)];
        const auto& upper = faces_[static_cast<std::size_t>(k)];
        gf2::Echelon e(lower.size());
        rowbuf.assign((lower.size() + 63) / 64, 0);
        for (const Face& f : upper) {
            std::fill(rowbuf.begin(), rowbuf.end(), 0);
            for (Label v : f) {
                auto r = static_cast<std::uint64_t>(face_index(lower, f.without(v)));
                rowbuf[r / 64] |= 1ULL << (r % 64);
            }
            e.add_row(rowbuf);
        }
        ranks_[static_cast<std::size_t>(k)] = e.rank();
    }
}

std::size_t ChainContext::boundary_rank(int k) const {
    if (k < 1 || k > dim()) return 0;
    return ranks_[static_cast<std::size_t>(k)];
}

BettiVector ChainContext::betti() const {
    BettiVector b;
    for (int k = 0; k <= dim(); ++k) {
        b.beta.push_back(face_count(k) - static_cast<std::int64_t>(boundary_rank(k)) -
                         static_cast<std::int64_t>(boundary_rank(k + 1)));
    }
    return b;
}

BettiVector betti(const Complex& X) { return ChainContext(X).betti(); }

ChainContext::Split ChainContext::split_faces(int k, const std::vector<Label>& W) const {
    Split s;
    if (k < 0 || k > dim()) return s;
    Face w{std::vector<Label>(W)};
    const auto& faces = faces_[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].subset_of(w)) s.inside.push_back(static_cast<std::int64_t>(i));
        else s.outside.push_back(static_cast<std::int64_t>(i));
    }
    return s;
}

// Rank data for H_j(Y) -> H_j(X), all degrees. Uses the identity
//   Z_j(Y) ∩ B_j(X) = { x in B_j(X) : supp(x) within the j-faces of Y },
// (boundaries are cycles, and a chain supported on Y has its boundary in Y)
// so the intersection dimension is rank d_{j+1}(X) minus the rank of the
// columns of d_{j+1}(X) lying outside Y. No kernel bases needed.
std::vector<ChainContext::InducedMapRank>
ChainContext::induced_map_ranks(const std::vector<Label>& W) const {
    const int d = dim();
    std::vector<Split> splits;
    splits.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) splits.push_back(split_faces(k, W));

    // Ranks of the boundary operators of Y = induced(X, W).
    std::vector<std::size_t> rank_y(static_cast<std::size_t>(d) + 2, 0);
    // Ranks of the outside-column submatrices of the X operators.
    std::vector<std::size_t> rank_out(static_cast<std::size_t>(d) + 2, 0);

    std::vector<std::uint64_t> rowbuf;
    std::vector<std::int64_t> pos_in; // global index -> Y column, or -1
    std::vector<std::int64_t> pos_out;
    for (int k = 1; k <= d; ++k) {
        const auto& lower = faces_[static_cast<std::size_t>(k - 1)];
        const auto& upper = faces_[static_cast<std::size_t>(k)];
        const auto& lo_split = splits[static_cast<std::size_t>(k - 1)];
        const auto& up_split = splits[static_cast<std::size_t>(k)];

        pos_in.assign(lower.size(), -1);
        for (std::size_t i = 0; i < lo_split.inside.size(); ++i)
            pos_in[static_cast<std::size_t>(lo_split.inside[i])] = static_cast<std::int64_t>(i);
        pos_out.assign(lower.size(), -1);
        for (std::size_t i = 0; i < lo_split.outside.size(); ++i)
            pos_out[static_cast<std::size_t>(lo_split.outside[i])] = static_cast<std::int64_t>(i);

        gf2::Echelon ey(lo_split.inside.size());
        rowbuf.assign((lo_split.inside.size() + 63) / 64, 0);
        for (std::int64_t ci : up_split.inside) {
            std::fill(rowbuf.begin(), rowbuf.end(), 0);
            const Face& f = upper[static_cast<std::size_t>(ci)];
            for (Label v : f) {
                auto g = static_cast<std::size_t>(face_index(lower, f.without(v)));
                auto r = static_cast<std::uint64_t>(pos_in[g]); // faces of Y are closed downward
                rowbuf[r / 64] |= 1ULL << (r % 64);
            }
            ey.add_row(rowbuf);
        }
        rank_y[static_cast<std::size_t>(k)] = ey.rank();

        gf2::Echelon eo(lo_split.outside.size());
        rowbuf.assign((lo_split.outside.size() + 63) / 64, 0);
        for (const Face& f : upper) {
            std::fill(rowbuf.begin(), rowbuf.end(), 0);
            bool any = false;
            for (Label v : f) {
                auto g = static_cast<std::size_t>(face_index(lower, f.without(v)));
                if (pos_out[g] >= 0) {
                    auto r = static_cast<std::uint64_t>(pos_out[g]);
                    rowbuf[r / 64] |= 1ULL << (r % 64);
                    any = true;
                }
            }
            if (any) eo.add_row(rowbuf);
        }
        rank_out[static_cast<std::size_t>(k)] = eo.rank();
    }

    std::vector<InducedMapRank> out;
    for (int j = 0; j <= d; ++j) {
        InducedMapRank m;
        m.degree = j;
        const auto fy = static_cast<std::int64_t>(splits[static_cast<std::size_t>(j)].inside.size());
        const auto ry = static_cast<std::int64_t>(rank_y[static_cast<std::size_t>(j)]);
        const auto ry1 = static_cast<std::int64_t>(rank_y[static_cast<std::size_t>(j + 1)]);
        m.betti_y = fy - ry - ry1;
        const auto rx1 = static_cast<std::int64_t>(boundary_rank(j + 1));
        const auto ro1 = static_cast<std::int64_t>(rank_out[static_cast<std::size_t>(j + 1)]);
        const std::int64_t z_cap_b = rx1 - ro1; // dim(Z_j(Y) ∩ B_j(X))
        m.map_rank = m.betti_y - (z_cap_b - ry1);
        out.push_back(m);
    }
    return out;
}

Skeleton2 skeleton2(const Complex& X) {
    Skeleton2 out;
    out.f0 = static_cast<std::int64_t>(X.vertex_count());
    std::set<Face> edges, triangles;
    for (const Face& f : X.facets()) {
        const auto& v = f.labels();
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                edges.insert(Face::from_sorted({v[i], v[j]}));
                for (std::size_t k = j + 1; k < v.size(); ++k)
                    triangles.insert(Face::from_sorted({v[i], v[j], v[k]}));
            }
    }
    std::vector<Face> edge_list(edges.begin(), edges.end());
    out.f1 = static_cast<std::int64_t>(edge_list.size());
    out.f2 = static_cast<std::int64_t>(triangles.size());

    const auto& verts = X.vertices();
    auto vid = [&](Label v) {
        return static_cast<std::uint64_t>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<std::uint64_t> rowbuf((verts.size() + 63) / 64, 0);
    gf2::Echelon e1(verts.size());
    for (const Face& e : edge_list) {
        std::fill(rowbuf.begin(), rowbuf.end(), 0);
        for (Label v : e) {
            auto r = vid(v);
            rowbuf[r / 64] |= 1ULL << (r % 64);
        }
        e1.add_row(rowbuf);
    }
    out.rank1 = static_cast<std::int64_t>(e1.rank());

    gf2::Echelon e2(edge_list.size());
    rowbuf.assign((edge_list.size() + 63) / 64, 0);
    for (const Face& t : triangles) {
        std::fill(rowbuf.begin(), rowbuf.end(), 0);
        for (Label v : t) {
            auto r = static_cast<std::uint64_t>(face_index(edge_list, t.without(v)));
            rowbuf[r / 64] |= 1ULL << (r % 64);
        }
        e2.add_row(rowbuf);
    }
    out.rank2 = static_cast<std::int64_t>(e2.rank());
    out.betti1 = out.f1 - out.rank1 - out.rank2;
    return out;
}

Certificate tightness_spotcheck(const Complex& X, int samples, std::uint64_t seed) {
    if (!complex_connected(X)) throw NotConnected();
    const auto n = static_cast<std::uint64_t>(X.vertex_count());
    if (n < 4) throw Error("spotcheck needs at least 4 vertices");

    ChainContext ctx(X);
    SplitMix64 rng(seed);

    Certificate cert;
    cert.subject = "tightness_spotcheck";
    cert.parameters = {{"samples", samples}, {"seed", seed}, {"f0", n}};

    int failures = 0;
    nlohmann::json first_failure;
    std::vector<Label> pool(X.vertices());
    for (int s = 0; s < samples; ++s) {
        // Subset size uniform in {3, ..., f0-1}, then a uniform subset.
        const auto size = 3 + rng.below(n - 3);
        std::vector<Label> w(pool);
        for (std::uint64_t i = 0; i < size; ++i) {
            auto j = i + rng.below(static_cast<std::uint64_t>(w.size()) - i);
            std::swap(w[i], w[j]);
        }
        w.resize(size);
        std::sort(w.begin(), w.end());

        for (const auto& m : ctx.induced_map_ranks(w)) {
            if (!m.injective()) {
                ++failures;
                if (first_failure.is_null()) {
                    first_failure = {{"subset", w},
                                     {"degree", m.degree},
                                     {"betti_y", m.betti_y},
                                     {"map_rank", m.map_rank},
                                     {"sample_index", s}};
                }
                break;
            }
        }
    }

    CheckResult r;
    r.name = "injectivity";
    r.verdict = failures == 0 ? Verdict::Pass : Verdict::Fail;
    r.detail = std::to_string(samples - failures) + "/" + std::to_string(samples) +
               " sampled subsets inject";
    r.witness = {{"samples", samples}, {"failures", failures}};
    if (!first_failure.is_null()) r.witness["first_failure"] = first_failure;
    cert.add(std::move(r));
    return cert;
}

} // namespace walkup
