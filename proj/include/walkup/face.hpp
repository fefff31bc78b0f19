#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace walkup {

using Label = int;

// A face of an abstract simplicial complex: a strictly increasing sequence
// of non-negative vertex labels. dim() = size() - 1; the empty face has
// dimension -1 and is never stored in a complex.
class Face {
  public:
    Face() = default;

    // Canonicalizes: sorts and removes duplicate labels.
    explicit Face(std::vector<Label> labels) : v_(std::move(labels)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }

    Face(std::initializer_list<Label> labels)
        : Face(std::vector<Label>(labels)) {}

    const std::vector<Label>& labels() const { return v_; }
    std::size_t size() const { return v_.size(); }
    int dim() const { return static_cast<int>(v_.size()) - 1; }
    bool empty() const { return v_.empty(); }
    Label operator[](std::size_t i) const { return v_[i]; }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(Label x) const {
        return std::binary_search(v_.begin(), v_.end(), x);
    }

    bool subset_of(const Face& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    bool disjoint_from(const Face& other) const {
        auto a = v_.begin();
        auto b = other.v_.begin();
        while (a != v_.end() && b != other.v_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return false;
        }
        return true;
    }

    std::size_t intersection_size(const Face& other) const {
        std::size_t count = 0;
        auto a = v_.begin();
        auto b = other.v_.begin();
        while (a != v_.end() && b != other.v_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else { ++count; ++a; ++b; }
        }
        return count;
    }

    Face intersect(const Face& other) const {
        std::vector<Label> out;
        std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                              std::back_inserter(out));
        return Face::from_sorted(std::move(out));
    }

    Face unite(const Face& other) const {
        std::vector<Label> out;
        std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                       std::back_inserter(out));
        return Face::from_sorted(std::move(out));
    }

    Face minus(const Face& other) const {
        std::vector<Label> out;
        std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                            std::back_inserter(out));
        return Face::from_sorted(std::move(out));
    }

    Face without(Label x) const {
        std::vector<Label> out;
        out.reserve(v_.size());
        for (Label y : v_)
            if (y != x) out.push_back(y);
        return Face::from_sorted(std::move(out));
    }

    // Position of x in the sorted label sequence, or -1.
    int index_of(Label x) const {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) return -1;
        return static_cast<int>(it - v_.begin());
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(v_[i]);
        }
        return s + "}";
    }

    // Skips canonicalization; caller guarantees strictly increasing input.
    static Face from_sorted(std::vector<Label> labels) {
        Face f;
        f.v_ = std::move(labels);
        return f;
    }

    friend bool operator==(const Face& a, const Face& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Face& a, const Face& b) { return a.v_ <=> b.v_; }

  private:
    std::vector<Label> v_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (Label x : f.labels()) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace walkup
