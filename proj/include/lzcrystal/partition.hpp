#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lzcrystal/util.hpp"

namespace lzc {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    Int size() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }
    bool empty() const { return parts_.empty(); }

    /// k-th part, 1-based; zero beyond the length.
    int part(int k) const {
        if (k < 1) throw std::out_of_range("Partition::part: 1-based index");
        return k <= length() ? parts_[static_cast<std::size_t>(k - 1)] : 0;
    }

    /// Transposed (conjugate) diagram.
    Partition conjugate() const {
        if (parts_.empty()) return Partition{};
        std::vector<int> t(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
        return Partition(std::move(t));
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) os << ',';
            os << parts_[k];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<int> parts_;
};

/// Graded-lexicographic order: first by |rho|, then by the parts vector.
inline bool graded_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
}

/// All partitions of `total` with at most `max_len` parts.
inline std::vector<Partition> partitions_of(int total, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap, int slots) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (slots == 0) return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p, slots - 1);
            cur.pop_back();
        }
    };
    if (total >= 0) rec(rec, total, total, max_len);
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

/// All partitions with |rho| <= max_size and length <= max_len, graded-lex.
inline std::vector<Partition> partitions_up_to(int max_size, int max_len) {
    std::vector<Partition> out;
    for (int s = 0; s <= max_size; ++s) {
        auto block = partitions_of(s, max_len);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

/// n-tuple of partitions (one component per nonzero node color).
class PartitionTuple {
public:
    PartitionTuple() = default;
    explicit PartitionTuple(std::vector<Partition> components) : components_(std::move(components)) {}
    static PartitionTuple empty(int colors) { return PartitionTuple(std::vector<Partition>(static_cast<std::size_t>(colors))); }

    int colors() const { return static_cast<int>(components_.size()); }
    /// Component for color i, 1-based.
    const Partition& component(int i) const {
        if (i < 1 || i > colors()) throw std::out_of_range("PartitionTuple::component");
        return components_[static_cast<std::size_t>(i - 1)];
    }
    const std::vector<Partition>& components() const { return components_; }
    Int total_size() const {
        Int acc = 0;
        for (const auto& p : components_) acc += p.size();
        return acc;
    }

    bool operator==(const PartitionTuple&) const = default;
    auto operator<=>(const PartitionTuple&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t k = 0; k < components_.size(); ++k) {
            if (k) os << ',';
            os << components_[k].str();
        }
        os << ']';
        return os.str();
    }

private:
    std::vector<Partition> components_;
};

/// Graded-lexicographic order on tuples: total size first, then
/// componentwise graded-lex.
inline bool graded_less(const PartitionTuple& a, const PartitionTuple& b) {
    if (a.total_size() != b.total_size()) return a.total_size() < b.total_size();
    for (int i = 1; i <= std::min(a.colors(), b.colors()); ++i) {
        if (a.component(i) != b.component(i)) return graded_less(a.component(i), b.component(i));
    }
    return a.colors() < b.colors();
}

inline bool within_caps(const PartitionTuple& t, const std::vector<int>& caps) {
    if (t.colors() != static_cast<int>(caps.size()))
        throw std::invalid_argument("within_caps: color count mismatch");
    for (int i = 1; i <= t.colors(); ++i)
        if (t.component(i).length() > caps[static_cast<std::size_t>(i - 1)]) return false;
    return true;
}

/// All tuples with l(rho^(i)) <= caps[i-1] and total size <= max_size,
/// in graded-lexicographic order.  A zero cap forces the empty partition
/// in that slot.
inline std::vector<PartitionTuple> admissible_tuples(const std::vector<int>& caps, int max_size) {
    const int n = static_cast<int>(caps.size());
    std::vector<std::vector<Partition>> per_color;
    per_color.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) per_color.push_back(partitions_up_to(max_size, caps[static_cast<std::size_t>(i)]));

    std::vector<PartitionTuple> out;
    std::vector<Partition> cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int color, Int used) -> void {
        if (color == n) {
            out.emplace_back(cur);
            return;
        }
        for (const auto& p : per_color[static_cast<std::size_t>(color)]) {
            if (used + p.size() > max_size) continue;
            cur[static_cast<std::size_t>(color)] = p;
            self(self, color + 1, used + p.size());
        }
        cur[static_cast<std::size_t>(color)] = Partition{};
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const PartitionTuple& a, const PartitionTuple& b) {
        if (a.total_size() != b.total_size()) return a.total_size() < b.total_size();
        for (int i = 1; i <= a.colors(); ++i)
            if (a.component(i) != b.component(i)) return graded_less(a.component(i), b.component(i));
        return false;
    });
    return out;
}

/// All tuples with total size <= max_size, lengths unrestricted.
inline std::vector<PartitionTuple> all_tuples(int colors, int max_size) {
    return admissible_tuples(std::vector<int>(static_cast<std::size_t>(colors), max_size), max_size);
}

}  // namespace lzc
