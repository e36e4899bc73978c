#pragma once

#include <cstddef>
#include <cstdlib>

#include "specdiag/errors.hpp"

namespace specdiag {

enum class IndexKind { Integers, Naturals };

// Truncated index set: {-N..N} for Integers (torus), {0..N} for Naturals.
class IndexSet {
public:
    IndexSet(IndexKind kind, int max_degree)
        : kind_(kind), max_degree_(max_degree) {
        if (max_degree < 0)
            throw ConfigError("IndexSet: max_degree must be >= 0");
    }

    IndexKind kind() const noexcept { return kind_; }
    int max_degree() const noexcept { return max_degree_; }

    int min_index() const noexcept {
        return kind_ == IndexKind::Integers ? -max_degree_ : 0;
    }
    int max_index() const noexcept { return max_degree_; }

    std::size_t size() const noexcept {
        return kind_ == IndexKind::Integers
                   ? static_cast<std::size_t>(2 * max_degree_ + 1)
                   : static_cast<std::size_t>(max_degree_ + 1);
    }

    bool contains(int n) const noexcept {
        return n >= min_index() && n <= max_index();
    }

    // Dense storage position of index n.
    std::size_t offset(int n) const {
        if (!contains(n)) throw ConfigError("IndexSet: index out of range");
        return static_cast<std::size_t>(n - min_index());
    }

    int index_at(std::size_t pos) const {
        if (pos >= size()) throw ConfigError("IndexSet: position out of range");
        return min_index() + static_cast<int>(pos);
    }

    // True when |n| lies within `margin` of the truncation degree.
    bool near_edge(int n, int margin = 2) const noexcept {
        return std::abs(n) >= max_degree_ - margin;
    }

    bool operator==(const IndexSet&) const = default;

private:
    IndexKind kind_;
    int max_degree_;
};

}  // namespace specdiag
