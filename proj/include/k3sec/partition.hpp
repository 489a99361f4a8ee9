#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace k3sec {

// Weakly decreasing sequence of non-negative integers indexing a Schubert
// class. Trailing zeros are kept as given but are semantically irrelevant:
// (3,1), (3,1,0) and (3,1,0,0) compare equal. The weight (sum of parts) is
// the codimension of the class the partition indexes.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Part at index i, with implicit zeros beyond the stored length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::size_t size() const { return parts_.size(); }
    std::size_t num_nonzero() const;
    long weight() const;

    // Young-diagram containment: mu[i] <= this[i] for all i.
    bool contains(const Partition& mu) const;

    // Copy with exactly len parts; stored nonzero parts beyond len are an error.
    Partition padded(std::size_t len) const;

    // Comma-separated parts, zeros kept: "4,0".
    std::string to_string() const;

    bool operator==(const Partition& rhs) const;
    // Lexicographic with implicit trailing zeros, consistent with operator==.
    std::strong_ordering operator<=>(const Partition& rhs) const;

private:
    std::vector<int> parts_;
};

}  // namespace k3sec
