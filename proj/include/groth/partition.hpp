#pragma once

#include <compare>
#include <vector>

namespace groth {

// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const;  // 1-based, 0 beyond the stored parts
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int size() const;  // |lambda|
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& inner) const;  // componentwise

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Canonical order: degree first, then lexicographic on the part vectors.
// Used everywhere expansions are serialized, so output order is stable.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

bool operator<(const Partition& a, const Partition& b);  // PartitionOrder

// Dominance within a fixed degree; partitions of different sizes are incomparable.
bool dominates(const Partition& a, const Partition& b);

}  // namespace groth
