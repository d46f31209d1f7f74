#include "groth/partition.hpp"

#include <numeric>

#include "groth/check.hpp"

namespace groth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) domain_error("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            domain_error("partition parts must be weakly decreasing");
    }
}

int Partition::part(int i) const {
    GROTH_CHECK(i >= 1);
    return i <= num_parts() ? parts_[i - 1] : 0;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.resize(parts_[0], 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++out[c];
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.num_parts() > num_parts()) return false;
    for (int i = 0; i < inner.num_parts(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() < b.parts();
}

bool operator<(const Partition& a, const Partition& b) { return PartitionOrder{}(a, b); }

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int pa = 0, pb = 0;
    int k = std::max(a.num_parts(), b.num_parts());
    for (int i = 1; i <= k; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

}  // namespace groth
