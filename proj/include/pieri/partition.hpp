#pragma once

#include <string>
#include <vector>

namespace pieri {

// Weakly decreasing sequence of nonnegative integers (row lengths of a
// Young diagram). Stored with trailing zeros trimmed; equality, ordering
// and hashing all see the trimmed form. Display may pad back to a rank.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Parses "3,2,1". Throws std::invalid_argument on malformed input,
    // negative parts, or a sequence that is not weakly decreasing.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    // Row r (0-based); rows past the length are 0.
    int part(std::size_t r) const { return r < parts_.size() ? parts_[r] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const;

    bool contains(const Partition& inner) const;

    std::string str(int pad_to = 0) const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

enum class StripKind { Horizontal, Vertical };

Partition conjugate(const Partition& p);

// outer/inner is a strip of the given kind: horizontal = at most one box
// per column, vertical = at most one box per row. False when inner is not
// contained in outer.
bool is_strip(StripKind kind, const Partition& inner, const Partition& outer);

// All mu containing inner with length(mu) <= max_len and mu/inner a k-box
// strip of the given kind. Sorted, duplicate-free.
std::vector<Partition> strips_above(StripKind kind, const Partition& inner, int k, int max_len);

// All mu contained in outer with outer/mu a k-box strip of the given kind.
std::vector<Partition> strips_below(StripKind kind, const Partition& outer, int k);

// Every partition with size <= max_size and at most max_len rows. Sorted.
std::vector<Partition> all_partitions(int max_size, int max_len);

} // namespace pieri
