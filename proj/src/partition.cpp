#include "pieri/partition.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace pieri {

namespace {

void trim_trailing_zeros(std::vector<int>& parts) {
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
}

// Interleaving form of the horizontal-strip condition:
// outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
bool horizontal_by_interleave(const Partition& inner, const Partition& outer) {
    int rows = outer.length();
    for (int r = 0; r < rows; ++r) {
        if (outer.part(r) < inner.part(r))
            return false;
        if (inner.part(r) < outer.part(r + 1))
            return false;
    }
    return inner.length() <= outer.length();
}

// Definitional check: a vertical strip adds at most one box to each row.
bool vertical_by_row_count(const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner))
        return false;
    for (int r = 0; r < outer.length(); ++r)
        if (outer.part(r) - inner.part(r) > 1)
            return false;
    return true;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition is not weakly decreasing");
    }
    trim_trailing_zeros(parts_);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition entry '" + token + "'");
        }
        if (pos != token.size())
            throw std::invalid_argument("malformed partition entry '" + token + "'");
        parts.push_back(value);
    }
    if (parts.empty() && !text.empty())
        throw std::invalid_argument("malformed partition '" + text + "'");
    return Partition(std::move(parts));
}

long long Partition::size() const {
    long long total = 0;
    for (int p : parts_)
        total += p;
    return total;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length())
        return false;
    for (int r = 0; r < inner.length(); ++r)
        if (inner.part(r) > part(r))
            return false;
    return true;
}

std::string Partition::str(int pad_to) const {
    int rows = std::max<int>(length(), pad_to);
    if (rows == 0)
        return "0";
    std::string out;
    for (int r = 0; r < rows; ++r) {
        if (r)
            out += ',';
        out += std::to_string(part(r));
    }
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(p.part(0), 0);
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p.part(r); ++c)
            ++cols[c];
    return Partition(std::move(cols));
}

bool is_strip(StripKind kind, const Partition& inner, const Partition& outer) {
    if (!outer.contains(inner))
        return false;
    bool result;
    if (kind == StripKind::Vertical)
        result = vertical_by_row_count(inner, outer);
    else
        result = horizontal_by_interleave(inner, outer);
    // The interleaving form and the box-count form must agree; a horizontal
    // strip is exactly a vertical strip of the conjugates.
    assert(result == (kind == StripKind::Vertical
                          ? horizontal_by_interleave(conjugate(inner), conjugate(outer))
                          : vertical_by_row_count(conjugate(inner), conjugate(outer))));
    return result;
}

namespace {

// Row-by-row enumeration; each row gains 0 or 1 boxes.
void vertical_above_rec(const Partition& base, int max_len, int row, int remaining,
                        std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining > max_len - row)
        return; // not enough rows left
    if (row == max_len) {
        if (remaining == 0)
            out.push_back(Partition(current));
        return;
    }
    for (int add = 0; add <= 1; ++add) {
        if (add > remaining)
            break;
        int value = base.part(row) + add;
        if (row > 0 && value > current[row - 1])
            continue;
        current.push_back(value);
        vertical_above_rec(base, max_len, row + 1, remaining - add, current, out);
        current.pop_back();
    }
}

// Each row loses 0 or 1 boxes.
void vertical_below_rec(const Partition& base, int row, int remaining,
                        std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining > base.length() - row)
        return;
    if (row == base.length()) {
        if (remaining == 0)
            out.push_back(Partition(current));
        return;
    }
    for (int remove = 0; remove <= 1; ++remove) {
        if (remove > remaining)
            break;
        int value = base.part(row) - remove;
        if (value < 0)
            break;
        if (value < base.part(row + 1) - 1)
            continue; // next row cannot come back under this one
        if (row > 0 && value > current[row - 1])
            continue;
        current.push_back(value);
        vertical_below_rec(base, row + 1, remaining - remove, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> strips_above(StripKind kind, const Partition& inner, int k, int max_len) {
    if (k < 0)
        throw std::invalid_argument("strip size must be nonnegative");
    if (max_len < 0 || inner.length() > max_len)
        throw std::invalid_argument("partition does not fit in the requested length");
    std::vector<Partition> out;
    if (kind == StripKind::Vertical) {
        std::vector<int> current;
        vertical_above_rec(inner, max_len, 0, k, current, out);
    } else {
        // A horizontal strip is a vertical strip of the conjugates. New
        // columns can appear up to inner_1 + k, so enumerate there and
        // filter the row bound after conjugating back.
        Partition cin = conjugate(inner);
        for (const Partition& c : strips_above(StripKind::Vertical, cin, k, inner.part(0) + k)) {
            Partition mu = conjugate(c);
            if (mu.length() <= max_len)
                out.push_back(std::move(mu));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> strips_below(StripKind kind, const Partition& outer, int k) {
    if (k < 0)
        throw std::invalid_argument("strip size must be nonnegative");
    std::vector<Partition> out;
    if (kind == StripKind::Vertical) {
        std::vector<int> current;
        vertical_below_rec(outer, 0, k, current, out);
    } else {
        for (const Partition& c : strips_below(StripKind::Vertical, conjugate(outer), k))
            out.push_back(conjugate(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void partitions_rec(int budget, int max_len, int cap, std::vector<int>& current,
                    std::vector<Partition>& out) {
    out.push_back(Partition(current));
    if (max_len == 0)
        return;
    for (int first = std::min(budget, cap); first >= 1; --first) {
        current.push_back(first);
        partitions_rec(budget - first, max_len - 1, first, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions(int max_size, int max_len) {
    if (max_size < 0 || max_len < 0)
        throw std::invalid_argument("partition bounds must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    partitions_rec(max_size, max_len, max_size, current, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace pieri
