#include "pieri/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace pieri {

namespace {

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long long>(a[i]) * b[i];
    return s;
}

// Insertion sort, descending; returns the parity of the permutation used.
// Entries must be pairwise distinct.
int desc_sort_parity(std::vector<int>& values) {
    int swaps = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && values[j] > values[j - 1]) {
            std::swap(values[j], values[j - 1]);
            ++swaps;
            --j;
        }
    }
    return swaps & 1;
}

bool has_duplicate(const std::vector<int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j])
                return true;
    return false;
}

bool weakly_decreasing(const std::vector<int>& v, std::size_t upto) {
    for (std::size_t i = 1; i < upto; ++i)
        if (v[i] > v[i - 1])
            return false;
    return true;
}

} // namespace

GroupType::GroupType(Family f, int r) : family(f), rank(r) {
    if (rank < 1)
        throw std::invalid_argument("rank must be positive");
    if (family == Family::D && rank < 2)
        throw std::invalid_argument("family D needs rank >= 2");
}

GroupType GroupType::parse(const std::string& text) {
    std::string body;
    Family fam;
    if (text.size() >= 3 && text[0] == 'G' && text[1] == 'L') {
        fam = Family::A;
        body = text.substr(2);
    } else if (!text.empty() && (text[0] == 'A' || text[0] == 'B' || text[0] == 'C' || text[0] == 'D')) {
        fam = static_cast<Family>(text[0]);
        body = text.substr(1);
    } else {
        throw std::invalid_argument("unknown group '" + text + "'");
    }
    std::size_t pos = 0;
    int r = 0;
    try {
        r = std::stoi(body, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("unknown group '" + text + "'");
    }
    if (pos != body.size() || r < 1)
        throw std::invalid_argument("unknown group '" + text + "'");
    return GroupType(fam, r);
}

std::string GroupType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int GroupType::dim_defining() const {
    switch (family) {
    case Family::A: return rank;
    case Family::B: return 2 * rank + 1;
    case Family::C:
    case Family::D: return 2 * rank;
    }
    return 0;
}

Weight::Weight(std::vector<int> doubled) : c2_(std::move(doubled)) {
    for (int x : c2_)
        if ((x & 1) != (c2_[0] & 1))
            throw std::invalid_argument("mixed parity in weight coordinates");
}

Weight Weight::from_true(const std::vector<int>& coords) {
    std::vector<int> d(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        d[i] = 2 * coords[i];
    return Weight(std::move(d));
}

Weight Weight::from_partition(const Partition& p, int rank) {
    if (p.length() > rank)
        throw std::invalid_argument("rank mismatch: partition has more rows than the rank");
    std::vector<int> d(rank, 0);
    for (int r = 0; r < p.length(); ++r)
        d[r] = 2 * p.part(r);
    return Weight(std::move(d));
}

bool Weight::integral() const {
    return c2_.empty() || (c2_[0] & 1) == 0;
}

Partition Weight::to_partition() const {
    if (!integral())
        throw std::invalid_argument("weight is not integral");
    std::vector<int> parts(c2_.size());
    for (std::size_t i = 0; i < c2_.size(); ++i) {
        if (c2_[i] < 0)
            throw std::invalid_argument("weight has a negative coordinate");
        parts[i] = c2_[i] / 2;
    }
    return Partition(std::move(parts));
}

std::string Weight::str() const {
    std::string out;
    for (std::size_t i = 0; i < c2_.size(); ++i) {
        if (i)
            out += ',';
        if (c2_[i] & 1)
            out += std::to_string(c2_[i]) + "/2";
        else
            out += std::to_string(c2_[i] / 2);
    }
    return out;
}

Weight Weight::operator+(const Weight& other) const {
    if (c2_.size() != other.c2_.size())
        throw std::invalid_argument("weight rank mismatch");
    std::vector<int> d(c2_.size());
    for (std::size_t i = 0; i < c2_.size(); ++i)
        d[i] = c2_[i] + other.c2_[i];
    return Weight(std::move(d));
}

Weight Weight::operator-(const Weight& other) const {
    if (c2_.size() != other.c2_.size())
        throw std::invalid_argument("weight rank mismatch");
    std::vector<int> d(c2_.size());
    for (std::size_t i = 0; i < c2_.size(); ++i)
        d[i] = c2_[i] - other.c2_[i];
    return Weight(std::move(d));
}

Weight rho(GroupType g) {
    int n = g.rank;
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) {
        switch (g.family) {
        case Family::A:
        case Family::D: d[i] = 2 * (n - 1 - i); break;
        case Family::C: d[i] = 2 * (n - i); break;
        case Family::B: d[i] = 2 * (n - i) - 1; break;
        }
    }
    return Weight(std::move(d));
}

bool is_dominant(GroupType g, const Weight& w) {
    const auto& v = w.doubled();
    if (static_cast<int>(v.size()) != g.rank)
        throw std::invalid_argument("rank mismatch");
    switch (g.family) {
    case Family::A:
        return weakly_decreasing(v, v.size());
    case Family::B:
    case Family::C:
        return weakly_decreasing(v, v.size()) && v.back() >= 0;
    case Family::D:
        return weakly_decreasing(v, v.size() - 1) && v[v.size() - 2] >= std::abs(v.back());
    }
    return false;
}

bool is_regular_dominant(GroupType g, const Weight& w) {
    if (!is_dominant(g, w))
        return false;
    const auto& v = w.doubled();
    switch (g.family) {
    case Family::A:
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] == v[i - 1])
                return false;
        return true;
    case Family::B:
    case Family::C:
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] == v[i - 1])
                return false;
        return v.back() > 0;
    case Family::D: {
        std::vector<int> a(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            a[i] = std::abs(v[i]);
        return !has_duplicate(a);
    }
    }
    return false;
}

Straightened straighten(GroupType g, const Weight& w) {
    std::vector<int> v = w.doubled();
    if (static_cast<int>(v.size()) != g.rank)
        throw std::invalid_argument("rank mismatch");
    switch (g.family) {
    case Family::A: {
        if (has_duplicate(v))
            return {};
        int par = desc_sort_parity(v);
        return {par ? -1 : +1, Weight(std::move(v))};
    }
    case Family::B:
    case Family::C: {
        int negs = 0;
        for (int& x : v) {
            if (x == 0)
                return {};
            if (x < 0) {
                x = -x;
                ++negs;
            }
        }
        if (has_duplicate(v))
            return {};
        int par = desc_sort_parity(v);
        return {((par + negs) & 1) ? -1 : +1, Weight(std::move(v))};
    }
    case Family::D: {
        int negs = 0;
        for (int& x : v) {
            if (x < 0) {
                x = -x;
                ++negs;
            }
        }
        if (has_duplicate(v))
            return {};
        int par = desc_sort_parity(v);
        // Only even sign-change counts exist in W(D); an odd count is
        // absorbed by flipping the smallest entry (free when it is zero).
        if (negs & 1)
            v.back() = -v.back();
        return {par ? -1 : +1, Weight(std::move(v))};
    }
    }
    return {};
}

Weight dominant_rep(GroupType g, const Weight& w) {
    std::vector<int> v = w.doubled();
    if (static_cast<int>(v.size()) != g.rank)
        throw std::invalid_argument("rank mismatch");
    switch (g.family) {
    case Family::A:
        std::sort(v.begin(), v.end(), std::greater<int>());
        break;
    case Family::B:
    case Family::C:
        for (int& x : v)
            x = std::abs(x);
        std::sort(v.begin(), v.end(), std::greater<int>());
        break;
    case Family::D: {
        int negs = 0;
        for (int& x : v) {
            if (x < 0)
                ++negs;
            x = std::abs(x);
        }
        std::sort(v.begin(), v.end(), std::greater<int>());
        if (negs & 1)
            v.back() = -v.back();
        break;
    }
    }
    return Weight(std::move(v));
}

namespace {

std::vector<std::vector<int>> make_positive_roots(GroupType g) {
    int n = g.rank;
    std::vector<std::vector<int>> roots;
    auto unit = [n](int i, int c) {
        std::vector<int> v(n, 0);
        v[i] = c;
        return v;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> d = unit(i, 1);
            d[j] = -1;
            roots.push_back(d);
            if (g.family != Family::A) {
                std::vector<int> s = unit(i, 1);
                s[j] = 1;
                roots.push_back(s);
            }
        }
        if (g.family == Family::B)
            roots.push_back(unit(i, 1));
        if (g.family == Family::C)
            roots.push_back(unit(i, 2));
    }
    return roots;
}

std::vector<std::vector<int>> make_simple_roots(GroupType g) {
    int n = g.rank;
    std::vector<std::vector<int>> roots;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        v[i + 1] = -1;
        roots.push_back(v);
    }
    std::vector<int> last(n, 0);
    switch (g.family) {
    case Family::A: break;
    case Family::B:
        last[n - 1] = 1;
        roots.push_back(last);
        break;
    case Family::C:
        last[n - 1] = 2;
        roots.push_back(last);
        break;
    case Family::D:
        last[n - 2] = 1;
        last[n - 1] = 1;
        roots.push_back(last);
        break;
    }
    return roots;
}

using RootCache = std::map<std::pair<char, int>, std::vector<std::vector<int>>>;

const std::vector<std::vector<int>>& cached(RootCache& cache, std::mutex& m, GroupType g,
                                            std::vector<std::vector<int>> (*make)(GroupType)) {
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(static_cast<char>(g.family), g.rank);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, make(g)).first;
    return it->second;
}

} // namespace

const std::vector<std::vector<int>>& positive_roots(GroupType g) {
    static RootCache cache;
    static std::mutex m;
    return cached(cache, m, g, &make_positive_roots);
}

const std::vector<std::vector<int>>& simple_roots(GroupType g) {
    static RootCache cache;
    static std::mutex m;
    return cached(cache, m, g, &make_simple_roots);
}

std::optional<std::vector<long long>> simple_root_coords(GroupType g, const std::vector<int>& v) {
    int n = g.rank;
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("rank mismatch");
    std::vector<long long> partial(n);
    long long s = 0;
    for (int i = 0; i < n; ++i) {
        s += v[i];
        partial[i] = s;
    }
    std::vector<long long> c;
    switch (g.family) {
    case Family::A:
        if (n >= 1 && partial[n - 1] != 0)
            return std::nullopt;
        c.assign(partial.begin(), partial.end() - 1);
        return c;
    case Family::B:
        c.assign(partial.begin(), partial.end());
        return c;
    case Family::C:
        if (partial[n - 1] % 2 != 0)
            return std::nullopt;
        c.assign(partial.begin(), partial.end());
        c[n - 1] /= 2;
        return c;
    case Family::D: {
        long long head = partial[n - 1] - v[n - 1]; // sum of first n-1 entries
        if ((head - v[n - 1]) % 2 != 0 || (head + v[n - 1]) % 2 != 0)
            return std::nullopt;
        c.assign(partial.begin(), partial.end());
        c[n - 2] = (head - v[n - 1]) / 2;
        c[n - 1] = (head + v[n - 1]) / 2;
        return c;
    }
    }
    return std::nullopt;
}

Int weyl_dim(GroupType g, const Weight& highest) {
    if (!is_dominant(g, highest))
        throw std::invalid_argument("weyl_dim needs a dominant weight");
    std::vector<int> x = (highest + rho(g)).doubled();
    const std::vector<int>& r = rho(g).doubled();
    Int num = 1, den = 1;
    for (const auto& alpha : positive_roots(g)) {
        num *= dot(x, alpha);
        den *= dot(r, alpha);
    }
    assert(num % den == 0);
    return num / den;
}

std::vector<std::vector<int>> weyl_orbit(GroupType g, const std::vector<int>& doubled) {
    int n = g.rank;
    if (static_cast<int>(doubled.size()) != n)
        throw std::invalid_argument("rank mismatch");
    std::set<std::vector<int>> seen{doubled};
    std::vector<std::vector<int>> frontier{doubled};
    auto push = [&](std::vector<int> v, std::vector<std::vector<int>>& next) {
        if (seen.insert(v).second)
            next.push_back(std::move(v));
    };
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& v : frontier) {
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<int> u = v;
                std::swap(u[i], u[i + 1]);
                push(std::move(u), next);
            }
            std::vector<int> u = v;
            switch (g.family) {
            case Family::A:
                continue;
            case Family::B:
            case Family::C:
                u[n - 1] = -u[n - 1];
                break;
            case Family::D:
                std::swap(u[n - 2], u[n - 1]);
                u[n - 2] = -u[n - 2];
                u[n - 1] = -u[n - 1];
                break;
            }
            push(std::move(u), next);
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace pieri
