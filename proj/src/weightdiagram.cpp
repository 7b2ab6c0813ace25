#include "pieri/weightdiagram.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace pieri {

namespace {

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += static_cast<long long>(a[i]) * b[i];
    return s;
}

long long norm2(const std::vector<int>& a) {
    long long s = 0;
    for (int x : a)
        s += static_cast<long long>(x) * x;
    return s;
}

} // namespace

void WeightDiagram::add(const Weight& w, const Int& mult) {
    if (w.rank() != group_.rank)
        throw std::invalid_argument("weight rank does not match the group");
    if (mult == 0)
        return;
    if (!entries_.empty()) {
        int parity = entries_.begin()->first[0] & 1;
        if ((w.doubled()[0] & 1) != parity)
            throw std::invalid_argument("mixed parity between diagram weights");
    }
    Int& slot = entries_[w.doubled()];
    slot += mult;
    if (slot == 0)
        entries_.erase(w.doubled());
    else if (slot < 0)
        throw std::invalid_argument("negative multiplicity in weight diagram");
}

Int WeightDiagram::multiplicity(const Weight& w) const {
    auto it = entries_.find(w.doubled());
    return it == entries_.end() ? Int(0) : it->second;
}

Int WeightDiagram::mass() const {
    Int total = 0;
    for (const auto& [w, m] : entries_)
        total += m;
    return total;
}

WeightDiagram defining_weights(GroupType g) {
    WeightDiagram d(g);
    int n = g.rank;
    for (int i = 0; i < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = 2;
        d.add(Weight(v), 1);
        if (g.family != Family::A) {
            v[i] = -2;
            d.add(Weight(v), 1);
        }
    }
    if (g.family == Family::B)
        d.add(Weight(std::vector<int>(n, 0)), 1);
    return d;
}

namespace {

// Basis weight vectors of the defining representation, doubled.
std::vector<std::vector<int>> defining_basis(GroupType g) {
    std::vector<std::vector<int>> basis;
    int n = g.rank;
    for (int i = 0; i < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = 2;
        basis.push_back(v);
        if (g.family != Family::A) {
            v[i] = -2;
            basis.push_back(v);
        }
    }
    if (g.family == Family::B)
        basis.push_back(std::vector<int>(n, 0));
    return basis;
}

void sums_of_basis(const std::vector<std::vector<int>>& basis, int i, bool distinct,
                   std::size_t from, std::vector<int>& acc, WeightDiagram& out) {
    if (i == 0) {
        out.add(Weight(acc), 1);
        return;
    }
    for (std::size_t b = from; b < basis.size(); ++b) {
        for (std::size_t k = 0; k < acc.size(); ++k)
            acc[k] += basis[b][k];
        sums_of_basis(basis, i - 1, distinct, distinct ? b + 1 : b, acc, out);
        for (std::size_t k = 0; k < acc.size(); ++k)
            acc[k] -= basis[b][k];
    }
}

} // namespace

WeightDiagram exterior_power(GroupType g, int i) {
    int dim = g.dim_defining();
    if (i < 0 || i > dim)
        throw std::invalid_argument("exterior power degree out of range");
    WeightDiagram d(g);
    auto basis = defining_basis(g);
    std::vector<int> acc(g.rank, 0);
    sums_of_basis(basis, i, /*distinct=*/true, 0, acc, d);
    return d;
}

WeightDiagram symmetric_power(GroupType g, int i) {
    if (i < 0)
        throw std::invalid_argument("symmetric power degree out of range");
    WeightDiagram d(g);
    auto basis = defining_basis(g);
    std::vector<int> acc(g.rank, 0);
    sums_of_basis(basis, i, /*distinct=*/false, 0, acc, d);
    return d;
}

WeightDiagram freudenthal(GroupType g, const Weight& highest) {
    if (!is_dominant(g, highest))
        throw std::invalid_argument("freudenthal needs a dominant weight");
    bool odd = !highest.integral();
    if (odd && g.family != Family::B)
        throw std::invalid_argument("half-integral highest weight outside family B");

    const std::vector<int>& lam = highest.doubled();
    const std::vector<int> rho2 = rho(g).doubled();
    int n = g.rank;

    // All weights live between the lowest weight w0(lambda) and lambda in
    // the root order, so the simple-root coefficients of lambda - mu range
    // over a finite box.
    std::vector<int> lowest = [&] {
        std::vector<int> neg(lam);
        for (int& x : neg)
            x = -x;
        return dominant_rep(g, Weight(neg)).doubled();
    }();
    for (int& x : lowest)
        x = -x;

    std::vector<int> span_true(n);
    for (int k = 0; k < n; ++k)
        span_true[k] = (lam[k] - lowest[k]) / 2;
    auto box = simple_root_coords(g, span_true);
    if (!box)
        throw std::logic_error("highest weight span is not in the root lattice");
    for (long long c : *box)
        assert(c >= 0);

    const auto& simples = simple_roots(g);
    const auto& positives = positive_roots(g);
    std::vector<std::vector<long long>> pos_coords;
    for (const auto& alpha : positives) {
        auto c = simple_root_coords(g, alpha);
        assert(c);
        pos_coords.push_back(*c);
    }

    // Enumerate the box of candidates lambda - sum c_s * alpha_s, keep the
    // dominant ones, and order them by increasing height of lambda - mu so
    // the recursion only ever looks upward at already-known values.
    struct Candidate {
        long long height;
        std::vector<int> mu;              // doubled
        std::vector<long long> coords;    // simple-root coefficients of lambda - mu
    };
    std::vector<Candidate> candidates;
    std::vector<long long> c(box->size(), 0);
    while (true) {
        std::vector<int> mu = lam;
        long long height = 0;
        for (std::size_t s = 0; s < c.size(); ++s) {
            height += c[s];
            for (int k = 0; k < n; ++k)
                mu[k] -= static_cast<int>(2 * c[s] * simples[s][k]);
        }
        if (is_dominant(g, Weight(mu)))
            candidates.push_back({height, std::move(mu), c});
        std::size_t s = 0;
        while (s < c.size() && c[s] == (*box)[s])
            c[s++] = 0;
        if (s == c.size())
            break;
        ++c[s];
    }
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
        return a.height != b.height ? a.height < b.height : a.mu < b.mu;
    });

    std::map<std::vector<int>, Int> mult; // dominant weight -> multiplicity
    std::vector<int> lam_rho(n);
    for (int k = 0; k < n; ++k)
        lam_rho[k] = lam[k] + rho2[k];
    const long long top_norm = norm2(lam_rho);

    for (const Candidate& cand : candidates) {
        if (cand.height == 0) {
            mult[cand.mu] = 1;
            continue;
        }
        std::vector<int> mu_rho(n);
        for (int k = 0; k < n; ++k)
            mu_rho[k] = cand.mu[k] + rho2[k];
        long long denom = top_norm - norm2(mu_rho);
        if (denom <= 0)
            continue; // not a weight of the module
        Int numer = 0;
        for (std::size_t a = 0; a < positives.size(); ++a) {
            const auto& alpha = positives[a];
            for (long long k = 1;; ++k) {
                bool inside = true;
                for (std::size_t s = 0; s < cand.coords.size(); ++s)
                    if (cand.coords[s] - k * pos_coords[a][s] < 0) {
                        inside = false;
                        break;
                    }
                if (!inside)
                    break;
                std::vector<int> up(n);
                for (int t = 0; t < n; ++t)
                    up[t] = cand.mu[t] + static_cast<int>(2 * k * alpha[t]);
                auto it = mult.find(dominant_rep(g, Weight(up)).doubled());
                if (it == mult.end() || it->second == 0)
                    continue;
                numer += it->second * dot(up, alpha);
            }
        }
        // Doubled-coordinate scaling: norms carry 4x, pairings 2x, so the
        // recursion reads (|l+r|^2 - |m+r|^2) m(mu) = 4 sum m(mu+ka) <mu+ka,a>.
        numer *= 4;
        if (numer == 0)
            continue;
        assert(numer % denom == 0);
        Int m = numer / denom;
        assert(m > 0);
        mult[cand.mu] = m;
    }

    WeightDiagram d(g);
    for (const auto& [mu, m] : mult) {
        if (m == 0)
            continue;
        for (const auto& w : weyl_orbit(g, mu))
            d.add(Weight(w), m);
    }
    return d;
}

WeightDiagram convolve(const WeightDiagram& a, const WeightDiagram& b) {
    if (!(a.group() == b.group()))
        throw std::invalid_argument("convolve needs diagrams over the same group");
    WeightDiagram out(a.group());
    for (const auto& [w1, m1] : a.entries())
        for (const auto& [w2, m2] : b.entries()) {
            std::vector<int> s(w1.size());
            for (std::size_t k = 0; k < s.size(); ++k)
                s[k] = w1[k] + w2[k];
            out.add(Weight(std::move(s)), m1 * m2);
        }
    return out;
}

WeightDiagram diagram_of_decomposition(const Decomposition& dec) {
    WeightDiagram out(dec.group());
    for (const auto& [hw, m] : dec.terms()) {
        WeightDiagram part = freudenthal(dec.group(), Weight(hw));
        for (const auto& [w, wm] : part.entries())
            out.add(Weight(w), wm * m);
    }
    return out;
}

} // namespace pieri
