#include "pieri/tensor.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pieri {

namespace {

// Dominant sums lambda + eta with their weight multiplicities.
Decomposition weight_sum_map(GroupType g, const Weight& lambda, const WeightDiagram& u) {
    Decomposition dec(g);
    for (const auto& [eta, m] : u.entries()) {
        Weight sum = lambda + Weight(eta);
        if (is_dominant(g, sum))
            dec.add(sum, m);
    }
    return dec;
}

} // namespace

Decomposition klimyk_decompose(GroupType g, const Weight& lambda, const WeightDiagram& u) {
    if (!(u.group() == g))
        throw std::invalid_argument("diagram group does not match");
    if (!is_dominant(g, lambda))
        throw std::invalid_argument("klimyk_decompose needs a dominant weight");
    const Weight lam_rho = lambda + rho(g);
    std::map<std::vector<int>, Int> acc;
    const std::vector<int>& rho2 = rho(g).doubled();
    for (const auto& [eta, m] : u.entries()) {
        Straightened st = straighten(g, lam_rho + Weight(eta));
        if (st.sign == 0)
            continue;
        std::vector<int> hw = st.dominant->doubled();
        for (int k = 0; k < g.rank; ++k)
            hw[k] -= rho2[k];
        acc[hw] += st.sign * m;
    }
    Decomposition dec(g);
    for (const auto& [hw, m] : acc) {
        if (m == 0)
            continue;
        if (m < 0)
            throw invalid_character_error("negative multiplicity: input diagram is not a character");
        dec.add(Weight(hw), m);
    }
    return dec;
}

Decomposition tensor_irreps(GroupType g, const Weight& lambda, const Weight& mu) {
    if (!is_dominant(g, lambda) || !is_dominant(g, mu))
        throw std::invalid_argument("tensor_irreps needs dominant weights");
    if (weyl_dim(g, lambda) < weyl_dim(g, mu))
        return klimyk_decompose(g, mu, freudenthal(g, lambda));
    return klimyk_decompose(g, lambda, freudenthal(g, mu));
}

DeepPieriResult deep_pieri(GroupType g, const Weight& lambda, const WeightDiagram& u) {
    if (!is_dominant(g, lambda))
        throw std::invalid_argument("deep_pieri needs a dominant weight");
    const Weight lam_rho = lambda + rho(g);
    for (const auto& [eta, m] : u.entries())
        if (!is_dominant(g, lam_rho + Weight(eta)))
            return {false, std::nullopt};
    return {true, weight_sum_map(g, lambda, u)};
}

bool minuscule_hypothesis(GroupType g, const WeightDiagram& u, const Weight& lambda) {
    if (u.empty())
        return false;
    // Pairings with the simple coroots, computed as 2<w, alpha^vee> so
    // everything stays integral; the bound is then |.| <= 2.
    const auto& simples = simple_roots(g);
    for (const auto& [w, m] : u.entries()) {
        for (const auto& alpha : simples) {
            long long p = 0, q = 0;
            for (int k = 0; k < g.rank; ++k) {
                p += static_cast<long long>(w[k]) * alpha[k];
                q += static_cast<long long>(alpha[k]) * alpha[k];
            }
            // p = 2<w,alpha>, so 2<w,alpha^vee> = 2p/q.
            long long pairing2 = 2 * p / q;
            if (pairing2 * q != 2 * p || pairing2 < -2 || pairing2 > 2)
                return false;
        }
    }
    // Single orbit, every multiplicity 1.
    auto orbit = weyl_orbit(g, u.entries().begin()->first);
    if (orbit.size() != u.entries().size())
        return false;
    for (const auto& [w, m] : u.entries()) {
        if (m != 1)
            return false;
        if (!std::binary_search(orbit.begin(), orbit.end(), w))
            return false;
    }
    // Minuscule implies the deep-chamber hypothesis at every dominant weight.
    if (is_dominant(g, lambda) && !deep_pieri(g, lambda, u).hypothesis_holds)
        throw std::logic_error("minuscule diagram failed the deep-chamber hypothesis");
    return true;
}

std::vector<Weight> dominant_weights_up_to(GroupType g, int max_entry) {
    std::vector<Weight> out;
    std::vector<int> cur(g.rank, 0);
    auto rec = [&](auto&& self, int pos, int bound) -> void {
        if (pos == g.rank) {
            out.push_back(Weight(std::vector<int>(cur)));
            if (g.family == Family::D && cur.back() > 0) {
                std::vector<int> flipped = cur;
                flipped.back() = -flipped.back();
                out.push_back(Weight(std::move(flipped)));
            }
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            cur[pos] = 2 * v;
            self(self, pos + 1, v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, max_entry);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NecessityRecord> necessity_scan(GroupType g, int max_entry,
                                            const std::vector<WeightDiagram>& reps) {
    std::vector<NecessityRecord> records;
    for (const Weight& lambda : dominant_weights_up_to(g, max_entry)) {
        for (std::size_t r = 0; r < reps.size(); ++r) {
            const WeightDiagram& u = reps[r];
            if (deep_pieri(g, lambda, u).hypothesis_holds)
                continue;
            Decomposition expected = weight_sum_map(g, lambda, u);
            if (klimyk_decompose(g, lambda, u) == expected)
                records.push_back({lambda, r});
        }
    }
    return records;
}

} // namespace pieri
