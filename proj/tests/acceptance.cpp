// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every check is exact integer arithmetic; the stated time limits are part
// of the pass condition.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pieri/branching.hpp"
#include "pieri/kostant.hpp"
#include "pieri/pieri_rules.hpp"
#include "pieri/tensor.hpp"

using namespace pieri;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report(int id, const std::string& name, bool pass, double ms, double limit_ms,
            const std::string& detail = "") {
    bool ok = pass && ms < limit_ms;
    if (!ok)
        ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f ms, limit %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", id,
                name.c_str(), ms, limit_ms, detail.empty() ? "" : " -- ", detail.c_str());
}

Weight W(std::vector<int> t) { return Weight::from_true(std::move(t)); }

Decomposition make_dec(GroupType g, std::vector<std::pair<std::vector<int>, int>> trues) {
    Decomposition d(g);
    for (auto& [w, m] : trues)
        d.add(W(w), m);
    return d;
}

std::vector<Partition> regular_partitions(int rank, int max_entry) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int cap) -> void {
        if (row == rank) {
            out.push_back(Partition(std::vector<int>(cur)));
            return;
        }
        for (int v = cap; v >= rank - row; --v) {
            cur.push_back(v);
            self(self, row + 1, v - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, max_entry);
    return out;
}

void criterion1() {
    Timer t;
    bool ok = gl_exterior(Partition({3, 2, 1}), 2, 4) ==
              make_dec(GroupType(Family::A, 4), {{{3, 2, 2, 1}, 1},
                                                 {{3, 3, 1, 1}, 1},
                                                 {{3, 3, 2, 0}, 1},
                                                 {{4, 2, 1, 1}, 1},
                                                 {{4, 2, 2, 0}, 1},
                                                 {{4, 3, 1, 0}, 1}});
    ok = ok && gl_symmetric(Partition({3, 2, 1}), 2, 4) ==
                   make_dec(GroupType(Family::A, 4), {{{3, 2, 2, 1}, 1},
                                                      {{3, 3, 1, 1}, 1},
                                                      {{3, 3, 2, 0}, 1},
                                                      {{4, 2, 1, 1}, 1},
                                                      {{4, 2, 2, 0}, 1},
                                                      {{4, 3, 1, 0}, 1},
                                                      {{5, 2, 1, 0}, 1}});
    report(1, "rank-4 exterior and symmetric square decompositions", ok, t.ms(), 1.0);
}

void criterion2() {
    Timer t;
    GroupType a3(Family::A, 3);
    bool ok = klimyk_decompose(a3, W({2, 1, 1}), symmetric_power(a3, 2)) ==
              make_dec(a3, {{{3, 2, 1}, 1}, {{4, 1, 1}, 1}});
    KostantBoundReport r = kostant_bound_check(a3, W({2, 1, 1}), W({2, 0, 0}));
    ok = ok && r.holds && r.converse_gaps.size() == 1 && r.converse_gaps[0] == W({2, 2, 2});
    report(2, "symmetric-square oracle with its converse gap", ok, t.ms(), 10.0);
}

void criterion3() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4 && ok; ++n) {
        GroupType g(Family::A, n);
        for (const Partition& lam : all_partitions(6, n)) {
            for (int i = 0; i <= 4; ++i) {
                Weight hw = Weight::from_partition(lam, n);
                if (i <= n && !(gl_exterior(lam, i, n) ==
                                klimyk_decompose(g, hw, exterior_power(g, i)))) {
                    ok = false;
                    detail = "exterior mismatch at n=" + std::to_string(n) + " lambda=" + lam.str();
                    break;
                }
                if (!(gl_symmetric(lam, i, n) ==
                      klimyk_decompose(g, hw, symmetric_power(g, i)))) {
                    ok = false;
                    detail = "symmetric mismatch at n=" + std::to_string(n) +
                             " lambda=" + lam.str();
                    break;
                }
            }
            if (!ok)
                break;
        }
    }
    report(3, "general linear rules equal the character oracle (|lambda|<=6, n<=4, i<=4)", ok,
           t.ms(), 30000.0, detail);
}

void criterion4() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (Family fam : {Family::B, Family::C, Family::D}) {
        for (int rank = (fam == Family::D ? 2 : 1); rank <= 3 && ok; ++rank) {
            GroupType g(fam, rank);
            for (const Partition& lam : regular_partitions(rank, 4)) {
                for (int i = 0; i <= g.dim_defining(); ++i) {
                    if (!(classical_exterior(g, lam, i) ==
                          klimyk_decompose(g, Weight::from_partition(lam, rank),
                                           exterior_power(g, i)))) {
                        ok = false;
                        detail = "mismatch at " + g.str() + " lambda=" + lam.str() +
                                 " i=" + std::to_string(i);
                        break;
                    }
                }
                if (!ok)
                    break;
            }
        }
    }
    report(4, "classical overlay rule equals the character oracle (rank<=3, entries<=4)", ok,
           t.ms(), 300000.0, detail);
}

void criterion5() {
    Timer t;
    bool ok = true;
    std::string detail;
    // deep-chamber agreement on the criterion-4 domain
    for (Family fam : {Family::B, Family::C, Family::D}) {
        for (int rank = (fam == Family::D ? 2 : 1); rank <= 3 && ok; ++rank) {
            GroupType g(fam, rank);
            for (const Partition& lam : regular_partitions(rank, 4)) {
                Weight hw = Weight::from_partition(lam, rank);
                for (int i = 0; i <= g.dim_defining(); ++i) {
                    auto res = deep_pieri(g, hw, exterior_power(g, i));
                    if (res.hypothesis_holds &&
                        !(*res.dec == klimyk_decompose(g, hw, exterior_power(g, i)))) {
                        ok = false;
                        detail = "deep-chamber mismatch at " + g.str() + " lambda=" + lam.str();
                        break;
                    }
                }
                if (!ok)
                    break;
            }
        }
    }
    // the minuscule defining representations of A and C force the hypothesis
    for (Family fam : {Family::A, Family::C}) {
        for (int rank = 1; rank <= 3 && ok; ++rank) {
            GroupType g(fam, rank);
            WeightDiagram def = defining_weights(g);
            for (const Weight& lam : dominant_weights_up_to(g, 4)) {
                if (!minuscule_hypothesis(g, def, lam) ||
                    !deep_pieri(g, lam, def).hypothesis_holds) {
                    ok = false;
                    detail = "minuscule implication failed at " + g.str() + " " + lam.str();
                    break;
                }
            }
        }
    }
    report(5, "deep-chamber rule agrees with the oracle; minuscule defining reps qualify", ok,
           t.ms(), 300000.0, detail);
}

void criterion6() {
    Timer t;
    bool ok = true;
    std::string detail;
    std::mt19937 rng(424242);
    for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
        int min_rank = fam == Family::D ? 2 : 1;
        std::vector<std::vector<Weight>> doms;
        for (int rank = min_rank; rank <= 3; ++rank)
            doms.push_back(dominant_weights_up_to(GroupType(fam, rank), 3));
        std::uniform_int_distribution<int> rank_pick(min_rank, 3);
        for (int trial = 0; trial < 500 && ok; ++trial) {
            int rank = rank_pick(rng);
            GroupType g(fam, rank);
            const auto& pool = doms[rank - min_rank];
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            Weight lam = pool[pick(rng)];
            Weight mu = pool[pick(rng)];
            if (!kostant_bound_check(g, lam, mu).holds) {
                ok = false;
                detail = "bound failed at " + g.str() + " lambda=" + lam.str() +
                         " mu=" + mu.str();
            }
        }
    }
    report(6, "support and multiplicity bound on 500 random pairs per family", ok, t.ms(),
           300000.0, detail);
}

void criterion7() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int rank : {2, 3}) {
        GroupType g(Family::C, rank);
        for (const Partition& lam : all_partitions(6, rank)) {
            for (int i = 0; i <= g.dim_defining(); ++i) {
                HomEqualityReport r = hom_equality_check(g, lam, i);
                if (!r.ok()) {
                    ok = false;
                    detail = "mismatch at C" + std::to_string(rank) + " lambda=" + lam.str() +
                             " i=" + std::to_string(i);
                    break;
                }
            }
            if (!ok)
                break;
        }
        if (!ok)
            break;
    }
    report(7, "Levi Hom count equals the tensor multiplicity on C2 and C3 (|lambda|<=6)", ok,
           t.ms(), 120000.0, detail);
}

void criterion8() {
    Timer t;
    bool exterior_ok = true;
    long long symmetric_violations = 0;
    std::string detail;
    for (const Partition& lam : all_partitions(5, 2)) {
        for (int d = 0; d <= 4; ++d) {
            ShiftInvarianceReport r = shift_invariance_check(2, lam, d);
            if (!r.exterior_ok()) {
                exterior_ok = false;
                detail = "exterior shift violated at lambda=" + lam.str() +
                         " d=" + std::to_string(d);
            }
            symmetric_violations += static_cast<long long>(r.symmetric_violations.size());
        }
    }
    bool ok = exterior_ok && symmetric_violations > 0;
    if (ok)
        detail = "symmetric analogue violated " + std::to_string(symmetric_violations) +
                 " times, as expected";
    report(8, "exterior shift invariance on C2 with a symmetric-power counterexample", ok, t.ms(),
           300000.0, detail);
}

void criterion9() {
    Timer t;
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 3; ++n) {
        BranchReport r = equivalence_check(n, 6);
        if (!r.ok()) {
            ok = false;
            detail = "equivalence mismatch at n=" + std::to_string(n);
        }
    }
    for (int n = 1; n <= 3 && ok; ++n)
        for (int m = n; m <= 4 && ok; ++m)
            for (int d = 0; d <= 6 && ok; ++d)
                if (!cauchy_dimension_check(n, m, d).ok()) {
                    ok = false;
                    detail = "dimension identity failed at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " d=" + std::to_string(d);
                }
    report(9, "branching equivalence (n<=3, bound 6) and polynomial dimension identity", ok,
           t.ms(), 300000.0, detail);
}

void criterion10() {
    Timer t;
    bool ok = true;
    std::string detail;
    auto check_product = [&](GroupType g, const Weight& hw, const WeightDiagram& u) {
        Decomposition dec = klimyk_decompose(g, hw, u);
        if (!(diagram_of_decomposition(dec) == convolve(freudenthal(g, hw), u))) {
            ok = false;
            detail = "character mismatch at " + g.str() + " " + hw.str();
            return;
        }
        if (dec.total_dimension() != weyl_dim(g, hw) * u.mass()) {
            ok = false;
            detail = "dimension leak at " + g.str() + " " + hw.str();
        }
    };
    for (int n = 1; n <= 2 && ok; ++n) {
        GroupType g(Family::A, n);
        for (const Partition& lam : all_partitions(6, n)) {
            Weight hw = Weight::from_partition(lam, n);
            for (int i = 0; i <= 4 && ok; ++i) {
                if (i <= n)
                    check_product(g, hw, exterior_power(g, i));
                check_product(g, hw, symmetric_power(g, i));
            }
            if (!ok)
                break;
        }
    }
    for (Family fam : {Family::B, Family::C, Family::D}) {
        for (int rank = (fam == Family::D ? 2 : 1); rank <= 2 && ok; ++rank) {
            GroupType g(fam, rank);
            for (const Partition& lam : regular_partitions(rank, 4)) {
                Weight hw = Weight::from_partition(lam, rank);
                for (int i = 0; i <= g.dim_defining() && ok; ++i)
                    check_product(g, hw, exterior_power(g, i));
                if (!ok)
                    break;
            }
        }
    }
    report(10, "character-level consistency and dimension conservation at rank <= 2", ok, t.ms(),
           300000.0, detail);
}

void criterion11() {
    Timer t;
    long long counterexamples = 0;
    for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
        for (int rank = (fam == Family::D ? 2 : 1); rank <= 2; ++rank) {
            GroupType g(fam, rank);
            std::vector<WeightDiagram> reps;
            for (int i = 1; i <= 3 && i <= g.dim_defining(); ++i)
                reps.push_back(exterior_power(g, i));
            for (int i = 1; i <= 3; ++i)
                reps.push_back(symmetric_power(g, i));
            counterexamples += static_cast<long long>(necessity_scan(g, 3, reps).size());
        }
    }
    report(11, "necessity scan finds no counterexamples (rank <= 2, entries <= 3)",
           counterexamples == 0, t.ms(), 300000.0,
           counterexamples == 0 ? "" : std::to_string(counterexamples) + " counterexamples");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures == 0)
        std::printf("acceptance: all 11 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
