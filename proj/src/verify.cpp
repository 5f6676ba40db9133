#include "entdepth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "entdepth/bounds.hpp"
#include "entdepth/classify.hpp"
#include "entdepth/genfun.hpp"
#include "entdepth/partition.hpp"
#include "entdepth/qstate.hpp"

namespace entdepth {

namespace {
constexpr size_t kMaxMessages = 64;
}

void SuiteResult::fail(const std::string& msg) {
    ++checks;
    ++violations;
    if (messages.size() < kMaxMessages) messages.push_back(msg);
}

namespace {

void expect(SuiteResult& r, bool cond, const std::string& msg) {
    if (cond) {
        r.pass();
    } else {
        r.fail(msg);
    }
}

std::string pstr(const Partition& p) { return "{" + p.to_string() + "}"; }

}  // namespace

// --- orders --- //

SuiteResult run_suite_orders(int n_max) {
    SuiteResult r;
    r.name = "orders";
    for (int n = 2; n <= n_max; ++n) {
        auto all = enumerate_partitions(n);

        // antisymmetry, both orders
        if (n <= 9) {
            for (const auto& a : all) {
                for (const auto& b : all) {
                    if (refines(a, b) && refines(b, a)) {
                        expect(r, a == b,
                               "refinement antisymmetry fails at " + pstr(a) +
                                   "," + pstr(b));
                    } else {
                        r.pass();
                    }
                    if (dominated_by(a, b) && dominated_by(b, a)) {
                        expect(r, a == b,
                               "dominance antisymmetry fails at " + pstr(a) +
                                   "," + pstr(b));
                    } else {
                        r.pass();
                    }
                }
            }
        }

        // transitivity over all triples
        if (n <= 7) {
            for (const auto& a : all) {
                for (const auto& b : all) {
                    if (!refines(a, b)) continue;
                    for (const auto& c : all) {
                        if (refines(b, c)) {
                            expect(r, refines(a, c),
                                   "refinement transitivity fails at " +
                                       pstr(a) + "," + pstr(b) + "," + pstr(c));
                        }
                    }
                }
            }
            for (const auto& a : all) {
                for (const auto& b : all) {
                    if (!dominated_by(a, b)) continue;
                    for (const auto& c : all) {
                        if (dominated_by(b, c)) {
                            expect(r, dominated_by(a, c),
                                   "dominance transitivity fails at " +
                                       pstr(a) + "," + pstr(b) + "," + pstr(c));
                        }
                    }
                }
            }
        }

        // refinement implies dominance
        for (const auto& a : all) {
            for (const auto& b : all) {
                if (refines(a, b)) {
                    expect(r, dominated_by(a, b),
                           "refinement without dominance at " + pstr(a) + "," +
                               pstr(b));
                }
            }
        }

        // refinement covers are exactly the strict pairs one part apart
        {
            auto covers = refinement_covers(n);
            size_t brute = 0;
            for (const auto& a : all) {
                for (const auto& b : all) {
                    if (a.height() == b.height() + 1 && refines(a, b)) ++brute;
                }
            }
            expect(r, covers.size() == brute,
                   "refinement cover count mismatch at n=" +
                       std::to_string(n));
        }

        // transitive closure of dominance covers equals the dominance order
        if (n <= 9) {
            std::vector<std::vector<bool>> reach(
                all.size(), std::vector<bool>(all.size(), false));
            auto index_of = [&](const Partition& p) {
                return static_cast<size_t>(
                    std::lower_bound(all.begin(), all.end(), p,
                                     [](const Partition& x, const Partition& y) {
                                         return x > y;
                                     }) -
                    all.begin());
            };
            for (size_t i = 0; i < all.size(); ++i) {
                reach[i][i] = true;
                for (const auto& c : dominance_covers(all[i])) {
                    reach[i][index_of(c)] = true;
                }
            }
            for (size_t k = 0; k < all.size(); ++k) {
                for (size_t i = 0; i < all.size(); ++i) {
                    if (!reach[i][k]) continue;
                    for (size_t j = 0; j < all.size(); ++j) {
                        if (reach[k][j]) reach[i][j] = true;
                    }
                }
            }
            for (size_t i = 0; i < all.size(); ++i) {
                for (size_t j = 0; j < all.size(); ++j) {
                    expect(r, reach[i][j] == dominated_by(all[i], all[j]),
                           "dominance cover closure mismatch at " +
                               pstr(all[i]) + "," + pstr(all[j]));
                }
            }
        }

        // conjugation is an antiautomorphism of dominance
        if (n <= 9) {
            for (const auto& a : all) {
                for (const auto& b : all) {
                    expect(r,
                           dominated_by(a, b) ==
                               dominated_by(conjugate(b), conjugate(a)),
                           "conjugation antiautomorphism fails at " + pstr(a) +
                               "," + pstr(b));
                }
            }
        }
    }
    return r;
}

// --- monotonicity --- //

namespace {

std::vector<GenFun> refinement_catalog() {
    std::vector<GenFun> fns = {height_fn(),   width_fn(),
                               rank_fn(),     toughness_fn(),
                               shannon_fn(),  squareability_fn(),
                               avg_size_fn()};
    for (int m = 1; m <= 8; ++m) {
        fns.push_back(top_sum_fn(m));
        fns.push_back(bottom_sum_fn(m));
    }
    for (double q : {1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 7.0, 10.0}) {
        fns.push_back(power_sum_fn(q));
    }
    for (double q : {-5.0, -3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 0.9}) {
        fns.push_back(power_sum_fn(q));
    }
    fns.push_back(power_sum_fn(QParam::minus_inf()));
    for (double q : {-5.0, -3.0, -2.0, -1.5, -1.0, -0.75, -0.5, -0.25}) {
        fns.push_back(q_sum_fn(q));
    }
    for (double q : {1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 10.0}) {
        fns.push_back(q_sum_fn(q));
    }
    for (double q : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.75, 0.9}) {
        fns.push_back(q_sum_fn(q));
    }
    fns.push_back(q_sum_fn(QParam::plus_inf()));
    fns.push_back(q_sum_fn(QParam::minus_inf()));
    for (double q : {1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 7.0, 10.0}) {
        fns.push_back(q_mean_fn(q));
    }
    fns.push_back(q_mean_fn(QParam::plus_inf()));
    fns.push_back(q_mean_fn(QParam::minus_inf()));
    for (double q : {-5.0, -2.0, -1.0, -0.5, 0.0, 0.5, 2.0, 3.0}) {
        fns.push_back(tsallis_fn(q));
        fns.push_back(renyi_fn(q));
        fns.push_back(renyi_exp_fn(q));
    }
    fns.push_back(renyi_fn(QParam::plus_inf()));
    fns.push_back(renyi_fn(QParam::minus_inf()));
    fns.push_back(renyi_exp_fn(QParam::plus_inf()));
    fns.push_back(renyi_exp_fn(QParam::minus_inf()));
    for (double b : {2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0}) {
        fns.push_back(dim_fn(b));
        fns.push_back(dof_fn(b));
    }
    for (double b : {0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 0.9, 1.0}) {
        fns.push_back(dim_fn(b));
    }
    for (double b : {0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 0.8, 0.9}) {
        fns.push_back(dof_fn(b));
    }
    for (double b : {0.1, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0, 5.0}) {
        fns.push_back(dim_proj_fn(b));
    }
    for (double b : {1.1, 1.5, 2.0, 3.0, 4.0, 5.0, 8.0, 10.0}) {
        fns.push_back(dof_proj_fn(b));
    }
    return fns;
}

std::vector<GenFun> dominance_catalog() {
    std::vector<GenFun> fns = {height_fn(), width_fn(),        rank_fn(),
                               shannon_fn(), squareability_fn(), avg_size_fn()};
    for (int m = 1; m <= 8; ++m) fns.push_back(top_sum_fn(m));
    for (double q : {1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 7.0, 10.0}) {
        fns.push_back(power_sum_fn(q));
    }
    for (double q : {0.0, 0.1, 0.25, 0.4, 0.5, 0.7, 0.9, 0.99}) {
        fns.push_back(power_sum_fn(q));
    }
    for (double q : {1.25, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 10.0}) {
        fns.push_back(q_sum_fn(q));
    }
    for (double q : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.75, 0.9}) {
        fns.push_back(q_sum_fn(q));
    }
    fns.push_back(q_sum_fn(QParam::plus_inf()));
    for (double q : {1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 7.0, 10.0}) {
        fns.push_back(q_mean_fn(q));
    }
    fns.push_back(q_mean_fn(QParam::plus_inf()));
    for (double q : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
        fns.push_back(tsallis_fn(q));
        fns.push_back(renyi_fn(q));
        fns.push_back(renyi_exp_fn(q));
    }
    fns.push_back(renyi_fn(QParam::plus_inf()));
    fns.push_back(renyi_exp_fn(QParam::plus_inf()));
    for (double b : {2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0}) {
        fns.push_back(dim_fn(b));
        fns.push_back(dof_fn(b));
    }
    for (double b : {0.1, 0.5, 0.9, 1.0, 1.5, 2.0, 3.0, 5.0}) {
        fns.push_back(dim_proj_fn(b));
    }
    for (double b : {1.1, 1.5, 2.0, 3.0, 4.0, 5.0, 8.0, 10.0}) {
        fns.push_back(dof_proj_fn(b));
    }
    return fns;
}

}  // namespace

SuiteResult run_suite_monotonicity(int n_max, bool include_counterexamples) {
    SuiteResult r;
    r.name = "monotonicity";
    for (int n = 2; n <= n_max; ++n) {
        for (const GenFun& f : refinement_catalog()) {
            MonotoneReport rep = verify_refinement_monotone(f, n);
            std::string msg = "refinement monotonicity fails: " + f.name() +
                              " at n=" + std::to_string(n);
            if (!rep.violations.empty()) {
                msg += " e.g. " + pstr(rep.violations.front().lower) + "->" +
                       pstr(rep.violations.front().upper);
            }
            expect(r, rep.ok, msg);
        }
        for (const GenFun& f : dominance_catalog()) {
            MonotoneReport rep = verify_dominance_monotone(f, n);
            std::string msg = "dominance monotonicity fails: " + f.name() +
                              " at n=" + std::to_string(n);
            if (!rep.violations.empty()) {
                msg += " e.g. " + pstr(rep.violations.front().lower) + "->" +
                       pstr(rep.violations.front().upper);
            }
            expect(r, rep.ok, msg);
        }
    }
    if (include_counterexamples) {
        // Out-of-range parameters reproduce the documented violations; they
        // are reported as failures on purpose.
        for (int n = 2; n <= n_max; ++n) {
            MonotoneReport rep =
                verify_refinement_monotone(unchecked_q_mean(-1.0), n);
            expect(r, rep.ok,
                   "q_mean:q=-1 violates refinement monotonicity at n=" +
                       std::to_string(n) + " (" +
                       std::to_string(rep.violations.size()) + " pairs)");
            MonotoneReport dom = verify_dominance_monotone(toughness_fn(), n);
            expect(r, dom.ok,
                   "toughness violates dominance monotonicity at n=" +
                       std::to_string(n));
        }
    }
    return r;
}

// --- limits --- //

SuiteResult run_suite_limits(int n8) {
    SuiteResult r;
    r.name = "limits";
    const double big_q = 50.0;
    const double tol = 1e-6;
    auto all = enumerate_partitions(n8);

    auto check_close = [&](double got, double want, const std::string& what) {
        std::ostringstream os;
        os << what << ": |" << got << " - " << want << "| = "
           << std::abs(got - want) << " > " << tol;
        expect(r, std::abs(got - want) < tol, os.str());
    };

    for (const Partition& p : all) {
        const double n = p.n();
        check_close(evaluate(q_sum_fn(big_q), p), p.width(),
                    "N_q -> max at q=50 for " + pstr(p));
        check_close(evaluate(q_sum_fn(-big_q), p), p.min_part(),
                    "N_q -> min at q=-50 for " + pstr(p));
        check_close(evaluate(q_mean_fn(big_q), p), p.width(),
                    "M_q -> max at q=50 for " + pstr(p));
        check_close(evaluate(unchecked_q_mean(-big_q), p), p.min_part(),
                    "M_q -> min at q=-50 for " + pstr(p));
        check_close(evaluate(renyi_fn(big_q), p),
                    std::log(n) - std::log(p.width()),
                    "R_q limit at q=50 for " + pstr(p));
        check_close(evaluate(renyi_fn(-big_q), p),
                    std::log(n) - std::log(p.min_part()),
                    "R_q limit at q=-50 for " + pstr(p));
        check_close(evaluate(tsallis_fn(big_q), p), 0.0,
                    "T_q -> 0 at q=50 for " + pstr(p));
        int unit_parts = 0;
        for (int x : p.parts()) unit_parts += x == 1;
        check_close(evaluate(power_sum_fn(-big_q), p), unit_parts,
                    "s_q -> unit-part count at q=-50 for " + pstr(p));
    }

    // exact special-parameter dispatches
    for (const Partition& p : all) {
        expect(r,
               evaluate(power_sum_fn(0.0), p) ==
                   static_cast<double>(p.height()),
               "s_0 = height fails for " + pstr(p));
        check_close(evaluate(tsallis_fn(1.0), p), evaluate(shannon_fn(), p),
                    "T_1 = S for " + pstr(p));
        check_close(evaluate(renyi_fn(1.0), p), evaluate(shannon_fn(), p),
                    "R_1 = S for " + pstr(p));
        check_close(evaluate(renyi_exp_fn(1.0), p),
                    std::exp(evaluate(shannon_fn(), p)),
                    "P_1 = e^S for " + pstr(p));
        double geo = 1.0;
        for (int x : p.parts()) geo *= std::pow(x, 1.0 / p.height());
        check_close(evaluate(unchecked_q_mean(0.0), p), geo,
                    "M_0 = geometric mean for " + pstr(p));
    }

    // monotonicity in the parameter over the grid
    const std::vector<double> grid = {-5.0, -2.0, -1.0, -0.5,
                                      0.5,  2.0,  3.0,  5.0};
    for (const Partition& p : all) {
        for (size_t i = 0; i + 1 < grid.size(); ++i) {
            double q1 = grid[i], q2 = grid[i + 1];
            expect(r,
                   evaluate(power_sum_fn(q1), p) <=
                       evaluate(power_sum_fn(q2), p) + 1e-12,
                   "s_q not increasing in q at " + pstr(p));
            expect(r,
                   evaluate(unchecked_q_mean(q1), p) <=
                       evaluate(unchecked_q_mean(q2), p) + 1e-12,
                   "M_q not increasing in q at " + pstr(p));
            expect(r,
                   evaluate(tsallis_fn(q1), p) >=
                       evaluate(tsallis_fn(q2), p) - 1e-12,
                   "T_q not decreasing in q at " + pstr(p));
            expect(r,
                   evaluate(renyi_fn(q1), p) >=
                       evaluate(renyi_fn(q2), p) - 1e-12,
                   "R_q not decreasing in q at " + pstr(p));
            expect(r,
                   evaluate(renyi_exp_fn(q1), p) >=
                       evaluate(renyi_exp_fn(q2), p) - 1e-12,
                   "P_q not decreasing in q at " + pstr(p));
            // N_q decreases within a sign branch and jumps up across zero
            bool same_branch = (q1 > 0) == (q2 > 0);
            double n1 = evaluate(q_sum_fn(q1), p);
            double n2 = evaluate(q_sum_fn(q2), p);
            expect(r, same_branch ? n1 >= n2 - 1e-12 : n1 <= n2 + 1e-12,
                   "N_q branch monotonicity fails at " + pstr(p));
        }
    }
    return r;
}

// --- bounds --- //

SuiteResult run_suite_bounds(int n_max) {
    SuiteResult r;
    r.name = "bounds";
    for (int n = 2; n <= n_max; ++n) {
        const long long nn = n;
        struct FamilyCase {
            GenFun f;
            ClosedBound closed;
        };
        const std::vector<FamilyCase> cases = {
            {width_fn(), ClosedBound::prod},
            {height_fn(), ClosedBound::part},
            {rank_fn(), ClosedBound::str},
            {toughness_fn(), ClosedBound::tgh},
            {squareability_fn(), ClosedBound::sq},
        };
        for (const auto& c : cases) {
            BoundTable table = bound_curve(c.f, n);
            long long prev = -1;
            for (const BoundRow& row : table.rows) {
                long long k = static_cast<long long>(row.k);
                long long closed = bound_closed(c.closed, k, n);
                expect(r, row.b == closed,
                       c.f.name() + " brute " + std::to_string(row.b) +
                           " != closed " + std::to_string(closed) + " at n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
                expect(r, row.b >= prev,
                       c.f.name() + " bound not monotone at n=" +
                           std::to_string(n));
                prev = row.b;
                expect(r, bounds_move_crosscheck(c.f, row.k, n, row.witnesses),
                       c.f.name() + " witness move cross-check fails at n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
            }
            expect(r,
                   table.rows.back().b == nn * nn &&
                       table.rows.back().witnesses.size() == 1 &&
                       table.rows.back().witnesses.front().is_top(),
                   c.f.name() + " top row must be n^2 with the trivial "
                                "partition at n=" +
                       std::to_string(n));
        }

        // weak product bound dominates, equality exactly at divisors
        for (long long k = 1; k <= nn; ++k) {
            long long weak = bound_closed(ClosedBound::prod_weak, k, n);
            long long tight = bound_closed(ClosedBound::prod, k, n);
            expect(r, weak >= tight, "weak product bound below tight one");
            expect(r, (weak == tight) == (nn % k == 0),
                   "weak bound equality must happen exactly at divisors, n=" +
                       std::to_string(n) + " k=" + std::to_string(k));
        }

        // witness structure
        if (n <= 20) {
            for (long long k = 1; k <= nn; ++k) {
                auto [b, wit] = bound_bruteforce(width_fn(),
                                                 static_cast<double>(k), n);
                std::vector<int> expected(static_cast<size_t>(nn / k),
                                          static_cast<int>(k));
                if (nn % k) expected.push_back(static_cast<int>(nn % k));
                expect(r,
                       wit.size() == 1 && wit.front() == Partition(expected),
                       "producibility witness shape fails at n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
                auto [bp, witp] = bound_bruteforce(height_fn(),
                                                   static_cast<double>(k), n);
                std::vector<int> exp2{static_cast<int>(nn - k + 1)};
                exp2.insert(exp2.end(), static_cast<size_t>(k - 1), 1);
                expect(r,
                       witp.size() == 1 && witp.front() == Partition(exp2),
                       "partitionability witness shape fails at n=" +
                           std::to_string(n) + " k=" + std::to_string(k));
            }
            if (n >= 2) {
                for (long long k = 1; k <= nn / 2; ++k) {
                    auto [bt, witt] = bound_bruteforce(
                        toughness_fn(), static_cast<double>(k), n);
                    std::vector<int> exp3{static_cast<int>(nn - 1), 1};
                    if (nn == 2) exp3 = {1, 1};
                    expect(r,
                           witt.size() == 1 && witt.front() == Partition(exp3),
                           "toughness witness shape fails at n=" +
                               std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        }

        // dominance-comparable consecutive witnesses force a strict step
        if (n <= 12) {
            const std::vector<GenFun> dom_fns = {
                width_fn(),        height_fn(),  rank_fn(),
                squareability_fn(), avg_size_fn(), power_sum_fn(3.0),
                top_sum_fn(2),     dim_fn(2.0),  shannon_fn(),
                tsallis_fn(2.0),   renyi_fn(2.0)};
            for (const GenFun& f : dom_fns) {
                BoundTable table = bound_curve(f, n);
                for (size_t i = 0; i + 1 < table.rows.size(); ++i) {
                    bool comparable = false;
                    for (const auto& lo : table.rows[i].witnesses) {
                        for (const auto& hi : table.rows[i + 1].witnesses) {
                            if (!(lo == hi) && dominated_by(lo, hi)) {
                                comparable = true;
                            }
                        }
                    }
                    if (comparable) {
                        expect(r, table.rows[i].b < table.rows[i + 1].b,
                               f.name() +
                                   ": dominance-comparable witnesses without "
                                   "a strict step at n=" +
                                   std::to_string(n));
                    }
                }
            }
        }
    }
    return r;
}

// --- qfi --- //

namespace {

StateVector random_product_state(const Partition& type, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd acc(1);
    acc[0] = 1.0;
    for (int part : type.parts()) {
        const std::ptrdiff_t d = std::ptrdiff_t{1} << part;
        Eigen::VectorXcd block(d);
        for (std::ptrdiff_t i = 0; i < d; ++i) {
            block[i] = std::complex<double>(gauss(rng), gauss(rng));
        }
        block /= block.norm();
        // kron: the new block occupies higher-order bits
        Eigen::VectorXcd next(acc.size() * d);
        for (std::ptrdiff_t hi = 0; hi < d; ++hi) {
            for (std::ptrdiff_t lo = 0; lo < acc.size(); ++lo) {
                next[hi * acc.size() + lo] = block[hi] * acc[lo];
            }
        }
        acc.swap(next);
    }
    return StateVector(type.n(), std::move(acc));
}

double block_variance_sum(const Partition& type, const StateVector& psi) {
    // variance of the collective operator restricted to each block
    const auto& amps = psi.amplitudes();
    double total = 0.0;
    int offset = 0;
    for (int part : type.parts()) {
        double first = 0.0, second = 0.0;
        for (std::ptrdiff_t b = 0; b < amps.size(); ++b) {
            double p = std::norm(amps[b]);
            int ones = std::popcount(
                (static_cast<std::uint64_t>(b) >> offset) &
                ((std::uint64_t{1} << part) - 1));
            double jz = 0.5 * (part - 2 * ones);
            first += p * jz;
            second += p * jz * jz;
        }
        total += second - first * first;
        offset += part;
    }
    return total;
}

StateVector permute_qubits(const StateVector& psi,
                           const std::vector<int>& perm) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.amplitudes().size());
    for (std::ptrdiff_t b = 0; b < out.size(); ++b) {
        std::uint64_t nb = 0;
        for (int i = 0; i < psi.n(); ++i) {
            if (static_cast<std::uint64_t>(b) >> i & 1) {
                nb |= std::uint64_t{1} << perm[static_cast<size_t>(i)];
            }
        }
        out[static_cast<std::ptrdiff_t>(nb)] = psi.amplitudes()[b];
    }
    return StateVector(psi.n(), std::move(out));
}

}  // namespace

SuiteResult run_suite_qfi(int n_max, std::uint64_t seed) {
    SuiteResult r;
    r.name = "qfi";
    std::mt19937_64 rng(seed);

    // pure-state attainability on GHZ products, all types
    for (int n = 2; n <= std::min(n_max, 10); ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        for (const Partition& type : enumerate_partitions(n)) {
            StateVector psi = ghz_product_state(type);
            double fq = qfi_pure(psi, jz);
            expect(r,
                   std::abs(fq - static_cast<double>(type.square_sum())) <
                       1e-9,
                   "GHZ product attainability fails for " + pstr(type));
        }
    }

    // block layout invariance under qubit permutations
    for (int n = 4; n <= std::min(n_max, 10); n += 2) {
        CollectiveOp jz = CollectiveOp::jz(n);
        for (const Partition& type : enumerate_partitions(n)) {
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            StateVector moved = permute_qubits(ghz_product_state(type), perm);
            expect(r,
                   std::abs(qfi_pure(moved, jz) -
                            static_cast<double>(type.square_sum())) < 1e-9,
                   "block layout changes the Fisher information for " +
                       pstr(type));
        }
    }

    // variance additivity over product states of random types
    for (int n = 2; n <= std::min(n_max, 10); ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        auto all = enumerate_partitions(n);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const Partition& type = all[pick(rng)];
            StateVector psi = random_product_state(type, rng);
            double lhs = variance(psi, jz);
            double rhs = block_variance_sum(type, psi);
            expect(r, std::abs(lhs - rhs) < 1e-9,
                   "variance additivity fails for " + pstr(type));
        }
    }

    // variance range bound and attainability
    for (int n = 2; n <= std::min(n_max, 6); ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        const double cap = 0.25 * n * n;
        for (int trial = 0; trial < 1000; ++trial) {
            StateVector psi = random_state_vector(n, rng());
            expect(r, variance(psi, jz) <= cap + 1e-9,
                   "variance exceeds the spectral-range bound");
        }
        Eigen::VectorXcd amps =
            Eigen::VectorXcd::Zero(std::ptrdiff_t{1} << n);
        amps[0] = 1.0 / std::sqrt(2.0);
        amps[(std::ptrdiff_t{1} << n) - 1] =
            std::polar(1.0 / std::sqrt(2.0), 0.7);
        StateVector extremal(n, std::move(amps));
        expect(r, std::abs(variance(extremal, jz) - cap) < 1e-9,
               "extremal superposition misses the variance bound");
    }

    // mixed-state Fisher information against pure values and mixtures
    for (int n = 2; n <= std::min(n_max, 5); ++n) {
        CollectiveOp jz = CollectiveOp::jz(n);
        const auto d = std::ptrdiff_t{1} << n;

        Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(d, d);
        DensityMatrix mixed(n, eye / static_cast<double>(d));
        expect(r, qfi(mixed, jz) < 1e-12,
               "maximally mixed state must carry zero Fisher information");

        for (int trial = 0; trial < 25; ++trial) {
            StateVector psi = random_state_vector(n, rng());
            DensityMatrix rho = DensityMatrix::pure(psi);
            expect(r, std::abs(qfi(rho, jz) - 4.0 * variance(psi, jz)) < 1e-9,
                   "pure-state Fisher information must be 4x variance");
        }

        for (int trial = 0; trial < 25; ++trial) {
            DensityMatrix a = random_density_matrix(n, rng());
            DensityMatrix b = random_density_matrix(n, rng());
            std::uniform_real_distribution<double> unit(0.05, 0.95);
            double w = unit(rng);
            DensityMatrix mix = DensityMatrix::mix({{w, a}, {1.0 - w, b}});
            expect(r,
                   qfi(mix, jz) <=
                       w * qfi(a, jz) + (1.0 - w) * qfi(b, jz) + 1e-9,
                   "Fisher information convexity fails");
            expect(r, qfi(mix, jz) <= 4.0 * variance(mix, jz) + 1e-9,
                   "Fisher information exceeds 4x variance");
        }

        for (int trial = 0; trial < 25; ++trial) {
            DensityMatrix rho = random_density_matrix(n, rng());
            double fq = qfi(rho, jz);
            for (int rep = 0; rep < 50; ++rep) {
                auto dec = random_decomposition(rho, static_cast<int>(d), rng());
                Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(d, d);
                double avg = 0.0;
                for (const auto& [w, psi] : dec) {
                    rebuilt += w * (psi.amplitudes() *
                                    psi.amplitudes().adjoint());
                    avg += w * 4.0 * variance(psi, jz);
                }
                expect(r,
                       (rebuilt - rho.entries()).norm() < 1e-9,
                       "random decomposition fails to rebuild the state");
                expect(r, fq <= avg + 1e-9,
                       "Fisher information exceeds a decomposition average");
            }
        }
    }
    return r;
}

}  // namespace entdepth
