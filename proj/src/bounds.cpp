#include "entdepth/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entdepth {

namespace {

constexpr double kRelTol = 1e-9;

bool close_levels(double a, double b) {
    return a == b ||
           std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

void check_cap(int n, int cap) {
    if (n < 1 || n > cap) {
        throw std::domain_error("bounds: n out of range [1," +
                                std::to_string(cap) + "]");
    }
}

}  // namespace

std::pair<long long, std::vector<Partition>> bound_bruteforce(const GenFun& f,
                                                              double k, int n,
                                                              int cap) {
    check_cap(n, cap);
    DownSet ds = sublevel_downset(f, k, n, cap);
    long long best = -1;
    std::vector<Partition> witnesses;
    for (const Partition& p : ds.members()) {
        long long s = p.square_sum();
        if (s > best) {
            best = s;
            witnesses.clear();
        }
        if (s == best) witnesses.push_back(p);
    }
    return {best, witnesses};
}

bool bounds_move_crosscheck(const GenFun& f, double k,
                            int n [[maybe_unused]],
                            const std::vector<Partition>& witnesses,
                            int cap [[maybe_unused]]) {
    for (const Partition& w : witnesses) {
        const auto& parts = w.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t j = 0; j < parts.size(); ++j) {
                if (i == j || parts[i] < parts[j]) continue;
                std::vector<int> moved;
                for (size_t t = 0; t < parts.size(); ++t) {
                    int v = parts[t];
                    if (t == i) ++v;
                    if (t == j) --v;
                    if (v > 0) moved.push_back(v);
                }
                Partition q(std::move(moved));
                double v = evaluate(f, q);
                bool inside = f.increasing() ? (v <= k || close_levels(v, k))
                                             : (v >= k || close_levels(v, k));
                if (inside && q.square_sum() > w.square_sum()) return false;
            }
        }
    }
    return true;
}

long long bound_closed(ClosedBound family, long long k, int n) {
    const long long nn = n;
    switch (family) {
        case ClosedBound::prod: {
            if (k < 1 || k > nn) throw std::domain_error("prod: k in [1,n]");
            long long m = nn / k;
            long long rest = nn - m * k;
            return m * k * k + rest * rest;
        }
        case ClosedBound::prod_weak:
            if (k < 1 || k > nn) throw std::domain_error("prod: k in [1,n]");
            return nn * k;
        case ClosedBound::part:
            if (k < 1 || k > nn) throw std::domain_error("part: k in [1,n]");
            return k * k - (2 * nn + 1) * k + nn * (nn + 2);
        case ClosedBound::str: {
            if (k < -(nn - 1) || k > nn - 1 || k == nn - 2 || k == -(nn - 2)) {
                throw std::domain_error("str: k outside the rank range");
            }
            long long l = nn + k;
            if (l == 10 && nn >= 8) return nn + 24;
            if (l == 16 && nn >= 12) return nn + 60;
            if (l % 2 == 0) return (l * l) / 4 + (nn - k) / 2 + 2;
            return (l + 1) * (l + 1) / 4 + (nn - k - 1) / 2;
        }
        case ClosedBound::tgh:
            if (k == nn) return nn * nn;
            if (k < 1 || k > nn / 2) {
                throw std::domain_error("tgh: k in {1..floor(n/2), n}");
            }
            return nn * nn - 2 * nn + 2;
        case ClosedBound::sq:
            if (k < nn || k > nn * nn) {
                throw std::domain_error("sq: k in [n, n^2]");
            }
            return k;
    }
    throw std::logic_error("unhandled closed bound family");
}

BoundTable bound_curve(const GenFun& f, int n, int cap) {
    check_cap(n, cap);
    std::vector<double> levels = value_range(f, n, cap);
    if (!f.increasing()) std::reverse(levels.begin(), levels.end());
    // levels now run bottom to top

    std::vector<Partition> all = enumerate_partitions(n, cap);
    std::vector<double> vals;
    vals.reserve(all.size());
    for (const Partition& p : all) vals.push_back(evaluate(f, p));

    BoundTable table;
    table.f = f;
    table.n = n;
    long long running = -1;
    std::vector<Partition> witnesses;
    std::vector<bool> used(all.size(), false);
    for (double k : levels) {
        for (size_t i = 0; i < all.size(); ++i) {
            if (used[i]) continue;
            bool in = f.increasing()
                          ? (vals[i] < k || close_levels(vals[i], k))
                          : (vals[i] > k || close_levels(vals[i], k));
            if (!in) continue;
            used[i] = true;
            long long s = all[i].square_sum();
            if (s > running) {
                running = s;
                witnesses.clear();
            }
            if (s == running) witnesses.push_back(all[i]);
        }
        table.rows.push_back({k, running, witnesses});
    }
    return table;
}

UsefulnessReport usefulness_report(const BoundTable& table) {
    UsefulnessReport rep;
    rep.f = table.f;
    rep.n = table.n;
    long long distinct = 0;
    long long prev = -1;
    for (const BoundRow& row : table.rows) {
        if (row.b != prev) {
            ++distinct;
            prev = row.b;
        }
    }
    rep.step_count = static_cast<int>(distinct);
    for (size_t i = 0; i < table.rows.size(); ++i) {
        bool strict = i + 1 == table.rows.size() ||
                      table.rows[i].b < table.rows[i + 1].b;
        rep.rows.push_back({table.rows[i].k, table.rows[i].b, strict});
    }
    return rep;
}

UsefulnessReport usefulness_report(const GenFun& f, int n, int cap) {
    return usefulness_report(bound_curve(f, n, cap));
}

GenFun bound_composed_fn(const GenFun& f, int n, int cap) {
    BoundTable table = bound_curve(f, n, cap);
    std::vector<std::pair<double, double>> map;
    map.reserve(table.rows.size());
    for (const BoundRow& row : table.rows) {
        map.emplace_back(row.k, static_cast<double>(row.b));
    }
    return lookup_fn(f, std::move(map));
}

long long induced_depth_bound(const GenFun& f, const Partition& finest, int n,
                              int cap) {
    if (finest.n() != n) {
        throw std::invalid_argument("induced_depth_bound: n mismatch");
    }
    double depth = pure_depth(f, finest);
    return bound_bruteforce(f, depth, n, cap).first;
}

std::vector<double> criteria_exclude(const GenFun& f, int n,
                                     double fq_measured, int cap) {
    if (fq_measured < 0.0 ||
        fq_measured > static_cast<double>(n) * n + 1e-9) {
        throw std::invalid_argument(
            "criteria_exclude: measured value outside [0, n^2]");
    }
    std::vector<double> excluded;
    for (const BoundRow& row : bound_curve(f, n, cap).rows) {
        if (static_cast<double>(row.b) < fq_measured &&
            !close_levels(static_cast<double>(row.b), fq_measured)) {
            excluded.push_back(row.k);
        }
    }
    return excluded;
}

double ases(const Ensemble& e) {
    double acc = 0.0;
    for (const auto& m : e.members()) {
        acc += m.weight * static_cast<double>(m.finest.square_sum());
    }
    return acc / e.n();
}

}  // namespace entdepth
