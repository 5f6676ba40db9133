#include "entdepth/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace entdepth {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw std::invalid_argument("partition needs at least one part");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    if (parts_.back() < 1) {
        throw std::invalid_argument("partition parts must be >= 1");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::bottom(int n) {
    return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

Partition Partition::top(int n) { return Partition({n}); }

long long Partition::square_sum() const {
    long long s = 0;
    for (int x : parts_) s += static_cast<long long>(x) * x;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << '+';
        os << parts_[i];
    }
    return os.str();
}

std::vector<Partition> enumerate_partitions(int n, int limit) {
    if (n < 1 || n > limit) {
        throw std::domain_error("enumerate_partitions: n out of range [1," +
                                std::to_string(limit) + "]");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    // Descending first parts give reverse-lexicographic order overall.
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        for (int x = std::min(remaining, max_part); x >= 1; --x) {
            prefix.push_back(x);
            gen(remaining - x, x);
            prefix.pop_back();
        }
    };
    gen(n, n);
    return out;
}

long long partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) acc += sign * p[static_cast<size_t>(m - g1)];
            if (g2 <= m) acc += sign * p[static_cast<size_t>(m - g2)];
        }
        p[static_cast<size_t>(m)] = acc;
    }
    return p[static_cast<size_t>(n)];
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(static_cast<size_t>(p.width()), 0);
    for (int x : p.parts()) {
        for (int c = 0; c < x; ++c) ++cols[static_cast<size_t>(c)];
    }
    return Partition(std::move(cols));
}

namespace {

// Encodes a bin-fill state for the memo of failed search states.
std::string state_key(size_t next, const std::vector<int>& bins) {
    std::vector<int> sorted(bins);
    std::sort(sorted.begin(), sorted.end());
    std::string key(1, static_cast<char>(next));
    for (int b : sorted) key.push_back(static_cast<char>(b));
    return key;
}

}  // namespace

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.n() != coarse.n()) {
        throw std::invalid_argument("refines: partitions of different n");
    }
    if (fine == coarse) return true;
    if (fine.height() <= coarse.height()) return false;
    if (fine.width() > coarse.width()) return false;
    if (!dominated_by(fine, coarse)) return false;  // necessary condition

    std::vector<int> bins = coarse.parts();
    const std::vector<int>& parts = fine.parts();  // weakly decreasing
    std::unordered_set<std::string> failed;

    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
        if (i == parts.size()) return true;  // all capacity consumed exactly
        std::string key = state_key(i, bins);
        if (failed.contains(key)) return false;
        int last_tried = -1;
        for (size_t j = 0; j < bins.size(); ++j) {
            if (bins[j] < parts[i] || bins[j] == last_tried) continue;
            last_tried = bins[j];
            bins[j] -= parts[i];
            if (assign(i + 1)) {
                bins[j] += parts[i];
                return true;
            }
            bins[j] += parts[i];
        }
        failed.insert(std::move(key));
        return false;
    };
    return assign(0);
}

bool dominated_by(const Partition& low, const Partition& high) {
    if (low.n() != high.n()) {
        throw std::invalid_argument("dominated_by: partitions of different n");
    }
    const auto& a = low.parts();
    const auto& b = high.parts();
    long long pa = 0, pb = 0;
    size_t m = std::max(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa > pb) return false;
    }
    return true;
}

std::vector<std::pair<Partition, Partition>> refinement_covers(int n, int limit) {
    std::vector<std::pair<Partition, Partition>> out;
    for (const Partition& u : enumerate_partitions(n, limit)) {
        const auto& parts = u.parts();
        std::vector<Partition> coarser;
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t j = i + 1; j < parts.size(); ++j) {
                std::vector<int> merged;
                merged.reserve(parts.size() - 1);
                for (size_t t = 0; t < parts.size(); ++t) {
                    if (t == j) continue;
                    merged.push_back(t == i ? parts[i] + parts[j] : parts[t]);
                }
                coarser.emplace_back(std::move(merged));
            }
        }
        std::sort(coarser.begin(), coarser.end());
        coarser.erase(std::unique(coarser.begin(), coarser.end()), coarser.end());
        for (auto& c : coarser) out.emplace_back(u, std::move(c));
    }
    return out;
}

std::vector<Partition> dominance_covers(const Partition& p) {
    const auto& y = p.parts();
    std::vector<Partition> out;
    // Single-box moves; rows indexed from 0, i < j.
    for (size_t j = 0; j < y.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            if (!(j == i + 1 || y[i] == y[j])) continue;
            std::vector<int> x(y);
            ++x[i];
            --x[j];
            bool decreasing = true;
            for (size_t t = 0; t + 1 < x.size(); ++t) {
                if (x[t] < x[t + 1]) {
                    decreasing = false;
                    break;
                }
            }
            if (!decreasing) continue;
            if (x.back() == 0) x.pop_back();
            out.emplace_back(std::move(x));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::pair<Partition, Partition>> dominance_cover_pairs(int n, int limit) {
    std::vector<std::pair<Partition, Partition>> out;
    for (const Partition& u : enumerate_partitions(n, limit)) {
        for (Partition& c : dominance_covers(u)) out.emplace_back(u, std::move(c));
    }
    return out;
}

HasseGraph hasse_graph(int n, OrderKind kind, int limit) {
    HasseGraph g;
    g.n = n;
    g.kind = kind;
    g.nodes = enumerate_partitions(n, limit);
    auto index_of = [&](const Partition& p) {
        auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), p,
                                   [](const Partition& a, const Partition& b) {
                                       return a > b;  // stored in decreasing order
                                   });
        return static_cast<int>(it - g.nodes.begin());
    };
    auto pairs = kind == OrderKind::refinement ? refinement_covers(n, limit)
                                               : dominance_cover_pairs(n, limit);
    for (const auto& [lo, hi] : pairs) {
        g.edges.emplace_back(index_of(lo), index_of(hi));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::string hasse_to_dot(const HasseGraph& g) {
    std::ostringstream os;
    os << "digraph hasse {\n";
    os << "  rankdir=BT;\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const Partition& p = g.nodes[i];
        os << "  n" << i << " [label=\"" << p.to_string() << "\" tooltip=\"h="
           << p.height() << " w=" << p.width() << " r=" << p.rank()
           << " s2=" << p.square_sum() << "\"];\n";
    }
    for (const auto& [a, b] : g.edges) {
        os << "  n" << a << " -> n" << b << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string hasse_to_json(const HasseGraph& g) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const Partition& p : g.nodes) {
        j["nodes"].push_back({{"parts", p.parts()},
                              {"h", p.height()},
                              {"w", p.width()},
                              {"r", p.rank()},
                              {"s2", p.square_sum()}});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) {
        j["edges"].push_back({a, b});
    }
    return j.dump(2) + "\n";
}

}  // namespace entdepth
