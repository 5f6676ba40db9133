#include "entdepth/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace entdepth {

namespace {
constexpr double kWeightTol = 1e-12;
}

Ensemble::Ensemble(std::vector<EnsembleMember> members)
    : members_(std::move(members)) {
    if (members_.empty()) {
        throw std::invalid_argument("ensemble must have at least one member");
    }
    n_ = members_.front().finest.n();
    double total = 0.0;
    for (const auto& m : members_) {
        if (m.finest.n() != n_) {
            throw std::invalid_argument("ensemble members must share n");
        }
        if (m.weight <= 0.0 || m.weight > 1.0) {
            throw std::invalid_argument("ensemble weights must be in (0,1]");
        }
        total += m.weight;
    }
    if (std::abs(total - 1.0) > kWeightTol) {
        throw std::invalid_argument("ensemble weights must sum to 1");
    }
}

double pure_depth(const GenFun& f, const Partition& finest) {
    return evaluate(f, finest);
}

ClassLabel class_of(const GenFun& f, const Partition& finest, int limit) {
    ClassLabel label;
    label.f = f;
    label.k = pure_depth(f, finest);
    label.k_neighbor = neighbor_level(f, finest.n(), label.k, limit);
    return label;
}

double ensemble_depth(const GenFun& f, const Ensemble& e) {
    double best = pure_depth(f, e.members().front().finest);
    for (const auto& m : e.members()) {
        double v = pure_depth(f, m.finest);
        if (f.increasing() ? v > best : v < best) best = v;
    }
    return best;
}

double ensemble_avg_depth(const GenFun& f, const Ensemble& e) {
    double acc = 0.0;
    for (const auto& m : e.members()) {
        acc += m.weight * pure_depth(f, m.finest);
    }
    return acc;
}

double depth_transform(const MonotoneTransform& g, const GenFun& f,
                       const Partition& finest) {
    return pure_depth(compose(g, f), finest);
}

DepthRelationReport depth_relation_report(const Partition& finest) {
    const double n = finest.n();
    const double h = finest.height();
    const double w = finest.width();
    const double r = finest.rank();
    const double eps = 1e-9;

    DepthRelationReport rep;
    auto add = [&](const char* name, double lo, double v, double hi) {
        bool ok = lo <= v + eps && v <= hi + eps;
        rep.entries.push_back({name, lo, v, hi, ok});
        rep.all_ok = rep.all_ok && ok;
    };
    add("n/w <= h <= n+1-w", n / w, h, n + 1 - w);
    add("n/h <= w <= n+1-h", n / h, w, n + 1 - h);
    add("n/h-h <= r <= n+1-2h", n / h - h, r, n + 1 - 2 * h);
    add("-(n+1)+2w <= r <= w-n/w", -(n + 1) + 2 * w, r, w - n / w);
    add("sqrt(r^2+4n)-r <= 2h <= n+1-r", std::sqrt(r * r + 4 * n) - r, 2 * h,
        n + 1 - r);
    add("sqrt(r^2+4n)+r <= 2w <= n+1+r", std::sqrt(r * r + 4 * n) + r, 2 * w,
        n + 1 + r);
    return rep;
}

}  // namespace entdepth
