#include "entdepth/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace entdepth {

// --- MonotoneTransform --- //

MonotoneTransform MonotoneTransform::affine(double a, double b) {
    if (a == 0.0) throw std::invalid_argument("affine transform needs a != 0");
    return {Kind::affine, a, b};
}
MonotoneTransform MonotoneTransform::log() { return {Kind::log, 0, 0}; }
MonotoneTransform MonotoneTransform::exp() { return {Kind::exp, 0, 0}; }
MonotoneTransform MonotoneTransform::power(double p) {
    if (p == 0.0) throw std::invalid_argument("power transform needs p != 0");
    return {Kind::power, p, 0};
}
MonotoneTransform MonotoneTransform::reciprocal() {
    return {Kind::reciprocal, 0, 0};
}
MonotoneTransform MonotoneTransform::negate() { return {Kind::negate, 0, 0}; }
MonotoneTransform MonotoneTransform::floor_grid(double step) {
    if (step <= 0.0) throw std::invalid_argument("floor_grid needs step > 0");
    return {Kind::floor_grid, step, 0};
}

bool MonotoneTransform::increasing() const {
    switch (kind) {
        case Kind::affine: return a > 0;
        case Kind::log:
        case Kind::exp:
        case Kind::floor_grid: return true;
        case Kind::power: return a > 0;
        case Kind::reciprocal:
        case Kind::negate: return false;
    }
    return true;
}

bool MonotoneTransform::strictly_monotone() const {
    return kind != Kind::floor_grid;
}

MonotoneTransform::Shape MonotoneTransform::shape() const {
    switch (kind) {
        case Kind::affine:
        case Kind::negate: return Shape::affine;
        case Kind::log: return Shape::concave;
        case Kind::exp: return Shape::convex;
        case Kind::power:
            if (a >= 1.0 || a < 0.0) return Shape::convex;  // on u > 0
            return Shape::concave;                          // 0 < p < 1
        case Kind::reciprocal: return Shape::convex;        // on u > 0
        case Kind::floor_grid: return Shape::none;
    }
    return Shape::none;
}

double MonotoneTransform::operator()(double u) const {
    switch (kind) {
        case Kind::affine: return a * u + b;
        case Kind::log: return std::log(u);
        case Kind::exp: return std::exp(u);
        case Kind::power: return std::pow(u, a);
        case Kind::reciprocal: return 1.0 / u;
        case Kind::negate: return -u;
        case Kind::floor_grid: return a * std::floor(u / a);
    }
    return u;
}

std::string MonotoneTransform::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::affine: os << a << "*u+" << b; break;
        case Kind::log: os << "ln(u)"; break;
        case Kind::exp: os << "exp(u)"; break;
        case Kind::power: os << "u^" << a; break;
        case Kind::reciprocal: os << "1/u"; break;
        case Kind::negate: os << "-u"; break;
        case Kind::floor_grid: os << a << "*floor(u/" << a << ")"; break;
    }
    return os.str();
}

// --- factories --- //

namespace {

GenFun make(Family fam, Direction dir, bool dom, bool exact) {
    GenFun f;
    f.family = fam;
    f.direction = dir;
    f.dominance_monotone = dom;
    f.exact_integer = exact;
    return f;
}

[[noreturn]] void range_error(const std::string& what) {
    throw std::domain_error("generator parameter out of range: " + what);
}

bool is_integer(double v) { return v == std::floor(v); }

}  // namespace

GenFun height_fn() {
    return make(Family::height, Direction::decreasing, true, true);
}
GenFun width_fn() {
    return make(Family::width, Direction::increasing, true, true);
}
GenFun rank_fn() {
    return make(Family::rank, Direction::increasing, true, true);
}
GenFun toughness_fn() {
    return make(Family::toughness, Direction::increasing, false, true);
}

GenFun top_sum_fn(int m) {
    if (m < 1) range_error("w_m needs m >= 1");
    GenFun f = make(Family::top_sum, Direction::increasing, true, true);
    f.m = m;
    return f;
}

GenFun bottom_sum_fn(int m) {
    if (m < 1) range_error("t_m needs m >= 1");
    GenFun f = make(Family::bottom_sum, Direction::increasing, false, true);
    f.m = m;
    return f;
}

GenFun power_sum_fn(QParam q) {
    if (q.kind == QKind::plus_inf) {
        range_error("s_q has no finite limit at q=+inf");
    }
    GenFun f = make(Family::power_sum, Direction::increasing, false, false);
    f.q = q;
    if (q.kind == QKind::minus_inf) {
        // counts the size-one parts
        f.direction = Direction::decreasing;
        f.exact_integer = true;
        return f;
    }
    if (q.value == 1.0) range_error("s_1 is constant");
    f.direction = q.value > 1.0 ? Direction::increasing : Direction::decreasing;
    f.dominance_monotone = q.value >= 0.0;
    f.exact_integer = q.value >= 0.0 && is_integer(q.value);
    return f;
}

GenFun q_sum_fn(QParam q) {
    GenFun f = make(Family::q_sum, Direction::increasing, false, false);
    f.q = q;
    if (q.kind == QKind::plus_inf) {  // max of parts
        f.dominance_monotone = true;
        f.exact_integer = true;
        return f;
    }
    if (q.kind == QKind::minus_inf) {  // min of parts
        f.exact_integer = true;
        return f;
    }
    if (q.value == 0.0) range_error("N_q has no limit at q=0");
    if (q.value == 1.0) range_error("N_1 is constant");
    f.direction = (q.value < 0.0 || q.value > 1.0) ? Direction::increasing
                                                   : Direction::decreasing;
    f.dominance_monotone = q.value > 0.0;
    return f;
}

GenFun q_mean_fn(QParam q) {
    GenFun f = make(Family::q_mean, Direction::increasing, false, false);
    f.q = q;
    if (q.kind == QKind::plus_inf) {  // max
        f.dominance_monotone = true;
        f.exact_integer = true;
        return f;
    }
    if (q.kind == QKind::minus_inf) {  // min
        f.exact_integer = true;
        return f;
    }
    if (q.value < 1.0) range_error("M_q is monotone only for q >= 1");
    f.dominance_monotone = true;
    return f;
}

GenFun unchecked_q_mean(double q) {
    GenFun f = make(Family::q_mean, Direction::increasing, false, false);
    f.q = q;
    f.range_checked = false;
    return f;
}

GenFun tsallis_fn(double q) {
    if (q == 1.0) return shannon_fn();
    GenFun f = make(Family::tsallis, Direction::decreasing, q >= 0.0, false);
    f.q = q;
    return f;
}

GenFun renyi_fn(QParam q) {
    GenFun f = make(Family::renyi, Direction::decreasing, false, false);
    f.q = q;
    if (q.kind == QKind::plus_inf) {
        f.dominance_monotone = true;
        return f;
    }
    if (q.kind == QKind::minus_inf) return f;
    if (q.value == 1.0) return shannon_fn();
    f.dominance_monotone = q.value >= 0.0;
    return f;
}

GenFun shannon_fn() {
    return make(Family::shannon, Direction::decreasing, true, false);
}

GenFun renyi_exp_fn(QParam q) {
    GenFun f = make(Family::renyi_exp, Direction::decreasing, false, false);
    f.q = q;
    if (q.kind == QKind::plus_inf) {
        f.dominance_monotone = true;
        return f;
    }
    if (q.kind == QKind::minus_inf) return f;
    f.dominance_monotone = q.value >= 0.0;
    return f;
}

GenFun dim_fn(double b) {
    if (b <= 0.0 || (b > 1.0 && b < 2.0)) {
        range_error("Dim_b is monotone only for 0<b<=1 or b>=2");
    }
    GenFun f = make(Family::dim,
                    b >= 2.0 ? Direction::increasing : Direction::decreasing,
                    b >= 2.0, is_integer(b) && b >= 1.0);
    f.q = b;
    return f;
}

GenFun unchecked_dim(double b) {
    GenFun f = make(Family::dim, Direction::increasing, false, false);
    f.q = b;
    f.range_checked = false;
    return f;
}

GenFun dim_proj_fn(double b) {
    if (b <= 0.0) range_error("Dim'_b needs b > 0");
    GenFun f = make(Family::dim_proj, Direction::increasing, true,
                    is_integer(b) && b >= 1.0);
    f.q = b;
    return f;
}

GenFun dof_fn(double b) {
    if (b <= 0.0 || b == 1.0 || (b > 1.0 && b < 2.0)) {
        range_error("DoF_b is monotone only for 0<b<1 or b>=2");
    }
    GenFun f = make(Family::dof, Direction::increasing, b >= 2.0, false);
    f.q = b;
    return f;
}

GenFun dof_proj_fn(double b) {
    if (b <= 1.0) range_error("DoF'_b needs b > 1");
    GenFun f = make(Family::dof_proj, Direction::increasing, true, false);
    f.q = b;
    return f;
}

GenFun squareability_fn() {
    return make(Family::squareability, Direction::increasing, true, true);
}

GenFun avg_size_fn() {
    return make(Family::avg_size, Direction::increasing, true, false);
}

GenFun compose(const MonotoneTransform& g, const GenFun& f) {
    GenFun c;
    c.family = Family::composed;
    c.inner = std::make_shared<const GenFun>(f);
    c.transform = g;
    c.direction = g.increasing() ? f.direction : flipped(f.direction);
    c.dominance_monotone = f.dominance_monotone;
    c.exact_integer = false;
    return c;
}

GenFun lookup_fn(const GenFun& f,
                 std::vector<std::pair<double, double>> value_to_image) {
    for (size_t i = 0; i + 1 < value_to_image.size(); ++i) {
        if (value_to_image[i].second > value_to_image[i + 1].second) {
            throw std::invalid_argument(
                "lookup table must be non-decreasing bottom to top");
        }
    }
    GenFun c;
    c.family = Family::lookup;
    c.inner = std::make_shared<const GenFun>(f);
    c.table = std::make_shared<const std::vector<std::pair<double, double>>>(
        std::move(value_to_image));
    c.direction = Direction::increasing;
    c.dominance_monotone = f.dominance_monotone;
    c.exact_integer = false;
    return c;
}

std::string GenFun::name() const {
    std::ostringstream os;
    auto qstr = [&]() -> std::string {
        if (q.kind == QKind::plus_inf) return "inf";
        if (q.kind == QKind::minus_inf) return "-inf";
        std::ostringstream v;
        v << q.value;
        return v.str();
    };
    switch (family) {
        case Family::height: return "height";
        case Family::width: return "width";
        case Family::rank: return "rank";
        case Family::toughness: return "toughness";
        case Family::top_sum: os << "w_m:m=" << m; break;
        case Family::bottom_sum: os << "t_m:m=" << m; break;
        case Family::power_sum: os << "s_q:q=" << qstr(); break;
        case Family::q_sum: os << "q_sum:q=" << qstr(); break;
        case Family::q_mean: os << "q_mean:q=" << qstr(); break;
        case Family::tsallis: os << "tsallis:q=" << qstr(); break;
        case Family::renyi: os << "renyi:q=" << qstr(); break;
        case Family::shannon: return "shannon";
        case Family::renyi_exp: os << "p_q:q=" << qstr(); break;
        case Family::dim: os << "dim:b=" << qstr(); break;
        case Family::dim_proj: os << "dimp:b=" << qstr(); break;
        case Family::dof: os << "dof:b=" << qstr(); break;
        case Family::dof_proj: os << "dofp:b=" << qstr(); break;
        case Family::squareability: return "squareability";
        case Family::avg_size: return "avg";
        case Family::composed:
            os << "compose[" << transform.to_string() << "](" << inner->name()
               << ")";
            break;
        case Family::lookup: os << "bound[" << inner->name() << "]"; break;
    }
    return os.str();
}

// --- evaluation --- //

namespace {

long long ipow_checked(long long base, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<long long>::max() / base) {
            throw std::domain_error("integer power overflow");
        }
        r *= base;
    }
    return r;
}

double sum_pow(const Partition& p, double q) {
    if (q >= 0.0 && q == std::floor(q) && q < 63) {
        // exact integer accumulation when it fits
        try {
            long long s = 0;
            for (int x : p.parts()) {
                long long t = ipow_checked(x, static_cast<long long>(q));
                if (s > std::numeric_limits<long long>::max() - t) {
                    throw std::domain_error("overflow");
                }
                s += t;
            }
            return static_cast<double>(s);
        } catch (const std::domain_error&) {
            // fall through to floating point
        }
    }
    double s = 0.0;
    for (int x : p.parts()) s += std::pow(static_cast<double>(x), q);
    return s;
}

double shannon_value(const Partition& p) {
    const double n = p.n();
    double s = 0.0;
    for (int x : p.parts()) s -= (x / n) * std::log(x / n);
    return s;
}

int count_unit_parts(const Partition& p) {
    int c = 0;
    for (int x : p.parts()) c += x == 1;
    return c;
}

double dim_value(const Partition& p, double b) {
    if (b >= 1.0 && b == std::floor(b)) {
        try {
            long long s = 0;
            for (int x : p.parts()) {
                s += ipow_checked(static_cast<long long>(b), x);
            }
            return static_cast<double>(s);
        } catch (const std::domain_error&) {
        }
    }
    double s = 0.0;
    for (int x : p.parts()) s += std::pow(b, x);
    return s;
}

}  // namespace

double evaluate(const GenFun& f, const Partition& p) {
    const double n = p.n();
    switch (f.family) {
        case Family::height: return p.height();
        case Family::width: return p.width();
        case Family::rank: return p.rank();
        case Family::toughness: return p.min_part();
        case Family::top_sum: {
            if (f.m >= p.height()) return n;
            long long s = 0;
            const auto& parts = p.parts();
            for (int i = 0; i < f.m; ++i) s += parts[static_cast<size_t>(i)];
            return static_cast<double>(s);
        }
        case Family::bottom_sum: {
            if (f.m >= p.height()) return n;
            long long s = 0;
            const auto& parts = p.parts();
            for (int i = 0; i < f.m; ++i) {
                s += parts[parts.size() - 1 - static_cast<size_t>(i)];
            }
            return static_cast<double>(s);
        }
        case Family::power_sum:
            if (f.q.kind == QKind::minus_inf) return count_unit_parts(p);
            return sum_pow(p, f.q.value);
        case Family::q_sum:
            if (f.q.kind == QKind::plus_inf) return p.width();
            if (f.q.kind == QKind::minus_inf) return p.min_part();
            return std::pow(sum_pow(p, f.q.value), 1.0 / f.q.value);
        case Family::q_mean:
            if (f.q.kind == QKind::plus_inf) return p.width();
            if (f.q.kind == QKind::minus_inf) return p.min_part();
            if (f.q.value == 0.0) {  // geometric mean
                double s = 0.0;
                for (int x : p.parts()) s += std::log(static_cast<double>(x));
                return std::exp(s / p.height());
            }
            return std::pow(sum_pow(p, f.q.value) / p.height(), 1.0 / f.q.value);
        case Family::tsallis:
            return (sum_pow(p, f.q.value) / std::pow(n, f.q.value) - 1.0) /
                   (1.0 - f.q.value);
        case Family::renyi:
            if (f.q.kind == QKind::plus_inf) {
                return std::log(n) - std::log(p.width());
            }
            if (f.q.kind == QKind::minus_inf) {
                return std::log(n) - std::log(p.min_part());
            }
            if (f.q.value == 1.0) return shannon_value(p);
            return (std::log(sum_pow(p, f.q.value)) -
                    f.q.value * std::log(n)) /
                   (1.0 - f.q.value);
        case Family::shannon: return shannon_value(p);
        case Family::renyi_exp:
            if (f.q.kind == QKind::plus_inf) return n / p.width();
            if (f.q.kind == QKind::minus_inf) return n / p.min_part();
            if (f.q.value == 1.0) return std::exp(shannon_value(p));
            return std::exp((std::log(sum_pow(p, f.q.value)) -
                             f.q.value * std::log(n)) /
                            (1.0 - f.q.value));
        case Family::dim: return dim_value(p, f.q.value);
        case Family::dim_proj:
            return dim_value(p, f.q.value) - p.height() + 1.0;
        case Family::dof:
            return std::log(dim_value(p, f.q.value)) / std::log(f.q.value);
        case Family::dof_proj:
            return std::log(dim_value(p, f.q.value) - p.height() + 1.0) /
                   std::log(f.q.value);
        case Family::squareability:
            return static_cast<double>(p.square_sum());
        case Family::avg_size:
            return static_cast<double>(p.square_sum()) / n;
        case Family::composed: return f.transform(evaluate(*f.inner, p));
        case Family::lookup: {
            double v = evaluate(*f.inner, p);
            // exact or tolerant match within the table
            for (const auto& [key, image] : *f.table) {
                if (v == key ||
                    std::abs(v - key) <=
                        1e-9 * std::max({1.0, std::abs(v), std::abs(key)})) {
                    return image;
                }
            }
            throw std::domain_error("lookup: value not present in table");
        }
    }
    throw std::logic_error("unhandled generator family");
}

long long evaluate_int(const GenFun& f, const Partition& p) {
    if (!f.exact_integer) {
        throw std::domain_error("evaluate_int: family is not integer exact");
    }
    switch (f.family) {
        case Family::height: return p.height();
        case Family::width: return p.width();
        case Family::rank: return p.rank();
        case Family::toughness: return p.min_part();
        case Family::top_sum:
        case Family::bottom_sum:
            return static_cast<long long>(evaluate(f, p));
        case Family::power_sum: {
            if (f.q.kind == QKind::minus_inf) return count_unit_parts(p);
            long long e = static_cast<long long>(f.q.value);
            long long s = 0;
            for (int x : p.parts()) s += ipow_checked(x, e);
            return s;
        }
        case Family::q_sum:
        case Family::q_mean:
            return f.q.kind == QKind::plus_inf ? p.width() : p.min_part();
        case Family::dim: {
            long long b = static_cast<long long>(f.q.value);
            long long s = 0;
            for (int x : p.parts()) s += ipow_checked(b, x);
            return s;
        }
        case Family::dim_proj: {
            long long b = static_cast<long long>(f.q.value);
            long long s = 1;
            for (int x : p.parts()) s += ipow_checked(b, x) - 1;
            return s;
        }
        case Family::squareability: return p.square_sum();
        default: break;
    }
    throw std::domain_error("evaluate_int: family is not integer exact");
}

// --- DownSet --- //

DownSet::DownSet(int n, std::vector<Partition> members)
    : n_(n), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), std::greater<Partition>());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    if (members_.empty()) {
        throw std::invalid_argument("down-set must be nonempty");
    }
    for (const Partition& p : members_) {
        if (p.n() != n_) {
            throw std::invalid_argument("down-set members must share n");
        }
    }
}

DownSet DownSet::unchecked(int n, std::vector<Partition> members) {
    return DownSet(n, std::move(members));
}

DownSet DownSet::down_closure(int n, const std::vector<Partition>& seeds,
                              int limit) {
    std::vector<Partition> members;
    for (const Partition& cand : enumerate_partitions(n, limit)) {
        for (const Partition& seed : seeds) {
            if (refines(cand, seed)) {
                members.push_back(cand);
                break;
            }
        }
    }
    return DownSet(n, std::move(members));
}

DownSet DownSet::principal(const Partition& p, int limit) {
    return down_closure(p.n(), {p}, limit);
}

bool DownSet::contains(const Partition& p) const {
    return std::binary_search(members_.begin(), members_.end(), p,
                              std::greater<Partition>());
}

bool DownSet::is_downward_closed(int limit) const {
    for (const Partition& m : members_) {
        for (const Partition& cand : enumerate_partitions(n_, limit)) {
            if (refines(cand, m) && !contains(cand)) return false;
        }
    }
    return true;
}

// --- level structure --- //

namespace {

constexpr double kLevelRelTol = 1e-9;

bool close_levels(double a, double b) {
    return a == b ||
           std::abs(a - b) <= kLevelRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

std::vector<double> value_range(const GenFun& f, int n, int limit) {
    std::vector<double> vals;
    for (const Partition& p : enumerate_partitions(n, limit)) {
        vals.push_back(evaluate(f, p));
    }
    std::sort(vals.begin(), vals.end());
    std::vector<double> out;
    for (double v : vals) {
        if (out.empty() || !(f.exact_integer ? v == out.back()
                                             : close_levels(v, out.back()))) {
            out.push_back(v);
        }
    }
    return out;
}

double extend_to_downset(const GenFun& f, const DownSet& ds) {
    if (ds.members().empty()) {
        throw std::invalid_argument("extend_to_downset: empty down-set");
    }
    double best = evaluate(f, ds.members().front());
    for (const Partition& p : ds.members()) {
        double v = evaluate(f, p);
        if (f.increasing() ? v > best : v < best) best = v;
    }
    return best;
}

DownSet sublevel_downset(const GenFun& f, double k, int n, int limit) {
    bool attained = false;
    std::vector<Partition> members;
    for (const Partition& p : enumerate_partitions(n, limit)) {
        double v = evaluate(f, p);
        if (close_levels(v, k)) attained = true;
        bool in = f.increasing() ? (v <= k || close_levels(v, k))
                                 : (v >= k || close_levels(v, k));
        if (in) members.push_back(p);
    }
    if (!attained) {
        throw std::domain_error("sublevel_downset: level not attained");
    }
    return DownSet::unchecked(n, std::move(members));
}

std::optional<double> neighbor_level(const GenFun& f, int n, double k,
                                     int limit) {
    std::vector<double> levels = value_range(f, n, limit);
    size_t idx = levels.size();
    for (size_t i = 0; i < levels.size(); ++i) {
        if (f.exact_integer ? levels[i] == k : close_levels(levels[i], k)) {
            idx = i;
            break;
        }
    }
    if (idx == levels.size()) {
        throw std::domain_error("neighbor_level: level not attained");
    }
    if (f.increasing()) {
        if (idx == 0) return std::nullopt;  // k = f(bottom)
        return levels[idx - 1];
    }
    if (idx + 1 == levels.size()) return std::nullopt;  // k = f(bottom)
    return levels[idx + 1];
}

// --- monotonicity verification --- //

namespace {

MonotoneReport verify_over_pairs(
    const GenFun& f,
    const std::vector<std::pair<Partition, Partition>>& pairs) {
    MonotoneReport rep;
    for (const auto& [lo, hi] : pairs) {
        double a = evaluate(f, lo);
        double b = evaluate(f, hi);
        ++rep.pairs_checked;
        double slack = 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
        bool ok = f.increasing() ? a <= b + slack : a >= b - slack;
        if (!ok) rep.violations.push_back({lo, hi, a, b});
    }
    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace

MonotoneReport verify_refinement_monotone(const GenFun& f, int n, int limit) {
    return verify_over_pairs(f, refinement_covers(n, limit));
}

MonotoneReport verify_dominance_monotone(const GenFun& f, int n, int limit) {
    return verify_over_pairs(f, dominance_cover_pairs(n, limit));
}

// --- parsing --- //

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

QParam parse_q(const std::string& tok) {
    if (tok == "inf" || tok == "+inf") return QParam::plus_inf();
    if (tok == "-inf") return QParam::minus_inf();
    return QParam(std::stod(tok));
}

double parse_named(const std::string& tok, const std::string& key) {
    auto kv = split(tok, '=');
    if (kv.size() != 2 || kv[0] != key) {
        throw std::invalid_argument("expected " + key + "=<value>, got " + tok);
    }
    return std::stod(kv[1]);
}

QParam parse_named_q(const std::string& tok, const std::string& key) {
    auto kv = split(tok, '=');
    if (kv.size() != 2 || kv[0] != key) {
        throw std::invalid_argument("expected " + key + "=<value>, got " + tok);
    }
    return parse_q(kv[1]);
}

GenFun parse_simple(const std::vector<std::string>& toks) {
    const std::string& fam = toks.at(0);
    if (fam == "height") return height_fn();
    if (fam == "width") return width_fn();
    if (fam == "rank") return rank_fn();
    if (fam == "toughness") return toughness_fn();
    if (fam == "shannon") return shannon_fn();
    if (fam == "squareability" || fam == "s2") return squareability_fn();
    if (fam == "avg") return avg_size_fn();
    if (fam == "w_m") {
        return top_sum_fn(static_cast<int>(parse_named(toks.at(1), "m")));
    }
    if (fam == "t_m") {
        return bottom_sum_fn(static_cast<int>(parse_named(toks.at(1), "m")));
    }
    if (fam == "s_q") return power_sum_fn(parse_named_q(toks.at(1), "q"));
    if (fam == "q_sum" || fam == "N_q") {
        return q_sum_fn(parse_named_q(toks.at(1), "q"));
    }
    if (fam == "q_mean" || fam == "M_q") {
        return q_mean_fn(parse_named_q(toks.at(1), "q"));
    }
    if (fam == "tsallis") return tsallis_fn(parse_named(toks.at(1), "q"));
    if (fam == "renyi") return renyi_fn(parse_named_q(toks.at(1), "q"));
    if (fam == "p_q" || fam == "P_q") {
        return renyi_exp_fn(parse_named_q(toks.at(1), "q"));
    }
    if (fam == "dim") return dim_fn(parse_named(toks.at(1), "b"));
    if (fam == "dimp") return dim_proj_fn(parse_named(toks.at(1), "b"));
    if (fam == "dof") return dof_fn(parse_named(toks.at(1), "b"));
    if (fam == "dofp") return dof_proj_fn(parse_named(toks.at(1), "b"));
    throw std::invalid_argument("unknown generator family: " + fam);
}

}  // namespace

GenFun parse_genfun(const std::string& spec, int n) {
    auto toks = split(spec, ':');
    if (toks.empty()) throw std::invalid_argument("empty generator spec");
    if (toks[0] != "compose") return parse_simple(toks);
    if (toks.size() < 3) {
        throw std::invalid_argument("compose needs a transform and a generator");
    }
    const std::string& tr = toks[1];
    GenFun inner =
        parse_simple(std::vector<std::string>(toks.begin() + 2, toks.end()));
    if (tr == "negate") return compose(MonotoneTransform::negate(), inner);
    if (tr == "ln") return compose(MonotoneTransform::log(), inner);
    if (tr == "exp") return compose(MonotoneTransform::exp(), inner);
    if (tr == "recip") return compose(MonotoneTransform::reciprocal(), inner);
    if (tr.rfind("power=", 0) == 0) {
        return compose(MonotoneTransform::power(std::stod(tr.substr(6))), inner);
    }
    if (tr.rfind("affine=", 0) == 0) {
        auto ab = split(tr.substr(7), ',');
        if (ab.size() != 2) {
            throw std::invalid_argument("affine transform needs a,b");
        }
        return compose(
            MonotoneTransform::affine(std::stod(ab[0]), std::stod(ab[1])),
            inner);
    }
    if (tr == "over_n") {
        if (n <= 0) throw std::invalid_argument("transform over_n needs --n");
        return compose(MonotoneTransform::affine(1.0 / n, 0.0), inner);
    }
    if (tr == "neglog2") {
        // u -> -ln(u / n^2) = (2 ln n) - ln u
        if (n <= 0) throw std::invalid_argument("transform neglog2 needs --n");
        return compose(MonotoneTransform::affine(-1.0, 2.0 * std::log(n)),
                       compose(MonotoneTransform::log(), inner));
    }
    throw std::invalid_argument("unknown transform: " + tr);
}

}  // namespace entdepth
