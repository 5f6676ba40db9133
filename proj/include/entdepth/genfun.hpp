#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entdepth/partition.hpp"

namespace entdepth {

enum class Direction { increasing, decreasing };

inline Direction flipped(Direction d) {
    return d == Direction::increasing ? Direction::decreasing
                                      : Direction::increasing;
}

/// Infinite parameter values are explicit sentinels dispatching to closed
/// forms; floating infinities never enter the formulas.
enum class QKind { finite, plus_inf, minus_inf };

struct QParam {
    QKind kind = QKind::finite;
    double value = 0.0;

    QParam() = default;
    QParam(double v) : kind(QKind::finite), value(v) {}  // NOLINT(implicit)
    static QParam plus_inf() { return QParam(QKind::plus_inf); }
    static QParam minus_inf() { return QParam(QKind::minus_inf); }

  private:
    explicit QParam(QKind k) : kind(k) {}
};

enum class Family {
    height,
    width,
    rank,
    toughness,
    top_sum,     // sum of the m largest parts
    bottom_sum,  // sum of the m smallest parts
    power_sum,   // sum of q-th powers of parts
    q_sum,       // power sum to the 1/q
    q_mean,      // q-th power mean of the parts
    tsallis,
    renyi,
    shannon,
    renyi_exp,  // exponential of the Renyi function
    dim,        // sum of b^x over parts
    dim_proj,   // sum of (b^x - 1) + 1
    dof,        // log_b of dim
    dof_proj,   // log_b of dim_proj
    squareability,
    avg_size,  // square sum over n
    composed,
    lookup,  // monotone table over an inner function's values
};

/// A closed enumeration of real monotone maps, so direction and
/// convex/concave shape are always known for composition.
struct MonotoneTransform {
    enum class Kind { affine, log, exp, power, reciprocal, negate, floor_grid };
    enum class Shape { affine, convex, concave, none };

    Kind kind = Kind::affine;
    double a = 1.0;  // slope / exponent / grid step
    double b = 0.0;  // offset

    static MonotoneTransform affine(double a, double b);
    static MonotoneTransform log();
    static MonotoneTransform exp();
    static MonotoneTransform power(double p);
    static MonotoneTransform reciprocal();
    static MonotoneTransform negate();
    static MonotoneTransform floor_grid(double step);

    bool increasing() const;
    bool strictly_monotone() const;
    Shape shape() const;
    double operator()(double u) const;
    std::string to_string() const;
};

/// Descriptor of a generator function over integer partitions. Immutable;
/// construct through the factory functions below, which validate parameter
/// ranges and fix the monotonicity direction.
struct GenFun {
    Family family = Family::width;
    QParam q;        // q or b parameter where applicable
    int m = 0;       // m parameter of top_sum / bottom_sum
    Direction direction = Direction::increasing;
    bool dominance_monotone = false;
    bool exact_integer = false;
    bool range_checked = true;

    // composed
    std::shared_ptr<const GenFun> inner;
    MonotoneTransform transform;

    // lookup: value -> image, in the inner function's bottom-to-top order
    std::shared_ptr<const std::vector<std::pair<double, double>>> table;

    std::string name() const;
    bool increasing() const { return direction == Direction::increasing; }
};

GenFun height_fn();
GenFun width_fn();
GenFun rank_fn();
GenFun toughness_fn();
GenFun top_sum_fn(int m);
GenFun bottom_sum_fn(int m);
GenFun power_sum_fn(QParam q);
GenFun q_sum_fn(QParam q);
GenFun q_mean_fn(QParam q);
GenFun tsallis_fn(double q);
GenFun renyi_fn(QParam q);
GenFun shannon_fn();
GenFun renyi_exp_fn(QParam q);
GenFun dim_fn(double b);
GenFun dim_proj_fn(double b);
GenFun dof_fn(double b);
GenFun dof_proj_fn(double b);
GenFun squareability_fn();
GenFun avg_size_fn();

/// Bypasses the range guard; only for reproducing documented monotonicity
/// violations through the verify_* operations.
GenFun unchecked_q_mean(double q);
GenFun unchecked_dim(double b);

/// g after f. Direction flips iff g is decreasing; the dominance flag and
/// the shape tag of g are carried along.
GenFun compose(const MonotoneTransform& g, const GenFun& f);

/// Realizes a monotone value table over f as a generator function
/// (used for bound-induced properties). Always increasing.
GenFun lookup_fn(const GenFun& f,
                 std::vector<std::pair<double, double>> value_to_image);

/// Parses CLI generator specs like "width", "s_q:q=2", "renyi:q=inf",
/// "dim:b=2", "w_m:m=2", "compose:neglog2:s_q:q=2". Named transforms that
/// depend on the system size resolve against `n` (0 = unavailable).
GenFun parse_genfun(const std::string& spec, int n = 0);

/// Value of f at a partition.
double evaluate(const GenFun& f, const Partition& p);

/// Integer value for exact-integer families; throws std::domain_error when
/// the family is not exact or the value overflows.
long long evaluate_int(const GenFun& f, const Partition& p);

/// A set of partitions of one n closed downward under refinement.
class DownSet {
  public:
    /// Wraps without closure verification (trusted monotone construction).
    static DownSet unchecked(int n, std::vector<Partition> members);
    /// Closes the seed set downward over all partitions of n.
    static DownSet down_closure(int n, const std::vector<Partition>& seeds,
                                int limit = kMaxEnumerationN);
    static DownSet principal(const Partition& p, int limit = kMaxEnumerationN);

    int n() const { return n_; }
    const std::vector<Partition>& members() const { return members_; }
    bool contains(const Partition& p) const;
    /// Exhaustively verifies downward closure (test support).
    bool is_downward_closed(int limit = kMaxEnumerationN) const;

  private:
    DownSet(int n, std::vector<Partition> members);
    int n_ = 0;
    std::vector<Partition> members_;  // enumeration order
};

/// Distinct values of f over the partitions of n, ascending. Exact families
/// deduplicate exactly; real-valued ones with relative tolerance 1e-9.
std::vector<double> value_range(const GenFun& f, int n,
                                int limit = kMaxEnumerationN);

/// Extension of f to down-sets: max over members for increasing f, min for
/// decreasing f. Throws std::invalid_argument on an empty set.
double extend_to_downset(const GenFun& f, const DownSet& ds);

/// {p : f(p) <= k} for increasing f, {p : f(p) >= k} for decreasing f.
/// k must be an attained value (level error otherwise).
DownSet sublevel_downset(const GenFun& f, double k, int n,
                         int limit = kMaxEnumerationN);

/// The attained value adjacent to k on the bottom side: the previous value
/// for increasing f, the next for decreasing f. Empty at k = f(bottom).
std::optional<double> neighbor_level(const GenFun& f, int n, double k,
                                     int limit = kMaxEnumerationN);

struct MonotoneViolation {
    Partition lower;   // finer / dominated
    Partition upper;   // coarser / dominating
    double f_lower;
    double f_upper;
};

struct MonotoneReport {
    bool ok = true;
    int pairs_checked = 0;
    std::vector<MonotoneViolation> violations;
};

/// Checks f's declared direction (non-strictly) on every covering pair of
/// the refinement order on the partitions of n.
MonotoneReport verify_refinement_monotone(const GenFun& f, int n,
                                          int limit = kMaxEnumerationN);

/// Same over the covering pairs of the dominance order.
MonotoneReport verify_dominance_monotone(const GenFun& f, int n,
                                         int limit = kMaxEnumerationN);

}  // namespace entdepth
