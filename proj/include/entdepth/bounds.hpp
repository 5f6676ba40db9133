#pragma once

#include <string>
#include <utility>
#include <vector>

#include "entdepth/classify.hpp"
#include "entdepth/genfun.hpp"
#include "entdepth/partition.hpp"

namespace entdepth {

/// Brute force over sub-level sets is allowed up to this n by default.
inline constexpr int kMaxBruteForceN = 30;

/// One row of a Fisher-information bound curve: the attained level, the
/// exact maximum of the square sum over its down-set, and every partition
/// achieving it.
struct BoundRow {
    double k = 0.0;
    long long b = 0;
    std::vector<Partition> witnesses;
};

/// Bound curve of a generator function, rows ordered bottom to top.
struct BoundTable {
    GenFun f;
    int n = 0;
    std::vector<BoundRow> rows;
};

/// Exact maximum of the square sum over the (k,f) sub-level set, with all
/// argmax partitions. Enumeration is the primary method; the
/// move-one-unit-to-a-larger-part growth of the square sum serves only as a
/// cross-check (see bounds_move_crosscheck).
std::pair<long long, std::vector<Partition>> bound_bruteforce(
    const GenFun& f, double k, int n, int cap = kMaxBruteForceN);

/// Confirms that no witness admits a single box move (larger part grows by
/// one, smaller shrinks by one) that stays inside the sub-level set; such a
/// move strictly increases the square sum, so witnesses must exclude it.
bool bounds_move_crosscheck(const GenFun& f, double k, int n,
                            const std::vector<Partition>& witnesses,
                            int cap = kMaxBruteForceN);

enum class ClosedBound {
    prod,       // width: floor(n/k) k^2 + (n - floor(n/k) k)^2
    prod_weak,  // width: n k
    part,       // height: k^2 - (2n+1)k + n(n+2)
    str,        // rank: four-case quadratic with two exceptional diagonals
    tgh,        // min part: n^2-2n+2 below the top, n^2 at the top
    sq,         // square sum: k itself
};

/// Closed-form bound value, exact integer arithmetic.
/// Throws std::domain_error for k outside the family's admissible range.
long long bound_closed(ClosedBound family, long long k, int n);

/// Full curve over every attained level of f; non-decreasing bottom to top
/// and ending in n^2 with the trivial partition as sole witness.
BoundTable bound_curve(const GenFun& f, int n, int cap = kMaxBruteForceN);

struct UsefulnessRow {
    double k = 0.0;
    long long b = 0;
    bool strict = false;  // the bound strictly grows past this level
};

struct UsefulnessReport {
    GenFun f;
    int n = 0;
    std::vector<UsefulnessRow> rows;  // bottom to top
    int step_count = 0;               // number of distinct bound values
};

UsefulnessReport usefulness_report(const GenFun& f, int n,
                                   int cap = kMaxBruteForceN);
UsefulnessReport usefulness_report(const BoundTable& table);

/// The bound evaluated at the pure depth of `finest`; equals the depth of
/// the induced property given by the bound table composed over f.
long long induced_depth_bound(const GenFun& f, const Partition& finest, int n,
                              int cap = kMaxBruteForceN);

/// The bound curve packaged as a lookup generator function (the induced
/// property; always increasing).
GenFun bound_composed_fn(const GenFun& f, int n, int cap = kMaxBruteForceN);

/// Levels k whose bound lies strictly below a measured Fisher information;
/// states of those (k,f)-separability classes are ruled out. By bound
/// monotonicity this is a bottom-side prefix of the value range.
/// Throws std::invalid_argument when the measurement exceeds n^2.
std::vector<double> criteria_exclude(const GenFun& f, int n,
                                     double fq_measured,
                                     int cap = kMaxBruteForceN);

/// Decomposition-certified average size of entangled subsystems:
/// sum of p_j * s2(type_j) / n.
double ases(const Ensemble& e);

}  // namespace entdepth
