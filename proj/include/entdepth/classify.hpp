#pragma once

#include <optional>
#include <vector>

#include "entdepth/genfun.hpp"
#include "entdepth/partition.hpp"

namespace entdepth {

struct EnsembleMember {
    double weight;     // in (0, 1]
    Partition finest;  // exact finest separating type of the pure member
};

/// Separability structure of one pure convex decomposition: weighted finest
/// partition types, weights summing to one.
class Ensemble {
  public:
    explicit Ensemble(std::vector<EnsembleMember> members);

    int n() const { return n_; }
    const std::vector<EnsembleMember>& members() const { return members_; }

  private:
    int n_;
    std::vector<EnsembleMember> members_;
};

struct ClassLabel {
    GenFun f;
    double k = 0.0;
    std::optional<double> k_neighbor;  // absent at k = f(bottom)
};

/// Depth of a pure state with finest separating type `finest`: just
/// f(finest), the extremal attained level whose down-set admits the state.
double pure_depth(const GenFun& f, const Partition& finest);

/// Level-set class label: the depth value plus the adjacent attained level
/// on the bottom side.
ClassLabel class_of(const GenFun& f, const Partition& finest,
                    int limit = kMaxEnumerationN);

/// Depth certified by this decomposition: max over members for increasing
/// f, min for decreasing f. An upper/lower bound on the state's depth,
/// exact when the decomposition is optimal.
double ensemble_depth(const GenFun& f, const Ensemble& e);

/// Decomposition-averaged depth: an upper (increasing f) / lower
/// (decreasing f) bound on the depth of formation.
double ensemble_avg_depth(const GenFun& f, const Ensemble& e);

/// Depth of the transformed property (g after f); equals g applied to the
/// plain depth exactly.
double depth_transform(const MonotoneTransform& g, const GenFun& f,
                       const Partition& finest);

/// The two-sided inequalities among partitionability, producibility and
/// stretchability depths, evaluated at the partition level.
struct DepthRelationEntry {
    const char* name;
    double lower, value, upper;
    bool ok;
};

struct DepthRelationReport {
    std::vector<DepthRelationEntry> entries;
    bool all_ok = true;
};

DepthRelationReport depth_relation_report(const Partition& finest);

}  // namespace entdepth
