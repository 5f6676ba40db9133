#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace entdepth {

/// Largest n for which exhaustive enumeration over all partitions is allowed.
inline constexpr int kMaxEnumerationN = 40;

/// An integer partition of n: a multiset of positive parts, stored as a
/// weakly decreasing vector. Models the sizes of mutually separable
/// subsystems of an n-particle system.
class Partition {
  public:
    /// Canonicalizes (sorts weakly decreasing) and validates: parts >= 1.
    explicit Partition(std::vector<int> parts);

    /// {1,1,...,1}: the finest partition of n.
    static Partition bottom(int n);
    /// {n}: the coarsest partition of n.
    static Partition top(int n);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }

    int height() const { return static_cast<int>(parts_.size()); }
    int width() const { return parts_.front(); }
    int rank() const { return width() - height(); }
    int min_part() const { return parts_.back(); }
    /// Sum of squared parts.
    long long square_sum() const;

    bool is_bottom() const { return parts_.front() == 1; }
    bool is_top() const { return parts_.size() == 1; }

    std::string to_string() const;  ///< e.g. "3+2+1"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    /// Lexicographic on part vectors; enumeration emits in decreasing order.
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

  private:
    std::vector<int> parts_;
    int n_;
};

/// All partitions of n in reverse-lexicographic order: top first, bottom last.
/// Throws std::domain_error for n outside [1, limit].
std::vector<Partition> enumerate_partitions(int n, int limit = kMaxEnumerationN);

/// Partition count p(n) by the Euler pentagonal-number recurrence.
long long partition_count(int n);

/// Conjugate partition (transpose of the Young diagram).
Partition conjugate(const Partition& p);

/// Refinement order: true iff `coarse` is obtained from `fine` by grouping
/// parts of `fine` into |coarse| groups with matching sums. Backtracking
/// assignment, largest part first, with capacity pruning, symmetry breaking
/// over equal bins and memoization of failed states.
/// Throws std::invalid_argument when the two totals differ.
bool refines(const Partition& fine, const Partition& coarse);

/// Dominance (majorization) order: every prefix sum of `low` (weakly
/// decreasing, zero padded) is <= that of `high`.
/// Throws std::invalid_argument when the two totals differ.
bool dominated_by(const Partition& low, const Partition& high);

/// All covering pairs (finer, coarser) of the refinement order on the
/// partitions of n. A cover merges exactly two parts.
std::vector<std::pair<Partition, Partition>> refinement_covers(
    int n, int limit = kMaxEnumerationN);

/// Upper covers of p in the dominance order: single-box moves from the end
/// of row j to the end of row i < j, allowed when j == i+1 or rows i..j are
/// equal, kept only when the result is still weakly decreasing.
std::vector<Partition> dominance_covers(const Partition& p);

/// All covering pairs (dominated, dominating) of the dominance order on the
/// partitions of n.
std::vector<std::pair<Partition, Partition>> dominance_cover_pairs(
    int n, int limit = kMaxEnumerationN);

enum class OrderKind { refinement, dominance };

/// Covering graph of one of the two orders. Nodes are all partitions of n in
/// enumeration order; edges are index pairs (finer, coarser) respectively
/// (dominated, dominating).
struct HasseGraph {
    int n = 0;
    OrderKind kind = OrderKind::refinement;
    std::vector<Partition> nodes;
    std::vector<std::pair<int, int>> edges;
};

HasseGraph hasse_graph(int n, OrderKind kind, int limit = kMaxEnumerationN);

/// DOT rendering; one node per partition labelled "3+2+1", stable order.
std::string hasse_to_dot(const HasseGraph& g);
/// JSON rendering: {"nodes":[{"parts":..,"h":..,"w":..,"r":..,"s2":..}],
///                  "edges":[[i,j],...]}.
std::string hasse_to_json(const HasseGraph& g);

}  // namespace entdepth
