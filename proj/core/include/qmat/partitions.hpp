#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qmat {

/// Integer partition, weakly decreasing positive parts. The empty partition
/// prints as "-", otherwise parts join with commas: "3,1".
/// Canonical ordering: by weight, then by parts lexicographically descending,
/// so within one weight (n) comes first and (1,...,1) last.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition from_string(const std::string& s);
    std::string to_string() const;

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// i is 0-based; rows past the end are 0.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& other) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
};

using PartitionSet = std::set<Partition>;

/// All partitions of weight n, in canonical order.
std::vector<Partition> partitions_of(int n);

/// All partitions of weight 0..max_weight, in canonical order.
std::vector<Partition> partitions_up_to(int max_weight);

/// r rows of length c.
Partition rectangle_partition(int rows, int c);

/// Hook length formula.
std::uint64_t count_standard_tableaux(const Partition& shape);

/// box[k] is the (row, col), 0-based, holding entry k+1.
struct StandardTableau {
    Partition shape;
    std::vector<std::pair<int, int>> box;

    /// contents[k] = col - row of the box of entry k+1 (so contents[0] = 0).
    std::vector<int> contents() const;
};

std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// Littlewood-Richardson coefficient c^gamma_{lambda,mu} by lattice-word
/// enumeration of skew semistandard tableaux.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& gamma);

/// Semistandard tableaux of the given shape with entries in {1..d}
/// (hook content formula).
std::uint64_t ssyt_count(const Partition& shape, int d);

/// (r,s)-hook semistandard tableaux of the given shape:
/// sum over mu, nu of c^shape_{mu,nu} * ssyt(mu, r) * ssyt(nu', s).
std::uint64_t hook_ssyt_count(const Partition& shape, int r, int s);

/// Column Pieri set C_{lambda,(1^k)}: shapes obtained by adding a vertical
/// k-strip (no two new boxes in one row).
std::vector<Partition> pieri_column_set(const Partition& lambda, int k);

/// beta_k(sigma) = sigma'_1 + ... + sigma'_k = sum_i min(sigma_i, k).
int beta(const Partition& sigma, int k);

/// beta_k(tau) >= beta_k(sigma) for every k up to max(tau_1, sigma_1).
bool beta_geq(const Partition& tau, const Partition& sigma);

/// Upward closure under diagram containment, cut at the weight bound.
PartitionSet dideal_closure(const PartitionSet& gens, int weight_bound);

/// lambda lies in Gamma_{r,s}, i.e. lambda_{r+1} <= s.
bool gamma_rs_contains(int r, int s, const Partition& lambda);

} // namespace qmat
