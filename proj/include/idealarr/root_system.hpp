#pragma once

#include "idealarr/linalg.hpp"
#include "idealarr/mask.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace idealarr {

/// A positive root: coefficients over the simple roots plus exact Euclidean
/// coordinates in the Bourbaki ambient space.
struct Root {
    IntVector simple_coords;
    RationalVector euclid_coords;

    int height() const;
    friend bool operator==(const Root&, const Root&) = default;
};

struct CoeffHash {
    std::size_t operator()(const IntVector& v) const noexcept;
};

/// Parabolic subsystem obtained by deleting one simple root.
struct ParabolicSubsystem {
    std::size_t removed_simple = 0;
    Mask member_mask;      ///< roots with zero coefficient at removed_simple
    Mask complement_mask;  ///< the remaining positive roots
};

class RootSystem;

/// One irreducible component of a parabolic, identified with a standard
/// root system. `simple_map[k]` is the ambient simple index playing the role
/// of simple root k (Bourbaki numbering of the component type), and
/// `root_map[i]` the ambient index of the component's i-th positive root.
struct Component {
    char type = 'A';
    int rank = 0;
    std::vector<std::size_t> simple_map;
    std::vector<std::size_t> root_map;
    std::shared_ptr<const RootSystem> system;

    std::string label() const;
};

/// Irreducible reduced crystallographic root system. Immutable after
/// construction; positive roots are indexed by (height ascending, simple
/// coordinates lexicographically descending), so simple roots come first in
/// Bourbaki order.
class RootSystem {
public:
    RootSystem(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const;

    std::size_t size() const { return roots_.size(); }
    const std::vector<Root>& positive_roots() const { return roots_; }
    const Root& root(std::size_t i) const { return roots_[i]; }
    int height(std::size_t i) const { return heights_[i]; }
    int max_height() const { return heights_.back(); }

    /// Euclidean coordinates scaled by a common denominator to integers.
    const IntVector& scaled_coords(std::size_t i) const { return scaled_[i]; }
    std::size_t ambient_dim() const { return scaled_.front().size(); }

    /// Index of simple root k (always k under our ordering).
    std::size_t simple_index(std::size_t k) const { return k; }

    /// Cartan integers a_ij = 2(α_i, α_j)/(α_j, α_j).
    int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

    int coxeter_number() const;
    /// Exponents of the Weyl group from the standard table.
    std::vector<int> weyl_exponents() const;

    Mask all() const { return Mask::first_n(roots_.size()); }
    /// Roots β with root(i) ⪯ β.
    const Mask& up_set(std::size_t i) const { return up_[i]; }
    /// Roots β with β ⪯ root(i).
    const Mask& down_set(std::size_t i) const { return down_[i]; }
    bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }

    std::optional<std::size_t> find(const IntVector& simple_coords) const;

    /// Roots γ such that {root(i), root(j), γ} spans a space of dimension ≤ 2.
    /// Built on first use.
    const Mask& dependent_with(std::size_t i, std::size_t j) const;

    /// The maximal parabolic removing simple root j.
    const ParabolicSubsystem& parabolic(std::size_t j) const { return parabolics_[j]; }
    /// irreducible_components of parabolic(j), built on first use.
    const std::vector<Component>& parabolic_components(std::size_t j) const;

private:
    struct LazyTables;

    char type_;
    int rank_;
    std::vector<Root> roots_;
    std::vector<IntVector> scaled_;
    std::vector<int> heights_;
    std::vector<std::vector<int>> cartan_;
    std::vector<Mask> up_;
    std::vector<Mask> down_;
    std::unordered_map<IntVector, std::size_t, CoeffHash> index_;
    std::vector<ParabolicSubsystem> parabolics_;
    std::shared_ptr<LazyTables> lazy_;
};

/// Validates the pair and builds the system. Throws std::invalid_argument
/// naming the allowed ranges on an invalid pair.
RootSystem build_root_system(char type, int rank);

/// Shared immutable instance; repeated calls return the same object.
std::shared_ptr<const RootSystem> shared_root_system(char type, int rank);

/// Parses labels such as "E6", "d5", "G2".
std::pair<char, int> parse_type_label(std::string_view label);

/// Componentwise comparison of simple coordinates. Throws when either root
/// is not a positive root of `rs`.
bool leq(const RootSystem& rs, const Root& a, const Root& b);

ParabolicSubsystem maximal_parabolic(const RootSystem& rs, std::size_t j);

/// Irreducible components of the subsystem spanned by the simple roots in
/// `simple_subset` (bit k = simple root k).
std::vector<Component> components_of(const RootSystem& rs, const Mask& simple_subset);

std::vector<Component> irreducible_components(const RootSystem& rs, const ParabolicSubsystem& p);

/// Parses a coefficient string in Bourbaki layout. Plain strings list the
/// coefficients of α_1..α_n in order; for type E the displayed form
/// "00111/0" lists nodes 1,3,4,...,n and then, after the slash, node 2.
Root parse_root_label(const RootSystem& rs, std::string_view label);
std::size_t parse_root_index(const RootSystem& rs, std::string_view label);

/// Inverse of parse_root_label (type E uses the slash layout).
std::string format_root_label(const RootSystem& rs, std::size_t index);

}  // namespace idealarr
