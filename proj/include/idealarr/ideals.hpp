#pragma once

#include "idealarr/root_system.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace idealarr {

/// Upper order ideal of Φ⁺ as a bitset over positive-root indices.
struct Ideal {
    Mask members;

    friend bool operator==(const Ideal&, const Ideal&) = default;
    friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

/// Height multiset of the complement and its conjugate partition.
struct HeightPartition {
    std::map<int, int> counts;  ///< height -> number of roots of Iᶜ
    std::vector<int> dual;      ///< weakly decreasing, padded with zeros to the rank

    /// Nonzero entries of `dual`, ascending.
    std::vector<int> exponents() const;
};

/// Complement Iᶜ = Φ⁺ \ I.
Mask complement(const RootSystem& rs, const Ideal& ideal);

bool is_upward_closed(const RootSystem& rs, const Mask& set);
/// α ∈ S, β ∈ Φ⁺, α + β ∈ Φ⁺ ⇒ α + β ∈ S.
bool is_additively_closed(const RootSystem& rs, const Mask& set);

/// Minimal elements of the ideal (its generating antichain).
std::vector<std::size_t> minimal_generators(const RootSystem& rs, const Ideal& ideal);

Ideal ideal_generated_by(const RootSystem& rs, const std::vector<std::size_t>& generators);
Ideal ideal_generated_by(const RootSystem& rs, const std::vector<Root>& generators);

/// Visits every ideal exactly once, depth first over antichains in index
/// order. The visitor may return false to stop early.
void enumerate_ideals(const RootSystem& rs, const std::function<bool(const Ideal&)>& visit);

/// All ideals in the deterministic enumeration order.
std::vector<Ideal> all_ideals(const RootSystem& rs);

/// Same set and order as all_ideals, with the antichain search split over
/// OpenMP threads by top-level branch.
std::vector<Ideal> all_ideals_parallel(const RootSystem& rs);

/// Calls `consumer` on every ideal from several threads; the consumer must
/// be thread safe. Visiting order is unspecified.
void parallel_for_each_ideal(const RootSystem& rs, const std::function<void(const Ideal&)>& consumer);

std::uint64_t count_ideals(const RootSystem& rs);

/// ∏ (e_i + h + 1) / (e_i + 1) over the Weyl exponents.
std::uint64_t coxeter_catalan(const RootSystem& rs);

HeightPartition exponents(const RootSystem& rs, const Ideal& ideal);

/// Conjugate of a partition given in any order.
std::vector<int> conjugate_partition(std::vector<int> parts);

/// I₀ = I ∩ Φ₀⁺ for one irreducible component, re-indexed into the
/// component's own root system.
struct ComponentIdeal {
    Component component;
    Ideal ideal;
};

std::vector<ComponentIdeal> restrict_ideal(const RootSystem& rs, const Ideal& ideal, const ParabolicSubsystem& p);

/// Restriction to an arbitrary set of components (used by the recursion).
std::vector<ComponentIdeal> restrict_ideal(const Ideal& ideal, const std::vector<Component>& components);

}  // namespace idealarr
