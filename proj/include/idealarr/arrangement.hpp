#pragma once

#include "idealarr/ideals.hpp"
#include "idealarr/linalg.hpp"
#include "idealarr/mask.hpp"
#include "idealarr/root_system.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace idealarr {

/// Integer polynomial in t, coeffs[k] is the coefficient of t^k.
struct Polynomial {
    std::vector<std::int64_t> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    __int128 evaluate(std::int64_t t) const;
    std::string to_string() const;

    /// ∏ (t - r) over the given roots.
    static Polynomial from_roots(const std::vector<std::int64_t>& roots);
    /// t^k.
    static Polynomial monomial(int k);

    /// Roots with multiplicity, ascending, when the polynomial splits into
    /// linear factors over the integers; nullopt otherwise.
    std::optional<std::vector<std::int64_t>> integer_roots() const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Central arrangement in Q^dim. Normals are stored as primitive integer
/// vectors (first nonzero entry positive), which is an exact representative
/// of each hyperplane.
class Arrangement {
public:
    Arrangement() = default;
    /// Drops zero vectors and proportional duplicates (first occurrence wins).
    Arrangement(std::size_t dim, const std::vector<IntVector>& normals);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return normals_.size(); }
    bool empty() const { return normals_.empty(); }
    const std::vector<IntVector>& normals() const { return normals_; }
    const IntVector& normal(std::size_t i) const { return normals_[i]; }
    Mask all() const { return Mask::first_n(normals_.size()); }

    /// Rank of the normals in `subset`.
    int rank_of(const Mask& subset) const;
    int rank() const { return rank_of(all()); }

    /// Hyperplanes containing every vector of `basis`.
    Mask containing(const std::vector<IntVector>& basis) const;
    /// Closure of a hyperplane set: all hyperplanes containing their intersection.
    Mask closure(const Mask& subset) const;

    /// Arrangement with the hyperplanes in `subset`, kept in index order.
    Arrangement subarrangement(const Mask& subset) const;
    Arrangement deletion(std::size_t h) const;

private:
    std::size_t dim_ = 0;
    std::vector<IntVector> normals_;
};

Arrangement from_ideal(const RootSystem& rs, const Ideal& ideal);

/// Block diagonal union in dim(a) + dim(b).
Arrangement product(const Arrangement& a, const Arrangement& b);

/// A flat identified by the closed set of hyperplanes containing it.
struct Flat {
    Mask hyperplanes;
    int rank = 0;
    friend bool operator==(const Flat&, const Flat&) = default;
};

struct FlatBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default budget: 5,000,000 flats, overridden by IDEALARR_FLAT_BUDGET.
std::size_t default_flat_budget();

/// Intersection lattice L(A). Flats are numbered level by level; index 0 is
/// the ambient space.
struct FlatLattice {
    Arrangement arrangement;
    std::vector<Flat> flats;
    std::vector<std::vector<IntVector>> bases;        ///< integer basis of each flat
    std::vector<std::vector<std::size_t>> levels;     ///< flat indices per rank
    std::vector<std::vector<std::size_t>> covers;     ///< upper covers
    std::vector<std::int64_t> mu;                     ///< μ(0̂, X)
    std::unordered_map<Mask, std::size_t, MaskHash> index;

    std::size_t size() const { return flats.size(); }
    int rank() const { return static_cast<int>(levels.size()) - 1; }
    std::size_t center() const { return levels.back().front(); }
    std::optional<std::size_t> find(const Mask& hyperplanes) const;
    /// X ≤ Y in L(A), i.e. Y ⊆ X as subspaces.
    bool below(std::size_t x, std::size_t y) const { return flats[x].hyperplanes.subset_of(flats[y].hyperplanes); }
};

/// OpenMP per level; flats are merged in a fixed order so the result is
/// identical to build_lattice_serial.
FlatLattice build_lattice(const Arrangement& arr, std::size_t flat_budget = default_flat_budget());
FlatLattice build_lattice_serial(const Arrangement& arr, std::size_t flat_budget = default_flat_budget());

/// μ(x, y) over the interval [x, y]; zero when x is not below y.
std::int64_t mobius(const FlatLattice& lat, std::size_t x, std::size_t y);

Polynomial characteristic_polynomial(const FlatLattice& lat);

/// Throws std::invalid_argument when the flat is not closed or its rank is wrong.
void validate_flat(const Arrangement& arr, const Flat& x);
Flat flat_of(const Arrangement& arr, const Mask& hyperplanes);

Arrangement localization(const Arrangement& arr, const Flat& x);
/// A^X written in an integer basis of X.
Arrangement restriction(const Arrangement& arr, const Flat& x);

bool is_modular(const FlatLattice& lat, std::size_t x);
bool is_modular(const FlatLattice& lat, const Flat& x);

/// A maximal chain of modular flats from the ambient space to the center,
/// as flat indices ordered by rank.
std::optional<std::vector<std::size_t>> is_supersolvable(const FlatLattice& lat);

/// Number of hyperplanes added at each step of a modular chain, which for a
/// supersolvable arrangement are its exponents.
std::vector<int> chain_exponents(const FlatLattice& lat, const std::vector<std::size_t>& chain);

}  // namespace idealarr
