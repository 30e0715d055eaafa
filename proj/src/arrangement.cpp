#include "idealarr/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include <omp.h>

namespace idealarr {

// ---------------------------------------------------------------------------
// Polynomial

__int128 Polynomial::evaluate(std::int64_t t) const {
    __int128 v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

std::string Polynomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const std::int64_t c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const std::int64_t a = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1 || k == 0) os << a;
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Polynomial Polynomial::from_roots(const std::vector<std::int64_t>& roots) {
    Polynomial p{{1}};
    for (auto r : roots) p = p * Polynomial{{-r, 1}};
    return p;
}

Polynomial Polynomial::monomial(int k) {
    Polynomial p;
    p.coeffs.assign(static_cast<std::size_t>(k) + 1, 0);
    p.coeffs.back() = 1;
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    Polynomial p;
    p.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            p.coeffs[i + j] = linalg::checked_add(p.coeffs[i + j], linalg::checked_mul(a.coeffs[i], b.coeffs[j]));
    return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    p.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) p.coeffs[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) p.coeffs[i] = linalg::checked_sub(p.coeffs[i], b.coeffs[i]);
    while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
    return p;
}

std::optional<std::vector<std::int64_t>> Polynomial::integer_roots() const {
    std::vector<std::int64_t> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return std::nullopt;
    std::vector<std::int64_t> roots;
    while (c.size() > 1 && c.front() == 0) {
        roots.push_back(0);
        c.erase(c.begin());
    }
    // Rational roots of an integer polynomial with unit leading coefficient
    // are integers dividing the constant term.
    while (c.size() > 1) {
        if (c.back() != 1 && c.back() != -1) return std::nullopt;
        const std::int64_t c0 = c.front() < 0 ? -c.front() : c.front();
        std::vector<std::int64_t> candidates;
        for (std::int64_t d = 1; d * d <= c0; ++d) {
            if (c0 % d) continue;
            candidates.insert(candidates.end(), {d, -d, c0 / d, -(c0 / d)});
        }
        bool found = false;
        for (auto r : candidates) {
            // synthetic division by (t - r)
            std::vector<std::int64_t> q(c.size() - 1);
            __int128 carry = 0;
            for (std::size_t k = c.size() - 1; k >= 1; --k) {
                carry = carry * r + c[k];
                q[k - 1] = static_cast<std::int64_t>(carry);
            }
            if (carry * r + c[0] != 0) continue;
            roots.push_back(r);
            c = std::move(q);
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// Arrangement

Arrangement::Arrangement(std::size_t dim, const std::vector<IntVector>& normals) : dim_(dim) {
    for (const auto& n : normals) {
        if (n.size() != dim) throw std::invalid_argument("Arrangement: normal has wrong dimension");
        IntVector p = linalg::primitive(n);
        if (std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x == 0; })) continue;
        if (std::find(normals_.begin(), normals_.end(), p) != normals_.end()) continue;
        normals_.push_back(std::move(p));
    }
    if (normals_.size() > Mask::kCapacity)
        throw std::invalid_argument("Arrangement: more than " + std::to_string(Mask::kCapacity) + " hyperplanes");
}

int Arrangement::rank_of(const Mask& subset) const {
    std::vector<IntVector> rows;
    subset.for_each([&](std::size_t i) { rows.push_back(normals_[i]); });
    return linalg::rank(rows);
}

Mask Arrangement::containing(const std::vector<IntVector>& basis) const {
    Mask m;
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        bool all_zero = true;
        for (const auto& b : basis) {
            if (linalg::dot(b, normals_[i]) != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) m.set(i);
    }
    return m;
}

Mask Arrangement::closure(const Mask& subset) const {
    std::vector<IntVector> rows;
    subset.for_each([&](std::size_t i) { rows.push_back(normals_[i]); });
    return containing(linalg::kernel_basis(rows, dim_));
}

Arrangement Arrangement::subarrangement(const Mask& subset) const {
    std::vector<IntVector> rows;
    subset.for_each([&](std::size_t i) {
        if (i < normals_.size()) rows.push_back(normals_[i]);
    });
    return Arrangement(dim_, rows);
}

Arrangement Arrangement::deletion(std::size_t h) const {
    Mask m = all();
    m.reset(h);
    return subarrangement(m);
}

Arrangement from_ideal(const RootSystem& rs, const Ideal& ideal) {
    std::vector<IntVector> rows;
    complement(rs, ideal).for_each([&](std::size_t i) { rows.push_back(rs.scaled_coords(i)); });
    return Arrangement(rs.ambient_dim(), rows);
}

Arrangement product(const Arrangement& a, const Arrangement& b) {
    const std::size_t d = a.dim() + b.dim();
    std::vector<IntVector> rows;
    for (const auto& n : a.normals()) {
        IntVector v(d, 0);
        std::copy(n.begin(), n.end(), v.begin());
        rows.push_back(std::move(v));
    }
    for (const auto& n : b.normals()) {
        IntVector v(d, 0);
        std::copy(n.begin(), n.end(), v.begin() + static_cast<std::ptrdiff_t>(a.dim()));
        rows.push_back(std::move(v));
    }
    return Arrangement(d, rows);
}

// ---------------------------------------------------------------------------
// Lattice

std::size_t default_flat_budget() {
    if (const char* env = std::getenv("IDEALARR_FLAT_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    return 5'000'000;
}

std::optional<std::size_t> FlatLattice::find(const Mask& hyperplanes) const {
    auto it = index.find(hyperplanes);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

namespace {

struct Candidate {
    Mask hyperplanes;
    std::vector<IntVector> basis;
};

// Upper covers of one flat, each reached through the lowest hyperplane not
// yet covered.
std::vector<Candidate> expand(const Arrangement& arr, const Flat& x, const std::vector<IntVector>& basis) {
    std::vector<Candidate> out;
    Mask covered = x.hyperplanes;
    for (std::size_t h = 0; h < arr.size(); ++h) {
        if (covered.test(h)) continue;
        std::vector<IntVector> b = basis;
        linalg::intersect_with_hyperplane(b, arr.normal(h));
        Mask closed = arr.containing(b);
        covered |= closed;
        out.push_back(Candidate{closed, std::move(b)});
    }
    return out;
}

void compute_mobius_level(FlatLattice& lat, std::size_t level, bool parallel) {
    const auto& cur = lat.levels[level];
    const auto m = static_cast<long>(cur.size());
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long k = 0; k < m; ++k) {
        const std::size_t x = cur[static_cast<std::size_t>(k)];
        std::int64_t s = 0;
        for (std::size_t l = 0; l < level; ++l)
            for (std::size_t y : lat.levels[l])
                if (lat.below(y, x)) s += lat.mu[y];
        lat.mu[x] = -s;
    }
}

FlatLattice build(const Arrangement& arr, std::size_t flat_budget, bool parallel) {
    if (flat_budget < 1) throw std::invalid_argument("build_lattice: flat budget must be at least 1");
    FlatLattice lat;
    lat.arrangement = arr;
    std::vector<IntVector> ambient;
    for (std::size_t i = 0; i < arr.dim(); ++i) {
        IntVector e(arr.dim(), 0);
        e[i] = 1;
        ambient.push_back(std::move(e));
    }
    const Mask top = arr.containing(ambient);
    lat.flats.push_back(Flat{top, 0});
    lat.bases.push_back(std::move(ambient));
    lat.covers.emplace_back();
    lat.mu.push_back(1);
    lat.index.emplace(top, 0);
    lat.levels.push_back({0});

    for (std::size_t level = 0;; ++level) {
        const auto& cur = lat.levels[level];
        const auto m = static_cast<long>(cur.size());
        std::vector<std::vector<Candidate>> found(cur.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
        for (long k = 0; k < m; ++k) {
            const std::size_t x = cur[static_cast<std::size_t>(k)];
            found[static_cast<std::size_t>(k)] = expand(arr, lat.flats[x], lat.bases[x]);
        }

        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            const std::size_t x = cur[k];
            for (auto& c : found[k]) {
                auto [it, inserted] = lat.index.emplace(c.hyperplanes, lat.flats.size());
                if (inserted) {
                    lat.flats.push_back(Flat{c.hyperplanes, static_cast<int>(level) + 1});
                    lat.bases.push_back(std::move(c.basis));
                    lat.covers.emplace_back();
                    lat.mu.push_back(0);
                    next.push_back(it->second);
                }
                lat.covers[x].push_back(it->second);
            }
            if (lat.flats.size() > flat_budget)
                throw FlatBudgetExceeded("flat budget of " + std::to_string(flat_budget) + " exceeded while building rank " +
                                         std::to_string(level + 1) + " (" + std::to_string(lat.flats.size()) + " flats so far)");
        }
        if (next.empty()) break;
        lat.levels.push_back(std::move(next));
        compute_mobius_level(lat, level + 1, parallel);
    }
    return lat;
}

}  // namespace

FlatLattice build_lattice(const Arrangement& arr, std::size_t flat_budget) { return build(arr, flat_budget, true); }

FlatLattice build_lattice_serial(const Arrangement& arr, std::size_t flat_budget) { return build(arr, flat_budget, false); }

std::int64_t mobius(const FlatLattice& lat, std::size_t x, std::size_t y) {
    if (!lat.below(x, y)) return 0;
    const int rx = lat.flats[x].rank;
    const int ry = lat.flats[y].rank;
    std::unordered_map<std::size_t, std::int64_t> mu{{x, 1}};
    for (int l = rx + 1; l <= ry; ++l) {
        for (std::size_t z : lat.levels[static_cast<std::size_t>(l)]) {
            if (!lat.below(x, z) || !lat.below(z, y)) continue;
            std::int64_t s = 0;
            for (const auto& [w, v] : mu)
                if (lat.below(w, z)) s += v;
            mu[z] = -s;
        }
    }
    return mu.at(y);
}

Polynomial characteristic_polynomial(const FlatLattice& lat) {
    Polynomial p;
    p.coeffs.assign(lat.arrangement.dim() + 1, 0);
    for (std::size_t i = 0; i < lat.size(); ++i) {
        const auto d = lat.arrangement.dim() - static_cast<std::size_t>(lat.flats[i].rank);
        p.coeffs[d] += lat.mu[i];
    }
    return p;
}

void validate_flat(const Arrangement& arr, const Flat& x) {
    if (!x.hyperplanes.subset_of(arr.all())) throw std::invalid_argument("flat refers to a hyperplane outside the arrangement");
    if (arr.closure(x.hyperplanes) != x.hyperplanes) throw std::invalid_argument("hyperplane set is not closed, so it is not a flat");
    if (arr.rank_of(x.hyperplanes) != x.rank) throw std::invalid_argument("flat rank does not match its hyperplanes");
}

Flat flat_of(const Arrangement& arr, const Mask& hyperplanes) {
    const Mask c = arr.closure(hyperplanes);
    return Flat{c, arr.rank_of(c)};
}

Arrangement localization(const Arrangement& arr, const Flat& x) {
    validate_flat(arr, x);
    return arr.subarrangement(x.hyperplanes);
}

Arrangement restriction(const Arrangement& arr, const Flat& x) {
    validate_flat(arr, x);
    std::vector<IntVector> rows;
    x.hyperplanes.for_each([&](std::size_t i) { rows.push_back(arr.normal(i)); });
    const auto basis = linalg::kernel_basis(rows, arr.dim());
    std::vector<IntVector> images;
    for (std::size_t h = 0; h < arr.size(); ++h) {
        if (x.hyperplanes.test(h)) continue;
        IntVector w(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) w[i] = linalg::dot(basis[i], arr.normal(h));
        images.push_back(std::move(w));
    }
    return Arrangement(basis.size(), images);
}

bool is_modular(const FlatLattice& lat, std::size_t x) {
    // X + Y is a flat iff r(X) + r(Y) = r(X ∨ Y) + r(X ∧ Y), with X ∧ Y the
    // flat cut out by the common hyperplanes and X ∨ Y = X ∩ Y.
    const Flat& fx = lat.flats[x];
    for (std::size_t y = 0; y < lat.size(); ++y) {
        const Flat& fy = lat.flats[y];
        if (fy.hyperplanes.subset_of(fx.hyperplanes) || fx.hyperplanes.subset_of(fy.hyperplanes)) continue;
        const int meet = lat.arrangement.rank_of(fx.hyperplanes & fy.hyperplanes);
        const int join = lat.arrangement.rank_of(fx.hyperplanes | fy.hyperplanes);
        if (fx.rank + fy.rank != meet + join) return false;
    }
    return true;
}

bool is_modular(const FlatLattice& lat, const Flat& x) {
    validate_flat(lat.arrangement, x);
    auto i = lat.find(x.hyperplanes);
    if (!i) throw std::invalid_argument("is_modular: not a flat of this lattice");
    return is_modular(lat, *i);
}

std::optional<std::vector<std::size_t>> is_supersolvable(const FlatLattice& lat) {
    // Descend from the center through modular coatoms of each localization.
    // A modular chain X_0 < ... < X_r can be built top down since X_{i} is
    // modular in L(A) and X_{i-1} < X_i.
    std::vector<signed char> modular(lat.size(), -1);
    auto mod = [&](std::size_t f) {
        if (modular[f] < 0) modular[f] = is_modular(lat, f) ? 1 : 0;
        return modular[f] == 1;
    };
    std::vector<std::size_t> chain{lat.center()};
    std::vector<char> dead(lat.size(), 0);
    std::function<bool(std::size_t)> down = [&](std::size_t f) -> bool {
        if (lat.flats[f].rank == 0) return true;
        const std::size_t level = static_cast<std::size_t>(lat.flats[f].rank) - 1;
        for (std::size_t g : lat.levels[level]) {
            if (dead[g] || !lat.below(g, f) || !mod(g)) continue;
            chain.push_back(g);
            if (down(g)) return true;
            chain.pop_back();
            dead[g] = 1;
        }
        return false;
    };
    if (!down(lat.center())) return std::nullopt;
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<int> chain_exponents(const FlatLattice& lat, const std::vector<std::size_t>& chain) {
    std::vector<int> e;
    for (std::size_t i = 1; i < chain.size(); ++i)
        e.push_back(lat.flats[chain[i]].hyperplanes.count() - lat.flats[chain[i - 1]].hyperplanes.count());
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace idealarr
