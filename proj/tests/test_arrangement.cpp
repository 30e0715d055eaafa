#include "idealarr/arrangement.hpp"
#include "idealarr/certify.hpp"
#include "idealarr/families.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace idealarr;

namespace {

Arrangement boolean(std::size_t d) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < d; ++i) {
        IntVector e(d, 0);
        e[i] = 1;
        rows.push_back(e);
    }
    return Arrangement(d, rows);
}

Polynomial chi(const Arrangement& a) { return characteristic_polynomial(build_lattice(a)); }

std::map<int, int> flats_by_size(const FlatLattice& lat, int rank) {
    std::map<int, int> out;
    for (auto f : lat.levels[static_cast<std::size_t>(rank)]) ++out[lat.flats[f].hyperplanes.count()];
    return out;
}

}  // namespace

TEST_CASE("polynomials") {
    auto p = Polynomial::from_roots({1, 2, 3});
    CHECK(p.coeffs == std::vector<std::int64_t>{-6, 11, -6, 1});
    CHECK(p.to_string() == "t^3 - 6t^2 + 11t - 6");
    CHECK(p.integer_roots() == std::vector<std::int64_t>{1, 2, 3});
    CHECK(p.evaluate(4) == 6);
    Polynomial k3{{-7, 12, -6, 1}};
    CHECK_FALSE(k3.integer_roots().has_value());
    auto q = Polynomial::monomial(2) * Polynomial::from_roots({4, 4});
    CHECK(q.integer_roots() == std::vector<std::int64_t>{0, 0, 4, 4});
    CHECK((p - p).coeffs == std::vector<std::int64_t>{0});
    CHECK(Polynomial{{0}}.to_string() == "0");
    CHECK(Polynomial{{3, -1}}.to_string() == "-t + 3");
}

TEST_CASE("arrangements are reduced on construction") {
    Arrangement a(2, {{2, 0}, {-1, 0}, {0, 0}, {1, 1}, {3, 3}, {0, 5}});
    CHECK(a.size() == 3);
    CHECK(a.normal(0) == IntVector{1, 0});
    CHECK_THROWS(Arrangement(2, {{1, 0, 0}}));
}

TEST_CASE("arrangements from ideals") {
    auto a2 = build_root_system('A', 2);
    CHECK(from_ideal(a2, Ideal{a2.all()}).empty());
    CHECK(from_ideal(a2, Ideal{}).size() == 3);
    auto g2 = build_root_system('G', 2);
    Ideal top;
    top.members.set(g2.size() - 1);
    CHECK(from_ideal(g2, top).size() == 5);
}

TEST_CASE("small lattices") {
    auto b3 = build_lattice(boolean(3));
    CHECK(b3.size() == 8);
    CHECK(characteristic_polynomial(b3) == Polynomial::from_roots({1, 1, 1}));
    CHECK(b3.mu[b3.center()] == -1);

    auto k3 = build_lattice(build_kn(3));
    CHECK(k3.levels[1].size() == 6);
    CHECK(flats_by_size(k3, 2) == std::map<int, int>{{2, 6}, {3, 3}});
    CHECK(k3.levels[3].size() == 1);
    CHECK(characteristic_polynomial(k3) == Polynomial{{-7, 12, -6, 1}});

    auto a2 = build_root_system('A', 2);
    auto l = build_lattice(from_ideal(a2, Ideal{}));
    CHECK(l.levels[1].size() == 3);
    CHECK(l.levels.size() == 3);
    CHECK(l.mu[l.center()] == 2);

    CHECK(chi(build_jn(3)) == Polynomial::from_roots({1, 2, 3}));
}

TEST_CASE("empty arrangement lattice") {
    auto l = build_lattice(Arrangement(3, {}));
    CHECK(l.size() == 1);
    CHECK(characteristic_polynomial(l) == Polynomial::monomial(3));
}

TEST_CASE("Möbius function") {
    auto e = build_root_system('B', 3);
    auto lat = build_lattice(from_ideal(e, Ideal{}));
    for (std::size_t x = 0; x < lat.size(); ++x) CHECK(mobius(lat, 0, x) == lat.mu[x]);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t z = rng() % lat.size(), x = rng() % lat.size();
        if (z == x || !lat.below(z, x)) continue;
        std::int64_t s = 0;
        for (std::size_t y = 0; y < lat.size(); ++y)
            if (lat.below(z, y) && lat.below(y, x)) s += mobius(lat, z, y);
        CHECK(s == 0);
    }
    CHECK(mobius(lat, lat.center(), 0) == 0);
}

TEST_CASE("serial and parallel lattices coincide") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'D', 4}, {'F', 4}, {'B', 4}}) {
        auto rs = build_root_system(t, r);
        auto arr = from_ideal(rs, Ideal{});
        auto a = build_lattice(arr);
        auto b = build_lattice_serial(arr);
        CHECK(a.flats == b.flats);
        CHECK(a.mu == b.mu);
        CHECK(a.covers == b.covers);
    }
}

TEST_CASE("flat budget") {
    auto rs = build_root_system('E', 6);
    auto arr = from_ideal(rs, Ideal{});
    CHECK_THROWS_WITH_AS(build_lattice(arr, 100), doctest::Contains("rank 2"), FlatBudgetExceeded);
    CHECK_THROWS_AS(build_lattice(arr, 0), std::invalid_argument);
    CHECK(default_flat_budget() >= 1);
}

TEST_CASE("characteristic polynomial against finite field counts") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        auto [dim, rows] = oracle::random_root_subset(rng, 8);
        Arrangement arr(dim, rows);
        const auto p = chi(arr);
        for (auto q : oracle::primes_above(oracle::max_minor(arr.normals(), dim), 3))
            CHECK(p.evaluate(q) == oracle::complement_points(arr.normals(), dim, q));
    }
}

TEST_CASE("deletion and restriction") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto [dim, rows] = oracle::random_root_subset(rng, 10);
        Arrangement arr(dim, rows);
        const std::size_t h = rng() % arr.size();
        Mask single;
        single.set(h);
        const Flat x = flat_of(arr, single);
        CHECK(chi(arr) == chi(arr.deletion(h)) - chi(restriction(arr, x)));
    }
}

TEST_CASE("localization") {
    auto k4 = build_kn(4);
    auto lat = build_lattice(k4);
    CHECK(localization(k4, lat.flats[lat.center()]).normals() == k4.normals());

    // ∩_{i<4} ker x_i picks up x_1, x_2, x_3 and their pairwise sums.
    Mask coords;
    for (std::size_t i = 0; i < 3; ++i) coords.set(i);
    const Flat x = flat_of(k4, coords);
    auto loc = localization(k4, x);
    CHECK(loc.size() == 6);
    CHECK(chi(loc) == Polynomial::monomial(1) * chi(build_kn(3)));

    Flat bogus{coords, 3};
    CHECK_THROWS_AS(localization(k4, bogus), std::invalid_argument);
    CHECK_THROWS_AS(restriction(k4, bogus), std::invalid_argument);
}

TEST_CASE("localization at X0 is the arrangement of I0") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}}) {
        auto rs = build_root_system(t, r);
        enumerate_ideals(rs, [&](const Ideal& I) {
            const auto comp = complement(rs, I).indices();
            auto arr = from_ideal(rs, I);
            REQUIRE(arr.size() == comp.size());
            for (int j = 0; j < r; ++j) {
                const auto& p = rs.parabolic(static_cast<std::size_t>(j));
                std::vector<IntVector> simple;
                for (int k = 0; k < r; ++k)
                    if (k != j) simple.push_back(rs.scaled_coords(static_cast<std::size_t>(k)));
                const auto x0 = linalg::kernel_basis(simple, rs.ambient_dim());
                Mask expected;
                for (std::size_t h = 0; h < comp.size(); ++h)
                    if (p.member_mask.test(comp[h])) expected.set(h);
                CHECK(arr.containing(x0) == expected);
            }
            return true;
        });
    }
}

TEST_CASE("restriction") {
    Mask first;
    first.set(0);
    auto b3 = boolean(3);
    auto r = restriction(b3, flat_of(b3, first));
    CHECK(r.dim() == 2);
    CHECK(chi(r) == Polynomial::from_roots({1, 1}));

    auto a2 = build_root_system('A', 2);
    auto arr = from_ideal(a2, Ideal{});
    auto lat = build_lattice(arr);
    auto rc = restriction(arr, lat.flats[lat.center()]);
    CHECK(rc.empty());
    CHECK(rc.dim() == 1);  // the center of A_2 in R^3 is the line x0 = x1 = x2
}

TEST_CASE("J_n is the braid arrangement cut by x0 = 0") {
    for (int n = 3; n <= 4; ++n) {
        // A(A_n) on x_0..x_n together with ker x_0; restrict to that hyperplane.
        Graph complete(n + 1);
        std::vector<int> all(static_cast<std::size_t>(n) + 1);
        std::iota(all.begin(), all.end(), 0);
        complete.add_clique(all);
        auto braid = graphic_arrangement(complete);
        std::vector<IntVector> rows{IntVector(static_cast<std::size_t>(n) + 1, 0)};
        rows[0][0] = 1;
        rows.insert(rows.end(), braid.normals().begin(), braid.normals().end());
        Arrangement with_x0(static_cast<std::size_t>(n) + 1, rows);
        Mask h0;
        h0.set(0);
        auto cut = restriction(with_x0, flat_of(with_x0, h0));
        auto jn = build_jn(n);
        REQUIRE(cut.size() == jn.size());
        CHECK(chi(cut) == chi(jn));
        // Atom bijection x_0 - x_i -> x_i, x_i - x_j -> x_i - x_j preserves the
        // order, and every subset has the same rank on both sides.
        const std::size_t m = jn.size();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
            Mask s;
            for (std::size_t i = 0; i < m; ++i)
                if ((bits >> i) & 1U) s.set(i);
            CHECK(cut.rank_of(s) == jn.rank_of(s));
        }
    }
}

TEST_CASE("products") {
    auto p = product(boolean(2), boolean(3));
    CHECK(chi(p) == chi(boolean(5)));
    auto e = product(Arrangement(1, {}), build_jn(3));
    CHECK(chi(e) == Polynomial::monomial(1) * chi(build_jn(3)));

    auto j52 = build_jn_r(5, 2);
    auto j2j3 = product(build_jn(2), build_jn(3));
    auto a = build_lattice(j52);
    auto b = build_lattice(j2j3);
    CHECK(a.size() == b.size());
    for (std::size_t k = 0; k < a.levels.size(); ++k) CHECK(a.levels[k].size() == b.levels[k].size());
    CHECK(characteristic_polynomial(a) == characteristic_polynomial(b));
}

TEST_CASE("modular flats and supersolvability") {
    auto arr = from_ideal(build_root_system('B', 3), Ideal{});
    auto lat = build_lattice(arr);
    CHECK(is_modular(lat, std::size_t{0}));
    CHECK(is_modular(lat, lat.center()));
    for (auto a : lat.levels[1]) CHECK(is_modular(lat, a));
    auto chain = is_supersolvable(lat);
    REQUIRE(chain.has_value());
    CHECK(chain->size() == 4);
    for (auto f : *chain) CHECK(is_modular(lat, f));
    CHECK(chain_exponents(lat, *chain) == std::vector<int>{1, 3, 5});

    CHECK(is_supersolvable(build_lattice(boolean(4))).has_value());
    CHECK_FALSE(is_supersolvable(build_lattice(build_kn(3))).has_value());
    CHECK_THROWS(is_modular(lat, Flat{Mask{}, 2}));

    // The full D4 arrangement is free but not supersolvable.
    CHECK_FALSE(is_supersolvable(build_lattice(from_ideal(build_root_system('D', 4), Ideal{}))).has_value());
}

TEST_CASE("E6 example ideal is not supersolvable") {
    auto rs = build_root_system('E', 6);
    auto I = ideal_generated_by(rs, std::vector<std::size_t>{parse_root_index(rs, "00111/0")});
    CHECK_FALSE(is_supersolvable(build_lattice(from_ideal(rs, I))).has_value());
}

TEST_CASE("exponents factor the characteristic polynomial at small rank") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}, {'D', 4}}) {
        auto rs = build_root_system(t, r);
        enumerate_ideals(rs, [&](const Ideal& I) {
            std::vector<std::int64_t> roots;
            for (int e : exponents(rs, I).dual) roots.push_back(e);
            const int pad = static_cast<int>(rs.ambient_dim()) - r;
            CHECK(chi(from_ideal(rs, I)) == Polynomial::monomial(pad) * Polynomial::from_roots(roots));
            return true;
        });
    }
}

TEST_CASE("condition gives a modular coatom") {
    for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}, {'G', 2}}) {
        auto rs = build_root_system(t, r);
        enumerate_ideals(rs, [&](const Ideal& I) {
            if (I.members.empty()) return true;
            auto arr = from_ideal(rs, I);
            auto lat = build_lattice(arr);
            const auto comp = complement(rs, I).indices();
            for (int j = 0; j < r; ++j) {
                const auto& p = rs.parabolic(static_cast<std::size_t>(j));
                if (!check_condition(rs, I, p).holds()) continue;
                Mask sub;
                for (std::size_t h = 0; h < comp.size(); ++h)
                    if (p.member_mask.test(comp[h])) sub.set(h);
                auto z = lat.find(arr.closure(sub));
                REQUIRE(z.has_value());
                CHECK(lat.flats[*z].rank == arrangement_rank(rs, I) - 1);
                CHECK(is_modular(lat, *z));
            }
            return true;
        });
    }
}
