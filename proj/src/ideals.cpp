#include "idealarr/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <omp.h>

namespace idealarr {

std::vector<int> HeightPartition::exponents() const {
    std::vector<int> e;
    for (int x : dual)
        if (x > 0) e.push_back(x);
    std::sort(e.begin(), e.end());
    return e;
}

Mask complement(const RootSystem& rs, const Ideal& ideal) { return rs.all() - ideal.members; }

bool is_upward_closed(const RootSystem& rs, const Mask& set) {
    bool ok = true;
    set.for_each([&](std::size_t i) { ok = ok && rs.up_set(i).subset_of(set); });
    return ok;
}

bool is_additively_closed(const RootSystem& rs, const Mask& set) {
    const auto n = static_cast<std::size_t>(rs.rank());
    bool ok = true;
    set.for_each([&](std::size_t a) {
        for (std::size_t b = 0; b < rs.size() && ok; ++b) {
            IntVector s(n);
            for (std::size_t k = 0; k < n; ++k) s[k] = rs.root(a).simple_coords[k] + rs.root(b).simple_coords[k];
            if (auto idx = rs.find(s)) ok = set.test(*idx);
        }
    });
    return ok;
}

std::vector<std::size_t> minimal_generators(const RootSystem& rs, const Ideal& ideal) {
    std::vector<std::size_t> gens;
    ideal.members.for_each([&](std::size_t i) {
        Mask below = rs.down_set(i) & ideal.members;
        below.reset(i);
        if (below.empty()) gens.push_back(i);
    });
    return gens;
}

Ideal ideal_generated_by(const RootSystem& rs, const std::vector<std::size_t>& generators) {
    Ideal I;
    for (auto g : generators) {
        if (g >= rs.size()) throw std::invalid_argument("ideal_generated_by: root index out of range");
        I.members |= rs.up_set(g);
    }
    return I;
}

Ideal ideal_generated_by(const RootSystem& rs, const std::vector<Root>& generators) {
    std::vector<std::size_t> idx;
    for (const auto& r : generators) {
        auto i = rs.find(r.simple_coords);
        if (!i) throw std::invalid_argument("ideal_generated_by: generator is not a positive root of " + rs.label());
        idx.push_back(*i);
    }
    return ideal_generated_by(rs, idx);
}

namespace {

struct AntichainWalker {
    const RootSystem& rs;
    std::vector<Mask> comparable;

    explicit AntichainWalker(const RootSystem& r) : rs(r), comparable(r.size()) {
        for (std::size_t i = 0; i < rs.size(); ++i) comparable[i] = rs.up_set(i) | rs.down_set(i);
    }

    // Returns false once the visitor asks to stop.
    template <typename Visit>
    bool walk(std::size_t start, const Mask& allowed, const Mask& ideal, Visit& visit) const {
        if (!visit(Ideal{ideal})) return false;
        for (std::size_t i = start; i < rs.size(); ++i) {
            if (!allowed.test(i)) continue;
            if (!walk(i + 1, allowed - comparable[i], ideal | rs.up_set(i), visit)) return false;
        }
        return true;
    }
};

}  // namespace

void enumerate_ideals(const RootSystem& rs, const std::function<bool(const Ideal&)>& visit) {
    AntichainWalker w(rs);
    auto v = [&](const Ideal& I) { return visit(I); };
    w.walk(0, rs.all(), Mask{}, v);
}

std::vector<Ideal> all_ideals(const RootSystem& rs) {
    std::vector<Ideal> out;
    enumerate_ideals(rs, [&](const Ideal& I) {
        out.push_back(I);
        return true;
    });
    return out;
}

std::vector<Ideal> all_ideals_parallel(const RootSystem& rs) {
    AntichainWalker w(rs);
    const auto m = static_cast<long>(rs.size());
    std::vector<std::vector<Ideal>> branches(rs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < m; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        auto& out = branches[ui];
        auto v = [&](const Ideal& I) {
            out.push_back(I);
            return true;
        };
        w.walk(ui + 1, rs.all() - w.comparable[ui], rs.up_set(ui), v);
    }
    std::vector<Ideal> all{Ideal{}};
    for (auto& b : branches) all.insert(all.end(), b.begin(), b.end());
    return all;
}

void parallel_for_each_ideal(const RootSystem& rs, const std::function<void(const Ideal&)>& consumer) {
    AntichainWalker w(rs);
    consumer(Ideal{});
    const auto m = static_cast<long>(rs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < m; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        auto v = [&](const Ideal& I) {
            consumer(I);
            return true;
        };
        w.walk(ui + 1, rs.all() - w.comparable[ui], rs.up_set(ui), v);
    }
}

std::uint64_t count_ideals(const RootSystem& rs) {
    std::uint64_t n = 0;
    enumerate_ideals(rs, [&](const Ideal&) {
        ++n;
        return true;
    });
    return n;
}

std::uint64_t coxeter_catalan(const RootSystem& rs) {
    const int h = rs.coxeter_number();
    auto gcd128 = [](__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    __int128 num = 1, den = 1;
    for (int e : rs.weyl_exponents()) {
        num *= e + h + 1;
        den *= e + 1;
        const __int128 common = gcd128(num, den);
        num /= common;
        den /= common;
    }
    if (den != 1) throw std::logic_error("Coxeter-Catalan product is not an integer");
    return static_cast<std::uint64_t>(num);
}

std::vector<int> conjugate_partition(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    std::vector<int> dual;
    const int largest = parts.empty() ? 0 : parts.front();
    for (int k = 1; k <= largest; ++k) {
        int c = 0;
        for (int p : parts)
            if (p >= k) ++c;
        dual.push_back(c);
    }
    return dual;
}

HeightPartition exponents(const RootSystem& rs, const Ideal& ideal) {
    HeightPartition hp;
    complement(rs, ideal).for_each([&](std::size_t i) { ++hp.counts[rs.height(i)]; });
    std::vector<int> parts;
    for (const auto& [h, c] : hp.counts) parts.push_back(c);
    hp.dual = conjugate_partition(parts);
    hp.dual.resize(std::max<std::size_t>(hp.dual.size(), static_cast<std::size_t>(rs.rank())), 0);
    return hp;
}

std::vector<ComponentIdeal> restrict_ideal(const Ideal& ideal, const std::vector<Component>& components) {
    std::vector<ComponentIdeal> out;
    out.reserve(components.size());
    for (const auto& c : components) {
        Ideal sub;
        for (std::size_t k = 0; k < c.root_map.size(); ++k)
            if (ideal.members.test(c.root_map[k])) sub.members.set(k);
        out.push_back(ComponentIdeal{c, sub});
    }
    return out;
}

std::vector<ComponentIdeal> restrict_ideal(const RootSystem& rs, const Ideal& ideal, const ParabolicSubsystem& p) {
    return restrict_ideal(ideal, irreducible_components(rs, p));
}

}  // namespace idealarr
