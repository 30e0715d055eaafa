#include "idealarr/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace idealarr {

namespace {

constexpr const char* kAllowedRanges =
    "allowed: A1-A22, B2-B16, C2-C16, D4-D16, E6, E7, E8, F4, G2";

bool valid_pair(char type, int rank) {
    switch (type) {
        case 'A': return rank >= 1 && rank <= 22;
        case 'B':
        case 'C': return rank >= 2 && rank <= 16;
        case 'D': return rank >= 4 && rank <= 16;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

IntVector unit(std::size_t dim, std::size_t i, std::int64_t s = 1) {
    IntVector v(dim, 0);
    v[i] = s;
    return v;
}

IntVector diff(std::size_t dim, std::size_t i, std::size_t j) {
    IntVector v(dim, 0);
    v[i] = 1;
    v[j] = -1;
    return v;
}

/// Simple roots in Bourbaki coordinates, scaled by `denominator`.
std::vector<IntVector> bourbaki_simple_roots(char type, int n, std::int64_t& denominator) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<IntVector> s;
    denominator = 1;
    switch (type) {
        case 'A':
            for (std::size_t i = 0; i < un; ++i) s.push_back(diff(un + 1, i, i + 1));
            break;
        case 'B':
            for (std::size_t i = 0; i + 1 < un; ++i) s.push_back(diff(un, i, i + 1));
            s.push_back(unit(un, un - 1));
            break;
        case 'C':
            for (std::size_t i = 0; i + 1 < un; ++i) s.push_back(diff(un, i, i + 1));
            s.push_back(unit(un, un - 1, 2));
            break;
        case 'D': {
            for (std::size_t i = 0; i + 1 < un; ++i) s.push_back(diff(un, i, i + 1));
            IntVector last(un, 0);
            last[un - 2] = 1;
            last[un - 1] = 1;
            s.push_back(last);
            break;
        }
        case 'E': {
            // E6 and E7 live inside the E8 ambient space R^8.
            denominator = 2;
            s.push_back({1, -1, -1, -1, -1, -1, -1, 1});
            s.push_back({2, 2, 0, 0, 0, 0, 0, 0});
            for (std::size_t i = 0; i + 2 < un; ++i) {
                IntVector v(8, 0);
                v[i] = -2;
                v[i + 1] = 2;
                s.push_back(v);
            }
            break;
        }
        case 'F':
            denominator = 2;
            s.push_back({0, 2, -2, 0});
            s.push_back({0, 0, 2, -2});
            s.push_back({0, 0, 0, 2});
            s.push_back({1, -1, -1, -1});
            break;
        case 'G':
            s.push_back({1, -1, 0});
            s.push_back({-2, 1, 1});
            break;
        default:
            break;
    }
    return s;
}

}  // namespace

int Root::height() const { return std::accumulate(simple_coords.begin(), simple_coords.end(), 0); }

std::size_t CoeffHash::operator()(const IntVector& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ULL;
    return h;
}

std::string Component::label() const { return std::string(1, type) + std::to_string(rank); }

struct RootSystem::LazyTables {
    explicit LazyTables(std::size_t rank) : component_once(rank), components(rank) {}

    std::once_flag dependence_once;
    std::vector<Mask> dependence;  // row-major size() x size()
    std::vector<std::once_flag> component_once;
    std::vector<std::vector<Component>> components;
};

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
    if (!valid_pair(type, rank)) {
        std::ostringstream os;
        os << "invalid root system " << type << rank << " (" << kAllowedRanges << ")";
        throw std::invalid_argument(os.str());
    }
    std::int64_t den = 1;
    const auto simple = bourbaki_simple_roots(type, rank, den);
    const auto n = static_cast<std::size_t>(rank);

    cartan_.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cartan_[i][j] = static_cast<int>(2 * linalg::dot(simple[i], simple[j]) / linalg::dot(simple[j], simple[j]));

    // Closure under adding simple roots, height by height, using root
    // strings: β + α_i is a root iff p - <β, α_i^∨> > 0 where p is the
    // length of the α_i-string below β.
    std::vector<IntVector> coeffs;
    std::unordered_map<IntVector, std::size_t, CoeffHash> seen;
    for (std::size_t i = 0; i < n; ++i) {
        coeffs.push_back(unit(n, i));
        seen.emplace(coeffs.back(), coeffs.size() - 1);
    }
    for (std::size_t cur = 0; cur < coeffs.size(); ++cur) {
        const IntVector beta = coeffs[cur];
        for (std::size_t i = 0; i < n; ++i) {
            int p = 0;
            IntVector down = beta;
            while (true) {
                down[i] -= 1;
                if (!seen.count(down)) break;
                ++p;
            }
            int pairing = 0;
            for (std::size_t j = 0; j < n; ++j) pairing += static_cast<int>(beta[j]) * cartan_[j][i];
            if (p - pairing > 0) {
                IntVector up = beta;
                up[i] += 1;
                if (!seen.count(up)) {
                    coeffs.push_back(up);
                    seen.emplace(up, coeffs.size() - 1);
                }
            }
        }
    }

    auto height_of = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
    std::sort(coeffs.begin(), coeffs.end(), [&](const IntVector& a, const IntVector& b) {
        const auto ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    if (coeffs.size() > Mask::kCapacity) throw std::invalid_argument("root system too large for the mask capacity");

    const std::size_t dim = simple.front().size();
    for (const auto& c : coeffs) {
        IntVector s(dim, 0);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t d = 0; d < dim; ++d) s[d] += c[k] * simple[k][d];
        RationalVector e;
        e.reserve(dim);
        for (auto x : s) e.emplace_back(x, den);
        roots_.push_back(Root{c, std::move(e)});
        scaled_.push_back(std::move(s));
        heights_.push_back(static_cast<int>(height_of(c)));
        index_.emplace(c, roots_.size() - 1);
    }

    const std::size_t m = roots_.size();
    up_.assign(m, Mask{});
    down_.assign(m, Mask{});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            bool le = true;
            for (std::size_t k = 0; k < n && le; ++k) le = roots_[i].simple_coords[k] <= roots_[j].simple_coords[k];
            if (le) {
                up_[i].set(j);
                down_[j].set(i);
            }
        }
    for (std::size_t j = 0; j < n; ++j) parabolics_.push_back(maximal_parabolic(*this, j));
    lazy_ = std::make_shared<LazyTables>(n);
}

std::string RootSystem::label() const { return std::string(1, type_) + std::to_string(rank_); }

int RootSystem::coxeter_number() const {
    switch (type_) {
        case 'A': return rank_ + 1;
        case 'B':
        case 'C': return 2 * rank_;
        case 'D': return 2 * rank_ - 2;
        case 'E': return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
        case 'F': return 12;
        case 'G': return 6;
        default: return 0;
    }
}

std::vector<int> RootSystem::weyl_exponents() const {
    std::vector<int> e;
    switch (type_) {
        case 'A':
            for (int i = 1; i <= rank_; ++i) e.push_back(i);
            break;
        case 'B':
        case 'C':
            for (int i = 1; i <= rank_; ++i) e.push_back(2 * i - 1);
            break;
        case 'D':
            for (int i = 1; i < rank_; ++i) e.push_back(2 * i - 1);
            e.push_back(rank_ - 1);
            break;
        case 'E':
            if (rank_ == 6) e = {1, 4, 5, 7, 8, 11};
            else if (rank_ == 7) e = {1, 5, 7, 9, 11, 13, 17};
            else e = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case 'F': e = {1, 5, 7, 11}; break;
        case 'G': e = {1, 5}; break;
        default: break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

std::optional<std::size_t> RootSystem::find(const IntVector& simple_coords) const {
    auto it = index_.find(simple_coords);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const Mask& RootSystem::dependent_with(std::size_t i, std::size_t j) const {
    auto& dep = *lazy_;
    std::call_once(dep.dependence_once, [&] {
        const std::size_t m = roots_.size();
        dep.dependence.assign(m * m, Mask{});
        std::vector<IntVector> rows(3);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) {
                Mask w;
                rows[0] = scaled_[a];
                rows[1] = scaled_[b];
                for (std::size_t c = 0; c < m; ++c) {
                    rows[2] = scaled_[c];
                    if (linalg::rank(rows) <= 2) w.set(c);
                }
                dep.dependence[a * m + b] = w;
                dep.dependence[b * m + a] = w;
            }
    });
    return dep.dependence[i * roots_.size() + j];
}

const std::vector<Component>& RootSystem::parabolic_components(std::size_t j) const {
    auto& lazy = *lazy_;
    std::call_once(lazy.component_once.at(j), [&] { lazy.components[j] = irreducible_components(*this, parabolics_[j]); });
    return lazy.components[j];
}

RootSystem build_root_system(char type, int rank) { return RootSystem(static_cast<char>(std::toupper(type)), rank); }

std::shared_ptr<const RootSystem> shared_root_system(char type, int rank) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::shared_ptr<const RootSystem>> cache;
    type = static_cast<char>(std::toupper(type));
    {
        std::lock_guard lock(mu);
        auto it = cache.find({type, rank});
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const RootSystem>(type, rank);
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(type, rank), std::move(built)).first->second;
}

std::pair<char, int> parse_type_label(std::string_view label) {
    if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
        throw std::invalid_argument("bad root system label '" + std::string(label) + "' (" + kAllowedRanges + ")");
    int rank = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw std::invalid_argument("bad root system label '" + std::string(label) + "' (" + kAllowedRanges + ")");
        rank = rank * 10 + (label[i] - '0');
        if (rank > 1000) throw std::invalid_argument("rank out of range in '" + std::string(label) + "'");
    }
    const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    if (!valid_pair(type, rank))
        throw std::invalid_argument("invalid root system " + std::string(label) + " (" + kAllowedRanges + ")");
    return {type, rank};
}

bool leq(const RootSystem& rs, const Root& a, const Root& b) {
    auto ia = rs.find(a.simple_coords);
    auto ib = rs.find(b.simple_coords);
    if (!ia || !ib || rs.root(*ia) != a || rs.root(*ib) != b)
        throw std::invalid_argument("leq: root does not belong to " + rs.label());
    return rs.leq(*ia, *ib);
}

ParabolicSubsystem maximal_parabolic(const RootSystem& rs, std::size_t j) {
    if (j >= static_cast<std::size_t>(rs.rank()))
        throw std::invalid_argument("maximal_parabolic: simple index " + std::to_string(j) + " out of range for " +
                                    rs.label());
    ParabolicSubsystem p;
    p.removed_simple = j;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs.root(i).simple_coords[j] == 0) p.member_mask.set(i);
        else p.complement_mask.set(i);
    }
    return p;
}

namespace {

bool match_cartan(const RootSystem& std_sys, const RootSystem& amb, const std::vector<std::size_t>& nodes,
                  std::vector<std::size_t>& sigma, std::vector<bool>& used, std::size_t k) {
    const std::size_t m = nodes.size();
    if (k == m) return true;
    for (std::size_t c = 0; c < m; ++c) {
        if (used[c]) continue;
        bool ok = true;
        for (std::size_t l = 0; l < k && ok; ++l) {
            ok = std_sys.cartan(k, l) == amb.cartan(nodes[c], sigma[l]) &&
                 std_sys.cartan(l, k) == amb.cartan(sigma[l], nodes[c]);
        }
        if (!ok) continue;
        used[c] = true;
        sigma[k] = nodes[c];
        if (match_cartan(std_sys, amb, nodes, sigma, used, k + 1)) return true;
        used[c] = false;
    }
    return false;
}

}  // namespace

std::vector<Component> components_of(const RootSystem& rs, const Mask& simple_subset) {
    const auto n = static_cast<std::size_t>(rs.rank());
    std::vector<Component> out;
    std::vector<bool> done(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (!simple_subset.test(start) || done[start]) continue;
        std::vector<std::size_t> nodes{start};
        done[start] = true;
        for (std::size_t q = 0; q < nodes.size(); ++q)
            for (std::size_t v = 0; v < n; ++v)
                if (simple_subset.test(v) && !done[v] && rs.cartan(nodes[q], v) != 0) {
                    done[v] = true;
                    nodes.push_back(v);
                }
        std::sort(nodes.begin(), nodes.end());
        const int m = static_cast<int>(nodes.size());

        std::string candidates(1, rs.type());
        for (char t : std::string("ABCDEFG"))
            if (t != rs.type()) candidates.push_back(t);
        bool found = false;
        for (char t : candidates) {
            if (!valid_pair(t, m)) continue;
            auto sys = shared_root_system(t, m);
            std::vector<std::size_t> sigma(nodes.size());
            std::vector<bool> used(nodes.size(), false);
            if (!match_cartan(*sys, rs, nodes, sigma, used, 0)) continue;
            Component c;
            c.type = t;
            c.rank = m;
            c.simple_map = sigma;
            c.system = sys;
            for (const auto& r : sys->positive_roots()) {
                IntVector amb(n, 0);
                for (std::size_t k = 0; k < sigma.size(); ++k) amb[sigma[k]] = r.simple_coords[k];
                auto idx = rs.find(amb);
                if (!idx) throw std::logic_error("component root missing from ambient system");
                c.root_map.push_back(*idx);
            }
            out.push_back(std::move(c));
            found = true;
            break;
        }
        if (!found) throw std::logic_error("unrecognised Dynkin diagram component in " + rs.label());
    }
    return out;
}

std::vector<Component> irreducible_components(const RootSystem& rs, const ParabolicSubsystem& p) {
    Mask simple = Mask::first_n(static_cast<std::size_t>(rs.rank()));
    simple.reset(p.removed_simple);
    return components_of(rs, simple);
}

namespace {

IntVector coeffs_from_label(const RootSystem& rs, std::string_view label) {
    const auto n = static_cast<std::size_t>(rs.rank());
    std::string digits;
    std::string tail;
    const auto slash = label.find('/');
    if (slash != std::string_view::npos) {
        if (rs.type() != 'E') throw std::invalid_argument("root label '" + std::string(label) +
                                                          "': the slash layout is only used for type E");
        digits = std::string(label.substr(0, slash));
        tail = std::string(label.substr(slash + 1));
        if (digits.size() != n - 1 || tail.size() != 1)
            throw std::invalid_argument("root label '" + std::string(label) + "' must look like " +
                                        std::string(n - 1, '0') + "/0 for " + rs.label());
    } else {
        digits = std::string(label);
        if (digits.size() != n)
            throw std::invalid_argument("root label '" + std::string(label) + "' must have " + std::to_string(n) +
                                        " digits for " + rs.label());
    }
    for (char ch : digits + tail)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("root label '" + std::string(label) + "' contains a non-digit");

    IntVector c(n, 0);
    if (slash != std::string_view::npos) {
        // displayed order: nodes 1,3,4,...,n on the line, node 2 below.
        c[0] = digits[0] - '0';
        for (std::size_t k = 1; k < digits.size(); ++k) c[k + 1] = digits[k] - '0';
        c[1] = tail[0] - '0';
    } else {
        for (std::size_t k = 0; k < n; ++k) c[k] = digits[k] - '0';
    }
    return c;
}

}  // namespace

std::size_t parse_root_index(const RootSystem& rs, std::string_view label) {
    const IntVector c = coeffs_from_label(rs, label);
    if (auto idx = rs.find(c)) return *idx;

    const int h = static_cast<int>(std::accumulate(c.begin(), c.end(), std::int64_t{0}));
    std::ostringstream os;
    os << "'" << label << "' is not a positive root of " << rs.label() << " (height " << h << "); ";
    if (h >= 1 && h <= rs.max_height()) {
        os << "roots of height " << h << ":";
        for (std::size_t i = 0; i < rs.size(); ++i)
            if (rs.height(i) == h) os << ' ' << format_root_label(rs, i);
    } else {
        os << "valid heights are 1.." << rs.max_height();
    }
    throw std::invalid_argument(os.str());
}

Root parse_root_label(const RootSystem& rs, std::string_view label) { return rs.root(parse_root_index(rs, label)); }

std::string format_root_label(const RootSystem& rs, std::size_t index) {
    const auto& c = rs.root(index).simple_coords;
    std::string s;
    if (rs.type() == 'E') {
        s.push_back(static_cast<char>('0' + c[0]));
        for (std::size_t k = 2; k < c.size(); ++k) s.push_back(static_cast<char>('0' + c[k]));
        s.push_back('/');
        s.push_back(static_cast<char>('0' + c[1]));
    } else {
        for (auto x : c) s.push_back(static_cast<char>('0' + x));
    }
    return s;
}

}  // namespace idealarr
