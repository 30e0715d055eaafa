#include "idealarr/certify.hpp"

#include <omp.h>

#include <stdexcept>
#include <unordered_map>

namespace idealarr {

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::FullWeyl: return "FullWeyl";
        case CertificateKind::EmptyArrangement: return "EmptyArrangement";
        case CertificateKind::RankAtMost2: return "RankAtMost2";
        case CertificateKind::Product: return "Product";
        case CertificateKind::Fibration: return "Fibration";
        case CertificateKind::EmptyComplementStep: return "EmptyComplementStep";
        case CertificateKind::Failure: return "Failure";
    }
    return "?";
}

const char* to_string(DnClass c) {
    switch (c) {
        case DnClass::ThmMainCase: return "ThmMainCase";
        case DnClass::PrincipalCase: return "PrincipalCase";
        case DnClass::TypeI: return "TypeI";
        case DnClass::TypeII: return "TypeII";
        case DnClass::TypeIII: return "TypeIII";
        case DnClass::Hole: return "Hole";
    }
    return "?";
}

bool Certificate::positive() const {
    if (kind == CertificateKind::Failure) return false;
    for (const auto& c : children)
        if (!c.positive()) return false;
    return true;
}

int Certificate::fibration_depth() const {
    int best = 0;
    for (const auto& c : children) best = std::max(best, c.fibration_depth());
    return best + (kind == CertificateKind::Fibration ? 1 : 0);
}

int arrangement_rank(const RootSystem& rs, const Ideal& ideal) {
    std::vector<IntVector> rows;
    complement(rs, ideal).for_each([&](std::size_t i) { rows.push_back(rs.scaled_coords(i)); });
    return linalg::rank(rows);
}

ConditionReport check_condition(const RootSystem& rs, const Ideal& ideal, const ParabolicSubsystem& p) {
    if (ideal.members.empty())
        throw std::invalid_argument("check_condition: the condition is only defined for nonempty ideals");
    ConditionReport r;
    r.parabolic = p.removed_simple;
    r.intersection = p.complement_mask - ideal.members;
    r.is_empty = r.intersection.empty();

    const auto members = r.intersection.indices();
    r.is_chain = true;
    for (std::size_t a = 0; a < members.size() && r.is_chain; ++a)
        for (std::size_t b = a + 1; b < members.size() && r.is_chain; ++b)
            r.is_chain = rs.leq(members[a], members[b]) || rs.leq(members[b], members[a]);

    r.unique_heights = true;
    for (std::size_t a = 1; a < members.size(); ++a)
        if (rs.height(members[a]) == rs.height(members[a - 1])) r.unique_heights = false;

    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (!rs.dependent_with(members[a], members[b]).intersects(p.member_mask))
                r.witness_failures.emplace_back(members[a], members[b]);
    r.dependence_ok = r.witness_failures.empty();
    return r;
}

bool condition_holds(const RootSystem& rs, const Ideal& ideal, const ParabolicSubsystem& p) {
    const Mask inter = p.complement_mask - ideal.members;
    if (inter.empty()) return false;
    // Indices are sorted by height, so a chain is exactly a sequence of
    // consecutive comparable roots of strictly increasing height.
    bool ok = true;
    std::size_t prev = Mask::kCapacity;
    inter.for_each([&](std::size_t i) {
        if (!ok) return;
        if (prev != Mask::kCapacity) ok = rs.height(prev) < rs.height(i) && rs.leq(prev, i);
        prev = i;
    });
    if (!ok) return false;
    const auto members = inter.indices();
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
            if (!rs.dependent_with(members[a], members[b]).intersects(p.member_mask)) return false;
    return true;
}

namespace {

std::shared_ptr<const RootSystem> shared_of(const RootSystem& rs) { return shared_root_system(rs.type(), rs.rank()); }

Certificate certify_in(const std::shared_ptr<const RootSystem>& sys, const Ideal& ideal);

/// Certificate for I₀ inside the parabolic; a Product when Φ₀ is reducible.
Certificate certify_parabolic(const RootSystem& rs, const Ideal& ideal, std::size_t j) {
    const auto& comps = rs.parabolic_components(j);
    auto parts = restrict_ideal(ideal, comps);
    if (parts.size() == 1) return certify_in(parts.front().component.system, parts.front().ideal);
    Certificate prod;
    prod.kind = CertificateKind::Product;
    prod.system = shared_of(rs);
    prod.ideal = ideal;
    prod.parabolic = j;
    for (auto& part : parts) {
        Certificate c = certify_in(part.component.system, part.ideal);
        c.embedding = part.component.simple_map;
        prod.children.push_back(std::move(c));
    }
    return prod;
}

Certificate certify_in(const std::shared_ptr<const RootSystem>& sys, const Ideal& ideal) {
    const RootSystem& rs = *sys;
    Certificate cert;
    cert.system = sys;
    cert.ideal = ideal;
    if (ideal.members == rs.all()) {
        cert.kind = CertificateKind::EmptyArrangement;
        return cert;
    }
    if (ideal.members.empty()) {
        cert.kind = CertificateKind::FullWeyl;
        return cert;
    }
    if (arrangement_rank(rs, ideal) <= 2) {
        cert.kind = CertificateKind::RankAtMost2;
        return cert;
    }
    std::vector<ConditionReport> reports;
    for (std::size_t j = 0; j < static_cast<std::size_t>(rs.rank()); ++j) {
        ConditionReport report = check_condition(rs, ideal, rs.parabolic(j));
        if (report.is_empty || report.holds()) {
            Certificate child = certify_parabolic(rs, ideal, j);
            if (child.positive()) {
                cert.kind = report.is_empty ? CertificateKind::EmptyComplementStep : CertificateKind::Fibration;
                cert.parabolic = j;
                if (!report.is_empty) cert.report = std::move(report);
                cert.children.push_back(std::move(child));
                return cert;
            }
        }
        reports.push_back(std::move(report));
    }
    cert.kind = CertificateKind::Failure;
    cert.failure_reports = std::move(reports);
    return cert;
}

struct MemoKey {
    const RootSystem* system;
    Mask ideal;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        return k.ideal.hash() ^ (reinterpret_cast<std::uintptr_t>(k.system) * 0x9e3779b97f4a7c15ULL);
    }
};

using Memo = std::unordered_map<MemoKey, bool, MemoKeyHash>;

bool certifiable(const RootSystem& rs, const Mask& ideal, Memo& memo);

bool parabolic_certifiable(const RootSystem& rs, const Mask& ideal, std::size_t j, Memo& memo) {
    for (const auto& comp : rs.parabolic_components(j)) {
        Mask sub;
        for (std::size_t k = 0; k < comp.root_map.size(); ++k)
            if (ideal.test(comp.root_map[k])) sub.set(k);
        if (!certifiable(*comp.system, sub, memo)) return false;
    }
    return true;
}

bool certifiable(const RootSystem& rs, const Mask& ideal, Memo& memo) {
    if (ideal.empty() || ideal == rs.all()) return true;
    const MemoKey key{&rs, ideal};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = arrangement_rank(rs, Ideal{ideal}) <= 2;
    for (std::size_t j = 0; j < static_cast<std::size_t>(rs.rank()) && !ok; ++j) {
        const auto& p = rs.parabolic(j);
        if ((p.complement_mask - ideal).empty() || condition_holds(rs, Ideal{ideal}, p))
            ok = parabolic_certifiable(rs, ideal, j, memo);
    }
    memo.emplace(key, ok);
    return ok;
}

}  // namespace

Certificate certify(const RootSystem& rs, const Ideal& ideal) { return certify_in(shared_of(rs), ideal); }

CertifiedCount count_certified_serial(const RootSystem& rs) {
    CertifiedCount c;
    enumerate_ideals(rs, [&](const Ideal& I) {
        ++c.total;
        if (certify(rs, I).positive()) ++c.certified;
        return true;
    });
    return c;
}

CertifiedCount count_certified(const RootSystem& rs) {
    const auto sys = shared_of(rs);
    const auto ideals = all_ideals_parallel(*sys);
    // Warm the lazily built tables before the threads fan out.
    if (sys->size() > 0) (void)sys->dependent_with(0, 0);
    const auto n = static_cast<long>(ideals.size());
    std::uint64_t certified = 0;
#pragma omp parallel reduction(+ : certified)
    {
        Memo memo;
#pragma omp for schedule(dynamic, 64)
        for (long i = 0; i < n; ++i)
            if (certifiable(*sys, ideals[static_cast<std::size_t>(i)].members, memo)) ++certified;
    }
    return {static_cast<std::uint64_t>(ideals.size()), certified};
}

// ---------------------------------------------------------------------------

std::size_t dn_root(const RootSystem& rs, int i, int j, bool plus) {
    if (rs.type() != 'D') throw std::invalid_argument("dn_root: not a type D system");
    const int n = rs.rank();
    if (i < 1 || j <= i || j > n) throw std::invalid_argument("dn_root: need 1 <= i < j <= n");
    for (std::size_t k = 0; k < rs.size(); ++k) {
        const auto& v = rs.scaled_coords(k);
        bool match = true;
        for (int d = 0; d < n && match; ++d) {
            std::int64_t want = 0;
            if (d == i - 1) want = 1;
            if (d == j - 1) want = plus ? 1 : -1;
            match = v[static_cast<std::size_t>(d)] == want;
        }
        if (match) return k;
    }
    throw std::logic_error("dn_root: root not found");
}

namespace {

/// Reads e_i + e_j (1-based, i < j) off a D_n root; false for other roots.
bool as_plus_pair(const RootSystem& rs, std::size_t index, int& i, int& j) {
    const auto& v = rs.scaled_coords(index);
    i = j = 0;
    for (std::size_t d = 0; d < v.size(); ++d) {
        if (v[d] == 0) continue;
        if (v[d] != 1) return false;
        if (i == 0) i = static_cast<int>(d) + 1;
        else if (j == 0) j = static_cast<int>(d) + 1;
        else return false;
    }
    return j != 0;
}

}  // namespace

DnClassification classify_dn(const RootSystem& rs, const Ideal& ideal) {
    if (rs.type() != 'D' || rs.rank() < 4) throw std::invalid_argument("classify_dn: needs a D_n system with n >= 4");
    const int n = rs.rank();
    DnClassification out;
    out.generators = minimal_generators(rs, ideal);

    const Mask comp = complement(rs, ideal);
    const bool both_outside = comp.test(dn_root(rs, 1, n, true)) && comp.test(dn_root(rs, 1, n, false));
    if (!both_outside || ideal.members.empty()) {
        out.cls = DnClass::ThmMainCase;
        return out;
    }
    if (out.generators.size() == 1 && out.generators.front() == dn_root(rs, n - 2, n - 1, true)) {
        out.cls = DnClass::PrincipalCase;
        return out;
    }

    struct Shape {
        bool first;  // e_r + e_{n-1}
        int a, b;
    };
    std::vector<Shape> shapes;
    for (auto g : out.generators) {
        int i = 0, j = 0;
        if (!as_plus_pair(rs, g, i, j)) return out;
        if (j == n - 1 && i < n - 2) shapes.push_back({true, i, j});
        else if (j < n - 1) shapes.push_back({false, i, j});
        else return out;
    }
    if (shapes.size() == 1) {
        if (shapes[0].first) {
            out.cls = DnClass::TypeI;
            out.r = shapes[0].a;
        } else {
            out.cls = DnClass::TypeII;
            out.s = shapes[0].a;
            out.t = shapes[0].b;
        }
        return out;
    }
    if (shapes.size() == 2 && shapes[0].first != shapes[1].first) {
        const Shape& one = shapes[0].first ? shapes[0] : shapes[1];
        const Shape& two = shapes[0].first ? shapes[1] : shapes[0];
        if (one.a < two.a) {
            out.cls = DnClass::TypeIII;
            out.r = one.a;
            out.s = two.a;
            out.t = two.b;
        }
    }
    return out;
}

bool all_members_above_principal(const RootSystem& rs, const Ideal& ideal) {
    const int n = rs.rank();
    return ideal.members.subset_of(rs.up_set(dn_root(rs, n - 2, n - 1, true)));
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const RootSystem& rs, const ConditionReport& report) {
    nlohmann::json j;
    j["parabolic"] = report.parabolic + 1;
    auto inter = nlohmann::json::array();
    report.intersection.for_each([&](std::size_t i) { inter.push_back(format_root_label(rs, i)); });
    j["intersection"] = std::move(inter);
    j["is_empty"] = report.is_empty;
    j["is_chain"] = report.is_chain;
    j["unique_heights"] = report.unique_heights;
    j["dependence_ok"] = report.dependence_ok;
    j["holds"] = report.holds();
    auto fails = nlohmann::json::array();
    for (const auto& [a, b] : report.witness_failures)
        fails.push_back(nlohmann::json::array({format_root_label(rs, a), format_root_label(rs, b)}));
    j["witness_failures"] = std::move(fails);
    return j;
}

nlohmann::json to_json(const Certificate& cert) {
    const RootSystem& rs = *cert.system;
    nlohmann::json j;
    j["kind"] = to_string(cert.kind);
    j["system"] = rs.label();
    auto gens = nlohmann::json::array();
    for (auto g : minimal_generators(rs, cert.ideal)) gens.push_back(format_root_label(rs, g));
    j["generators"] = std::move(gens);
    j["positive"] = cert.positive();
    if (!cert.embedding.empty()) {
        auto e = nlohmann::json::array();
        for (auto k : cert.embedding) e.push_back(k + 1);
        j["embedding"] = std::move(e);
    }
    switch (cert.kind) {
        case CertificateKind::Fibration:
            j["parabolic"] = cert.parabolic + 1;
            j["condition"] = to_json(rs, *cert.report);
            j["child"] = to_json(cert.children.front());
            break;
        case CertificateKind::EmptyComplementStep:
            j["parabolic"] = cert.parabolic + 1;
            j["child"] = to_json(cert.children.front());
            break;
        case CertificateKind::Product: {
            j["parabolic"] = cert.parabolic + 1;
            auto kids = nlohmann::json::array();
            for (const auto& c : cert.children) kids.push_back(to_json(c));
            j["children"] = std::move(kids);
            break;
        }
        case CertificateKind::Failure: {
            auto reps = nlohmann::json::array();
            for (const auto& r : cert.failure_reports) reps.push_back(to_json(rs, r));
            j["reports"] = std::move(reps);
            break;
        }
        default:
            break;
    }
    return j;
}

}  // namespace idealarr
