#pragma once

#include "idealarr/ideals.hpp"
#include "idealarr/root_system.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idealarr {

/// Outcome of testing the chain/dependence condition of an ideal against one
/// maximal parabolic Φ₀.
struct ConditionReport {
    std::size_t parabolic = 0;  ///< removed simple index (0-based)
    Mask intersection;          ///< Φ₀ᶜ ∩ Iᶜ
    bool is_empty = false;
    bool is_chain = false;
    bool unique_heights = false;
    bool dependence_ok = false;
    /// Pairs (α, β) of the intersection with no γ ∈ Φ₀⁺ making {α, β, γ}
    /// linearly dependent.
    std::vector<std::pair<std::size_t, std::size_t>> witness_failures;

    bool holds() const { return !is_empty && is_chain && unique_heights && dependence_ok; }
    friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

enum class CertificateKind {
    FullWeyl,
    EmptyArrangement,
    RankAtMost2,
    Product,
    Fibration,
    EmptyComplementStep,
    Failure,
};

const char* to_string(CertificateKind kind);

/// Recursion tree produced by certify. Fibration and EmptyComplementStep
/// carry exactly one child; when Φ₀ is reducible that child is a Product
/// with one entry per irreducible component.
struct Certificate {
    CertificateKind kind = CertificateKind::Failure;
    std::shared_ptr<const RootSystem> system;
    Ideal ideal;
    std::size_t parabolic = 0;
    std::optional<ConditionReport> report;
    std::vector<Certificate> children;
    /// Product children: ambient simple indices of each component.
    std::vector<std::size_t> embedding;
    std::vector<ConditionReport> failure_reports;

    bool positive() const;
    /// Number of Fibration nodes on the longest root-to-leaf path.
    int fibration_depth() const;
};

/// Rank of A_I: dimension of the span of the roots in Iᶜ.
int arrangement_rank(const RootSystem& rs, const Ideal& ideal);

/// Throws std::invalid_argument for the empty ideal.
ConditionReport check_condition(const RootSystem& rs, const Ideal& ideal, const ParabolicSubsystem& p);

Certificate certify(const RootSystem& rs, const Ideal& ideal);

struct CertifiedCount {
    std::uint64_t total = 0;
    std::uint64_t certified = 0;
    friend bool operator==(const CertifiedCount&, const CertifiedCount&) = default;
};

/// OpenMP sweep with a per-thread memo over (subsystem, ideal).
CertifiedCount count_certified(const RootSystem& rs);
/// Reference sweep: builds the full certificate tree of every ideal in turn.
CertifiedCount count_certified_serial(const RootSystem& rs);

/// Condition check used by the sweep; agrees with check_condition(...).holds().
bool condition_holds(const RootSystem& rs, const Ideal& ideal, const ParabolicSubsystem& p);

// ---------------------------------------------------------------------------
// D_n ideals not covered by the condition with respect to D_{n-1}.

enum class DnClass { ThmMainCase, PrincipalCase, TypeI, TypeII, TypeIII, Hole };

const char* to_string(DnClass c);

struct DnClassification {
    DnClass cls = DnClass::Hole;
    int r = 0;
    int s = 0;
    int t = 0;
    std::vector<std::size_t> generators;
};

/// e_i ± e_j in Bourbaki coordinates (1-based i < j) as a root index.
std::size_t dn_root(const RootSystem& rs, int i, int j, bool plus);

/// Sorts a D_n ideal into ThmMainCase (one of e_1 ± e_n lies in I), the
/// principal ideal of e_{n-2}+e_{n-1}, or the three generator shapes;
/// anything else is returned as Hole. The empty ideal (full reflection arrangement) is
/// reported as ThmMainCase.
DnClassification classify_dn(const RootSystem& rs, const Ideal& ideal);

/// Every root of I lies above e_{n-2} + e_{n-1}.
bool all_members_above_principal(const RootSystem& rs, const Ideal& ideal);

// ---------------------------------------------------------------------------
// Canonical JSON (keys sorted, arrays in index order).

nlohmann::json to_json(const RootSystem& rs, const ConditionReport& report);
nlohmann::json to_json(const Certificate& cert);

}  // namespace idealarr
