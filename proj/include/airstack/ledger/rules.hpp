#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "airstack/core/bytes.hpp"
#include "airstack/identity/profile.hpp"

namespace airstack::ledger {

/// Declarative access predicates. A RuleSet is the conjunction of its rules;
/// there is no general-purpose contract VM.
struct MobilityClassIs {
    identity::MobilityClass required = identity::MobilityClass::Vehicle;
    bool operator==(const MobilityClassIs&) const = default;
};
struct OuiAllowed {
    bool operator==(const OuiAllowed&) const = default;
};
struct ProfileNotExpired {
    bool operator==(const ProfileNotExpired&) const = default;
};
struct MinObservations {
    std::uint32_t count = 5;
    bool operator==(const MinObservations&) const = default;
};
struct SpeedWithin {
    double lo_mps = 1.0;
    double hi_mps = 60.0;
    bool operator==(const SpeedWithin&) const = default;
};

using Predicate =
    std::variant<MobilityClassIs, OuiAllowed, ProfileNotExpired, MinObservations, SpeedWithin>;

std::string predicate_name(const Predicate& p);

struct RuleSet {
    std::vector<Predicate> rules;

    /// Canonical bytes: u16-BE rule count, then per rule a one-byte opcode
    /// (MobilityClassIs=0, OuiAllowed=1, ProfileNotExpired=2,
    /// MinObservations=3, SpeedWithin=4) followed by its operands
    /// (class u8, count u32-BE, bounds f64-BE bit patterns).
    std::vector<std::uint8_t> encode() const;

    /// Throws core::Error("MalformedPayload") on bad opcodes, truncation, or
    /// trailing bytes.
    static RuleSet decode(std::span<const std::uint8_t> data);

    bool operator==(const RuleSet&) const = default;
};

/// The stock policy: MobilityClassIs(Vehicle), OuiAllowed, ProfileNotExpired,
/// MinObservations(5).
RuleSet default_rules();

struct EvalContext {
    std::uint64_t now_ms = 0;
    std::vector<core::Oui> oui_allowlist;
};

enum class Verdict { Grant, Deny };

struct AccessDecision {
    Verdict verdict = Verdict::Deny;
    std::vector<std::string> failed_predicates;
    std::uint64_t evaluated_at_ms = 0;

    bool operator==(const AccessDecision&) const = default;
};

/// Evaluates every rule against the profile; Grant iff all pass. Failed
/// predicate names are reported in rule order.
AccessDecision evaluate_contract(const RuleSet& rules, const identity::BehaviorProfile& profile,
                                 const EvalContext& ctx);

}  // namespace airstack::ledger
