#include "airstack/ledger/rules.hpp"

#include "airstack/core/byte_io.hpp"
#include "airstack/core/error.hpp"

namespace airstack::ledger {

namespace {

enum : std::uint8_t {
    kOpMobilityClassIs = 0,
    kOpOuiAllowed = 1,
    kOpProfileNotExpired = 2,
    kOpMinObservations = 3,
    kOpSpeedWithin = 4,
};

}  // namespace

std::string predicate_name(const Predicate& p) {
    struct Namer {
        std::string operator()(const MobilityClassIs& r) const {
            return std::string("mobility_class_is:") + identity::mobility_class_name(r.required);
        }
        std::string operator()(const OuiAllowed&) const { return "oui_allowed"; }
        std::string operator()(const ProfileNotExpired&) const { return "profile_not_expired"; }
        std::string operator()(const MinObservations& r) const {
            return "min_observations:" + std::to_string(r.count);
        }
        std::string operator()(const SpeedWithin&) const { return "speed_within"; }
    };
    return std::visit(Namer{}, p);
}

std::vector<std::uint8_t> RuleSet::encode() const {
    core::ByteWriter w;
    if (rules.size() > 0xFFFF)
        throw core::Error("MalformedPayload", "rule set too large");
    w.u16_be(static_cast<std::uint16_t>(rules.size()));
    for (const Predicate& p : rules) {
        if (const auto* r = std::get_if<MobilityClassIs>(&p)) {
            w.u8(kOpMobilityClassIs);
            w.u8(static_cast<std::uint8_t>(r->required));
        } else if (std::holds_alternative<OuiAllowed>(p)) {
            w.u8(kOpOuiAllowed);
        } else if (std::holds_alternative<ProfileNotExpired>(p)) {
            w.u8(kOpProfileNotExpired);
        } else if (const auto* r = std::get_if<MinObservations>(&p)) {
            w.u8(kOpMinObservations);
            w.u32_be(r->count);
        } else if (const auto* r = std::get_if<SpeedWithin>(&p)) {
            w.u8(kOpSpeedWithin);
            w.f64_be(r->lo_mps);
            w.f64_be(r->hi_mps);
        }
    }
    return w.take();
}

RuleSet RuleSet::decode(std::span<const std::uint8_t> data) {
    core::ByteReader r(data);
    RuleSet rs;
    std::uint16_t count = r.u16_be();
    rs.rules.reserve(count);
    for (std::uint16_t i = 0; i < count; ++i) {
        std::uint8_t op = r.u8();
        switch (op) {
            case kOpMobilityClassIs: {
                std::uint8_t cls = r.u8();
                if (cls > static_cast<std::uint8_t>(identity::MobilityClass::Anomalous))
                    throw core::Error("MalformedPayload",
                                      "unknown mobility class " + std::to_string(cls));
                rs.rules.push_back(
                    MobilityClassIs{static_cast<identity::MobilityClass>(cls)});
                break;
            }
            case kOpOuiAllowed:
                rs.rules.push_back(OuiAllowed{});
                break;
            case kOpProfileNotExpired:
                rs.rules.push_back(ProfileNotExpired{});
                break;
            case kOpMinObservations:
                rs.rules.push_back(MinObservations{r.u32_be()});
                break;
            case kOpSpeedWithin: {
                double lo = r.f64_be();
                double hi = r.f64_be();
                rs.rules.push_back(SpeedWithin{lo, hi});
                break;
            }
            default:
                throw core::Error("MalformedPayload", "unknown rule opcode " + std::to_string(op));
        }
    }
    r.expect_end();
    return rs;
}

RuleSet default_rules() {
    RuleSet rs;
    rs.rules = {MobilityClassIs{identity::MobilityClass::Vehicle}, OuiAllowed{},
                ProfileNotExpired{}, MinObservations{5}};
    return rs;
}

AccessDecision evaluate_contract(const RuleSet& rules, const identity::BehaviorProfile& profile,
                                 const EvalContext& ctx) {
    AccessDecision decision;
    decision.evaluated_at_ms = ctx.now_ms;
    for (const Predicate& p : rules.rules) {
        bool pass = true;
        if (const auto* r = std::get_if<MobilityClassIs>(&p)) {
            pass = profile.mobility_class == r->required;
        } else if (std::holds_alternative<OuiAllowed>(p)) {
            pass = identity::check_manufacturer(profile.mac, ctx.oui_allowlist);
        } else if (std::holds_alternative<ProfileNotExpired>(p)) {
            pass = !profile.expired(ctx.now_ms);
        } else if (const auto* r = std::get_if<MinObservations>(&p)) {
            pass = profile.observations.size() >= r->count;
        } else if (const auto* r = std::get_if<SpeedWithin>(&p)) {
            auto [mean, stddev] = identity::speed_stats(profile.speed_samples_mps);
            (void)stddev;
            pass = mean >= r->lo_mps && mean <= r->hi_mps;
        }
        if (!pass)
            decision.failed_predicates.push_back(predicate_name(p));
    }
    decision.verdict = decision.failed_predicates.empty() ? Verdict::Grant : Verdict::Deny;
    return decision;
}

}  // namespace airstack::ledger
