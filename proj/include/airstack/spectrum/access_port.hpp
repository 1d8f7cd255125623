#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "airstack/core/bytes.hpp"
#include "airstack/ledger/rules.hpp"

namespace airstack::spectrum {

enum class VlanState { NullRoute, Routed };

const char* vlan_state_name(VlanState state);

struct VlanAssignment {
    core::HostTag host;
    VlanState vlan = VlanState::NullRoute;
    std::uint64_t assigned_at_ms = 0;

    bool operator==(const VlanAssignment&) const = default;
};

/// Logical switch port behind one infrastructure radio. Supplicants start on
/// the null-routed VLAN; only an explicit Grant decision moves them to the
/// routed VLAN, and departure clears all state.
class AccessPort {
public:
    AccessPort() = default;
    explicit AccessPort(std::string interface_id) : interface_id_(std::move(interface_id)) {}

    const std::string& interface_id() const { return interface_id_; }

    /// Registers the host and null-routes it if it has no assignment yet.
    void register_supplicant(const core::HostTag& host, std::uint64_t now_ms);

    /// Removes supplication and any VLAN assignment.
    void depart(const core::HostTag& host);

    bool is_supplicated(const core::HostTag& host) const { return supplicants_.count(host) > 0; }

    /// Applies an access decision: Grant -> Routed, Deny -> NullRoute.
    /// Throws core::Error("NotSupplicated") for unknown hosts.
    VlanAssignment assign_vlan(const core::HostTag& host, const ledger::AccessDecision& decision,
                               std::uint64_t now_ms);

    std::optional<VlanState> vlan_of(const core::HostTag& host) const;

    const std::set<core::HostTag>& supplicants() const { return supplicants_; }

private:
    std::string interface_id_;
    std::set<core::HostTag> supplicants_;
    std::map<core::HostTag, VlanAssignment> vlans_;
};

}  // namespace airstack::spectrum
