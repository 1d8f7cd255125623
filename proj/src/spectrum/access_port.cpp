#include "airstack/spectrum/access_port.hpp"

#include "airstack/core/error.hpp"

namespace airstack::spectrum {

const char* vlan_state_name(VlanState state) {
    switch (state) {
        case VlanState::NullRoute: return "NullRoute";
        case VlanState::Routed: return "Routed";
    }
    return "Unknown";
}

void AccessPort::register_supplicant(const core::HostTag& host, std::uint64_t now_ms) {
    supplicants_.insert(host);
    if (!vlans_.count(host))
        vlans_[host] = VlanAssignment{host, VlanState::NullRoute, now_ms};
}

void AccessPort::depart(const core::HostTag& host) {
    supplicants_.erase(host);
    vlans_.erase(host);
}

VlanAssignment AccessPort::assign_vlan(const core::HostTag& host,
                                       const ledger::AccessDecision& decision,
                                       std::uint64_t now_ms) {
    if (!supplicants_.count(host))
        throw core::Error("NotSupplicated",
                          "host " + host.hex() + " is not supplicated on " + interface_id_);
    VlanAssignment assignment{host,
                              decision.verdict == ledger::Verdict::Grant ? VlanState::Routed
                                                                         : VlanState::NullRoute,
                              now_ms};
    vlans_[host] = assignment;
    return assignment;
}

std::optional<VlanState> AccessPort::vlan_of(const core::HostTag& host) const {
    auto it = vlans_.find(host);
    if (it == vlans_.end())
        return std::nullopt;
    return it->second.vlan;
}

}  // namespace airstack::spectrum
