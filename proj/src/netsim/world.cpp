#include "airstack/netsim/world.hpp"

#include <algorithm>
#include <set>

#include "airstack/core/error.hpp"
#include "airstack/spectrum/localization.hpp"

namespace airstack::netsim {

namespace {

double polyline_length(const std::vector<core::Vec2>& points) {
    double total = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
        total += core::distance(points[i - 1], points[i]);
    return total;
}

core::Vec2 point_at_arc_length(const std::vector<core::Vec2>& points, double s) {
    if (points.size() == 1)
        return points.front();
    for (std::size_t i = 1; i < points.size(); ++i) {
        double seg = core::distance(points[i - 1], points[i]);
        if (s <= seg || i + 1 == points.size()) {
            if (seg <= 0.0)
                return points[i];
            double t = std::clamp(s / seg, 0.0, 1.0);
            return points[i - 1] + (points[i] - points[i - 1]) * t;
        }
        s -= seg;
    }
    return points.back();
}

/// Maps total distance travelled onto the polyline; looped vehicles ping-pong
/// between the endpoints, others park at the far end.
core::Vec2 position_on_route(const std::vector<core::Vec2>& points, double travelled, bool loop) {
    double total = polyline_length(points);
    if (total <= 0.0)
        return points.front();
    double s;
    if (loop) {
        s = std::fmod(travelled, 2.0 * total);
        if (s > total)
            s = 2.0 * total - s;
    } else {
        s = std::min(travelled, total);
    }
    return point_at_arc_length(points, s);
}

ledger::AccessDecision synthetic_decision(ledger::Verdict verdict, std::uint64_t now_ms,
                                          const std::string& failed = {}) {
    ledger::AccessDecision d;
    d.verdict = verdict;
    d.evaluated_at_ms = now_ms;
    if (!failed.empty())
        d.failed_predicates.push_back(failed);
    return d;
}

}  // namespace

const char* event_kind_name(EventKind kind) {
    switch (kind) {
        case EventKind::MoveTick: return "MoveTick";
        case EventKind::SenseTick: return "SenseTick";
        case EventKind::GossipTick: return "GossipTick";
        case EventKind::ExpiryTick: return "ExpiryTick";
    }
    return "Unknown";
}

World::World(Scenario scenario) : scenario_(std::move(scenario)) {
    validate_scenario(scenario_);
    identity::DhGroup group = identity::default_group();
    core::SplitMix64 seeder(scenario_.seed);

    for (const MunicipalityConfig& muni : scenario_.municipalities) {
        for (const spectrum::AirInterface& rsu_iface : muni.rsus) {
            RsuNode node;
            node.iface = rsu_iface;
            node.iface.owner = spectrum::InterfaceOwner::RoadsideUnit;
            node.iface.network_id = muni.network_id;
            node.network_id = muni.network_id;
            node.keys = identity::generate_keypair(seeder.next(), group);
            node.replica.node_id = node.iface.interface_id;
            node.replica.author_tag = identity::derive_host_tag(node.keys.public_key, group);
            node.port = spectrum::AccessPort(node.iface.interface_id);
            rsus_.push_back(std::move(node));
        }
    }
    for (const VehicleConfig& vehicle : scenario_.vehicles) {
        DeviceNode d;
        d.rogue = false;
        d.mac = vehicle.mac;
        d.keys = identity::generate_keypair(seeder.next(), group);
        d.tag = identity::derive_host_tag(d.keys.public_key, group);
        d.polyline = vehicle.route_polyline;
        d.speed_mps = vehicle.speed_mps;
        d.loop = vehicle.loop;
        d.iface.interface_id = vehicle.mac.to_string();
        d.iface.owner = spectrum::InterfaceOwner::Vehicle;
        d.iface.position = vehicle.route_polyline.front();
        d.iface.tx_power_dbm = vehicle.tx_power_dbm;
        devices_.push_back(std::move(d));
    }
    for (const RogueDeviceConfig& rogue : scenario_.rogue_devices) {
        DeviceNode d;
        d.rogue = true;
        d.mac = rogue.mac;
        d.keys = identity::generate_keypair(seeder.next(), group);
        d.tag = identity::derive_host_tag(d.keys.public_key, group);
        d.polyline = {rogue.position};
        d.iface.interface_id = rogue.mac.to_string();
        d.iface.owner = spectrum::InterfaceOwner::Device;
        d.iface.position = rogue.position;
        d.iface.tx_power_dbm = rogue.tx_power_dbm;
        devices_.push_back(std::move(d));
    }
    noise_rng_ = core::SplitMix64(seeder.next());

    std::set<core::HostTag> tags;
    std::vector<core::HostTag> authors;
    for (const RsuNode& rsu : rsus_) {
        if (!tags.insert(rsu.replica.author_tag).second)
            throw core::Error("ConfigError", "host tag collision among participants");
        authors.push_back(rsu.replica.author_tag);
    }
    for (const DeviceNode& d : devices_)
        if (!tags.insert(d.tag).second)
            throw core::Error("ConfigError", "host tag collision among participants");

    ledger::Chain base =
        make_authorization_chain(scenario_.auth_chain_id, authors, scenario_.rules, 0);
    for (RsuNode& rsu : rsus_) {
        rsu.replica.ledger.cache = ledger::BlockCache(scenario_.cache_capacity);
        rsu.replica.ledger.chains[scenario_.auth_chain_id] = base;
        recompute_held(rsu.replica);
    }

    adjacency_.assign(rsus_.size(), {});
    if (!scenario_.gossip_adjacency.empty()) {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < rsus_.size(); ++i)
            index[rsus_[i].iface.interface_id] = i;
        for (const auto& [a, b] : scenario_.gossip_adjacency) {
            std::size_t ia = index.at(a);
            std::size_t ib = index.at(b);
            adjacency_[ia].push_back(ib);
            adjacency_[ib].push_back(ia);
        }
    } else {
        for (std::size_t i = 0; i < rsus_.size(); ++i) {
            for (std::size_t j = i + 1; j < rsus_.size(); ++j) {
                double d = core::distance(rsus_[i].iface.position, rsus_[j].iface.position);
                double ij = spectrum::rssi_at(rsus_[i].iface.tx_power_dbm, scenario_.path_loss, d);
                double ji = spectrum::rssi_at(rsus_[j].iface.tx_power_dbm, scenario_.path_loss, d);
                if (ij >= scenario_.sensitivity_floor_dbm && ji >= scenario_.sensitivity_floor_dbm) {
                    adjacency_[i].push_back(j);
                    adjacency_[j].push_back(i);
                }
            }
        }
    }
    for (std::vector<std::size_t>& neighbors : adjacency_) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    }

    std::vector<std::string> node_ids;
    for (const RsuNode& rsu : rsus_)
        node_ids.push_back(rsu.replica.node_id);
    tracker_ = PropagationTracker(std::move(node_ids));

    schedule(0, EventKind::SenseTick, nullptr);
    schedule(scenario_.move_period_ms, EventKind::MoveTick, nullptr);
    schedule(scenario_.gossip_period_ms, EventKind::GossipTick, nullptr);
    schedule(scenario_.expiry_check_period_ms, EventKind::ExpiryTick, nullptr);
}

void World::schedule(std::uint64_t time_ms, EventKind kind, std::vector<Event>* emitted) {
    Event e{time_ms, next_seq_++, kind};
    queue_.push(e);
    if (emitted)
        emitted->push_back(e);
}

bool World::done() const {
    return queue_.empty() || queue_.top().time_ms >= scenario_.duration_ms;
}

StepResult World::step() {
    if (done())
        throw core::Error("NoPendingEvents", "simulation has reached its horizon");
    StepResult result;
    result.event = queue_.top();
    queue_.pop();
    clock_ms_ = result.event.time_ms;
    ++events_processed_;
    std::uint64_t now = clock_ms_;
    switch (result.event.kind) {
        case EventKind::MoveTick:
            handle_move(now);
            schedule(now + scenario_.move_period_ms, EventKind::MoveTick, &result.emitted);
            break;
        case EventKind::SenseTick:
            handle_sense(now);
            schedule(now + scenario_.sense_period_ms, EventKind::SenseTick, &result.emitted);
            break;
        case EventKind::GossipTick:
            handle_gossip(now);
            schedule(now + scenario_.gossip_period_ms, EventKind::GossipTick, &result.emitted);
            break;
        case EventKind::ExpiryTick:
            handle_expiry(now);
            schedule(now + scenario_.expiry_check_period_ms, EventKind::ExpiryTick,
                     &result.emitted);
            break;
    }
    return result;
}

void World::run_to_end() {
    while (!done())
        step();
}

void World::trace(std::uint64_t now, const std::string& kind, const std::string& detail) {
    if (trace_)
        trace_(now, kind, detail);
}

ledger::Chain& World::auth_chain(RsuNode& rsu) {
    return rsu.replica.ledger.chains.at(scenario_.auth_chain_id);
}

const ledger::Chain& World::auth_chain(const RsuNode& rsu) const {
    return rsu.replica.ledger.chains.at(scenario_.auth_chain_id);
}

void World::register_new_blocks(RsuNode& rsu, std::uint64_t height_before) {
    const ledger::Chain& chain = auth_chain(rsu);
    for (std::uint64_t h = height_before + 1; h < chain.blocks.size(); ++h) {
        const ledger::Block& block = chain.blocks[h];
        note_authored(rsu.replica, block);
        tracker_.on_authored(block.digest, rsu.replica.node_id);
    }
}

void World::handle_move(std::uint64_t now) {
    double dt_s = static_cast<double>(now - last_move_ms_) / 1000.0;
    last_move_ms_ = now;
    for (DeviceNode& d : devices_) {
        if (d.rogue || d.speed_mps <= 0.0)
            continue;
        d.path_pos_m += d.speed_mps * dt_s;
        d.iface.position = position_on_route(d.polyline, d.path_pos_m, d.loop);
    }
}

void World::handle_sense(std::uint64_t now) {
    std::vector<spectrum::AirInterface> env;
    env.reserve(rsus_.size() + devices_.size());
    for (const RsuNode& rsu : rsus_)
        env.push_back(rsu.iface);
    for (const DeviceNode& d : devices_)
        env.push_back(d.iface);

    std::map<std::string, std::size_t> device_index;
    for (std::size_t i = 0; i < devices_.size(); ++i)
        device_index[devices_[i].iface.interface_id] = i;

    // Uplink measurement matrix, RSU-major to keep the noise stream aligned.
    std::vector<std::vector<std::pair<std::size_t, double>>> heard_by(devices_.size());
    for (std::size_t r = 0; r < rsus_.size(); ++r) {
        std::vector<spectrum::Measurement> heard =
            spectrum::sense(rsus_[r].iface, env, scenario_.path_loss, noise_rng_, now,
                            scenario_.sensitivity_floor_dbm);
        for (const spectrum::Measurement& m : heard) {
            auto it = device_index.find(m.subject_id);
            if (it != device_index.end())
                heard_by[it->second].push_back({r, m.rssi_dbm});
        }
    }

    // Attachment and handoff detection, device order.
    for (std::size_t di = 0; di < devices_.size(); ++di) {
        DeviceNode& d = devices_[di];
        std::optional<std::size_t> best;
        double best_rssi = 0.0;
        for (const auto& [r, rssi] : heard_by[di]) {
            if (!rsus_[r].iface.ssid_open)
                continue;
            if (!best || rssi > best_rssi ||
                (rssi == best_rssi &&
                 rsus_[r].iface.interface_id < rsus_[*best].iface.interface_id)) {
                best = r;
                best_rssi = rssi;
            }
        }
        if (best) {
            try {
                spectrum::PeeringState state = spectrum::supplicate(
                    d.iface, rsus_[*best].iface,
                    rsus_[*best].iface.ssid_open ? spectrum::SsidPolicy::Open
                                                 : spectrum::SsidPolicy::Closed,
                    scenario_.path_loss, scenario_.sensitivity_floor_dbm);
                if (state.status != spectrum::PeeringStatus::Registered)
                    best.reset();
            } catch (const core::Error&) {
                best.reset();
            }
        }
        if (best == d.serving)
            continue;

        std::optional<identity::BehaviorProfile> moved_profile;
        std::optional<ledger::Verdict> moved_verdict;
        if (d.serving) {
            RsuNode& old_rsu = rsus_[*d.serving];
            old_rsu.port.depart(d.tag);
            auto pit = old_rsu.profiles.find(d.tag);
            if (pit != old_rsu.profiles.end()) {
                moved_profile = std::move(pit->second);
                old_rsu.profiles.erase(pit);
            }
            auto vit = old_rsu.last_verdict.find(d.tag);
            if (vit != old_rsu.last_verdict.end()) {
                moved_verdict = vit->second;
                old_rsu.last_verdict.erase(vit);
            }
        }
        if (best) {
            RsuNode& new_rsu = rsus_[*best];
            new_rsu.port.register_supplicant(d.tag, now);
            if (moved_profile)
                new_rsu.profiles[d.tag] = std::move(*moved_profile);
            if (moved_verdict)
                new_rsu.last_verdict[d.tag] = *moved_verdict;
            if (d.serving) {
                bool replicated = ledger::has_active_grant(auth_chain(new_rsu), d.tag);
                ++report_.handoffs_total;
                ++report_.per_municipality[new_rsu.network_id].handoffs_total;
                if (replicated) {
                    ++report_.handoffs_without_reauth;
                    ++report_.per_municipality[new_rsu.network_id].handoffs_without_reauth;
                }
                handoff_log_.push_back(HandoffRecord{now, d.mac,
                                                     rsus_[*d.serving].iface.interface_id,
                                                     new_rsu.iface.interface_id, replicated});
                std::uint64_t before = auth_chain(new_rsu).height();
                ledger::record_accounting(
                    auth_chain(new_rsu),
                    ledger::AccountingEvent{d.tag, ledger::AccountingKind::HandoffObserved, now},
                    new_rsu.replica.author_tag);
                register_new_blocks(new_rsu, before);
                trace(now, "handoff",
                      d.mac.to_string() + " " + rsus_[*d.serving].iface.interface_id + " -> " +
                          new_rsu.iface.interface_id + (replicated ? " (grant held)" : ""));
            } else {
                trace(now, "attach", d.mac.to_string() + " -> " + new_rsu.iface.interface_id);
            }
        } else if (d.serving) {
            trace(now, "detach", d.mac.to_string() + " from " +
                                     rsus_[*d.serving].iface.interface_id);
        }
        d.serving = best;
    }

    // Profiling and access decisions, RSU-major then device order.
    for (std::size_t r = 0; r < rsus_.size(); ++r) {
        RsuNode& rsu = rsus_[r];
        for (std::size_t di = 0; di < devices_.size(); ++di) {
            DeviceNode& d = devices_[di];
            if (d.serving != r)
                continue;
            if (ledger::has_active_grant(auth_chain(rsu), d.tag)) {
                if (rsu.port.vlan_of(d.tag) != spectrum::VlanState::Routed)
                    rsu.port.assign_vlan(d.tag, synthetic_decision(ledger::Verdict::Grant, now),
                                         now);
                continue;
            }
            if (rsu.port.vlan_of(d.tag) == spectrum::VlanState::Routed) {
                // The grant this VLAN was based on has been revoked.
                rsu.port.assign_vlan(
                    d.tag, synthetic_decision(ledger::Verdict::Deny, now, "profile_not_expired"),
                    now);
                rsu.last_verdict.erase(d.tag);
            }

            auto [pit, created] = rsu.profiles.try_emplace(d.tag);
            identity::BehaviorProfile& profile = pit->second;
            if (created) {
                profile.host = d.tag;
                profile.mac = d.mac;
                profile.created_at_ms = now;
                profile.expires_at_ms = now + scenario_.profile_expiry_ms;
            }

            identity::Observation obs;
            obs.host = d.tag;
            obs.mac = d.mac;
            obs.rsu_id = rsu.iface.interface_id;
            obs.timestamp_ms = now;
            for (const auto& [ri, rssi] : heard_by[di])
                if (ri == r)
                    obs.rssi_dbm = rssi;
            if (heard_by[di].size() >= 3) {
                std::vector<spectrum::AnchorObservation> anchors;
                anchors.reserve(heard_by[di].size());
                for (const auto& [ri, rssi] : heard_by[di])
                    anchors.push_back(spectrum::AnchorObservation{
                        rsus_[ri].iface.position,
                        spectrum::invert_rssi(rssi, d.iface.tx_power_dbm, scenario_.path_loss)});
                try {
                    core::Vec2 estimate = spectrum::localize(anchors);
                    obs.position_estimate = estimate;
                    double err = core::distance(estimate, d.iface.position);
                    localization_sq_err_sum_ += err * err;
                    ++localization_samples_;
                } catch (const core::Error&) {
                    // Degenerate geometry this tick; observation goes in without
                    // a position estimate.
                }
            }
            identity::ingest_observation(profile, obs, scenario_.observation_retention);
            profile.mobility_class = classify_mobility(profile, scenario_.classifier);
            if (profile.mobility_class == identity::MobilityClass::Unknown)
                continue;

            ledger::EvalContext ctx{now, scenario_.oui_allowlist};
            ledger::RuleSet rules =
                ledger::active_rules(rsu.replica.ledger, scenario_.auth_chain_id);
            ledger::AccessDecision preview = ledger::evaluate_contract(rules, profile, ctx);
            auto last = rsu.last_verdict.find(d.tag);
            if (last != rsu.last_verdict.end() && last->second == preview.verdict)
                continue;

            std::uint64_t before = auth_chain(rsu).height();
            ledger::AccessDecision decision = identity::run_access_pipeline(
                profile, ctx, rsu.replica.ledger, scenario_.auth_chain_id,
                identity::ServingPoint{rsu.network_id, rsu.iface.interface_id},
                rsu.replica.author_tag);
            if (decision.verdict == ledger::Verdict::Grant) {
                ledger::IdentityRecordPayload idp{d.tag, d.mac, profile.created_at_ms,
                                                 profile.expires_at_ms, profile.mobility_class};
                ledger::append_block(auth_chain(rsu), ledger::PayloadKind::IdentityRecord,
                                     idp.encode(), now, rsu.replica.author_tag);
                ledger::Route route{d.tag, rsu.network_id, rsu.iface.interface_id, now};
                ledger::append_block(auth_chain(rsu), ledger::PayloadKind::RouteRecord,
                                     route.encode(), now, rsu.replica.author_tag);
                ++report_.grants;
                ++report_.per_municipality[rsu.network_id].grants;
                grant_log_.push_back(GrantRecord{now, d.mac, rsu.iface.interface_id});
                trace(now, "grant", d.mac.to_string() + " at " + rsu.iface.interface_id);
            } else {
                ++report_.denials;
                ++report_.per_municipality[rsu.network_id].denials;
                trace(now, "deny", d.mac.to_string() + " at " + rsu.iface.interface_id);
            }
            register_new_blocks(rsu, before);
            rsu.port.assign_vlan(d.tag, decision, now);
            rsu.last_verdict[d.tag] = decision.verdict;
        }
    }

    // Delivery: internet-bound traffic of every attached device.
    for (const DeviceNode& d : devices_) {
        if (!d.serving)
            continue;
        const RsuNode& rsu = rsus_[*d.serving];
        bool routed = rsu.port.vlan_of(d.tag) == spectrum::VlanState::Routed;
        delivery_log_.push_back(
            DeliveryRecord{now, d.mac, rsu.iface.interface_id, routed, d.rogue});
        if (routed && d.rogue) {
            ++report_.rogue_routed_deliveries;
            ++report_.per_municipality[rsu.network_id].rogue_routed_deliveries;
        }
    }
}

void World::handle_gossip(std::uint64_t now) {
    std::vector<ReplicaNode*> nodes;
    nodes.reserve(rsus_.size());
    for (RsuNode& rsu : rsus_)
        nodes.push_back(&rsu.replica);
    run_gossip_round(nodes, adjacency_, now, &tracker_);
    trace(now, "gossip", "round " + std::to_string(tracker_.rounds_completed()));
}

void World::handle_expiry(std::uint64_t now) {
    for (RsuNode& rsu : rsus_) {
        std::uint64_t before = auth_chain(rsu).height();
        std::vector<core::HostTag> pruned = identity::prune_expired(
            rsu.profiles, now, auth_chain(rsu), rsu.replica.author_tag);
        register_new_blocks(rsu, before);
        for (const core::HostTag& tag : pruned) {
            rsu.last_verdict.erase(tag);
            if (rsu.port.is_supplicated(tag))
                rsu.port.assign_vlan(
                    tag, synthetic_decision(ledger::Verdict::Deny, now, "profile_not_expired"),
                    now);
            trace(now, "expire", tag.hex() + " at " + rsu.iface.interface_id);
        }
    }
}

SimResult World::result() const {
    SimResult res;
    res.report = report_;
    res.report.propagation_rounds_histogram = tracker_.histogram();
    res.report.max_propagation_rounds = tracker_.max_rounds_to_full();
    res.report.localization_rmse_m =
        localization_samples_ == 0
            ? 0.0
            : std::sqrt(localization_sq_err_sum_ / static_cast<double>(localization_samples_));
    res.grant_log = grant_log_;
    res.handoff_log = handoff_log_;
    res.delivery_log = delivery_log_;
    res.propagation = tracker_.records();
    res.events_processed = events_processed_;
    return res;
}

World build_world(Scenario scenario) {
    return World(std::move(scenario));
}

SimResult run_scenario(const Scenario& scenario) {
    World world(scenario);
    world.run_to_end();
    return world.result();
}

}  // namespace airstack::netsim
