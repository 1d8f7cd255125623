#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "airstack/core/error.hpp"
#include "airstack/netsim/floor_scenario.hpp"
#include "airstack/netsim/gossip.hpp"
#include "airstack/netsim/scenario.hpp"
#include "airstack/netsim/world.hpp"

using namespace airstack;
using netsim::ReplicaNode;
using netsim::Scenario;

namespace {

std::string code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const core::Error& e) {
        return e.code();
    }
    return "";
}

std::string error_text(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const core::Error& e) {
        return e.what();
    }
    return "";
}

core::HostTag tag_of(std::uint8_t b) {
    core::HostTag t;
    t.bytes.fill(b);
    return t;
}

spectrum::AirInterface rsu_iface(const std::string& id, core::Vec2 pos) {
    spectrum::AirInterface a;
    a.interface_id = id;
    a.position = pos;
    a.ssid_open = true;
    return a;
}

Scenario tiny_scenario() {
    Scenario s;
    s.seed = 7;
    s.duration_ms = 20'000;
    s.oui_allowlist = {core::Oui::parse("00:1A:2B")};
    netsim::MunicipalityConfig muni;
    muni.network_id = "muni-a";
    muni.rsus = {rsu_iface("rsu-1", {0, 10}), rsu_iface("rsu-2", {50, -10}),
                 rsu_iface("rsu-3", {100, 10})};
    s.municipalities = {muni};
    netsim::VehicleConfig v;
    v.mac = core::MacAddress::parse("00:1A:2B:00:00:01");
    v.route_polyline = {{0, 0}, {150, 0}};
    v.speed_mps = 10.0;
    s.vehicles = {v};
    return s;
}

ReplicaNode make_node(const std::string& id, core::HostTag tag,
                      const std::vector<core::HostTag>& authors) {
    ReplicaNode node;
    node.node_id = id;
    node.author_tag = tag;
    node.ledger.chains["auth"] =
        netsim::make_authorization_chain("auth", authors, ledger::default_rules());
    netsim::recompute_held(node);
    return node;
}

// Mirrors the production authoring path: append, log for re-submission, and
// (for RouteRecord) update the author's own route table.
const ledger::Block& author_block(ReplicaNode& node, std::vector<std::uint8_t> payload,
                                  std::uint64_t ts) {
    const ledger::Block& blk =
        ledger::append_block(node.ledger.chains["auth"], ledger::PayloadKind::RouteRecord,
                             std::move(payload), ts, node.author_tag);
    netsim::note_authored(node, blk);
    ledger::record_route(node.ledger, ledger::Route::decode(blk.payload));
    return blk;
}

}  // namespace

TEST_CASE("scenario validation names the offending field") {
    Scenario ok = tiny_scenario();
    CHECK_NOTHROW(netsim::validate_scenario(ok));

    Scenario s = tiny_scenario();
    s.gossip_period_ms = 0;
    CHECK(error_text([&] { netsim::validate_scenario(s); }) ==
          "ConfigError: gossip_period_ms: must be positive");

    s = tiny_scenario();
    s.municipalities.clear();
    CHECK(code_of([&] { netsim::validate_scenario(s); }) == "ConfigError");

    s = tiny_scenario();
    s.municipalities[0].rsus[2].interface_id = "rsu-1";
    CHECK(error_text([&] { netsim::validate_scenario(s); }) ==
          "ConfigError: municipalities[0].rsus[2].interface_id: duplicate \"rsu-1\"");

    s = tiny_scenario();
    s.rogue_devices.push_back({s.vehicles[0].mac, {1, 1}});
    CHECK(error_text([&] { netsim::validate_scenario(s); }) ==
          "ConfigError: rogue_devices[0].mac: duplicate \"00:1A:2B:00:00:01\"");

    s = tiny_scenario();
    s.vehicles[0].route_polyline.clear();
    CHECK(error_text([&] { netsim::validate_scenario(s); }) ==
          "ConfigError: vehicles[0].route_polyline: must be nonempty");

    s = tiny_scenario();
    s.gossip_adjacency = {{"rsu-1", "rsu-9"}};
    CHECK(error_text([&] { netsim::validate_scenario(s); }) ==
          "ConfigError: gossip_adjacency[0]: unknown interface \"rsu-9\"");

    s = tiny_scenario();
    s.gossip_adjacency = {{"rsu-2", "rsu-2"}};
    CHECK(error_text([&] { netsim::validate_scenario(s); }) ==
          "ConfigError: gossip_adjacency[0]: self link \"rsu-2\"");

    s = tiny_scenario();
    s.path_loss.noise_sigma_db = -0.5;
    CHECK(code_of([&] { netsim::validate_scenario(s); }) == "ConfigError");
}

TEST_CASE("event processing follows (time, admission order)") {
    Scenario s = tiny_scenario();
    s.duration_ms = 1200;
    netsim::World w2(s);
    std::vector<std::pair<std::uint64_t, netsim::EventKind>> seen;
    while (!w2.done()) {
        netsim::StepResult r = w2.step();
        seen.push_back({r.event.time_ms, r.event.kind});
    }

    using netsim::EventKind;
    std::vector<std::pair<std::uint64_t, EventKind>> expected;
    expected.push_back({0, EventKind::SenseTick});
    for (std::uint64_t t = 100; t <= 900; t += 100)
        expected.push_back({t, EventKind::MoveTick});
    expected.push_back({1000, EventKind::GossipTick});
    expected.push_back({1000, EventKind::ExpiryTick});
    expected.push_back({1000, EventKind::SenseTick});
    expected.push_back({1000, EventKind::MoveTick});
    expected.push_back({1100, EventKind::MoveTick});
    CHECK(seen == expected);

    CHECK(code_of([&] { w2.step(); }) == "NoPendingEvents");

    Scenario none = tiny_scenario();
    none.duration_ms = 0;
    netsim::World empty(none);
    CHECK(empty.done());
    CHECK(empty.result().events_processed == 0);
}

TEST_CASE("vehicles ping-pong when looped and park otherwise") {
    Scenario s = tiny_scenario();
    s.duration_ms = 15'050;
    s.vehicles[0].route_polyline = {{0, 0}, {100, 0}};
    s.vehicles[0].speed_mps = 10.0;

    SUBCASE("parked at the end") {
        netsim::World world(s);
        world.run_to_end();
        CHECK(world.devices()[0].iface.position.x == doctest::Approx(100.0));
        CHECK(world.devices()[0].iface.position.y == doctest::Approx(0.0));
    }
    SUBCASE("folded back on the return leg") {
        s.vehicles[0].loop = true;
        netsim::World world(s);
        world.run_to_end();
        // 150 m of travel on a 100 m segment folds to the 50 m mark.
        CHECK(world.devices()[0].iface.position.x == doctest::Approx(50.0));
    }
}

TEST_CASE("a qualifying vehicle is granted once and routed; a parked rogue is not") {
    Scenario s = tiny_scenario();
    s.rogue_devices.push_back({core::MacAddress::parse("DE:AD:BE:EF:00:01"), {60, 3}});

    netsim::World world(s);
    world.run_to_end();
    netsim::SimResult result = world.result();

    CHECK(result.report.grants == 1);
    REQUIRE(result.grant_log.size() == 1);
    CHECK(result.grant_log[0].mac == s.vehicles[0].mac);
    CHECK(result.report.denials >= 1);
    CHECK(result.report.rogue_routed_deliveries == 0);
    CHECK(result.report.localization_rmse_m < 1e-6);
    CHECK(result.report.per_municipality.at("muni-a").grants == 1);
    CHECK(result.events_processed > 0);

    const netsim::DeviceNode& vehicle = world.devices()[0];
    REQUIRE(vehicle.serving.has_value());
    const netsim::RsuNode& serving = world.rsus()[*vehicle.serving];
    CHECK(serving.port.vlan_of(vehicle.tag) == spectrum::VlanState::Routed);
    CHECK(serving.profiles.count(vehicle.tag) == 1);

    const netsim::DeviceNode& rogue = world.devices()[1];
    REQUIRE(rogue.serving.has_value());
    CHECK(world.rsus()[*rogue.serving].port.vlan_of(rogue.tag) ==
          spectrum::VlanState::NullRoute);

    bool vehicle_delivered = false;
    bool rogue_delivered = false;
    for (const netsim::DeliveryRecord& d : result.delivery_log) {
        if (!d.rogue && d.delivered) vehicle_delivered = true;
        if (d.rogue && d.delivered) rogue_delivered = true;
    }
    CHECK(vehicle_delivered);
    CHECK_FALSE(rogue_delivered);
}

TEST_CASE("identical seeds reproduce the run bit for bit") {
    Scenario s = tiny_scenario();
    s.path_loss.noise_sigma_db = 3.0;
    s.rogue_devices.push_back({core::MacAddress::parse("DE:AD:BE:EF:00:01"), {60, 3}});

    netsim::SimResult a = netsim::run_scenario(s);
    netsim::SimResult b = netsim::run_scenario(s);
    CHECK(a.report == b.report);
    CHECK(a.grant_log == b.grant_log);
    CHECK(a.handoff_log == b.handoff_log);
    CHECK(a.delivery_log == b.delivery_log);
    CHECK(a.events_processed == b.events_processed);

    Scenario other = s;
    other.seed = 8;
    netsim::SimResult c = netsim::run_scenario(other);
    CHECK(a.report.localization_rmse_m != c.report.localization_rmse_m);
}

TEST_CASE("handoffs carry the profile so the grant happens exactly once") {
    Scenario s;
    s.seed = 3;
    s.duration_ms = 60'000;
    s.oui_allowlist = {core::Oui::parse("00:1A:2B")};
    netsim::MunicipalityConfig a, b;
    a.network_id = "muni-a";
    a.rsus = {rsu_iface("rsu-1", {75, 10}), rsu_iface("rsu-2", {225, -10}),
              rsu_iface("rsu-3", {375, 10})};
    b.network_id = "muni-b";
    b.rsus = {rsu_iface("rsu-4", {525, -10}), rsu_iface("rsu-5", {675, 10}),
              rsu_iface("rsu-6", {825, -10})};
    s.municipalities = {a, b};
    for (int i = 1; i < 6; ++i)
        s.gossip_adjacency.push_back(
            {"rsu-" + std::to_string(i), "rsu-" + std::to_string(i + 1)});
    netsim::VehicleConfig v;
    v.mac = core::MacAddress::parse("00:1A:2B:00:00:42");
    v.route_polyline = {{0, 0}, {900, 0}};
    v.speed_mps = 15.0;
    s.vehicles = {v};

    netsim::SimResult result = netsim::run_scenario(s);

    CHECK(result.report.grants == 1);
    REQUIRE(result.grant_log.size() == 1);
    CHECK(result.grant_log[0].rsu == "rsu-3");
    CHECK(result.grant_log[0].timestamp_ms == 21'000);
    CHECK(result.report.denials == 0);

    // Nearest-RSU attachment flips at the midpoints: 150, 300, 450, 600, 750 m.
    std::vector<netsim::HandoffRecord> expected{
        {11'000, v.mac, "rsu-1", "rsu-2", false},
        {21'000, v.mac, "rsu-2", "rsu-3", false},
        {31'000, v.mac, "rsu-3", "rsu-4", true},
        {41'000, v.mac, "rsu-4", "rsu-5", true},
        {51'000, v.mac, "rsu-5", "rsu-6", true},
    };
    CHECK(result.handoff_log == expected);
    CHECK(result.report.handoffs_total == 5);
    CHECK(result.report.handoffs_without_reauth == 3);
    CHECK(result.report.per_municipality.at("muni-a").handoffs_total == 2);
    CHECK(result.report.per_municipality.at("muni-b").handoffs_total == 3);
    CHECK(result.report.per_municipality.at("muni-b").grants == 0);
}

TEST_CASE("gossip moves blocks one hop per round over a line") {
    std::vector<core::HostTag> authors{tag_of(1), tag_of(2), tag_of(3), tag_of(4)};
    std::vector<ReplicaNode> nodes;
    for (int i = 0; i < 4; ++i)
        nodes.push_back(make_node("n" + std::to_string(i), authors[i], authors));
    std::vector<ReplicaNode*> ptrs{&nodes[0], &nodes[1], &nodes[2], &nodes[3]};
    std::vector<std::vector<std::size_t>> adjacency{{1}, {0, 2}, {1, 3}, {2}};
    netsim::PropagationTracker tracker({"n0", "n1", "n2", "n3"});

    const ledger::Block& blk =
        author_block(nodes[0], ledger::Route{tag_of(7), "muni-a", "rsu-1", 10}.encode(), 10);
    tracker.on_authored(blk.digest, "n0");

    std::vector<std::size_t> sizes_after;
    for (int round = 1; round <= 4; ++round) {
        netsim::run_gossip_round(ptrs, adjacency, 100 * round, &tracker);
        sizes_after.push_back(nodes[3].ledger.chains["auth"].blocks.size());
    }
    CHECK(sizes_after == std::vector<std::size_t>{2, 2, 3, 3});
    for (const ReplicaNode& n : nodes) {
        CHECK(n.ledger.chains.at("auth").blocks.size() == 3);
        CHECK(n.held.count(blk.digest) == 1);
        // RouteRecord replay populated every replica's route table.
        auto route = ledger::lookup_route(n.ledger, tag_of(7));
        REQUIRE(route.has_value());
        CHECK(route->interface_id == "rsu-1");
    }

    auto records = tracker.records();
    REQUIRE(records.size() == 1);
    CHECK(records[0].digest == blk.digest);
    CHECK(records[0].birth_round == 0);
    CHECK(records[0].complete);
    CHECK(records[0].rounds_to_full == 3);
    CHECK(records[0].first_held_round.at("n0") == 0);
    CHECK(records[0].first_held_round.at("n1") == 1);
    CHECK(records[0].first_held_round.at("n2") == 2);
    CHECK(records[0].first_held_round.at("n3") == 3);
    CHECK(tracker.max_rounds_to_full() == 3);
    CHECK(tracker.histogram() == std::map<std::uint32_t, std::uint64_t>{{3, 1}});
    CHECK(tracker.rounds_completed() == 4);
}

TEST_CASE("a fork loser re-submits its own payload on the winning branch") {
    std::vector<core::HostTag> authors{tag_of(1), tag_of(2)};
    std::vector<ReplicaNode> nodes{make_node("n0", authors[0], authors),
                                   make_node("n1", authors[1], authors)};
    std::vector<ReplicaNode*> ptrs{&nodes[0], &nodes[1]};
    std::vector<std::vector<std::size_t>> adjacency{{1}, {0}};

    ledger::Route route_a{tag_of(11), "muni-a", "rsu-1", 10};
    ledger::Route route_b{tag_of(12), "muni-b", "rsu-2", 10};
    author_block(nodes[0], route_a.encode(), 10);
    author_block(nodes[1], route_b.encode(), 10);

    netsim::run_gossip_round(ptrs, adjacency, 100);
    netsim::run_gossip_round(ptrs, adjacency, 200);

    CHECK(nodes[0].ledger.chains["auth"] == nodes[1].ledger.chains["auth"]);
    const ledger::Chain& merged = nodes[0].ledger.chains["auth"];
    CHECK(merged.blocks.size() == 4);
    std::size_t route_blocks = 0;
    for (const ledger::Block& blk : merged.blocks)
        if (blk.payload_kind == ledger::PayloadKind::RouteRecord) ++route_blocks;
    CHECK(route_blocks == 2);
    for (const ReplicaNode& n : nodes) {
        CHECK(ledger::lookup_route(n.ledger, tag_of(11)).has_value());
        CHECK(ledger::lookup_route(n.ledger, tag_of(12)).has_value());
    }
    CHECK(ledger::verify_chain(merged).valid);
    CHECK(ledger::authors_valid(merged));
}

TEST_CASE("blocks from unregistered authors are not adopted") {
    std::vector<core::HostTag> authors{tag_of(1)};
    ReplicaNode good = make_node("good", tag_of(1), authors);
    ReplicaNode intruder = make_node("intruder", tag_of(9), authors);
    author_block(intruder, ledger::Route{tag_of(9), "muni-x", "rsu-x", 5}.encode(), 5);

    std::vector<ReplicaNode*> ptrs{&good, &intruder};
    std::vector<std::vector<std::size_t>> adjacency{{1}, {0}};
    for (int round = 0; round < 3; ++round)
        netsim::run_gossip_round(ptrs, adjacency, 100 * (round + 1));

    CHECK(good.ledger.chains["auth"].blocks.size() == 2);
    CHECK_FALSE(ledger::lookup_route(good.ledger, tag_of(9)).has_value());
    CHECK(intruder.ledger.chains["auth"].blocks.size() == 3);
}

TEST_CASE("make_authorization_chain seeds authors and rules") {
    ledger::Chain chain =
        netsim::make_authorization_chain("auth", {tag_of(1), tag_of(2)},
                                         ledger::default_rules(), 50);
    CHECK(chain.blocks.size() == 2);
    CHECK(ledger::registered_authors(chain) == std::vector<core::HostTag>{tag_of(1), tag_of(2)});
    CHECK(chain.blocks[1].payload_kind == ledger::PayloadKind::ContractRules);
    CHECK(chain.blocks[1].header.author == tag_of(1));
    CHECK(ledger::verify_chain(chain).valid);

    ledger::Chain bare = netsim::make_authorization_chain("auth", {tag_of(1)}, {}, 0);
    CHECK(bare.blocks.size() == 1);

    CHECK(code_of([&] {
              netsim::make_authorization_chain("auth", {}, ledger::default_rules(), 0);
          }) == "InvalidInput");
}

TEST_CASE("floor deduction scenario places the device on its floor") {
    netsim::FloorConfig cfg;
    cfg.device_position = {0, 0};
    cfg.device_floor = 3;
    for (int floor = 1; floor <= 5; ++floor) {
        cfg.aps.push_back({"ap-" + std::to_string(floor) + "l", floor, {-1.5, 0}, 20.0});
        cfg.aps.push_back({"ap-" + std::to_string(floor) + "r", floor, {1.5, 0}, 20.0});
    }

    CHECK(netsim::run_floor_scenario(cfg) == 3);

    SUBCASE("moderate noise still deduces correctly for most seeds") {
        cfg.path_loss.noise_sigma_db = 2.0;
        int correct = 0;
        for (std::uint64_t seed = 1; seed <= 40; ++seed) {
            cfg.seed = seed;
            if (netsim::run_floor_scenario(cfg) == 3) ++correct;
        }
        CHECK(correct >= 36);
    }
    SUBCASE("deterministic under a fixed seed") {
        cfg.path_loss.noise_sigma_db = 4.0;
        cfg.seed = 99;
        int first = netsim::run_floor_scenario(cfg);
        CHECK(netsim::run_floor_scenario(cfg) == first);
    }
    SUBCASE("configuration errors") {
        netsim::FloorConfig bad = cfg;
        bad.floor_height_m = 0.0;
        CHECK(code_of([&] { netsim::run_floor_scenario(bad); }) == "ConfigError");
        netsim::FloorConfig no_aps = cfg;
        no_aps.aps.clear();
        CHECK(code_of([&] { netsim::run_floor_scenario(no_aps); }) == "NoRegisteredAps");
    }
}
