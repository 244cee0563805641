#pragma once

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tldp/classify.hpp"
#include "tldp/oracle.hpp"
#include "tldp/serialize.hpp"

namespace tldp {

// Exit codes: 0 success, 1 domain failure (invalid fan, oracle mismatch),
// 2 usage error (bad flags, unparseable input).

namespace cli_detail {

inline std::string hj_to_string(const std::vector<Int>& hj) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < hj.size(); ++i) {
        if (i) os << ",";
        os << hj[i];
    }
    os << "]";
    return os.str();
}

inline std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << "(" << v.x << "," << v.y << ")";
    return os.str();
}

inline void print_classify_table(const std::vector<SurfaceRecord>& recs, std::ostream& out) {
    out << std::left << std::setw(5) << "No." << std::setw(4) << "p1" << std::setw(4) << "q1"
        << std::setw(4) << "p2" << std::setw(4) << "q2" << std::setw(4) << "p3" << std::setw(4)
        << "q3" << std::setw(11) << "n3" << std::setw(4) << "r1" << std::setw(4) << "r2"
        << std::setw(4) << "r3" << std::setw(26) << "surface" << "group" << "\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const SurfaceRecord& r = recs[i];
        std::ostringstream factors;
        if (r.group_factors.empty()) {
            factors << "1";
        } else {
            for (std::size_t k = 0; k < r.group_factors.size(); ++k) {
                if (k) factors << "x";
                factors << r.group_factors[k];
            }
        }
        out << std::left << std::setw(5) << (std::to_string(i + 1));
        for (const ConePQ& c : r.triple.pq)
            out << std::setw(4) << c.p.str() << std::setw(4) << c.q.str();
        out << std::setw(11) << vec_to_string(r.n3());
        for (const Int& ri : r.r) out << std::setw(4) << ri.str();
        out << std::setw(26) << weight_label(r) << factors.str() << "\n";
    }
}

inline json analyze_to_json(const CompleteFan& fan) {
    const std::vector<Int> r = r_invariants(fan);
    json cones = json::array();
    for (std::size_t i = 0; i < fan.nu(); ++i) {
        const ConeParams& c = fan.cone(i);
        json hj = json::array();
        for (const Int& b : c.hj) hj.push_back(to_ll(b));
        cones.push_back(json{{"p", to_ll(c.pq.p)},
                             {"q", to_ll(c.pq.q)},
                             {"p_hat", to_ll(c.p_hat)},
                             {"l", to_ll(c.l)},
                             {"s", to_ll(c.s())},
                             {"hj", hj},
                             {"KE2", rat_to_string(c.k_sq)}});
    }
    json rj = json::array();
    for (const Int& ri : r) rj.push_back(to_ll(ri));
    Int ell = surface_index(fan);
    bool ldp = is_ldp(fan);
    json j{{"nu", fan.nu()},
           {"generators", fan_to_json(fan)["generators"]},
           {"ldp", ldp},
           {"rho", fan.nu() - 2},
           {"index", to_ll(ell)},
           {"K2", rat_to_string(K_squared(fan))},
           {"picard_inequality", picard_inequality_holds(fan, ell)},
           {"scott_inequality", scott_inequality_holds(fan)},
           {"cones", cones},
           {"r", rj}};
    if (ldp) {  // the polygon data exists only for LDP fans
        PointCounts pts = lattice_point_counts(fan);
        j["polar_index"] = to_ll(polar_index(fan));
        j["boundary_points"] = to_ll(pts.boundary);
        j["interior_points"] = to_ll(pts.interior);
    }
    return j;
}

inline void print_analyze_table(const CompleteFan& fan, std::ostream& out) {
    const std::vector<Int> r = r_invariants(fan);
    Int ell = surface_index(fan);
    bool ldp = is_ldp(fan);
    out << "nu = " << fan.nu() << "\n";
    out << "rho = " << fan.nu() - 2 << "\n";
    out << "ldp = " << (ldp ? "yes" : "no") << "\n";
    out << "index = " << ell << "\n";
    if (ldp) out << "polar_index = " << polar_index(fan) << "\n";
    out << "K2 = " << rat_to_string(K_squared(fan)) << "\n";
    if (ldp) {
        PointCounts pts = lattice_point_counts(fan);
        out << "boundary_points = " << pts.boundary << "\n";
        out << "interior_points = " << pts.interior << "\n";
    }
    out << "picard_inequality = " << (picard_inequality_holds(fan, ell) ? "holds" : "fails")
        << "\n";
    out << "scott_inequality = " << (scott_inequality_holds(fan) ? "holds" : "fails") << "\n";
    for (std::size_t i = 0; i < fan.nu(); ++i) {
        const ConeParams& c = fan.cone(i);
        out << "cone " << i + 1 << ": n=" << vec_to_string(fan.n(i))
            << " n'=" << vec_to_string(fan.n(i + 1)) << " (p,q)=" << c.pq << " p_hat=" << c.p_hat
            << " l=" << c.l << " s=" << c.s() << " hj=" << hj_to_string(c.hj)
            << " KE2=" << rat_to_string(c.k_sq) << "\n";
    }
    out << "r = (";
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << ")\n";
    if (fan.nu() == 3) {
        QuotientInfo q = identify_quotient(fan);
        out << "surface = " << weight_label(q.weights, q.group_factors) << "\n";
    }
}

}  // namespace cli_detail

/// Front end behind the `tldp` binary; `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact classification of toric log Del Pezzo surfaces with Picard number 1"};
    app.name("tldp");
    app.footer("Environment: TLDP_NO_PARALLEL=1 disables multithreading; TLDP_THREADS=n "
               "sets the worker count.  Results never depend on either.");

    int index = 0;
    int box = 25;
    std::string format;
    std::string generators;
    long long cone_p = 0, cone_q = 0;

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "List the isomorphism classes for a given index");
    classify_cmd->add_option("--index", index, "Surface index (1, 2 or 3)")
        ->required()
        ->check(CLI::IsMember({1, 2, 3}));
    classify_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Report the invariants of a fan given as \"x1,y1;x2,y2;...\"");
    analyze_cmd->add_option("generators", generators, "Fan generators")->required();
    analyze_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");

    CLI::App* cone_cmd = app.add_subcommand("cone", "Report the invariants of a (p,q)-cone");
    cone_cmd->add_option("p", cone_p, "p")->required();
    cone_cmd->add_option("q", cone_q, "q")->required();
    cone_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");

    CLI::App* graph_cmd =
        app.add_subcommand("graph", "Emit the weighted circular graph of a fan");
    graph_cmd->add_option("generators", generators, "Fan generators")->required();
    graph_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"dot", "json"}))
        ->default_val("dot");

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "Cross-validate the classification against a brute-force box enumeration");
    oracle_cmd->add_option("--index", index, "Surface index (1, 2 or 3)")
        ->required()
        ->check(CLI::IsMember({1, 2, 3}));
    oracle_cmd->add_option("--box", box, "Coordinate bound for the enumeration")
        ->default_val(25);
    oracle_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->default_val("table");

    app.require_subcommand(1);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(classify_cmd)) {
            std::vector<SurfaceRecord> recs = classify(index);
            if (format == "json") {
                json arr = json::array();
                for (const SurfaceRecord& r : recs) arr.push_back(record_to_json(r));
                out << arr.dump(2) << "\n";
            } else {
                cli_detail::print_classify_table(recs, out);
            }
            return 0;
        }

        if (app.got_subcommand(analyze_cmd) || app.got_subcommand(graph_cmd)) {
            std::vector<Vec> gens;
            try {
                // both the compact text form and the JSON object are accepted
                std::size_t first = generators.find_first_not_of(" \t\n");
                if (first != std::string::npos && generators[first] == '{')
                    gens = generators_from_json(json::parse(generators));
                else
                    gens = parse_generators(generators);
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
            if (gens.size() < 3) {
                err << "error: a complete fan needs at least 3 generators\n";
                return 2;
            }
            CompleteFan fan;
            try {
                fan = build_fan(std::move(gens));
            } catch (const std::exception& e) {
                err << "error: invalid fan: " << e.what() << "\n";
                return 1;
            }
            if (app.got_subcommand(graph_cmd)) {
                Wve2cGraph g = graph_of(fan);
                if (format == "json") out << graph_to_json(g).dump(2) << "\n";
                else out << to_dot(g);
            } else if (format == "json") {
                out << cli_detail::analyze_to_json(fan).dump(2) << "\n";
            } else {
                cli_detail::print_analyze_table(fan, out);
            }
            return 0;
        }

        if (app.got_subcommand(cone_cmd)) {
            ConePQ c{Int(cone_p), Int(cone_q)};
            if (!is_valid(c)) {
                err << "error: (" << cone_p << "," << cone_q
                    << ") is not a valid pair: need 0 <= p < q, gcd(p,q) = 1\n";
                return 1;
            }
            ConeParams cp = cone_params(c);
            Index3Set m = index3_membership(c);
            const char* set = m == Index3Set::A ? "A" : m == Index3Set::B ? "B" : "-";
            if (format == "json") {
                json hj = json::array();
                for (const Int& b : cp.hj) hj.push_back(to_ll(b));
                out << json{{"p", cone_p},           {"q", cone_q},
                            {"p_hat", to_ll(cp.p_hat)}, {"l", to_ll(cp.l)},
                            {"s", to_ll(cp.s())},    {"hj", hj},
                            {"KE2", rat_to_string(cp.k_sq)}, {"index3_set", set}}
                           .dump(2)
                    << "\n";
            } else {
                out << "(p,q) = " << c << "\n"
                    << "p_hat = " << cp.p_hat << "\n"
                    << "l = " << cp.l << "\n"
                    << "s = " << cp.s() << "\n"
                    << "hj = " << cli_detail::hj_to_string(cp.hj) << "\n"
                    << "KE2 = " << rat_to_string(cp.k_sq) << "\n"
                    << "index3_set = " << set << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(oracle_cmd)) {
            std::vector<SurfaceRecord> recs = classify(index);
            OracleResult oracle = oracle_classify(index, box);
            std::set<CanonicalKey> classifier_keys, oracle_keys;
            for (const SurfaceRecord& r : recs) classifier_keys.insert(r.key);
            for (const auto& kv : oracle.classes) oracle_keys.insert(kv.first);
            bool match = classifier_keys == oracle_keys;
            if (format == "json") {
                json records = json::array(), missing = json::array(), extra = json::array();
                for (const auto& kv : oracle.classes) {
                    const CompleteFan& fan = kv.second;
                    AdmissibleTriple t{{fan.cone(0).pq, fan.cone(1).pq, fan.cone(2).pq}};
                    json rec = record_to_json(make_record(t));
                    records.push_back(rec);
                    if (!classifier_keys.count(kv.first)) extra.push_back(rec);
                }
                for (const SurfaceRecord& r : recs)
                    if (!oracle_keys.count(r.key)) missing.push_back(record_to_json(r));
                out << json{{"index", index},
                            {"box", box},
                            {"classifier_classes", recs.size()},
                            {"oracle_classes", oracle.classes.size()},
                            {"match", match},
                            {"records", records},
                            {"missing_from_oracle", missing},
                            {"extra_in_oracle", extra}}
                           .dump(2)
                    << "\n";
            } else {
                out << "classifier: " << recs.size() << " classes\n";
                out << "oracle (box " << box << "): " << oracle.classes.size() << " classes\n";
                if (match) out << "MATCH: " << recs.size() << " = " << oracle.classes.size() << "\n";
                else out << "MISMATCH: the canonical key sets differ\n";
            }
            return match ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace tldp
