#pragma once

// Command implementations behind the durfee binary: table, verify, scan.
// Exit codes are a stable contract: 0 pass, 1 verified-false, 2 usage or
// configuration error. All outputs are UTF-8 with LF line endings and are
// byte-identical for identical configurations, independent of thread count.

#include "durfee/registry.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace durfee {

struct RunConfig {
    std::string command;      // "table" | "verify" | "scan"
    std::string table_kind;   // "rank" | "fullrank"
    std::string identity_id;  // id or "all"
    std::optional<int> t, r, s, d;
    int order = 100;
    int window_lo = 0;
    int window_hi = 200;
    bool by_class = false;
    std::string output;  // empty = stdout
    std::string format = "json";
    std::optional<int> threads;
};

/// Optional JSON config file mirroring RunConfig; explicit flags override it.
inline void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    nlohmann::json j;
    in >> j;
    auto get_int = [&](const char* key, auto setter) {
        if (j.contains(key)) setter(j.at(key).get<int>());
    };
    get_int("t", [&](int v) { cfg.t = v; });
    get_int("r", [&](int v) { cfg.r = v; });
    get_int("s", [&](int v) { cfg.s = v; });
    get_int("d", [&](int v) { cfg.d = v; });
    get_int("order", [&](int v) { cfg.order = v; });
    get_int("threads", [&](int v) { cfg.threads = v; });
    if (j.contains("window")) {
        cfg.window_lo = j.at("window").at(0).get<int>();
        cfg.window_hi = j.at("window").at(1).get<int>();
    }
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
    if (j.contains("by_class")) cfg.by_class = j.at("by_class").get<bool>();
}

/// DURFEE_THREADS overrides --threads; default is 1.
inline int effective_threads(const RunConfig& cfg) {
    if (const char* env = std::getenv("DURFEE_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (...) {
        }
        throw std::invalid_argument("DURFEE_THREADS must be a positive integer");
    }
    return cfg.threads.value_or(1);
}

inline void validate_common(const RunConfig& cfg) {
    if (cfg.order < 0) throw std::invalid_argument("order must be >= 0");
    if (cfg.window_hi < cfg.window_lo || cfg.window_lo < 0)
        throw std::invalid_argument("window must satisfy 0 <= lo <= hi");
    if (cfg.format != "json" && cfg.format != "csv")
        throw std::invalid_argument("format must be json or csv");
    if (cfg.threads && *cfg.threads < 1)
        throw std::invalid_argument("threads must be >= 1");
}

namespace detail {

/// Writes to cfg.output or stdout; returns false (-> exit 2) if unwritable.
inline bool emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.output.empty()) {
        std::cout << payload;
        return true;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) {
        std::cerr << "durfee: cannot write output file: " << cfg.output << "\n";
        return false;
    }
    out << payload;
    return out.good();
}

}  // namespace detail

/// `table rank|fullrank --t T --order N`: CSV table of N(r,t;n) resp.
/// NF2(r,t;n), built from the verified generating-function route.
inline int cmd_table(const RunConfig& cfg) {
    validate_common(cfg);
    if (cfg.table_kind != "rank" && cfg.table_kind != "fullrank")
        throw std::invalid_argument("table kind must be rank or fullrank");
    if (!cfg.t || *cfg.t < 1) throw std::invalid_argument("table requires --t >= 1");
    std::ostringstream os;
    if (cfg.table_kind == "rank") {
        auto table = RankTable::from_series(rank_gf(*cfg.t, cfg.order),
                                            RankProvenance::genfun_durfee_sum);
        table.write_csv(os);
    } else {
        auto table = FullRankTable::from_series(full_rank_gf_double_sum(*cfg.t, cfg.order),
                                                FullRankProvenance::double_sum);
        table.write_csv(os);
    }
    return detail::emit(cfg, os.str()) ? 0 : 2;
}

/// `verify <id>|all [--t ..] [--r ..] --order N`: runs the named identity
/// checks and writes one JSON report line per parameter instance.
inline int cmd_verify(const RunConfig& cfg) {
    validate_common(cfg);
    VerifyOptions opt;
    opt.t = cfg.t;
    opt.r = cfg.r;
    opt.order = cfg.order;
    std::vector<IdentityTask> tasks = cfg.identity_id == "all"
                                          ? make_all_tasks(opt)
                                          : make_tasks(cfg.identity_id, opt);
    GenfunCache cache;
    auto reports = run_tasks(tasks, effective_threads(cfg), cache);
    std::ostringstream os;
    bool all_pass = true;
    for (const auto& rep : reports) {
        os << rep.to_json().dump() << "\n";
        all_pass = all_pass && rep.passed();
    }
    if (!detail::emit(cfg, os.str())) return 2;
    return all_pass ? 0 : 1;
}

/// `scan --t T --r R --s S [--from A] --to B [--by-class]`: descriptive sign
/// scan of NF2(r,t;n) - NF2(s,t;n); always exits 0 on valid configuration.
inline int cmd_scan(const RunConfig& cfg) {
    validate_common(cfg);
    if (!cfg.t || !cfg.r || !cfg.s)
        throw std::invalid_argument("scan requires --t, --r and --s");
    GenfunCache cache;
    auto scan =
        scan_inequality(*cfg.t, *cfg.r, *cfg.s, cfg.window_lo, cfg.window_hi, cfg.by_class, cache);
    return detail::emit(cfg, scan.to_json().dump() + "\n") ? 0 : 2;
}

inline int dispatch(const RunConfig& cfg) {
    try {
        if (cfg.command == "table") return cmd_table(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "scan") return cmd_scan(cfg);
        throw std::invalid_argument("unknown command: " + cfg.command);
    } catch (const std::invalid_argument& e) {
        std::cerr << "durfee: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "durfee: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace durfee
