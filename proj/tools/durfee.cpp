// durfee: exact q-series engine for rank / full-rank partition statistics.
//
//   durfee table rank --t 5 --order 60
//   durfee verify thm1.3.1 --t 9 --order 150
//   durfee verify all --order 60
//   durfee scan --t 11 --r 0 --s 3 --to 300 --by-class
//
// Exit codes: 0 pass, 1 verified-false, 2 usage/config error.

#include "durfee/cli.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"exact rank / full-rank generating-function engine"};
    app.require_subcommand(1);

    durfee::RunConfig cfg;
    std::string config_path;

    int t = 0, r = 0, s = 0, d = 0, threads = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file mirroring the flags");
        sub->add_option("--order,-N", cfg.order, "series truncation order");
        sub->add_option("--out,-o", cfg.output, "output path (default: stdout)");
        sub->add_option("--format", cfg.format, "output format: json or csv");
        sub->add_option("--threads", threads, "worker threads (DURFEE_THREADS overrides)");
    };

    auto* table = app.add_subcommand("table", "emit a rank or full-rank CSV table");
    table->add_option("kind", cfg.table_kind, "rank | fullrank")->required();
    table->add_option("--t", t, "modulus");
    add_common(table);

    auto* verify = app.add_subcommand("verify", "run a named identity check (or all)");
    verify->add_option("id", cfg.identity_id, "identity id, or 'all'")->required();
    verify->add_option("--t", t, "modulus override");
    verify->add_option("--r", r, "residue override");
    add_common(verify);

    auto* scan = app.add_subcommand("scan", "sign scan of NF2(r,t;n) - NF2(s,t;n)");
    scan->add_option("--t", t, "modulus");
    scan->add_option("--r", r, "first residue");
    scan->add_option("--s", s, "second residue");
    scan->add_option("--d", d, "residue selector (accepted for config parity)");
    scan->add_option("--from", cfg.window_lo, "window start (size)");
    scan->add_option("--to", cfg.window_hi, "window end (size)");
    scan->add_flag("--by-class", cfg.by_class, "classify per congruence class of the size");
    add_common(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) durfee::apply_config_file(cfg, config_path);
    } catch (const std::exception& e) {
        std::cerr << "durfee: " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (sub->count("--t")) cfg.t = t;
    if (sub->count("--r")) cfg.r = r;
    if (sub->count("--s")) cfg.s = s;
    if (sub->count("--d")) cfg.d = d;
    if (sub->count("--threads")) cfg.threads = threads;

    return durfee::dispatch(cfg);
}
