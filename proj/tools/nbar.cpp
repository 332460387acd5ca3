#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace nbar;
using namespace nbar::cli;

int main(int argc, char** argv) {
    CLI::App app{"Multiply continued fractions by integers through Farey geometry and Gamma0(n) tiles"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    if (const char* path = std::getenv("NBAR_CONFIG")) {
        try {
            cfg = Config::from_file(path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    std::string format;
    app.add_option("--format", format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--config", "JSON config file (default: $NBAR_CONFIG)")->each([&](const std::string& p) { cfg = Config::from_file(p); });

    auto* mul = app.add_subcommand("multiply", "continued fraction of n * alpha");
    std::string cf_text, engine = "trace";
    long long n = 0;
    bool no_check = false;
    mul->add_option("cf", cf_text)->required();
    mul->add_option("n", n)->required();
    mul->add_option("--engine", engine)->check(CLI::IsMember({"trace", "tile-walk", "oracle"}));
    mul->add_flag("--no-check", no_check, "skip the oracle cross-check");

    auto* orc = app.add_subcommand("oracle", "continued fraction of q * alpha by exact surd arithmetic");
    std::string q_text;
    orc->add_option("cf", cf_text)->required();
    orc->add_option("q", q_text, "positive rational p/q")->required();

    auto* trc = app.add_subcommand("trace", "cutting sequence of the geodesic ray to alpha in (1/d)F");
    std::string value;
    long long scale = 1;
    std::size_t max_quotients = 200;
    trc->add_option("value", value, "CF text, surd (p+sqrt(d))/q, or rational")->required();
    trc->add_option("--scale,-d", scale)->check(CLI::PositiveNumber);
    trc->add_option("--max-quotients", max_quotients)->check(CLI::PositiveNumber);

    auto* g0 = app.add_subcommand("gamma0", "Farey symbol, pairings, invariants and tiles of Gamma0(N)");
    long long level = 0;
    std::string what;
    long long tile_scale = 1;
    g0->add_option("N", level)->required();
    g0->add_option("what", what)->required()->check(CLI::IsMember({"symbol", "matrices", "invariants", "tile"}));
    g0->add_option("--scale", tile_scale)->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "run a verification campaign; JSON lines, exit 1 on a violated check");
    std::string claim;
    std::optional<long long> vn;
    std::optional<std::string> vcf;
    ver->add_option("claim", claim)->required()->check(
        CLI::IsMember({"pro2", "conden", "connum", "evp", "growth", "closure", "orbi-equivalence"}));
    ver->add_option("--n", vn);
    ver->add_option("--cf", vcf);
    std::optional<std::size_t> horizon, corpus_size, k_max, i_max;
    std::optional<std::uint64_t> seed;
    ver->add_option("--horizon", horizon)->check(CLI::PositiveNumber);
    ver->add_option("--corpus-size", corpus_size)->check(CLI::PositiveNumber);
    ver->add_option("--k-max", k_max)->check(CLI::PositiveNumber);
    ver->add_option("--i-max", i_max);
    ver->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);
    if (!format.empty()) cfg.format = parse_format(format);

    try {
        if (*mul) return cmd_multiply(cf_text, n, parse_engine(engine), !no_check, cfg.format, std::cout);
        if (*orc) return cmd_oracle(cf_text, q_text, cfg.format, std::cout);
        if (*trc) return cmd_trace(value, scale, max_quotients, cfg.format, std::cout);
        if (*g0) return cmd_gamma0(level, what, tile_scale, cfg.format, std::cout);
        if (*ver) {
            VerifyOptions o{cfg, std::nullopt, vcf};
            if (vn) o.n = integer(*vn);
            if (horizon) o.config.horizon = *horizon;
            if (corpus_size) o.config.corpus_size = *corpus_size;
            if (k_max) o.config.k_max = *k_max;
            if (i_max) o.config.i_max = *i_max;
            if (seed) o.config.seed = *seed;
            return cmd_verify(claim, o, std::cout);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
