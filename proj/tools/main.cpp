#include "inccoh/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    using inccoh::cli::QuerySpec;

    CLI::App app{"Cohomology of line bundles on the incidence correspondence in characteristic p"};
    app.require_subcommand(1);

    QuerySpec q;
    std::string format;
    std::string out_path;

    auto common = [&](CLI::App* sub, const char* default_format) {
        sub->add_option("--n", q.n, "dim V (n >= 3)")->default_val(3);
        sub->add_option("--p", q.p, "characteristic (prime)")->required();
        sub->add_option("--format", format, "json | csv | text")->default_val(default_format);
        sub->add_option("--out", out_path, "write output here instead of stdout (env INCCOH_OUT)");
    };

    auto* coh = app.add_subcommand("cohomology", "vanishing pattern of H^i(X, O(a,b))");
    common(coh, "json");
    coh->add_option("--a", q.a)->required();
    coh->add_option("--b", q.b)->required();

    auto* chr = app.add_subcommand("character", "n = 3 characters: h0/h1(d,e) or H^i(X, O(a,b))");
    common(chr, "json");
    chr->add_option("--d", q.d, "divided-power degree");
    chr->add_option("--e", q.e, "second parameter: twist e-1");
    chr->add_option("--a", q.a);
    chr->add_option("--b", q.b);
    chr->add_option("--i", q.i, "cohomological degree on X");

    auto* tab = app.add_subcommand("table", "vanishing flags over a rectangle of Pic(X)");
    common(tab, "csv");
    tab->add_option("--a-min", q.a_min)->required();
    tab->add_option("--a-max", q.a_max)->required();
    tab->add_option("--b-min", q.b_min)->required();
    tab->add_option("--b-max", q.b_max)->required();

    auto* reg = app.add_subcommand("regularity", "Castelnuovo-Mumford regularity of D^d R");
    common(reg, "json");
    reg->add_option("--d", q.d)->required();
    reg->add_flag("--scan", q.scan, "cross-check with the F_p oracle");

    auto* ver = app.add_subcommand("verify", "closed formulas against the F_p oracle (JSON lines)");
    common(ver, "json");
    ver->add_option("--d-max", q.d_max);
    ver->add_option("--e-max", q.e_max);

    CLI11_PARSE(app, argc, argv);

    q.command = app.get_subcommands().front()->get_name();
    try {
        q.format = inccoh::cli::parse_format(format);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }

    if (out_path.empty())
        if (const char* env = std::getenv("INCCOH_OUT"))
            out_path = env;
    if (out_path.empty())
        return inccoh::cli::run(q, std::cout, std::cerr);

    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << '\n';
        return 2;
    }
    return inccoh::cli::run(q, file, std::cerr);
}
