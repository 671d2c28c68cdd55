#pragma once

#include "skeletal/acceptance.hpp"
#include "skeletal/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace skeletal::cli {

namespace detail {

/// Values may be given inline, as "@file", or as "-" for stdin.
inline std::string resolve_input(const std::string& raw, std::istream& in) {
    if (raw == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    if (!raw.empty() && raw.front() == '@') {
        std::ifstream file(raw.substr(1));
        if (!file) throw std::domain_error("cannot open input file " + raw.substr(1));
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }
    return raw;
}

struct ParamFlags {
    int n = 0;
    std::string m = "0";
    std::string c = "1";
    std::string mode = "auto";

    void attach(CLI::App* cmd, bool need_n = true) {
        auto* n_opt = cmd->add_option("--n", n, "height n");
        if (need_n) n_opt->required();
        cmd->add_option("--m", m, "inverse slope m (integer or p/q)")->required();
        cmd->add_option("--c", c, "base c (integer or p/q)")->required();
        cmd->add_option("--mode", mode, "group mode: Z, Q, or auto")
            ->check(CLI::IsMember({"Z", "Q", "auto"}));
    }

    /// Mode "auto" picks Z when every scalar seen so far is an integer.
    Params build(const std::vector<Scalar>& extra = {}) const {
        Params params;
        params.n = n;
        params.m = parse_scalar(m);
        params.c = parse_scalar(c);
        if (mode == "Z") {
            params.mode = GroupMode::Integers;
        } else if (mode == "Q") {
            params.mode = GroupMode::Rationals;
        } else {
            params.mode = GroupMode::Integers;
            if (!is_integer(params.m) || !is_integer(params.c))
                params.mode = GroupMode::Rationals;
            for (const Scalar& v : extra)
                if (!is_integer(v)) params.mode = GroupMode::Rationals;
        }
        params.validate();
        return params;
    }
};

inline VertexSet parse_vertex_set(const std::string& text, int n) {
    VertexSet mask = 0;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        int vertex = 0;
        try {
            vertex = std::stoi(item);
        } catch (const std::exception&) {
            throw std::domain_error("bad vertex '" + item + "' in set");
        }
        if (vertex < 1 || vertex > n)
            throw std::domain_error("vertex " + std::to_string(vertex) + " outside 1..n");
        mask |= VertexSet(1) << (vertex - 1);
    }
    if (mask == 0) throw std::domain_error("vertex set must be nonempty");
    return mask;
}

inline StatKernel kernel_by_name(const std::string& name, const Params& params) {
    if (name == "indicator-dinv") {
        if (params.c != 1) throw std::domain_error("indicator-dinv needs c = 1");
        return StatKernel::indicator_dinv();
    }
    if (name == "range-dinv") return StatKernel::range_dinv(params.c);
    if (name == "slope-dinv") {
        if (params.c != 1) throw std::domain_error("slope-dinv needs c = 1");
        return StatKernel::slope_dinv(params.m);
    }
    if (name == "trapezoid-dinv") return StatKernel::trapezoid_dinv(params.m, params.c);
    throw std::domain_error("unknown statistic '" + name + "'");
}

}  // namespace detail

/// Dispatch a full command line (without the program name). Domain errors
/// exit 1 with an error JSON on the error stream, usage errors exit 2.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"skeletal paths, parking functions, and chip firing"};
    app.require_subcommand(1);

    // enumerate ---------------------------------------------------------
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list a k-skeletal family (Z mode)");
    detail::ParamFlags enum_params;
    enum_params.attach(enumerate_cmd);
    std::string enum_family = "skv";
    int enum_k = 0;
    bool enum_ascii = false, enum_json = false;
    enumerate_cmd->add_option("--family", enum_family, "skv or skf")
        ->check(CLI::IsMember({"skv", "skf"}));
    enumerate_cmd->add_option("--k", enum_k, "skeleton index k")->required();
    enumerate_cmd->add_flag("--ascii", enum_ascii, "step words / value rows");
    enumerate_cmd->add_flag("--json", enum_json, "one JSON object per line (default)");

    // count ---------------------------------------------------------------
    auto* count_cmd = app.add_subcommand("count", "per-k counts vs the closed forms");
    detail::ParamFlags count_params;
    count_params.n = 1;
    std::string count_grid, count_family = "skv";
    count_cmd->add_option("--n", count_params.n, "height n");
    count_cmd->add_option("--m", count_params.m, "inverse slope m");
    count_cmd->add_option("--c", count_params.c, "base c");
    count_cmd->add_option("--family", count_family, "skv, skf, or both")
        ->check(CLI::IsMember({"skv", "skf", "both"}));
    count_cmd->add_option("--grid", count_grid, "bounds \"n=N,m=M,c=C\" for a CSV sweep");

    // canonicalize ----------------------------------------------------------
    auto* canon_cmd = app.add_subcommand("canonicalize", "Dyck/k-skeletal class representative");
    detail::ParamFlags canon_params;
    canon_params.attach(canon_cmd);
    std::string canon_g;
    int canon_k = -1;
    bool canon_class = false;
    canon_cmd->add_option("--g", canon_g, "area vector, e.g. \"[1/2,2]\"")->required();
    canon_cmd->add_option("--k", canon_k, "return the k-skeletal representative");
    canon_cmd->add_flag("--class", canon_class, "emit the whole equivalence class");

    // map-k ------------------------------------------------------------------
    auto* mapk_cmd = app.add_subcommand("map-k", "bijection between k- and k'-skeletal paths");
    detail::ParamFlags mapk_params;
    mapk_params.attach(mapk_cmd);
    int map_from = 0, map_to = 0;
    std::string mapk_g;
    mapk_cmd->add_option("--from", map_from, "k of the input")->required();
    mapk_cmd->add_option("--to", map_to, "k' of the output")->required();
    mapk_cmd->add_option("--g", mapk_g, "area vector")->required();

    // map-fn-k ------------------------------------------------------------
    auto* mapfn_cmd =
        app.add_subcommand("map-fn-k", "bijection between k- and k'-skeletal functions");
    detail::ParamFlags mapfn_params;
    mapfn_params.attach(mapfn_cmd);
    int mapfn_from = 0, mapfn_to = 0;
    std::string mapfn_f;
    mapfn_cmd->add_option("--from", mapfn_from, "k of the input")->required();
    mapfn_cmd->add_option("--to", mapfn_to, "k' of the output")->required();
    mapfn_cmd->add_option("--f", mapfn_f, "function values f(1..n)")->required();

    // chip ---------------------------------------------------------------
    auto* chip_cmd = app.add_subcommand("chip", "weighted chip-firing moves and predicates");
    chip_cmd->require_subcommand(1);
    detail::ParamFlags chip_params;
    std::string chip_d, chip_set, chip_method = "fast";
    int chip_k = 0;
    auto attach_chip = [&](CLI::App* sub, bool with_set) {
        sub->add_option("--m", chip_params.m, "non-sink edge weight m")->required();
        sub->add_option("--c", chip_params.c, "sink edge weight c")->required();
        sub->add_option("--mode", chip_params.mode, "group mode: Z, Q, or auto")
            ->check(CLI::IsMember({"Z", "Q", "auto"}));
        sub->add_option("--d", chip_d, "chip configuration, e.g. \"[4,1,5,5,14,8]\"")
            ->required();
        if (with_set) sub->add_option("--set", chip_set, "vertex subset, e.g. 1,3")->required();
    };
    auto* chip_fire = chip_cmd->add_subcommand("fire", "fire a vertex subset");
    attach_chip(chip_fire, true);
    auto* chip_borrow = chip_cmd->add_subcommand("borrow", "borrow at a vertex subset");
    attach_chip(chip_borrow, true);
    auto* chip_check = chip_cmd->add_subcommand("check", "k-skeletal predicate");
    attach_chip(chip_check, false);
    chip_check->add_option("--k", chip_k, "skeleton index k")->required();
    chip_check->add_option("--method", chip_method, "fast, naive, or both")
        ->check(CLI::IsMember({"fast", "naive", "both"}));

    // first-return --------------------------------------------------------
    auto* fr_cmd = app.add_subcommand("first-return", "bijection for augmented m-Dyck paths");
    fr_cmd->require_subcommand(1);
    long long fr_m = 1;
    int fr_k = 0;
    std::string fr_path;
    auto attach_fr = [&](CLI::App* sub) {
        sub->add_option("--m", fr_m, "slope parameter m >= 1")->required();
        sub->add_option("--k", fr_k, "skeleton index k")->required();
        sub->add_option("--path", fr_path, "step word over N/E")->required();
    };
    auto* fr_phi = fr_cmd->add_subcommand("phi", "m-Dyck path to k-skeletal path");
    attach_fr(fr_phi);
    auto* fr_psi = fr_cmd->add_subcommand("psi", "k-skeletal path to m-Dyck path");
    attach_fr(fr_psi);

    // poly -----------------------------------------------------------------
    auto* poly_cmd = app.add_subcommand("poly", "generating polynomial of a statistic");
    detail::ParamFlags poly_params;
    poly_params.attach(poly_cmd);
    std::string poly_family = "skv", poly_stat = "indicator-dinv";
    int poly_k = 0;
    poly_cmd->add_option("--family", poly_family, "skv or skf")
        ->check(CLI::IsMember({"skv", "skf"}));
    poly_cmd->add_option("--k", poly_k, "skeleton index k")->required();
    poly_cmd->add_option("--stat", poly_stat,
                         "indicator-dinv, range-dinv, slope-dinv, trapezoid-dinv, labeled-dinv");

    // render ---------------------------------------------------------------
    auto* render_cmd = app.add_subcommand("render", "ASCII picture of an integer-mode path");
    detail::ParamFlags render_params;
    render_params.attach(render_cmd);
    std::string render_x, render_g;
    bool render_word = false;
    render_cmd->add_option("--x", render_x, "north-step x-coordinates");
    render_cmd->add_option("--g", render_g, "area vector (alternative to --x)");
    render_cmd->add_flag("--word", render_word, "print the NE step word instead of the grid");

    // verify -----------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the full acceptance suite");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*enumerate_cmd) {
            Params params = enum_params.build();
            if (params.mode != GroupMode::Integers)
                throw std::domain_error("enumeration requires integer mode");
            if (enum_family == "skv") {
                for (const AreaVector& g : enumerate_skv(enum_k, params)) {
                    if (enum_ascii)
                        out << word_of_path(path_of_area_vector(g, params), params) << "\n";
                    else
                        out << area_vector_to_json(g).dump() << "\n";
                }
            } else {
                for (const FnTable& f : enumerate_skf(enum_k, params)) {
                    if (enum_ascii) {
                        for (std::size_t i = 0; i < f.values.size(); ++i)
                            out << (i ? "," : "") << format_scalar(f.values[i]);
                        out << "\n";
                    } else {
                        out << fn_to_json(f).dump() << "\n";
                    }
                }
            }
            return 0;
        }

        if (*count_cmd) {
            auto emit_csv = [&](const std::vector<CountReport>& reports) {
                out << "n,m,c,k,count,formula,match\n";
                for (const CountReport& report : reports)
                    for (std::size_t k = 0; k < report.per_k.size(); ++k)
                        out << report.params.n << "," << format_scalar(report.params.m) << ","
                            << format_scalar(report.params.c) << "," << k << ","
                            << report.per_k[k].str() << "," << report.formula.str() << ","
                            << (report.per_k[k] == report.formula ? "true" : "false") << "\n";
            };
            if (!count_grid.empty()) {
                int n_max = 0;
                long long m_max = -1, c_max = 0;
                std::stringstream stream(count_grid);
                std::string item;
                while (std::getline(stream, item, ',')) {
                    const auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw std::domain_error("bad --grid entry '" + item + "'");
                    const std::string key = item.substr(0, eq);
                    const long long value = std::stoll(item.substr(eq + 1));
                    if (key == "n")
                        n_max = static_cast<int>(value);
                    else if (key == "m")
                        m_max = value;
                    else if (key == "c")
                        c_max = value;
                    else
                        throw std::domain_error("bad --grid key '" + key + "'");
                }
                std::vector<CountReport> reports;
                if (count_family != "skf")
                    for (CountReport& r : verify_grid(n_max, m_max, c_max, Family::Skv))
                        reports.push_back(std::move(r));
                if (count_family != "skv")
                    for (CountReport& r : verify_grid(n_max, m_max, c_max, Family::Skf))
                        reports.push_back(std::move(r));
                emit_csv(reports);
                return 0;
            }
            if (count_cmd->count("--n") == 0) {
                err << "count needs either --n/--m/--c or --grid\n";
                return 2;
            }
            Params params = count_params.build();
            Json result = params_to_json(params);
            auto fill = [&](Family family) {
                const CountReport report = count_report(params, family);
                Json entry;
                entry["per_k"] = Json::array();
                for (const BigInt& count : report.per_k) entry["per_k"].push_back(count.str());
                entry["formula"] = report.formula.str();
                entry["match"] = report.match;
                result[family_name(family)] = entry;
            };
            if (count_family != "skf") fill(Family::Skv);
            if (count_family != "skv") fill(Family::Skf);
            out << result.dump() << "\n";
            return 0;
        }

        if (*canon_cmd) {
            const auto gs = parse_scalar_list(detail::resolve_input(canon_g, in), "g");
            Params params = canon_params.build(gs);
            const AreaVector g{gs};
            if (canon_class) {
                out << class_walk_to_json(enumerate_class(g, params)).dump() << "\n";
                return 0;
            }
            Json result;
            if (canon_k >= 0) {
                auto [rep, offset] = k_skeletal_representative(g, canon_k, params);
                result = area_vector_to_json(rep);
                result["offset"] = offset;
            } else {
                auto [rep, offset] = dyck_representative_offset(g, params);
                result = area_vector_to_json(rep);
                result["offset"] = offset;
            }
            out << result.dump() << "\n";
            return 0;
        }

        if (*mapk_cmd) {
            const auto gs = parse_scalar_list(detail::resolve_input(mapk_g, in), "g");
            Params params = mapk_params.build(gs);
            out << area_vector_to_json(map_k_to_kprime(AreaVector{gs}, map_from, map_to, params))
                       .dump()
                << "\n";
            return 0;
        }

        if (*mapfn_cmd) {
            const auto values = parse_scalar_list(detail::resolve_input(mapfn_f, in), "f");
            Params params = mapfn_params.build(values);
            out << fn_to_json(
                       map_fn_k_to_kprime(FnTable{values}, mapfn_from, mapfn_to, params))
                       .dump()
                << "\n";
            return 0;
        }

        if (*chip_cmd) {
            const auto chips = parse_scalar_list(detail::resolve_input(chip_d, in), "D");
            chip_params.n = static_cast<int>(chips.size());
            Params params = chip_params.build(chips);
            const ChipConfig D{chips};
            if (*chip_fire) {
                const VertexSet S = detail::parse_vertex_set(chip_set, params.n);
                out << chip_to_json(fire(D, S, params)).dump() << "\n";
            } else if (*chip_borrow) {
                const VertexSet T = detail::parse_vertex_set(chip_set, params.n);
                out << chip_to_json(borrow(D, T, params)).dump() << "\n";
            } else {
                Json result;
                result["k"] = chip_k;
                if (chip_method != "naive")
                    result["skeletal"] = is_k_skeletal_chip_fast(D, chip_k, params);
                if (chip_method != "fast") {
                    const bool naive = is_k_skeletal_chip(D, chip_k, params);
                    result[chip_method == "both" ? "skeletal_naive" : "skeletal"] = naive;
                    if (chip_method == "both" && naive != result["skeletal"].get<bool>())
                        throw std::logic_error("chip predicates disagree");
                }
                out << result.dump() << "\n";
            }
            return 0;
        }

        if (*fr_cmd) {
            const std::string word = detail::resolve_input(fr_path, in);
            std::string trimmed;
            for (char ch : word)
                if (ch == 'N' || ch == 'E') trimmed.push_back(ch);
            const int n = skeletal::detail::north_count(trimmed);
            out << (*fr_phi ? phi(trimmed, fr_m, n, fr_k) : psi(trimmed, fr_m, n, fr_k)) << "\n";
            return 0;
        }

        if (*poly_cmd) {
            Params params = poly_params.build();
            if (params.mode != GroupMode::Integers)
                throw std::domain_error("poly enumeration requires integer mode");
            Poly poly;
            if (poly_stat == "labeled-dinv") {
                if (poly_family != "skf")
                    throw std::domain_error("labeled-dinv needs --family skf");
                poly = generating_poly(enumerate_skf(poly_k, params), [&](const FnTable& f) {
                    return labeled_dinv(labeled_path_of_fn(f, params), params);
                });
            } else {
                const StatKernel kernel = detail::kernel_by_name(poly_stat, params);
                if (poly_family == "skv") {
                    poly = generating_poly(enumerate_skv(poly_k, params),
                                           [&](const AreaVector& g) { return stat(g, kernel); });
                } else {
                    poly = generating_poly(enumerate_skf(poly_k, params), [&](const FnTable& f) {
                        return stat(labeled_path_of_fn(f, params).g, kernel);
                    });
                }
            }
            out << poly_to_json(poly).dump() << "\n";
            return 0;
        }

        if (*render_cmd) {
            if (render_x.empty() == render_g.empty())
                throw std::domain_error("render needs exactly one of --x or --g");
            Path p;
            Params params;
            if (!render_x.empty()) {
                const auto xs = parse_scalar_list(detail::resolve_input(render_x, in), "x");
                params = render_params.build(xs);
                p = Path{xs};
                validate_path(p, params);
            } else {
                const auto gs = parse_scalar_list(detail::resolve_input(render_g, in), "g");
                params = render_params.build(gs);
                p = path_of_area_vector(AreaVector{gs}, params);
            }
            out << (render_word ? word_of_path(p, params) + "\n" : ascii_path(p, params));
            return 0;
        }

        if (*verify_cmd) {
            const auto results = skeletal::acceptance::run_all(&out);
            return skeletal::acceptance::all_passed(results) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), std::cin, std::cout, std::cerr);
}

}  // namespace skeletal::cli
