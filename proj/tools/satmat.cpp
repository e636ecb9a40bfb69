#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "satmat/catalog.hpp"
#include "satmat/serialize.hpp"
#include "satmat/witness.hpp"

namespace {

using namespace satmat;

// Exit statuses: 0 success (or: pattern contained), 1 pattern avoided,
// 2 usage/format/lookup problems, 3 contract or verification failures.
constexpr int exit_ok = 0;
constexpr int exit_avoids = 1;
constexpr int exit_usage = 2;
constexpr int exit_contract = 3;

std::string read_source(const std::string& src) {
    if (src == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(src);
    if (!in) throw FormatError("cannot open '" + src + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A source is a file path, '-' for standard input, or '@NAME' for a catalog
// built-in.
Matrix load_matrix(const std::string& src) {
    if (!src.empty() && src[0] == '@') return builtin(src.substr(1)).matrix;
    return parse_matrix(read_source(src));
}

Pattern load_pattern(const std::string& src) {
    Matrix m = load_matrix(src);
    bool strict = true;
    for (int i = 0; i < m.rows() && strict; ++i)
        if (m.row_empty(i)) strict = false;
    for (int j = 0; j < m.cols() && strict; ++j)
        if (m.col_empty(j)) strict = false;
    return Pattern(std::move(m), strict);
}

struct Options {
    bool json = false;
    bool quiet = false;
    int max_cells = 20;
    double time_limit = 0;

    SearchBudget budget() const {
        return {max_cells, std::chrono::duration<double>(time_limit)};
    }
};

void emit(const Options& opt, const nlohmann::json& json, const std::string& text) {
    if (opt.quiet) return;
    if (opt.json)
        std::cout << json.dump(2) << '\n';
    else
        std::cout << text << '\n';
}

nlohmann::json search_json(const SearchResult& r) {
    return {{"value", r.value}, {"matrix", format_matrix(r.attaining)}};
}

std::string search_text(const SearchResult& r) {
    return "value: " + std::to_string(r.value) + "\n" + format_matrix(r.attaining);
}

SymmetryGroup parse_group(const std::string& name) {
    if (name == "reflect") return SymmetryGroup::reflections_only;
    if (name == "rot-reflect") return SymmetryGroup::rotations_and_reflections;
    if (name == "full") return SymmetryGroup::full;
    throw CLI::ValidationError("--group", "expected one of reflect|rot-reflect|full");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"saturation toolkit for 0-1 matrix patterns"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_flag("--quiet", opt.quiet, "no normal output, exit status only");
    app.add_option("--max-cells", opt.max_cells,
                   "cell budget for exact searches")
        ->capture_default_str();
    app.add_option("--time-limit", opt.time_limit,
                   "time limit in seconds for exact searches (0 = unlimited)");

    int status = exit_ok;

    std::string pat_src, mat_src, second_src;
    int grid_rows = 0, grid_cols = 0;

    auto* cmd_classify = app.add_subcommand("classify", "structural class of a pattern");
    cmd_classify->fallthrough();
    cmd_classify->add_option("pattern", pat_src, "pattern source")->required();
    cmd_classify->callback([&] {
        ClassLabel label = classify(load_pattern(pat_src));
        emit(opt, to_json(label), format_class_label(label));
    });

    auto* cmd_contains = app.add_subcommand(
        "contains", "first occurrence of a pattern in a matrix");
    cmd_contains->fallthrough();
    cmd_contains->add_option("matrix", mat_src, "host matrix source")->required();
    cmd_contains->add_option("pattern", pat_src, "pattern source")->required();
    cmd_contains->callback([&] {
        Matrix host = load_matrix(mat_src);
        if (auto occ = contains(host, load_pattern(pat_src))) {
            emit(opt, to_json(*occ), format_occurrence(*occ));
        } else {
            emit(opt, {{"contains", false}}, "AVOIDS");
            status = exit_avoids;
        }
    });

    auto* cmd_witness = app.add_subcommand("witness", "witness constructions");
    cmd_witness->require_subcommand(1);
    cmd_witness->fallthrough();

    auto* cmd_construct =
        cmd_witness->add_subcommand("construct", "doubling construction W(P)");
    cmd_construct->fallthrough();
    cmd_construct->add_option("pattern", pat_src, "pattern source")->required();
    cmd_construct->callback([&] {
        WConstruction w = construct_w(load_pattern(pat_src));
        nlohmann::json j{{"matrix", format_matrix(w.result)},
                         {"k", w.k},
                         {"s", w.s + 1},
                         {"t", w.t + 1},
                         {"emptyRow", w.empty_row + 1},
                         {"reflected", w.reflected}};
        std::ostringstream text;
        text << format_matrix(w.result) << "\n# k=" << w.k << " s=" << w.s + 1
             << " t=" << w.t + 1 << " emptyRow=" << w.empty_row + 1
             << " reflected=" << (w.reflected ? "true" : "false");
        emit(opt, j, text.str());
    });

    auto* cmd_verify =
        cmd_witness->add_subcommand("verify", "witness classes of a matrix");
    cmd_verify->fallthrough();
    cmd_verify->add_option("matrix", mat_src, "matrix source")->required();
    cmd_verify->add_option("pattern", pat_src, "pattern source")->required();
    cmd_verify->callback([&] {
        WitnessReport rep = verify_witness(load_matrix(mat_src), load_pattern(pat_src));
        emit(opt, to_json(rep), format_witness_report(rep));
    });

    auto* cmd_compose = cmd_witness->add_subcommand(
        "compose", "combine horizontal and vertical witnesses");
    cmd_compose->fallthrough();
    cmd_compose->add_option("horizontal", mat_src, "horizontal witness source")
        ->required();
    cmd_compose->add_option("vertical", second_src, "vertical witness source")
        ->required();
    cmd_compose->add_option("pattern", pat_src, "pattern source")->required();
    cmd_compose->callback([&] {
        Matrix out = compose_witnesses(load_matrix(mat_src), load_matrix(second_src),
                                       load_pattern(pat_src));
        emit(opt, {{"matrix", format_matrix(out)}}, format_matrix(out));
    });

    auto* cmd_saturate =
        app.add_subcommand("saturate", "greedy completion to a saturated matrix");
    cmd_saturate->fallthrough();
    cmd_saturate->add_option("matrix", mat_src, "matrix source")->required();
    cmd_saturate->add_option("pattern", pat_src, "pattern source")->required();
    cmd_saturate->callback([&] {
        Matrix out = saturate(load_matrix(mat_src), load_pattern(pat_src));
        emit(opt, {{"matrix", format_matrix(out)}}, format_matrix(out));
    });

    auto* cmd_sat = app.add_subcommand(
        "sat-exact", "minimum weight of a saturated matrix on a grid");
    cmd_sat->fallthrough();
    cmd_sat->add_option("pattern", pat_src, "pattern source")->required();
    cmd_sat->add_option("rows", grid_rows, "grid rows")->required();
    cmd_sat->add_option("cols", grid_cols, "grid columns")->required();
    cmd_sat->callback([&] {
        SearchResult r = sat_exact(load_pattern(pat_src), grid_rows, grid_cols,
                                   opt.budget());
        emit(opt, search_json(r), search_text(r));
    });

    auto* cmd_ex = app.add_subcommand(
        "ex-exact", "maximum weight of an avoiding matrix on a grid");
    cmd_ex->fallthrough();
    cmd_ex->add_option("pattern", pat_src, "pattern source")->required();
    cmd_ex->add_option("rows", grid_rows, "grid rows")->required();
    cmd_ex->add_option("cols", grid_cols, "grid columns")->required();
    cmd_ex->callback([&] {
        SearchResult r = ex_exact(load_pattern(pat_src), grid_rows, grid_cols,
                                  opt.budget());
        emit(opt, search_json(r), search_text(r));
    });

    int max_size = 6;
    std::string group_name = "reflect";
    auto* cmd_report = app.add_subcommand(
        "report", "classification of small permutation patterns");
    cmd_report->fallthrough();
    cmd_report->add_option("--max-size", max_size, "largest pattern size")
        ->capture_default_str();
    cmd_report->add_option("--group", group_name,
                           "symmetry group: reflect|rot-reflect|full")
        ->capture_default_str();
    cmd_report->callback([&] {
        auto records = classification_report(max_size, parse_group(group_name));
        nlohmann::json j = nlohmann::json::array();
        std::ostringstream text;
        for (std::size_t i = 0; i < records.size(); ++i) {
            j.push_back(to_json(records[i]));
            if (i) text << "\n\n";
            text << "=== class " << i + 1 << "/" << records.size() << " ===\n"
                 << format_class_record(records[i]);
        }
        emit(opt, j, text.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return exit_usage;
    } catch (const LookupError& e) {
        std::cerr << "lookup error: " << e.what() << '\n';
        return exit_usage;
    } catch (const VerificationError& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        if (!e.row_map.empty()) {
            std::cerr << "occurrence rows:";
            for (int r : e.row_map) std::cerr << ' ' << r;
            std::cerr << "\noccurrence cols:";
            for (int c : e.col_map) std::cerr << ' ' << c;
            std::cerr << '\n';
        }
        return exit_contract;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what()
                  << " (best bound so far: " << e.partial_bound << ")\n";
        return exit_contract;
    } catch (const ContractError& e) {
        std::cerr << "contract error: " << e.what() << '\n';
        return exit_contract;
    }
    return status;
}
